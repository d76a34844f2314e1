#include "brick/curves.hpp"

#include <algorithm>

#include "brick/polynomial.hpp"

namespace brick {

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (std::uint64_t{1} << 62) || !is_prime_u64(p)) {
    throw DomainError("PrimeField requires an odd prime below 2^62, got " + std::to_string(p));
  }
}

PrimeField::Elem PrimeField::from_rational(const BigRational& q) const {
  Elem den = from_int(q.get_den());
  if (den == 0) throw DomainError("denominator vanishes mod " + std::to_string(p_));
  return div(from_int(q.get_num()), den);
}

PrimeField::Elem PrimeField::pow(Elem base, std::uint64_t e) const {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw DomainError("division by zero mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

int PrimeField::legendre(Elem a) const {
  if (a == 0) return 0;
  return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

std::optional<PrimeField::Elem> PrimeField::sqrt(Elem a) const {
  if (a == 0) return Elem{0};
  if (legendre(a) != 1) return std::nullopt;
  if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);
  std::uint64_t q = p_ - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Elem z = 2;
  while (legendre(z) != -1) ++z;
  Elem c = pow(z, q), r = pow(a, (q + 1) / 2), t = pow(a, q);
  int m = s;
  while (t != 1) {
    int i = 0;
    Elem t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Elem b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
    r = mul(r, b);
    c = mul(b, b);
    t = mul(t, c);
    m = i;
  }
  return r;
}

// ---------------------------------------------------------------------------
// CurveFamily

CurveFamily::CurveFamily(FamilyParams params)
    : params_(std::move(params)), curve_(RationalField{}, params_.A) {}

CurveFamily CurveFamily::from_s(const BigRational& s) {
  return CurveFamily(family_params(s, /*allow_degenerate=*/true));
}

std::array<BigRational, 3> CurveFamily::roots() const {
  return {-params_.A, BigRational(2), BigRational(-2)};
}

bool CurveFamily::degenerate() const { return params_.A == 2 || params_.A == -2; }

void CurveFamily::require_nondegenerate() const {
  if (degenerate()) {
    throw DegenerateFamilyError("degenerate family at s = " + to_string(params_.s) +
                                " (A = " + to_string(params_.A) + ", repeated roots)");
  }
}

const RationalCurve& CurveFamily::over_rationals() const {
  require_nondegenerate();
  return curve_;
}

bool CurveFamily::good_reduction(std::uint64_t p) const {
  if (p < 3 || !is_prime_u64(p)) return false;
  const BigRational& A = params_.A;
  auto divides = [p](const BigInt& n) { return mpz_divisible_ui_p(n.get_mpz_t(), p) != 0; };
  BigRational am2 = A - 2, ap2 = A + 2;
  return !divides(A.get_den()) && !divides(am2.get_num()) && !divides(ap2.get_num());
}

std::optional<ModCurve> CurveFamily::over_prime(std::uint64_t p) const {
  require_nondegenerate();
  if (!good_reduction(p)) return std::nullopt;
  PrimeField F(p);
  return ModCurve(F, F.from_rational(params_.A));
}

std::array<RationalPoint, 3> two_torsion(const CurveFamily& family) {
  return family.over_rationals().two_torsion();
}

// ---------------------------------------------------------------------------
// Halving

std::array<BigRational, 5> halving_polynomial(const BigRational& A, const BigRational& xT) {
  // x(2Q) = (x^4 + 8x^2 + 32A x + 16A^2 + 16) / (4x^3 + 4A x^2 - 16x - 16A)
  return {16 * A * A + 16 + 16 * A * xT, 32 * A + 16 * xT, 8 - 4 * A * xT, -4 * xT,
          BigRational(1)};
}

std::vector<RationalPoint> halve(const CurveFamily& family, const RationalPoint& T) {
  const RationalCurve& E = family.over_rationals();
  if (!E.contains(T)) throw DomainError("halve: point is not on the curve");
  if (T.infinity) {
    auto t = E.two_torsion();
    return {RationalPoint::at_infinity(), t[0], t[1], t[2]};
  }
  auto coeffs = halving_polynomial(family.A(), T.x);
  std::vector<RationalPoint> out;
  for (const BigRational& x : rational_roots(RationalPoly(coeffs.begin(), coeffs.end()))) {
    BigRational y2 = E.rhs(x);
    if (y2 == 0) continue;  // 2-torsion doubles to O, not to T
    auto y = rational_square_root(y2);
    if (!y) continue;
    for (const BigRational& yy : {*y, BigRational(-*y)}) {
      RationalPoint Q = RationalPoint::affine(x, yy);
      if (E.dbl(Q) == T) out.push_back(Q);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Torsion

namespace {

bool point_less(const RationalPoint& a, const RationalPoint& b) {
  if (a.infinity != b.infinity) return a.infinity;
  if (a.infinity) return false;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

void insert_unique(std::vector<RationalPoint>& pts, const RationalPoint& P) {
  if (std::find(pts.begin(), pts.end(), P) == pts.end()) pts.push_back(P);
}

}  // namespace

std::string TorsionGroup::structure() const {
  return "Z/" + std::to_string(cyclic_order) + " x Z/2";
}

bool TorsionGroup::contains(const RationalPoint& P) const {
  return std::find(points.begin(), points.end(), P) != points.end();
}

TorsionGroup torsion_subgroup(const CurveFamily& family) {
  const RationalCurve& E = family.over_rationals();
  const auto t2 = E.two_torsion();

  std::vector<RationalPoint> pts{RationalPoint::at_infinity(), t2[0], t2[1], t2[2]};
  TorsionGroup group;
  for (int i = 0; i < 3; ++i) {
    if (!halve(family, t2[i]).empty()) group.halvable_two_torsion.push_back(i + 1);
  }

  // 2-power torsion: at most two halving rounds beyond E[2]
  std::vector<RationalPoint> frontier(t2.begin(), t2.end());
  for (int round = 0; round < 2 && !frontier.empty(); ++round) {
    std::vector<RationalPoint> next;
    for (const auto& T : frontier) {
      for (const auto& Q : halve(family, T)) {
        if (std::find(pts.begin(), pts.end(), Q) == pts.end()) {
          pts.push_back(Q);
          next.push_back(Q);
        }
      }
    }
    frontier = std::move(next);
  }

  // 3-torsion: rational roots of the 3-division polynomial
  const BigRational& A = family.A();
  RationalPoly psi3{-16 * A * A - 16, -48 * A, BigRational(-24), 4 * A, BigRational(3)};
  for (const BigRational& x : rational_roots(psi3)) {
    if (auto y = rational_square_root(E.rhs(x)); y && *y != 0) {
      insert_unique(pts, RationalPoint::affine(x, *y));
      insert_unique(pts, RationalPoint::affine(x, -*y));
    }
  }

  // closure under addition (Mazur: at most 16 points)
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        RationalPoint S = E.add(pts[i], pts[j]);
        if (std::find(pts.begin(), pts.end(), S) == pts.end()) {
          pts.push_back(S);
          grew = true;
        }
      }
    }
    if (pts.size() > 16) throw std::logic_error("torsion closure exceeded Mazur's bound");
  }

  std::vector<std::pair<int, RationalPoint>> tagged;
  for (const auto& P : pts) {
    auto ord = E.order(P, 16);
    if (!ord) throw std::logic_error("torsion point without finite order");
    tagged.emplace_back(*ord, P);
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return point_less(a.second, b.second);
  });
  for (auto& [ord, P] : tagged) {
    group.orders.push_back(ord);
    group.points.push_back(P);
  }

  group.cyclic_order = static_cast<int>(group.points.size()) / 2;
  // generator: the point of maximal order with the largest x, then largest y
  const RationalPoint* gen = nullptr;
  for (std::size_t i = 0; i < group.points.size(); ++i) {
    if (group.orders[i] != group.cyclic_order) continue;
    if (!gen || point_less(*gen, group.points[i])) gen = &group.points[i];
  }
  if (!gen) throw std::logic_error("torsion group is not of the form Z/n x Z/2");
  group.generator = *gen;
  std::vector<RationalPoint> cyclic;
  for (int k = 0; k < group.cyclic_order; ++k) cyclic.push_back(E.multiply(group.generator, k));
  for (const auto& T : t2) {
    if (std::find(cyclic.begin(), cyclic.end(), T) == cyclic.end()) {
      group.two_torsion_generator = T;
      break;
    }
  }
  return group;
}

// ---------------------------------------------------------------------------
// M, f and the lift to C_A

BigRational M_value(const CurveFamily& family, const RationalPoint& P) {
  return family.over_rationals().M(P);
}

BigRational f_value(const CurveFamily& family, const RationalPoint& P) {
  return family.over_rationals().f(P);
}

LiftResult lift_to_genus3(const CurveFamily& family, const RationalPoint& P) {
  LiftResult out;
  out.f = f_value(family, P);
  if (out.f == 0) {
    out.square_class = 0;
    out.failure = LiftFailure::kZero;
    return out;
  }
  out.square_class = squarefree_part(out.f);
  if (out.f < 0) {
    out.failure = LiftFailure::kNegative;
  } else if (out.f == 1) {
    out.failure = LiftFailure::kDegenerateOne;
  } else if (auto lambda = rational_square_root(out.f)) {
    const BigRational l4 = pow(*lambda, 4);
    auto w = rational_square_root(l4 * l4 + family.A() * l4 + 1);
    if (!w) throw std::logic_error("f(P) is a square but lambda^8 + A lambda^4 + 1 is not");
    out.point = Genus3Point{*lambda, *w};
  } else {
    out.failure = LiftFailure::kNotSquare;
  }
  return out;
}

std::string model_name(QuarticModel m) {
  switch (m) {
    case QuarticModel::kGenus3: return "C_A";
    case QuarticModel::kQuarticE: return "E-quartic";
    case QuarticModel::kEPrime: return "E'";
    case QuarticModel::kEDoublePrime: return "E''";
  }
  return "?";
}

QuarticModelPoint<RationalField> quotient_map(const Genus3Point& point, Involution which) {
  return quotient_map(RationalField{}, point.lambda, point.w, which);
}

}  // namespace brick
