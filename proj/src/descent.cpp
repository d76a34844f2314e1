#include "brick/descent.hpp"

#include <algorithm>
#include <numeric>

#include "brick/polynomial.hpp"

namespace brick {

bool DescentClass::product_is_square() const { return is_perfect_square(delta1 * delta2 * delta3); }

DescentClass descent_class(const CurveFamily& family, const RationalPoint& P) {
  const RationalCurve& E = family.over_rationals();
  if (P.infinity) throw DomainError("descent class of O is not defined by x - r_i");
  if (!E.contains(P)) throw DomainError("descent_class: point is not on the curve");
  if (P.y == 0) throw DomainError("descent_class: 2-torsion point (y = 0)");
  auto r = family.roots();
  return {squarefree_part(P.x - r[0]), squarefree_part(P.x - r[1]), squarefree_part(P.x - r[2])};
}

DeltaGenericReport check_delta_generic(const BigRational& s) {
  CurveFamily family = CurveFamily::from_s(s);
  if (family.degenerate()) throw DegenerateFamilyError("check_delta_generic: degenerate s = " + to_string(s));
  auto r = family.roots();
  DeltaGenericReport out;
  out.Delta1 = (r[0] - r[1]) * (r[0] - r[2]);
  out.Delta2 = (r[1] - r[0]) * (r[1] - r[2]);
  out.class1 = squarefree_part(out.Delta1);
  out.class2 = squarefree_part(out.Delta2);
  out.passes = out.class1 == -1 && out.class2 == 1;
  return out;
}

namespace {

std::vector<BigInt> odd_primes_of(const BigInt& n) {
  std::vector<BigInt> out;
  if (n == 0) return out;
  for (const auto& pp : factorize(n).factors) {
    if (pp.prime != 2) out.push_back(pp.prime);
  }
  return out;
}

bool divides(const BigInt& p, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0; }

}  // namespace

D3Verdict d3_obstruction(const CurveFamily& family, const RationalPoint& P, const TorsionGroup* torsion) {
  D3Verdict v;
  v.cls = descent_class(family, P);
  TorsionGroup local;
  if (!torsion) {
    local = torsion_subgroup(family);
    torsion = &local;
  }
  v.torsion = torsion->contains(P);

  const BigRational f = f_value(family, P);
  v.f_square_class = f == 0 ? BigInt(0) : squarefree_part(f);
  v.case_a_applies = v.cls.delta3 == 1;
  v.case_a_violation = v.case_a_applies && !v.torsion && v.f_square_class != 2;

  v.delta3_odd_primes = odd_primes_of(v.cls.delta3);
  bool all_in_delta1_only = v.cls.delta3 != 1;
  for (const BigInt& p : v.delta3_odd_primes) {
    const bool in1 = divides(p, v.cls.delta1), in2 = divides(p, v.cls.delta2);
    if (!in1 && !in2) v.case_b_violations.push_back(p);
    if (in2) v.parity_observations.push_back({p, f == 0 ? 0 : valuation(f, p)});
    all_in_delta1_only = all_in_delta1_only && in1 && !in2;
  }
  v.residual_class = all_in_delta1_only;
  return v;
}

CPrimesReport check_c_primes(const BigRational& s) {
  FamilyParams fp = family_params(s);
  if (fp.c == 0) throw DomainError("check_c_primes: c(s) = 0");
  const BigRational s2 = s * s;
  const BigRational alpha = 2 * (s2 - 1) / (1 + s2);
  const BigRational beta = 4 * s / (1 + s2);
  const BigRational square_class = 2 * s * (s2 - 1);
  const BigRational four_ab = 4 * alpha * beta;
  const BigRational diff = (alpha * alpha - beta * beta) * (alpha * alpha - beta * beta);

  CPrimesReport out;
  out.c = fp.c;
  out.passes = true;
  for (const BigInt& p : odd_primes_of(fp.c.get_num())) {
    CPrimeEntry e;
    e.prime = p;
    e.v_square_class = valuation(square_class, p);
    e.v_four_alpha_beta = valuation(four_ab, p);
    e.v_difference = valuation(diff, p);
    e.even = e.v_square_class % 2 == 0 && e.v_four_alpha_beta % 2 == 0 && e.v_difference % 2 == 0;
    out.passes = out.passes && e.even;
    out.primes.push_back(std::move(e));
  }
  return out;
}

bool c_factor_polynomials_coprime() {
  // s(s - 1)(s + 1) = s^3 - s
  const RationalPoly cubic{BigRational(0), BigRational(-1), BigRational(0), BigRational(1)};
  for (int sign : {1, -1}) {
    const RationalPoly quad{BigRational(-1), BigRational(2 * sign), BigRational(1)};
    if (degree(poly_gcd(quad, cubic)) != 0) return false;
  }
  return true;
}

BigInt integral_scale(const BigRational& A) {
  BigInt D = 1;
  for (const auto& pp : factorize(A.get_den()).factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), (pp.exponent + 1) / 2);
    D *= pe;
  }
  return D;
}

std::vector<RationalPoint> harvest_points(const CurveFamily& family, const HarvestConfig& config) {
  const RationalCurve& E = family.over_rationals();
  if (config.height < 1) throw DomainError("harvest height must be positive");
  const BigInt D = config.scale ? *config.scale : config.integral_model ? integral_scale(family.A()) : BigInt(1);
  if (D <= 0) throw DomainError("harvest scale must be positive");
  const BigInt D2 = D * D;
  // With integral_model off A D^2 may be fractional; scale the cubic by den^2.
  const BigRational AD2 = family.A() * D2;
  const BigInt k = AD2.get_den();  // 1 in the integral model
  const BigInt a0 = AD2.get_num(), two_d2 = 2 * D2;

  const auto& filter = SquareResidueFilter::instance();
  constexpr std::uint64_t M = SquareResidueFilter::kModulus;
  auto mod = [](const BigInt& n) {
    return static_cast<std::uint64_t>(mpz_fdiv_ui(n.get_mpz_t(), M));
  };
  const std::uint64_t a0m = mod(a0), km = mod(k), t2m = mod(two_d2);

  std::vector<RationalPoint> out;
  const std::int64_t wmax = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(config.height)));
  for (std::int64_t w = 1; w <= wmax; ++w) {
    const BigInt w2 = BigInt(w) * w;
    const std::uint64_t w2m = static_cast<std::uint64_t>((w * w) % static_cast<std::int64_t>(M));
    for (std::int64_t u = -config.height; u <= config.height; ++u) {
      if (std::gcd(u, w) != 1) continue;
      // k^2 w^6 * cubic(u/w^2) = (k u + a0 w^2) * k (u - 2D^2 w^2)(u + 2D^2 w^2)
      const std::uint64_t um = static_cast<std::uint64_t>(((u % static_cast<std::int64_t>(M)) + M) % M);
      const std::uint64_t f1 = (km * um + a0m * w2m) % M;
      const std::uint64_t f2 = (um + M - (t2m * w2m) % M) % M;
      const std::uint64_t f3 = (um + (t2m * w2m) % M) % M;
      const std::uint64_t r = (((f1 * f2) % M) * ((km * f3) % M)) % M;
      if (!filter.maybe_square_residue(static_cast<std::uint32_t>(r))) continue;
      const BigInt U = u;
      const BigInt value = (k * U + a0 * w2) * k * (U - two_d2 * w2) * (U + two_d2 * w2);
      if (value <= 0) continue;
      auto root = perfect_square_root(value);
      if (!root) continue;
      // y = root / (k w^3 D^3)
      const BigRational x = make_rational(U, w2 * D2);
      const BigRational y = make_rational(*root, k * w2 * w * D2 * D);
      RationalPoint P = E.point(x, y);
      out.push_back(std::move(P));
    }
  }
  std::sort(out.begin(), out.end(), [](const RationalPoint& a, const RationalPoint& b) { return a.x < b.x; });
  return out;
}

}  // namespace brick
