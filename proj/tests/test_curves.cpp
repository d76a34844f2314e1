#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brick/curves.hpp"

using namespace brick;

namespace {

const BigRational kA2 = make_rational(1054, 625);

RationalPoint rp(const BigRational& x, const BigRational& y) { return RationalPoint::affine(x, y); }

// x(2P) for y^2 = x^3 + a x^2 + b x + c: (x^4 - 2b x^2 - 8c x + b^2 - 4ac) / (4 y^2)
BigRational doubling_oracle(const BigRational& A, const BigRational& x, const BigRational& y) {
  const BigRational b = -4, c = -4 * A;
  const BigRational x2 = x * x;
  return (x2 * x2 - 2 * b * x2 - 8 * c * x + b * b - 4 * A * c) / (4 * y * y);
}

std::vector<ModPoint> all_points(const ModCurve& E) {
  const PrimeField& F = E.field();
  std::vector<ModPoint> pts{ModPoint::at_infinity()};
  for (std::uint64_t x = 0; x < F.modulus(); ++x) {
    for (std::uint64_t y = 0; y < F.modulus(); ++y) {
      if (F.mul(y, y) == E.rhs(x)) pts.push_back(ModPoint::affine(x, y));
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("curve at s = 2") {
  const CurveFamily fam = CurveFamily::from_s(BigRational(2));
  CHECK(fam.A() == kA2);
  const auto t = two_torsion(fam);
  CHECK(t[0] == rp(-kA2, 0));
  CHECK(t[1] == rp(2, 0));
  CHECK(t[2] == rp(-2, 0));
  const RationalCurve& E = fam.over_rationals();
  CHECK(E.contains(rp(make_rational(146, 25), make_rational(9408, 625))));
  CHECK_THROWS_AS(E.point(BigRational(1), BigRational(1)), DomainError);
}

TEST_CASE("degenerate family is rejected by curve operations") {
  const CurveFamily fam = CurveFamily::from_s(BigRational(1));
  CHECK(fam.degenerate());
  CHECK_THROWS_AS(fam.over_rationals(), DegenerateFamilyError);
  CHECK_THROWS_AS(torsion_subgroup(fam), DegenerateFamilyError);
}

TEST_CASE("halving") {
  const CurveFamily fam = CurveFamily::from_s(BigRational(2));
  const RationalCurve& E = fam.over_rationals();
  const auto t = two_torsion(fam);
  const auto halves = halve(fam, t[1]);
  const RationalPoint q1 = rp(make_rational(146, 25), make_rational(9408, 625));
  const RationalPoint q2 = rp(make_rational(-46, 25), make_rational(192, 625));
  CHECK(std::find(halves.begin(), halves.end(), q1) != halves.end());
  CHECK(std::find(halves.begin(), halves.end(), q2) != halves.end());
  CHECK(halves.size() == 4);
  for (const auto& Q : halves) CHECK(E.dbl(Q) == t[1]);
  CHECK(halve(fam, t[0]).empty());  // r1 - r2 = -4 kappa^2 < 0
  const auto from_O = halve(fam, RationalPoint::at_infinity());
  CHECK(from_O.size() == 4);
  // 2 +- 4 kappa are the x-coordinates of the halves of T2, for every s
  for (const BigRational& s : random_parameters(30, 4)) {
    const CurveFamily f = CurveFamily::from_s(s);
    const auto h = halve(f, two_torsion(f)[1]);
    REQUIRE(h.size() == 4);
    const BigRational k = f.params().kappa;
    for (const auto& Q : h) REQUIRE((Q.x == 2 + 4 * k || Q.x == 2 - 4 * k));
    REQUIRE(halve(f, two_torsion(f)[0]).empty());
  }
}

TEST_CASE("torsion subgroup") {
  const CurveFamily fam = CurveFamily::from_s(BigRational(2));
  const RationalCurve& E = fam.over_rationals();
  const TorsionGroup tg = torsion_subgroup(fam);
  CHECK(tg.structure() == "Z/4 x Z/2");
  CHECK(tg.points.size() == 8);
  CHECK(tg.generator == rp(make_rational(146, 25), make_rational(9408, 625)));
  CHECK(E.dbl(tg.generator) == rp(2, 0));
  // independent doubling formula
  CHECK(doubling_oracle(kA2, tg.generator.x, tg.generator.y) == 2);
  CHECK(tg.halvable_two_torsion == std::vector<int>{2});

  const TorsionGroup t3 = torsion_subgroup(CurveFamily::from_s(BigRational(3)));
  CHECK(t3.structure() == "Z/4 x Z/2");
  CHECK(CurveFamily::from_s(BigRational(3)).params().c == make_rational(7, 25));

  for (const BigRational& s : random_parameters(15, 21)) {
    const CurveFamily f = CurveFamily::from_s(s);
    const TorsionGroup g = torsion_subgroup(f);
    REQUIRE(g.points.size() == static_cast<std::size_t>(2 * g.cyclic_order));
    for (std::size_t i = 0; i < g.points.size(); ++i) {
      REQUIRE(f.over_rationals().order(g.points[i], 16) == g.orders[i]);
    }
  }
}

TEST_CASE("M and f") {
  const CurveFamily fam = CurveFamily::from_s(BigRational(2));
  const RationalPoint q1 = rp(make_rational(146, 25), make_rational(9408, 625));
  const RationalPoint q2 = rp(make_rational(-46, 25), make_rational(192, 625));
  const RationalPoint T1 = two_torsion(fam)[0];
  CHECK(M_value(fam, q1) == 1);
  CHECK(M_value(fam, T1) == 0);
  CHECK(f_value(fam, q1) == 1);
  CHECK(f_value(fam, q2) == -1);
  CHECK(f_value(fam, T1) == 0);
  CHECK_THROWS_AS(f_value(fam, two_torsion(fam)[1]), DomainError);
  CHECK_THROWS_AS(f_value(fam, RationalPoint::at_infinity()), DomainError);
}

TEST_CASE("lift to the genus-3 curve") {
  const CurveFamily fam = CurveFamily::from_s(BigRational(2));
  const RationalPoint q1 = rp(make_rational(146, 25), make_rational(9408, 625));
  const RationalPoint q2 = rp(make_rational(-46, 25), make_rational(192, 625));
  CHECK(lift_to_genus3(fam, q1).failure == LiftFailure::kDegenerateOne);
  CHECK(lift_to_genus3(fam, q2).failure == LiftFailure::kNegative);
  CHECK(lift_to_genus3(fam, two_torsion(fam)[0]).failure == LiftFailure::kZero);
}

TEST_CASE("group law over F_p against brute force") {
  const CurveFamily fam = CurveFamily::from_s(BigRational(2));
  const auto E = fam.over_prime(101);
  REQUIRE(E.has_value());
  const auto pts = all_points(*E);
  const std::uint64_t n = pts.size();
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const ModPoint& P = pts[rng() % n];
    const ModPoint& Q = pts[rng() % n];
    const ModPoint& R = pts[rng() % n];
    REQUIRE(E->contains(E->add(P, Q)));
    REQUIRE(E->add(P, Q) == E->add(Q, P));
    REQUIRE(E->add(E->add(P, Q), R) == E->add(P, E->add(Q, R)));
    REQUIRE(E->multiply(P, static_cast<std::int64_t>(n)).infinity);  // Lagrange
    REQUIRE(E->add(P, E->negate(P)).infinity);
  }
  CHECK_FALSE(fam.over_prime(5).has_value());  // 5 divides den(A)
}

TEST_CASE("f^2 = M and the T2 translation formula") {
  std::mt19937_64 rng(6);
  for (const BigRational& s : random_parameters(10, 13)) {
    const CurveFamily fam = CurveFamily::from_s(s);
    for (std::uint64_t p : {1009ull, 10007ull, 65537ull}) {
      const auto E = fam.over_prime(p);
      if (!E) continue;
      const PrimeField& F = E->field();
      const auto A = E->A();
      const ModPoint T2 = E->two_torsion()[1];
      for (int i = 0; i < 100; ++i) {
        const std::uint64_t x = rng() % p;
        const auto y = F.sqrt(E->rhs(x));
        if (!y) continue;
        const ModPoint P = ModPoint::affine(x, *y);
        if (!E->f_defined(P)) continue;
        const auto f = E->f(P);
        REQUIRE(F.mul(f, f) == E->M(P));
        if (x == 2) continue;
        const ModPoint S = E->add(P, T2);
        const auto expect = F.div(F.mul(F.from_int(2), F.add(x, F.add(F.mul(F.from_int(2), A), F.from_int(2)))),
                                  F.sub(x, F.from_int(2)));
        REQUIRE(S.x == expect);
      }
    }
  }
  // rational check
  const CurveFamily fam = CurveFamily::from_s(BigRational(2));
  const RationalPoint q = rp(make_rational(146, 25), make_rational(9408, 625));
  CHECK(f_value(fam, q) * f_value(fam, q) == M_value(fam, q));
}

TEST_CASE("quotient maps") {
  RationalField Q;
  const auto base = quotient_map(Genus3Point{BigRational(0), BigRational(1)}, Involution::kNegate);
  CHECK(base.first == 0);
  CHECK(base.second == 1);
  CHECK_THROWS_AS(quotient_map(Genus3Point{BigRational(0), BigRational(1)}, Involution::kReciprocal), DomainError);

  const CurveFamily fam = CurveFamily::from_s(BigRational(2));
  const PrimeField F(101);
  const auto A = F.from_rational(fam.A());
  CHECK(A == F.div(F.from_int(1054), F.from_int(625)));
  int tested = 0;
  for (std::uint64_t lambda = 1; lambda < 101; ++lambda) {
    const auto l4 = F.pow(lambda, 4);
    const auto w2 = F.add(F.add(F.mul(l4, l4), F.mul(A, l4)), 1);
    const auto w = F.sqrt(w2);
    if (!w) continue;
    ++tested;
    REQUIRE(on_model(F, A, QuarticModelPoint<PrimeField>{QuarticModel::kGenus3, lambda, *w}));
    for (Involution inv : {Involution::kNegate, Involution::kReciprocal, Involution::kNegReciprocal}) {
      REQUIRE(on_model(F, A, quotient_map(F, lambda, *w, inv)));
    }
  }
  CHECK(tested > 10);
  // mu = lambda^2 recovers M = mu^2 through the lift of a point with f a square
  for (const BigRational& s : random_parameters(5, 77)) {
    const CurveFamily f = CurveFamily::from_s(s);
    for (const RationalPoint& P : torsion_subgroup(f).points) {
      if (P.infinity || !f.over_rationals().f_defined(P)) continue;
      const LiftResult lift = lift_to_genus3(f, P);
      if (!lift.point) continue;
      const auto mu = quotient_map(*lift.point, Involution::kNegate).first;
      REQUIRE(mu * mu == M_value(f, P));
    }
  }
}
