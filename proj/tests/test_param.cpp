#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "brick/param.hpp"
#include "brick/polynomial.hpp"

using namespace brick;

namespace {

// Independent double loop.
std::size_t count_pairs(std::int64_t max, bool parity) {
  std::size_t n = 0;
  for (std::int64_t a = 2; a <= max; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      if (std::gcd(a, b) == 1 && (!parity || (a - b) % 2 == 1)) ++n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("Euclid pair validation and triples") {
  const EuclidPair p = EuclidPair::make(2, 1);
  CHECK(p.U() == 3);
  CHECK(p.V() == 4);
  CHECK(p.W() == 5);
  CHECK_THROWS_AS(EuclidPair::make(3, 1), DomainError);
  CHECK_THROWS_AS(EuclidPair::make(4, 2), DomainError);
  CHECK_THROWS_AS(EuclidPair::make(1, 2), DomainError);
  for (const auto& q : enumerate_pairs(60, true)) {
    REQUIRE(q.U() * q.U() + q.V() * q.V() == q.W() * q.W());
  }
}

TEST_CASE("pair enumeration counts") {
  CHECK(enumerate_pairs(2, true) == std::vector<CoprimePair>{{2, 1}});
  CHECK(reciprocal_parameters(19).size() == 119);
  CHECK(enumerate_pairs(19, false).size() == 119);
  for (std::int64_t max : {2, 7, 19, 39, 40, 77}) {
    CHECK(enumerate_pairs(max, true).size() == count_pairs(max, true));
    CHECK(enumerate_pairs(max, false).size() == count_pairs(max, false));
  }
  // parity-filtered count at 40 is 331; 473 is the coprime count below 40
  CHECK(enumerate_pairs(40, true).size() == 331);
  CHECK(enumerate_pairs(39, false).size() == 473);
  const auto pairs = enumerate_pairs(30, true);
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  CHECK_THROWS_AS(enumerate_pairs(1, true), DomainError);
}

TEST_CASE("quartic pair examples") {
  const QuarticPair q = quartic_pair(EuclidPair::make(2, 1), EuclidPair::make(2, 1));
  CHECK(q.L1 == 12);
  CHECK(q.L2 == 16);
  CHECK(q.L3 == 15);
  CHECK(q.f1 == 369);
  CHECK(q.f2 == 481);
  CHECK(q.f1 * q.f2 == 177489);

  const QuarticPair r = quartic_pair(EuclidPair::make(2, 1), EuclidPair::make(4, 1));
  CHECK(r.L3 == 75);
  CHECK(r.f2 == 6649);
}

TEST_CASE("quartic pair identities on all pairs up to 25") {
  const auto pairs = enumerate_pairs(25, true);
  for (const auto& p1 : pairs) {
    for (const auto& p2 : pairs) {
      const QuarticPair q = quartic_pair(p1, p2);
      // third sum is automatic
      const BigInt mnW = BigInt(2 * p2.a * p2.b) * p1.W();
      REQUIRE(q.L1 * q.L1 + q.L2 * q.L2 == mnW * mnW);
      // Brahmagupta-Fibonacci
      const BigInt bf1 = q.L1 * q.L2 - q.L3 * q.L3, bf2 = q.L3 * (q.L1 + q.L2);
      REQUIRE(q.f1 * q.f2 == bf1 * bf1 + bf2 * bf2);
      // f1 f2 / (W1^4 n^8) = lambda^8 + A lambda^4 + 1 with lambda = m/n
      const FamilyParams fp = family_params(p1.ratio());
      const BigRational lambda = make_rational(p2.a, p2.b);
      const BigRational l4 = pow(lambda, 4);
      const BigRational scale = pow(BigRational(p1.W()), 4) * pow(BigRational(p2.b), 8);
      REQUIRE(BigRational(q.f1 * q.f2) / scale == l4 * l4 + fp.A * l4 + 1);
    }
  }
}

TEST_CASE("family parameters") {
  const FamilyParams fp = family_params(BigRational(2));
  CHECK(fp.c == make_rational(-7, 25));
  CHECK(fp.kappa == make_rational(24, 25));
  CHECK(fp.A == make_rational(1054, 625));
  CHECK_FALSE(fp.degenerate);
  CHECK_THROWS_AS(family_params(BigRational(0)), DomainError);
  CHECK_THROWS_AS(family_params(BigRational(1)), DomainError);
  const FamilyParams one = family_params(BigRational(1), true);
  CHECK(one.degenerate);
  CHECK(one.kappa == 0);
  CHECK(one.c == -1);

  for (const BigRational& s : random_parameters(300, 17)) {
    const FamilyParams p = family_params(s);
    REQUIRE(p.c * p.c + p.kappa * p.kappa == 1);
    REQUIRE(p.A + 2 == 4 * p.kappa * p.kappa);
    REQUIRE(family_params(1 / s).c == p.c);
  }
}

TEST_CASE("four factors") {
  const FourFactors f = four_factor_eval(BigRational(2), BigRational(2));
  CHECK(f.phi == make_rational(8, 5));
  CHECK(f.psi == make_rational(6, 5));
  CHECK(f.factors[0] == make_rational(41, 5));
  CHECK(f.factors[1] == make_rational(9, 5));
  CHECK(f.factors[2] == make_rational(37, 5));
  CHECK(f.factors[3] == make_rational(13, 5));
  CHECK(f.first_product == make_rational(369, 25));
  CHECK(f.second_product == make_rational(481, 25));
  CHECK(f.product == make_rational(177489, 625));
  const FourFactors zero = four_factor_eval(make_rational(3, 7), BigRational(0));
  for (const auto& v : zero.factors) CHECK(v == 1);
  CHECK(f.phi * f.phi + f.psi * f.psi == 4);
}

TEST_CASE("conic parameter") {
  const ConicPoint c = lambda_to_rho(BigRational(2), BigRational(2));
  CHECK(c.rho == make_rational(-8, 5));
  const ConicPoint base = lambda_to_rho(BigRational(2), BigRational(0));
  CHECK(base.rho == 0);
  CHECK(base.Y == 6);
  CHECK_THROWS_AS(lambda_to_rho(BigRational(2), BigRational(1)), DomainError);
  std::mt19937_64 rng(2);
  for (const BigRational& s : random_parameters(100, 5)) {
    if (s < 0) continue;
    const BigRational lambda = make_rational(static_cast<long>(rng() % 200) - 100, static_cast<long>(rng() % 50) + 1);
    if (lambda == 1 || lambda == -1) continue;
    const ConicPoint p = lambda_to_rho(s, lambda);
    const BigInt a = s.get_num(), b = s.get_den();
    const BigRational U = a * a - b * b, W = a * a + b * b;
    REQUIRE(W * W * p.rho * p.rho + 4 * U * U == p.Y * p.Y);
  }
}

TEST_CASE("brick checks") {
  BrickReport r = check_brick({{BigInt(44), BigInt(117), BigInt(240)}});
  CHECK(r.is_euler);
  CHECK_FALSE(r.is_perfect);
  CHECK(r.faces[0].root == BigInt(125));
  CHECK(r.faces[1].root == BigInt(244));
  CHECK(r.faces[2].root == BigInt(267));
  CHECK(r.space.sum_of_squares == 73225);
  CHECK_FALSE(r.space.integral());

  r = check_brick({{BigInt(1), BigInt(1), BigInt(1)}});
  CHECK_FALSE(r.faces[0].integral());
  CHECK_FALSE(r.faces[1].integral());
  CHECK_FALSE(r.faces[2].integral());

  r = check_brick({{BigInt(3), BigInt(4), BigInt(12)}});
  CHECK(r.faces[0].root == BigInt(5));
  CHECK_FALSE(r.is_euler);
  CHECK(r.space.root == BigInt(13));

  // edges from Euclid pairs always have two integral face diagonals
  for (const auto& p1 : enumerate_pairs(15, true)) {
    for (const auto& p2 : enumerate_pairs(15, true)) {
      const BrickReport e = check_brick(edges_from_pairs(p1.a, p1.b, BigInt(p2.a), BigInt(p2.b)));
      REQUIRE(e.faces[0].integral());
      REQUIRE(e.faces[1].integral());
      REQUIRE_FALSE(e.is_perfect);
    }
  }
}

TEST_CASE("brick reconstruction error paths") {
  CHECK_THROWS_WITH_AS(reconstruct_brick(BigRational(2), BigRational(1), BigRational(1), BigRational(1)),
                       doctest::Contains("degenerate"), DomainError);
  CHECK_THROWS_WITH_AS(reconstruct_brick(BigRational(2), BigRational(0), BigRational(1), BigRational(1)),
                       doctest::Contains("degenerate"), DomainError);
  CHECK_THROWS_AS(reconstruct_brick_from_squares(BigRational(2), BigRational(2), make_rational(369, 25),
                                                 make_rational(481, 25)),
                  DomainError);
  // kappa = 0: the quartics are perfect squares but the family is excluded
  CHECK_THROWS_WITH_AS(reconstruct_brick(BigRational(1), BigRational(2), BigRational(3), BigRational(5)),
                       doctest::Contains("degenerate"), DomainError);
  // inconsistent r, x
  CHECK_THROWS_WITH_AS(reconstruct_brick(BigRational(2), BigRational(2), BigRational(3), BigRational(4)),
                       doctest::Contains("not a quartic-pair solution"), DomainError);
}

TEST_CASE("coprimality of the two quartics at random c") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    BigRational c = make_rational(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 999) + 1);
    if (c == 0) c = 1;
    const RationalPoly p{BigRational(1), BigRational(0), 2 * c, BigRational(0), BigRational(1)};
    const RationalPoly q{BigRational(1), BigRational(0), -2 * c, BigRational(0), BigRational(1)};
    REQUIRE(degree(poly_gcd(p, q)) == 0);
  }
}
