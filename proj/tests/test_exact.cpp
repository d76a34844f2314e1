#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brick/exact.hpp"
#include "brick/polynomial.hpp"

using namespace brick;

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("-7/25").get_num() == -7);
  CHECK(parse_rational("5") == 5);
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_rational("10/-4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("perfect squares") {
  CHECK(perfect_square_root(BigInt(15625)) == BigInt(125));
  CHECK(perfect_square_root(BigInt(0)) == BigInt(0));
  CHECK_FALSE(is_perfect_square(BigInt(177489)));
  CHECK_FALSE(is_perfect_square(BigInt(-4)));
  CHECK(rational_square_root(make_rational(9, 4)) == make_rational(3, 2));
  CHECK_FALSE(is_rational_square(make_rational(369, 25)));
}

TEST_CASE("residue filter never rejects a square") {
  const auto& filter = SquareResidueFilter::instance();
  for (std::uint64_t k = 0; k < 200000; ++k) {
    REQUIRE(filter.maybe_square_residue(static_cast<std::uint32_t>(k * k % SquareResidueFilter::kModulus)));
  }
  std::mt19937_64 rng(5);
  int agree = 0;
  for (int i = 0; i < 20000; ++i) {
    BigInt n = static_cast<unsigned long>(rng() >> 8);
    if (i % 3 == 0) n = n * n;
    const bool exact = is_perfect_square(n);
    if (exact) REQUIRE(filter.maybe_square(n));
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    REQUIRE(exact == (r * r == n));
    ++agree;
  }
  CHECK(agree == 20000);
  CHECK(isqrt_u64(~0ull) == 4294967295ull);
  CHECK(isqrt_u64(99) == 9);
}

TEST_CASE("factorization examples") {
  Factorization f = factorize(BigInt(369));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == 3);
  CHECK(f.factors[0].exponent == 2);
  CHECK(f.factors[1].prime == 41);

  f = factorize(BigInt(1));
  CHECK(f.factors.empty());
  CHECK(f.unit == 1);

  f = factorize(BigInt(-4704));
  CHECK(f.unit == -1);
  CHECK(f.exponent_of(2) == 5);
  CHECK(f.exponent_of(3) == 1);
  CHECK(f.exponent_of(7) == 2);
  CHECK_THROWS_AS(factorize(BigInt(0)), DomainError);
}

TEST_CASE("factorization round-trips on random and hard inputs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    BigInt n = static_cast<unsigned long>(rng() >> 16);
    n *= static_cast<unsigned long>(rng() >> 24);
    Factorization f = factorize(n);
    REQUIRE(f.value() == n);
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      REQUIRE(is_prime(f.factors[k].prime));
      if (k) REQUIRE(f.factors[k - 1].prime < f.factors[k].prime);
    }
  }
  // semiprime of two 31-bit primes and a 20-digit prime power
  const BigInt p("2147483647"), q("2147483629");
  Factorization f = factorize(p * q);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == q);
  const BigInt big("100000000000000000039");
  CHECK(factorize(big * big * 12).exponent_of(big) == 2);
  for (std::uint64_t n : {1ull, 2ull, 97ull, 1ull << 63, 18446744073709551557ull, 600851475143ull}) {
    std::uint64_t prod = 1;
    for (auto [pr, e] : factorize_u64(n)) {
      REQUIRE(is_prime_u64(pr));
      for (unsigned k = 0; k < e; ++k) prod *= pr;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("primality agrees with trial division below 10^5") {
  for (std::uint64_t n = 0; n < 100000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    REQUIRE(is_prime_u64(n) == trial);
  }
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2, 3, 5, 7
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(BigRational(48)) == 3);
  CHECK(squarefree_part(make_rational(4704, 625)) == 6);
  CHECK(squarefree_part(BigRational(-1)) == -1);
  CHECK(squarefree_part(make_rational(-96, 625)) == -6);
  CHECK_THROWS_AS(squarefree_part(BigRational(0)), DomainError);
  // q / sqfree(q) is a square on random rationals
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const BigRational q = make_rational(static_cast<long>(rng() % 100000) - 50000, static_cast<long>(rng() % 5000) + 1);
    if (q == 0) continue;
    const BigInt d = squarefree_part(q);
    REQUIRE(is_rational_square(q / d));
    for (const auto& pp : factorize(d).factors) REQUIRE(pp.exponent == 1);
  }
}

TEST_CASE("valuations") {
  CHECK(valuation(BigInt(4704), BigInt(2)) == 5);
  CHECK(valuation(make_rational(7, 50), BigInt(5)) == -2);
  CHECK(valuation(BigInt(13), BigInt(2)) == 0);
}

TEST_CASE("Gaussian integers") {
  CHECK(canonical_gaussian_prime(BigInt(13)) == GaussianInt{3, 2});
  CHECK(canonical_gaussian_prime(BigInt(5)) == GaussianInt{2, 1});
  CHECK_THROWS_AS(canonical_gaussian_prime(BigInt(7)), DomainError);

  GaussianValuation v = gaussian_valuations({12, 15}, BigInt(3));
  CHECK(v.kind == PrimeKind::kInert);
  CHECK(v.first == 1);
  CHECK(v.norm_valuation() == 2);

  v = gaussian_valuations({2, 1}, BigInt(5));
  CHECK(v.kind == PrimeKind::kSplit);
  CHECK(v.first == 1);
  CHECK(v.second == 0);

  v = gaussian_valuations({5, 0}, BigInt(5));
  CHECK(v.first == 1);
  CHECK(v.second == 1);

  v = gaussian_valuations({16, 15}, BigInt(13));
  CHECK(v.norm_valuation() == 1);

  v = gaussian_valuations({2, 2}, BigInt(2));
  CHECK(v.kind == PrimeKind::kRamified);
  CHECK(v.first == 3);  // 2 + 2i = -i (1+i)^3

  // norm valuation equals v_p(N(z)) on random z
  std::mt19937_64 rng(9);
  for (int i = 0; i < 400; ++i) {
    GaussianInt z{static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 2001) - 1000};
    if (z.is_zero()) continue;
    for (long p : {2L, 3L, 5L, 7L, 13L, 17L, 29L}) {
      REQUIRE(gaussian_valuations(z, BigInt(p)).norm_valuation() == valuation(z.norm(), BigInt(p)));
    }
  }
  // Brahmagupta-Fibonacci: N(z w) = N(z) N(w)
  const GaussianInt a{12, 15}, b{16, 15};
  CHECK((a * b).norm() == a.norm() * b.norm());
  CHECK(exact_divide(a * b, b) == a);
}

TEST_CASE("rational roots of polynomials") {
  // (x - 1/2)(x + 3)(x^2 + 1) = x^4 + 5/2 x^3 - 1/2 x^2 + 5/2 x - 3/2
  RationalPoly p{make_rational(-3, 2), make_rational(5, 2), make_rational(-1, 2), make_rational(5, 2), BigRational(1)};
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == -3);
  CHECK(roots[1] == make_rational(1, 2));
  CHECK(rational_roots(RationalPoly{BigRational(0), BigRational(0), BigRational(1)}) == std::vector<BigRational>{0});
  CHECK(degree(poly_gcd(RationalPoly{-1, 0, 1}, RationalPoly{1, 1})) == 1);
}
