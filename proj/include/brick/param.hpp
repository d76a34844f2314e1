#pragma once

// Euclid-pair parametrization of the brick problem: Pythagorean triples,
// the quartic pair (f1, f2), the normalized coefficients c, kappa, A, the
// conic parameter lambda, and brick checking / reconstruction.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "brick/exact.hpp"

namespace brick {

// Coprime a > b > 0. Parity is not enforced; see EuclidPair.
struct CoprimePair {
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t U() const { return a * a - b * b; }
  std::int64_t V() const { return 2 * a * b; }
  std::int64_t W() const { return a * a + b * b; }
  bool opposite_parity() const { return ((a - b) & 1) != 0; }
  BigRational ratio() const { return make_rational(a, b); }

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;
  friend auto operator<=>(const CoprimePair&, const CoprimePair&) = default;
};

// a > b > 0, gcd(a, b) = 1, a - b odd: generates a primitive triple (U, V, W).
class EuclidPair {
 public:
  // Throws DomainError when the invariants fail.
  static EuclidPair make(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return pair_.a; }
  std::int64_t b() const { return pair_.b; }
  std::int64_t U() const { return pair_.U(); }
  std::int64_t V() const { return pair_.V(); }
  std::int64_t W() const { return pair_.W(); }
  const CoprimePair& pair() const { return pair_; }
  operator const CoprimePair&() const { return pair_; }

 private:
  explicit EuclidPair(CoprimePair p) : pair_(p) {}
  CoprimePair pair_;
};

// All coprime (a, b) with b < a <= max, in lexicographic order (a ascending,
// then b). With parity_filter only opposite-parity pairs are kept.
std::vector<CoprimePair> enumerate_pairs(std::int64_t max, bool parity_filter);

// Coprime (a, b) with 1 <= a < b <= max, as ratios s = a/b < 1. This is the
// reciprocal convention used for the rank survey; c(s) = c(1/s).
std::vector<BigRational> reciprocal_parameters(std::int64_t max);

// n distinct non-degenerate s = p/q (s not in {0, +-1}) with 1 <= |p|, q <= bound,
// random sign, from a seeded mt19937_64.
std::vector<BigRational> random_parameters(std::size_t n, std::uint64_t seed, std::int64_t bound = 100);

struct QuarticPair {
  BigInt f1;
  BigInt f2;
  CoprimePair first;
  CoprimePair second;
  BigInt L1;  // 2(a^2-b^2)mn
  BigInt L2;  // 4abmn
  BigInt L3;  // (a^2+b^2)(m^2-n^2)
};

// f1 = L1^2 + L3^2 and f2 = L2^2 + L3^2 in cleared-denominator form.
QuarticPair quartic_pair(const CoprimePair& first, const CoprimePair& second);

struct FamilyParams {
  BigRational s;
  BigRational c;
  BigRational kappa;
  BigRational A;
  bool degenerate = false;  // kappa == 0 (s = +-1)
};

// c = (s^4-6s^2+1)/(1+s^2)^2, kappa = 4s(s^2-1)/(1+s^2)^2, A = 2 - 4c^2.
// s = 0 is rejected; s = +-1 is rejected unless allow_degenerate.
FamilyParams family_params(const BigRational& s, bool allow_degenerate = false);

struct FourFactors {
  BigRational phi;  // 4s/(1+s^2)
  BigRational psi;  // 2(s^2-1)/(1+s^2)
  // lambda^2 + phi*lambda + 1, lambda^2 - phi*lambda + 1,
  // lambda^2 + psi*lambda + 1, lambda^2 - psi*lambda + 1
  std::array<BigRational, 4> factors;
  BigRational first_product;   // P1 P2 = lambda^4 + 2c lambda^2 + 1
  BigRational second_product;  // P3 P4 = lambda^4 - 2c lambda^2 + 1
  BigRational product;         // lambda^8 + A lambda^4 + 1
};

FourFactors four_factor_eval(const BigRational& s, const BigRational& lambda);

struct ConicPoint {
  BigRational rho;
  BigRational Y;
};

// rho = 4 U1 lambda / (W1 (1 - lambda^2)), Y = 2 U1 (1 + lambda^2)/(1 - lambda^2)
// with (U1, W1) taken from s = a/b in lowest terms.
ConicPoint lambda_to_rho(const BigRational& s, const BigRational& lambda);

struct BrickCandidate {
  std::array<BigInt, 3> edges;
};

struct DiagonalCheck {
  BigInt sum_of_squares;
  std::optional<BigInt> root;
  bool integral() const { return root.has_value(); }
};

struct BrickReport {
  std::array<DiagonalCheck, 3> faces;  // d12, d13, d23
  DiagonalCheck space;
  bool is_euler = false;
  bool is_perfect = false;
};

BrickReport check_brick(const BrickCandidate& candidate);

// Edges from Euclid pairs (a,b), (m,n) via e1 = U1 U2, e2 = V1 U2, e3 = U1 V2
// (absolute values). Face diagonals d12 and d13 are integral by construction.
BrickCandidate edges_from_pairs(std::int64_t a, std::int64_t b, const BigInt& m, const BigInt& n);

// Recovers the brick from a rational solution of the quartic pair
// r^2 = lambda^4 + 2c lambda^2 + 1, x^2 = lambda^4 - 2c lambda^2 + 1.
// Throws DomainError("degenerate") for lambda in {0, +-1} or kappa(s) = 0 and
// DomainError("not a quartic-pair solution") when the equations fail.
BrickCandidate reconstruct_brick(const BigRational& s, const BigRational& lambda,
                                 const BigRational& r, const BigRational& x);

// Same, given r^2 and x^2; rejects values that are not rational squares.
BrickCandidate reconstruct_brick_from_squares(const BigRational& s, const BigRational& lambda,
                                              const BigRational& r_squared,
                                              const BigRational& x_squared);

}  // namespace brick
