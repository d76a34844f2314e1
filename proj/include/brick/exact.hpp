#pragma once

// Exact arithmetic kernel: big integers and rationals (GMP-backed), square
// detection, factorization, squarefree parts and Gaussian-integer valuations.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace brick {

using BigInt = mpz_class;
// mpq_class keeps values canonical (lowest terms, positive denominator) as
// long as every construction goes through make_rational / parse_rational.
using BigRational = mpq_class;

// Raised when an input lies outside an operation's mathematical domain
// (zero where a unit is required, a pole, a degenerate parameter, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

BigRational make_rational(const BigInt& num, const BigInt& den = 1);
// Accepts "p", "p/q", optional leading sign. Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);
std::string to_string(const BigInt& n);
std::string to_string(const BigRational& q);

inline const BigInt& numerator(const BigRational& q) { return q.get_num(); }
inline const BigInt& denominator(const BigRational& q) { return q.get_den(); }

BigInt gcd(const BigInt& a, const BigInt& b);
BigRational pow(const BigRational& q, unsigned e);

// ---------------------------------------------------------------------------
// Square detection

// Residue pre-filter modulo 64*63*65*11. A false answer is a proof of
// non-squareness; a true answer means "maybe".
class SquareResidueFilter {
 public:
  static constexpr std::uint32_t kModulus = 64u * 63u * 65u * 11u;

  static const SquareResidueFilter& instance();

  bool maybe_square_residue(std::uint32_t residue_mod_modulus) const {
    return (bits_[residue_mod_modulus >> 6] >> (residue_mod_modulus & 63)) & 1u;
  }
  bool maybe_square(const BigInt& n) const;

 private:
  SquareResidueFilter();
  std::vector<std::uint64_t> bits_;
};

// Root k >= 0 with k*k == n, or nullopt. Negative input yields nullopt.
std::optional<BigInt> perfect_square_root(const BigInt& n);
bool is_perfect_square(const BigInt& n);
std::optional<BigRational> rational_square_root(const BigRational& q);
bool is_rational_square(const BigRational& q);

std::uint64_t isqrt_u64(std::uint64_t n);

// ---------------------------------------------------------------------------
// Primes and factorization

bool is_prime(const BigInt& n);
bool is_prime_u64(std::uint64_t n);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
};

struct Factorization {
  int unit = 1;                    // sign of the factored integer
  std::vector<PrimePower> factors;  // primes strictly increasing

  BigInt value() const;
  unsigned exponent_of(const BigInt& p) const;
};

// Complete factorization of n != 0. Trial division to 10^4, then Pollard-Brent
// with fixed seeds; every cofactor is certified by a primality test.
Factorization factorize(const BigInt& n);

// Factorization of a machine-word value; same contract as factorize().
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

// v_p(n) for n != 0 and v_p(q) = v_p(num) - v_p(den) for q != 0.
int valuation(const BigInt& n, const BigInt& p);
int valuation(const BigRational& q, const BigInt& p);

// The unique squarefree integer d with q/d a rational square (sign of q).
BigInt squarefree_part(const BigRational& q);

// ---------------------------------------------------------------------------
// Gaussian integers

struct GaussianInt {
  BigInt re;
  BigInt im;

  BigInt norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);
GaussianInt conjugate(const GaussianInt& z);
// Exact quotient a / b when it lies in Z[i].
std::optional<GaussianInt> exact_divide(const GaussianInt& a, const GaussianInt& b);

// Canonical prime above a split p = 1 mod 4: x + yi with x > y > 0.
GaussianInt canonical_gaussian_prime(const BigInt& p);

enum class PrimeKind { kRamified, kSplit, kInert };

struct GaussianValuation {
  PrimeKind kind;
  // kSplit: (v_pi, v_pibar) for the canonical pi.
  // kInert: first = v_p(z), second unused (0).
  // kRamified: first = v_{1+i}(z), second unused (0).
  int first = 0;
  int second = 0;

  // v_p(N(z)) implied by the Gaussian valuations.
  int norm_valuation() const;
};

GaussianValuation gaussian_valuations(const GaussianInt& z, const BigInt& p);

}  // namespace brick
