#pragma once

// The two coefficient fields used by the curve code. Both expose the same
// small interface so the group law and the function f can be written once.

#include <cstdint>
#include <optional>
#include <string>

#include "brick/exact.hpp"

namespace brick {

class RationalField {
 public:
  using Elem = BigRational;

  Elem from_int(std::int64_t v) const { return BigRational(static_cast<long>(v)); }
  Elem from_rational(const BigRational& q) const { return q; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw DomainError("division by zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  std::optional<Elem> sqrt(const Elem& a) const { return rational_square_root(a); }
  // a is a nonzero square
  bool is_nonzero_square(const Elem& a) const { return a != 0 && is_rational_square(a); }
  std::string to_string(const Elem& a) const { return brick::to_string(a); }
};

// F_p for an odd prime p < 2^62.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  Elem from_int(const BigInt& v) const {
    return static_cast<Elem>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_)));
  }
  // Throws DomainError when p divides the denominator.
  Elem from_rational(const BigRational& q) const;

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem pow(Elem base, std::uint64_t e) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  // Legendre symbol: 0, 1 or -1.
  int legendre(Elem a) const;
  bool is_nonzero_square(Elem a) const { return legendre(a) == 1; }
  // Tonelli-Shanks; nullopt for non-residues.
  std::optional<Elem> sqrt(Elem a) const;
  std::string to_string(Elem a) const { return std::to_string(a); }

 private:
  std::uint64_t p_;
};

}  // namespace brick
