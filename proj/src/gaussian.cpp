#include "brick/exact.hpp"

namespace brick {

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInt conjugate(const GaussianInt& z) { return {z.re, -z.im}; }

std::optional<GaussianInt> exact_divide(const GaussianInt& a, const GaussianInt& b) {
  BigInt n = b.norm();
  if (n == 0) throw DomainError("division by zero in Z[i]");
  GaussianInt t = a * conjugate(b);
  if (!mpz_divisible_p(t.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(t.im.get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_divexact(t.re.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(t.im.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
  return t;
}

GaussianInt canonical_gaussian_prime(const BigInt& p) {
  if (!is_prime(p) || mpz_fdiv_ui(p.get_mpz_t(), 4) != 1) {
    throw DomainError("canonical Gaussian prime requires a prime p = 1 mod 4");
  }
  // sqrt(-1) mod p from a quadratic non-residue, then Cornacchia.
  BigInt exponent = (p - 1) / 4, root;
  for (BigInt c = 2;; ++c) {
    if (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) != -1) continue;
    mpz_powm(root.get_mpz_t(), c.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
    break;
  }
  BigInt a = p, b = root, r;
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), p.get_mpz_t());
  while (b > bound) {
    r = a % b;
    a = b;
    b = r;
  }
  BigInt x = b;
  BigInt y2 = p - x * x;
  auto y = perfect_square_root(y2);
  if (!y) throw std::logic_error("Cornacchia step failed");
  if (x < *y) return {*y, x};
  return {x, *y};
}

int GaussianValuation::norm_valuation() const {
  switch (kind) {
    case PrimeKind::kSplit: return first + second;
    case PrimeKind::kInert: return 2 * first;
    case PrimeKind::kRamified: return first;
  }
  return 0;
}

namespace {

int divide_out(GaussianInt z, const GaussianInt& pi) {
  int v = 0;
  while (auto q = exact_divide(z, pi)) {
    z = *q;
    ++v;
  }
  return v;
}

}  // namespace

GaussianValuation gaussian_valuations(const GaussianInt& z, const BigInt& p) {
  if (!is_prime(p)) throw DomainError("gaussian_valuations: " + to_string(p) + " is not prime");
  if (z.is_zero()) throw DomainError("gaussian_valuations: z = 0");
  if (p == 2) return {PrimeKind::kRamified, divide_out(z, GaussianInt{1, 1}), 0};
  if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
    int vr = z.re == 0 ? INT32_MAX : valuation(z.re, p);
    int vi = z.im == 0 ? INT32_MAX : valuation(z.im, p);
    return {PrimeKind::kInert, std::min(vr, vi), 0};
  }
  GaussianInt pi = canonical_gaussian_prime(p);
  return {PrimeKind::kSplit, divide_out(z, pi), divide_out(z, conjugate(pi))};
}

}  // namespace brick
