#include <algorithm>
#include <map>

#include "brick/exact.hpp"

namespace brick {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialBound = 10000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic for all 64-bit inputs with these bases.
bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
u64 pollard_brent_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(mulmod(v, v, n)) + c) % n); };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (miller_rabin_u64(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent_u64(n);
  split_u64(d, out);
  split_u64(n / d, out);
}

bool fits_u64(const BigInt& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const BigInt& n) {
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(u64), 0, 0, n.get_mpz_t());
  return out;
}

BigInt from_u64(u64 v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &v);
  return out;
}

BigInt pollard_brent_big(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x = 2, g = 1, q = 1, ys = 2, diff;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_big(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (fits_u64(n)) {
    std::map<u64, unsigned> small;
    split_u64(to_u64(n), small);
    for (auto [p, e] : small) out[from_u64(p)] += e;
    return;
  }
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // Rho needs ~sqrt(p) steps, hopeless for p^k with large p; take roots first.
  for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<BigInt, unsigned> inner;
      split_big(root, inner);
      for (auto& [p, e] : inner) out[p] += e * k;
      return;
    }
  }
  BigInt d = pollard_brent_big(n);
  split_big(d, out);
  split_big(BigInt(n / d), out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) { return miller_rabin_u64(n); }

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return miller_rabin_u64(to_u64(n));
  // Baillie-PSW plus extra Miller-Rabin rounds.
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factor zero");
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p : small_primes()) {
    if (p * p > n) break;
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) {
    std::map<u64, unsigned> rest;
    split_u64(n, rest);
    for (auto [p, e] : rest) out.emplace_back(p, e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factorize(const BigInt& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  Factorization fac;
  fac.unit = n < 0 ? -1 : 1;
  BigInt m = abs(n);
  if (fits_u64(m)) {
    for (auto [p, e] : factorize_u64(to_u64(m))) fac.factors.push_back({from_u64(p), e});
    return fac;
  }
  std::map<BigInt, unsigned> found;
  for (u64 p : small_primes()) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    found[from_u64(p)] = e;
  }
  split_big(m, found);
  for (auto& [p, e] : found) fac.factors.push_back({p, e});
  return fac;
}

BigInt Factorization::value() const {
  BigInt v = unit;
  for (const auto& pp : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    v *= pe;
  }
  return v;
}

unsigned Factorization::exponent_of(const BigInt& p) const {
  for (const auto& pp : factors) {
    if (pp.prime == p) return pp.exponent;
  }
  return 0;
}

}  // namespace brick
