#include "brick/polynomial.hpp"

#include <algorithm>
#include <set>

namespace brick {

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RationalPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

BigRational evaluate(const RationalPoly& p, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly derivative(const RationalPoly& p) {
  RationalPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly out(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(std::max(a.size(), b.size()), BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

namespace {

RationalPoly poly_mod(RationalPoly a, const RationalPoly& b) {
  int db = degree(b);
  BigRational lead = b[db];
  while (degree(a) >= db) {
    int da = degree(a);
    BigRational factor = a[da] / lead;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

void make_monic(RationalPoly& p) {
  trim(p);
  if (p.empty()) return;
  BigRational lead = p.back();
  for (auto& c : p) c /= lead;
}

using IntPoly = std::vector<BigInt>;

BigInt eval_int(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const IntPoly& p, const BigInt& x) { return sgn(eval_int(p, x)); }

IntPoly int_derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return d;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Integers k such that every real root of p lies in some [k, k+1].
std::set<BigInt> root_brackets(const IntPoly& p) {
  std::set<BigInt> out;
  int n = static_cast<int>(p.size()) - 1;
  if (n <= 0) return out;
  if (n == 1) {
    out.insert(floor_div(-p[0], p[1]));
    return out;
  }
  BigInt bound = 0;
  for (int i = 0; i < n; ++i) {
    BigInt q = abs(p[i]);
    BigInt c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_mpz_t(), BigInt(abs(p[n])).get_mpz_t());
    if (c > bound) bound = c;
  }
  bound += 1;

  std::set<BigInt> critical = root_brackets(int_derivative(p));
  std::set<BigInt> points{-bound, bound};
  for (const BigInt& k : critical) {
    if (k + 1 < -bound || k > bound) continue;
    out.insert(k);
    if (k >= -bound) points.insert(k);
    if (k + 1 <= bound) points.insert(k + 1);
  }
  for (auto it = points.begin(); std::next(it) != points.end(); ++it) {
    BigInt lo = *it, hi = *std::next(it);
    if (hi - lo == 1 && critical.count(lo)) continue;  // already reported
    int slo = sign_at(p, lo), shi = sign_at(p, hi);
    if (slo == 0) out.insert(lo);
    if (shi == 0) out.insert(hi);
    if (slo == 0 || shi == 0 || slo == shi) continue;
    // p is monotone on [lo, hi]: bisect to a unit bracket
    while (hi - lo > 1) {
      BigInt mid = floor_div(lo + hi, 2);
      int sm = sign_at(p, mid);
      if (sm == 0) {
        lo = mid;
        break;
      }
      if (sm == slo) lo = mid;
      else hi = mid;
    }
    out.insert(lo);
  }
  return out;
}

}  // namespace

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RationalPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

std::vector<BigRational> rational_roots(const RationalPoly& input) {
  RationalPoly p = input;
  trim(p);
  if (p.empty()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<BigRational> roots;
  if (p[0] == 0) {
    roots.push_back(0);
    while (!p.empty() && p[0] == 0) p.erase(p.begin());
  }
  int n = degree(p);
  if (n >= 1) {
    // integer coefficients
    BigInt lcm_den = 1;
    for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    IntPoly ip;
    for (const auto& c : p) ip.push_back(BigInt(c * lcm_den));
    // monic substitution X = lead * x
    BigInt lead = ip[n];
    // lead^(n-1) * P(X / lead) has coefficients ip[i] * lead^(n-1-i)
    IntPoly monic(n + 1);
    for (int i = n - 1, e = 0; i >= 0; --i, ++e) {
      BigInt le;
      mpz_pow_ui(le.get_mpz_t(), lead.get_mpz_t(), e);
      monic[i] = ip[i] * le;
    }
    monic[n] = 1;
    for (const BigInt& k : root_brackets(monic)) {
      for (BigInt cand : {k, BigInt(k + 1)}) {
        if (eval_int(monic, cand) == 0) roots.push_back(make_rational(cand, lead));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace brick
