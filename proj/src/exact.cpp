#include "brick/exact.hpp"

#include <charconv>

namespace brick {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  BigInt den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigRational pow(const BigRational& q, unsigned e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  BigRational r(num, den);
  return r;  // already canonical: gcd(num^e, den^e) = 1
}

// ---------------------------------------------------------------------------

SquareResidueFilter::SquareResidueFilter() : bits_((kModulus + 63) / 64, 0) {
  // residue r mod M is a possible square iff it is a square mod each factor
  constexpr std::uint32_t kFactors[] = {64, 63, 65, 11};
  std::vector<std::vector<bool>> square_mod;
  for (std::uint32_t m : kFactors) {
    std::vector<bool> sq(m, false);
    for (std::uint32_t k = 0; k < m; ++k) sq[(k * k) % m] = true;
    square_mod.push_back(std::move(sq));
  }
  for (std::uint32_t r = 0; r < kModulus; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < 4 && ok; ++i) ok = square_mod[i][r % kFactors[i]];
    if (ok) bits_[r >> 6] |= std::uint64_t{1} << (r & 63);
  }
}

const SquareResidueFilter& SquareResidueFilter::instance() {
  static const SquareResidueFilter filter;
  return filter;
}

bool SquareResidueFilter::maybe_square(const BigInt& n) const {
  if (n < 0) return false;
  return maybe_square_residue(
      static_cast<std::uint32_t>(mpz_fdiv_ui(n.get_mpz_t(), kModulus)));
}

std::optional<BigInt> perfect_square_root(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (!SquareResidueFilter::instance().maybe_square(n)) return std::nullopt;
  BigInt root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

bool is_perfect_square(const BigInt& n) { return perfect_square_root(n).has_value(); }

std::optional<BigRational> rational_square_root(const BigRational& q) {
  auto num = perfect_square_root(q.get_num());
  if (!num) return std::nullopt;
  auto den = perfect_square_root(q.get_den());
  if (!den) return std::nullopt;
  return BigRational(*num, *den);
}

bool is_rational_square(const BigRational& q) { return rational_square_root(q).has_value(); }

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

// ---------------------------------------------------------------------------

int valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw DomainError("valuation of zero");
  if (p < 2) throw DomainError("valuation base must be >= 2");
  BigInt m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const BigRational& q, const BigInt& p) {
  if (q == 0) throw DomainError("valuation of zero");
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

BigInt squarefree_part(const BigRational& q) {
  if (q == 0) throw DomainError("squarefree part of zero");
  // q ~ num * den modulo squares
  BigInt product = q.get_num() * q.get_den();
  Factorization fac = factorize(product);
  BigInt d = fac.unit;
  for (const auto& pp : fac.factors) {
    if (pp.exponent % 2 == 1) d *= pp.prime;
  }
  return d;
}

}  // namespace brick
