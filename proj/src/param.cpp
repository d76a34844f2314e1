#include "brick/param.hpp"

#include <numeric>
#include <random>
#include <set>

namespace brick {

EuclidPair EuclidPair::make(std::int64_t a, std::int64_t b) {
  if (!(a > b && b > 0)) throw DomainError("Euclid pair requires a > b > 0");
  if (std::gcd(a, b) != 1) throw DomainError("Euclid pair requires gcd(a, b) = 1");
  if (((a - b) & 1) == 0) throw DomainError("Euclid pair requires a - b odd");
  return EuclidPair(CoprimePair{a, b});
}

std::vector<CoprimePair> enumerate_pairs(std::int64_t max, bool parity_filter) {
  if (max < 2) throw DomainError("enumerate_pairs requires max >= 2");
  std::vector<CoprimePair> out;
  for (std::int64_t a = 2; a <= max; ++a) {
    for (std::int64_t b = parity_filter ? 1 + (a & 1) : 1; b < a; b += parity_filter ? 2 : 1) {
      if (std::gcd(a, b) == 1) out.push_back({a, b});
    }
  }
  return out;
}

std::vector<BigRational> random_parameters(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  if (bound < 2) throw DomainError("random_parameters requires bound >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(1, bound);
  std::set<BigRational> seen;
  std::vector<BigRational> out;
  while (out.size() < n) {
    BigRational s = make_rational(pick(rng), pick(rng));
    if (rng() & 1) s = -s;
    if (s == 1 || s == -1 || !seen.insert(s).second) continue;
    out.push_back(s);
  }
  return out;
}

std::vector<BigRational> reciprocal_parameters(std::int64_t max) {
  std::vector<BigRational> out;
  for (std::int64_t b = 2; b <= max; ++b) {
    for (std::int64_t a = 1; a < b; ++a) {
      if (std::gcd(a, b) == 1) out.push_back(make_rational(a, b));
    }
  }
  return out;
}

QuarticPair quartic_pair(const CoprimePair& first, const CoprimePair& second) {
  const BigInt a = first.a, b = first.b, m = second.a, n = second.b;
  QuarticPair q;
  q.first = first;
  q.second = second;
  q.L1 = 2 * (a * a - b * b) * m * n;
  q.L2 = 4 * a * b * m * n;
  q.L3 = (a * a + b * b) * (m * m - n * n);
  q.f1 = q.L1 * q.L1 + q.L3 * q.L3;
  q.f2 = q.L2 * q.L2 + q.L3 * q.L3;
  return q;
}

FamilyParams family_params(const BigRational& s, bool allow_degenerate) {
  if (s == 0) throw DomainError("family parameter s must be nonzero");
  FamilyParams fp;
  fp.s = s;
  const BigRational s2 = s * s;
  const BigRational w = (1 + s2) * (1 + s2);
  fp.c = (s2 * s2 - 6 * s2 + 1) / w;
  fp.kappa = 4 * s * (s2 - 1) / w;
  fp.A = 2 - 4 * fp.c * fp.c;
  fp.degenerate = fp.kappa == 0;
  if (fp.degenerate && !allow_degenerate) {
    throw DomainError("degenerate family: kappa(s) = 0 for s = " + to_string(s));
  }
  return fp;
}

FourFactors four_factor_eval(const BigRational& s, const BigRational& lambda) {
  FamilyParams fp = family_params(s, /*allow_degenerate=*/true);
  FourFactors out;
  const BigRational s2 = s * s;
  out.phi = 4 * s / (1 + s2);
  out.psi = 2 * (s2 - 1) / (1 + s2);
  const BigRational l2 = lambda * lambda;
  out.factors = {l2 + out.phi * lambda + 1, l2 - out.phi * lambda + 1,
                 l2 + out.psi * lambda + 1, l2 - out.psi * lambda + 1};
  out.first_product = out.factors[0] * out.factors[1];
  out.second_product = out.factors[2] * out.factors[3];
  out.product = out.first_product * out.second_product;
  const BigRational l4 = l2 * l2;
  if (out.first_product != l4 + 2 * fp.c * l2 + 1 || out.second_product != l4 - 2 * fp.c * l2 + 1 ||
      out.product != l4 * l4 + fp.A * l4 + 1) {
    throw std::logic_error("four-factor decomposition does not reproduce the quartic pair");
  }
  return out;
}

namespace {

struct FirstTriple {
  BigInt a, b, U, V, W;
};

FirstTriple triple_of(const BigRational& s) {
  FirstTriple t;
  t.a = abs(s.get_num());
  t.b = s.get_den();
  t.U = t.a * t.a - t.b * t.b;
  t.V = 2 * t.a * t.b;
  t.W = t.a * t.a + t.b * t.b;
  return t;
}

}  // namespace

ConicPoint lambda_to_rho(const BigRational& s, const BigRational& lambda) {
  if (s == 0) throw DomainError("family parameter s must be nonzero");
  const BigRational l2 = lambda * lambda;
  if (l2 == 1) throw DomainError("lambda = +-1 is a pole of the conic parametrization");
  FirstTriple t = triple_of(s);
  ConicPoint out;
  out.rho = 4 * BigRational(t.U) * lambda / (BigRational(t.W) * (1 - l2));
  out.Y = 2 * BigRational(t.U) * (1 + l2) / (1 - l2);
  return out;
}

BrickReport check_brick(const BrickCandidate& candidate) {
  for (const auto& e : candidate.edges) {
    if (e <= 0) throw DomainError("brick edges must be positive");
  }
  const auto& e = candidate.edges;
  auto check = [](BigInt sum) {
    DiagonalCheck d;
    d.root = perfect_square_root(sum);
    d.sum_of_squares = std::move(sum);
    return d;
  };
  BrickReport r;
  r.faces[0] = check(e[0] * e[0] + e[1] * e[1]);
  r.faces[1] = check(e[0] * e[0] + e[2] * e[2]);
  r.faces[2] = check(e[1] * e[1] + e[2] * e[2]);
  r.space = check(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
  r.is_euler = r.faces[0].integral() && r.faces[1].integral() && r.faces[2].integral();
  r.is_perfect = r.is_euler && r.space.integral();
  return r;
}

BrickCandidate edges_from_pairs(std::int64_t a, std::int64_t b, const BigInt& m, const BigInt& n) {
  const BigInt A = a, B = b;
  const BigInt U1 = A * A - B * B, V1 = 2 * A * B;
  const BigInt U2 = m * m - n * n, V2 = 2 * m * n;
  BrickCandidate out{{abs(U1 * U2), abs(V1 * U2), abs(U1 * V2)}};
  return out;
}

BrickCandidate reconstruct_brick(const BigRational& s, const BigRational& lambda,
                                 const BigRational& r, const BigRational& x) {
  FamilyParams fp = family_params(s, /*allow_degenerate=*/true);
  if (fp.degenerate) throw DomainError("degenerate family (kappa = 0)");
  const BigRational l2 = lambda * lambda;
  if (lambda == 0 || l2 == 1) throw DomainError("degenerate lambda");
  const BigRational l4 = l2 * l2;
  if (r * r != l4 + 2 * fp.c * l2 + 1 || x * x != l4 - 2 * fp.c * l2 + 1) {
    throw DomainError("not a quartic-pair solution");
  }
  ConicPoint conic = lambda_to_rho(s, lambda);
  auto root = rational_square_root(conic.rho * conic.rho + 4);
  if (!root) throw std::logic_error("rho^2 + 4 is not a square although f1 is");
  const BigRational t = (conic.rho + *root) / 2;
  FirstTriple ft = triple_of(s);
  BrickCandidate brick = edges_from_pairs(ft.a.get_si(), ft.b.get_si(), t.get_num(), t.get_den());
  if (!check_brick(brick).is_perfect) {
    throw std::logic_error("reconstructed edges fail the perfect-brick check");
  }
  return brick;
}

BrickCandidate reconstruct_brick_from_squares(const BigRational& s, const BigRational& lambda,
                                              const BigRational& r_squared,
                                              const BigRational& x_squared) {
  auto r = rational_square_root(r_squared);
  if (!r) throw DomainError("not a quartic-pair solution: " + to_string(r_squared) + " is not a rational square");
  auto x = rational_square_root(x_squared);
  if (!x) throw DomainError("not a quartic-pair solution: " + to_string(x_squared) + " is not a rational square");
  return reconstruct_brick(s, lambda, *r, *x);
}

}  // namespace brick
