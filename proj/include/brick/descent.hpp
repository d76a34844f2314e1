#pragma once

// 2-descent square classes on E_A and the obstructions built on them.

#include <cstdint>
#include <optional>
#include <vector>

#include "brick/curves.hpp"

namespace brick {

// (delta1, delta2, delta3) = squarefree parts of x - r_i, r = (-A, 2, -2).
struct DescentClass {
  BigInt delta1;
  BigInt delta2;
  BigInt delta3;

  bool product_is_square() const;
  friend bool operator==(const DescentClass&, const DescentClass&) = default;
};

// DomainError for O and for points with y = 0.
DescentClass descent_class(const CurveFamily& family, const RationalPoint& P);

struct DeltaGenericReport {
  BigRational Delta1;  // (r1 - r2)(r1 - r3)
  BigRational Delta2;  // (r2 - r1)(r2 - r3)
  BigInt class1;
  BigInt class2;
  bool passes = false;  // class1 == -1 and class2 == 1
};

DeltaGenericReport check_delta_generic(const BigRational& s);

struct ValuationObservation {
  BigInt prime;
  int valuation_of_f = 0;
};

struct D3Verdict {
  DescentClass cls;
  bool torsion = false;
  bool case_a_applies = false;  // delta3 == 1
  BigInt f_square_class;        // squarefree part of f(P)
  // delta3 == 1, P non-torsion and f(P) not in the class of 2: a finding
  bool case_a_violation = false;
  std::vector<BigInt> delta3_odd_primes;
  // odd p | delta3 with p dividing neither delta1 nor delta2 (must stay empty)
  std::vector<BigInt> case_b_violations;
  // odd p dividing both delta2 and delta3, with v_p(f(P))
  std::vector<ValuationObservation> parity_observations;
  // delta3 != 1 and every odd prime of delta3 divides delta1 but not delta2
  bool residual_class = false;
};

// Non-torsion is certified against the torsion list (computed when null).
D3Verdict d3_obstruction(const CurveFamily& family, const RationalPoint& P,
                         const TorsionGroup* torsion = nullptr);

struct CPrimeEntry {
  BigInt prime;
  int v_square_class = 0;   // v_p(2 s (s^2 - 1))
  int v_four_alpha_beta = 0;  // v_p(4 alpha beta)
  int v_difference = 0;     // v_p((alpha^2 - beta^2)^2)
  bool even = false;
};

struct CPrimesReport {
  BigRational c;
  std::vector<CPrimeEntry> primes;  // odd primes dividing the numerator of c
  bool passes = false;
};

// alpha = 2(s^2 - 1)/(1 + s^2), beta = 4s/(1 + s^2). DomainError if c(s) = 0
// or s is degenerate.
CPrimesReport check_c_primes(const BigRational& s);

// gcd(s^2 +- 2s - 1, s(s - 1)(s + 1)) over Q, both signs.
bool c_factor_polynomials_coprime();

struct HarvestConfig {
  std::int64_t height = 10000;
  // Search X = u/w^2 on the integral model Y^2 = (X + A D^2)(X - 2D^2)(X + 2D^2),
  // x = X/D^2, where D is the least integer with D^2 A integral. D = 1 searches
  // x = u/w^2 directly.
  bool integral_model = false;
  // Explicit scale D, overriding integral_model.
  std::optional<BigInt> scale;
};

// Points with y > 0 and x = u/(D w)^2, |u| <= height, 1 <= w <= sqrt(height),
// gcd(u, w) = 1; sorted by x.
std::vector<RationalPoint> harvest_points(const CurveFamily& family, const HarvestConfig& config);

// Least D > 0 with D^2 A integral.
BigInt integral_scale(const BigRational& A);

}  // namespace brick
