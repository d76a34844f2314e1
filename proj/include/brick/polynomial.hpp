#pragma once

// Dense univariate polynomials over Q; coefficient i multiplies x^i.

#include <vector>

#include "brick/exact.hpp"

namespace brick {

using RationalPoly = std::vector<BigRational>;

void trim(RationalPoly& p);
int degree(const RationalPoly& p);  // -1 for the zero polynomial
BigRational evaluate(const RationalPoly& p, const BigRational& x);
RationalPoly derivative(const RationalPoly& p);
RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);

// Monic gcd over Q (zero polynomial if both inputs are zero).
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);

// Distinct rational roots in increasing order. The polynomial is cleared to
// an integer monic form and its integer roots are isolated by exact
// bisection between critical points; no floating point is involved.
std::vector<BigRational> rational_roots(const RationalPoly& p);

}  // namespace brick
