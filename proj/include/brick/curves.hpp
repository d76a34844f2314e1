#pragma once

// The curve family attached to a parameter s:
//   C_A : w^2 = lambda^8 + A lambda^4 + 1          (genus 3)
//   E_A : y^2 = (x + A)(x - 2)(x + 2)              (Weierstrass quotient)
// with the three quartic quotient models, the exact group law over Q and
// over F_p, halving, torsion, and the functions M = 4(x+A)/(x^2-4) and
// f = 2y/((x-2)(x+2)).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brick/exact.hpp"
#include "brick/fields.hpp"
#include "brick/param.hpp"

namespace brick {

class DegenerateFamilyError : public DomainError {
 public:
  using DomainError::DomainError;
};

template <class Field>
struct CurvePoint {
  using Elem = typename Field::Elem;

  bool infinity = true;
  Elem x{};
  Elem y{};

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(Elem x, Elem y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

using RationalPoint = CurvePoint<RationalField>;
using ModPoint = CurvePoint<PrimeField>;

// y^2 = (x + A)(x - 2)(x + 2) = x^3 + A x^2 - 4x - 4A over Field.
// Points of another field are a different C++ type, so mixing fields is a
// compile-time error.
template <class Field>
class WeierstrassCurve {
 public:
  using Elem = typename Field::Elem;
  using Point = CurvePoint<Field>;

  WeierstrassCurve(Field field, Elem A) : field_(std::move(field)), A_(std::move(A)) {}

  const Field& field() const { return field_; }
  const Elem& A() const { return A_; }

  Elem rhs(const Elem& x) const {
    const Field& F = field_;
    Elem four = F.from_int(4);
    return F.mul(F.add(x, A_), F.sub(F.mul(x, x), four));
  }

  bool contains(const Point& P) const {
    if (P.infinity) return true;
    return field_.mul(P.y, P.y) == rhs(P.x);
  }

  // Validating constructor.
  Point point(Elem x, Elem y) const {
    Point P = Point::affine(std::move(x), std::move(y));
    if (!contains(P)) throw DomainError("point is not on the curve");
    return P;
  }

  // T1 = (-A, 0), T2 = (2, 0), T3 = (-2, 0).
  std::array<Point, 3> two_torsion() const {
    const Field& F = field_;
    return {Point::affine(F.neg(A_), F.from_int(0)), Point::affine(F.from_int(2), F.from_int(0)),
            Point::affine(F.from_int(-2), F.from_int(0))};
  }

  Point negate(const Point& P) const {
    if (P.infinity) return P;
    return Point::affine(P.x, field_.neg(P.y));
  }

  Point add(const Point& P, const Point& Q) const {
    const Field& F = field_;
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Elem slope;
    if (P.x == Q.x) {
      if (F.is_zero(F.add(P.y, Q.y))) return Point::at_infinity();
      // tangent: (3x^2 + 2A x - 4) / (2y)
      Elem num = F.sub(F.add(F.mul(F.from_int(3), F.mul(P.x, P.x)), F.mul(F.from_int(2), F.mul(A_, P.x))),
                       F.from_int(4));
      slope = F.div(num, F.mul(F.from_int(2), P.y));
    } else {
      slope = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x));
    }
    Elem x3 = F.sub(F.sub(F.sub(F.mul(slope, slope), A_), P.x), Q.x);
    Elem y3 = F.sub(F.mul(slope, F.sub(P.x, x3)), P.y);
    return Point::affine(std::move(x3), std::move(y3));
  }

  Point dbl(const Point& P) const { return add(P, P); }

  Point multiply(Point P, std::int64_t k) const {
    if (k < 0) {
      P = negate(P);
      k = -k;
    }
    Point acc = Point::at_infinity();
    while (k > 0) {
      if (k & 1) acc = add(acc, P);
      P = dbl(P);
      k >>= 1;
    }
    return acc;
  }

  // Smallest n in [1, bound] with nP = O, or nullopt.
  std::optional<int> order(const Point& P, int bound) const {
    Point acc = P;
    for (int n = 1; n <= bound; ++n) {
      if (acc.infinity) return n;
      acc = add(acc, P);
    }
    return std::nullopt;
  }

  // M(P) = 4(x + A)/(x^2 - 4); DomainError at infinity and x = +-2.
  Elem M(const Point& P) const {
    const Field& F = field_;
    if (P.infinity) throw DomainError("M has a pole at infinity");
    Elem den = F.sub(F.mul(P.x, P.x), F.from_int(4));
    if (F.is_zero(den)) throw DomainError("M has a pole at x = +-2");
    return F.div(F.mul(F.from_int(4), F.add(P.x, A_)), den);
  }

  // f(P) = 2y/((x - 2)(x + 2)); DomainError at infinity and x = +-2.
  Elem f(const Point& P) const {
    const Field& F = field_;
    if (P.infinity) throw DomainError("f has a pole at infinity");
    Elem den = F.sub(F.mul(P.x, P.x), F.from_int(4));
    if (F.is_zero(den)) throw DomainError("f has a pole at x = +-2");
    return F.div(F.mul(F.from_int(2), P.y), den);
  }

  bool f_defined(const Point& P) const {
    return !P.infinity && !field_.is_zero(field_.sub(field_.mul(P.x, P.x), field_.from_int(4)));
  }

 private:
  Field field_;
  Elem A_;
};

using RationalCurve = WeierstrassCurve<RationalField>;
using ModCurve = WeierstrassCurve<PrimeField>;

// E_A at a rational specialization s. Degenerate families (kappa = 0, i.e.
// A = -2) can be constructed, but every curve operation rejects them with
// DegenerateFamilyError.
class CurveFamily {
 public:
  static CurveFamily from_s(const BigRational& s);

  const FamilyParams& params() const { return params_; }
  const BigRational& A() const { return params_.A; }
  // r1 = -A, r2 = 2, r3 = -2
  std::array<BigRational, 3> roots() const;
  bool degenerate() const;

  const RationalCurve& over_rationals() const;
  // Good reduction: p odd, p does not divide den(A) nor the numerators of A - 2
  // and A + 2.
  bool good_reduction(std::uint64_t p) const;
  std::optional<ModCurve> over_prime(std::uint64_t p) const;

 private:
  explicit CurveFamily(FamilyParams params);
  void require_nondegenerate() const;

  FamilyParams params_;
  RationalCurve curve_;
};

std::array<RationalPoint, 3> two_torsion(const CurveFamily& family);

// Rational Q with 2Q = T, from the rational roots of x(2Q) - x(T) = 0.
std::vector<RationalPoint> halve(const CurveFamily& family, const RationalPoint& T);

// The quartic whose roots are x(Q) for 2Q = T (T finite), coefficients x^0..x^4.
std::array<BigRational, 5> halving_polynomial(const BigRational& A, const BigRational& xT);

struct TorsionGroup {
  std::vector<RationalPoint> points;   // sorted: O first, then by order, x, y
  std::vector<int> orders;             // parallel to points
  int cyclic_order = 2;                // group is Z/cyclic_order x Z/2
  RationalPoint generator;             // point of order cyclic_order
  RationalPoint two_torsion_generator; // 2-torsion point outside <generator>
  std::vector<int> halvable_two_torsion;  // i in {1,2,3}: T_i = 2Q for rational Q

  std::string structure() const;
  bool contains(const RationalPoint& P) const;
};

// Full 2-torsion, halving closure (at most twice beyond E[2]), rational
// 3-torsion, then closure under addition.
TorsionGroup torsion_subgroup(const CurveFamily& family);

BigRational M_value(const CurveFamily& family, const RationalPoint& P);
BigRational f_value(const CurveFamily& family, const RationalPoint& P);

struct Genus3Point {
  BigRational lambda;
  BigRational w;
};

enum class LiftFailure { kNone, kZero, kNegative, kNotSquare, kDegenerateOne };

struct LiftResult {
  std::optional<Genus3Point> point;
  BigRational f;
  BigInt square_class;  // squarefree part of f (0 when f = 0)
  LiftFailure failure = LiftFailure::kNone;
};

// A lift exists iff f(P) is a nonzero rational square different from 1.
LiftResult lift_to_genus3(const CurveFamily& family, const RationalPoint& P);

enum class Involution { kNegate, kReciprocal, kNegReciprocal };
enum class QuarticModel { kGenus3, kQuarticE, kEPrime, kEDoublePrime };

std::string model_name(QuarticModel m);

template <class Field>
struct QuarticModelPoint {
  QuarticModel model;
  typename Field::Elem first;   // lambda, mu, eta or sigma
  typename Field::Elem second;  // w, w, u or v
};

// kNegate: (mu, w) = (lambda^2, w) on w^2 = mu^4 + A mu^2 + 1
// kReciprocal: (eta, u) = (lambda + 1/lambda, w/lambda^2) on u^2 = eta^4 - 4 eta^2 + (A + 2)
// kNegReciprocal: (sigma, v) = (lambda - 1/lambda, w/lambda^2) on v^2 = sigma^4 + 4 sigma^2 + (A + 2)
template <class Field>
QuarticModelPoint<Field> quotient_map(const Field& F, const typename Field::Elem& lambda,
                                      const typename Field::Elem& w, Involution which) {
  switch (which) {
    case Involution::kNegate:
      return {QuarticModel::kQuarticE, F.mul(lambda, lambda), w};
    case Involution::kReciprocal:
    case Involution::kNegReciprocal: {
      if (F.is_zero(lambda)) throw DomainError("reciprocal involution undefined at lambda = 0");
      auto inv = F.inv(lambda);
      auto u = F.mul(w, F.mul(inv, inv));
      if (which == Involution::kReciprocal) return {QuarticModel::kEPrime, F.add(lambda, inv), u};
      return {QuarticModel::kEDoublePrime, F.sub(lambda, inv), u};
    }
  }
  throw std::logic_error("unknown involution");
}

template <class Field>
bool on_model(const Field& F, const typename Field::Elem& A, const QuarticModelPoint<Field>& P) {
  auto t = P.first;
  auto t2 = F.mul(t, t);
  auto t4 = F.mul(t2, t2);
  auto lhs = F.mul(P.second, P.second);
  auto a_plus_2 = F.add(A, F.from_int(2));
  switch (P.model) {
    case QuarticModel::kGenus3:
      return lhs == F.add(F.add(F.mul(t4, t4), F.mul(A, t4)), F.from_int(1));
    case QuarticModel::kQuarticE:
      return lhs == F.add(F.add(t4, F.mul(A, t2)), F.from_int(1));
    case QuarticModel::kEPrime:
      return lhs == F.add(F.sub(t4, F.mul(F.from_int(4), t2)), a_plus_2);
    case QuarticModel::kEDoublePrime:
      return lhs == F.add(F.add(t4, F.mul(F.from_int(4), t2)), a_plus_2);
  }
  return false;
}

QuarticModelPoint<RationalField> quotient_map(const Genus3Point& point, Involution which);

}  // namespace brick
