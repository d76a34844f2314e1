#pragma once

// Kummer-character checks for f on E_A: the translation identities
//   f(P+T1) = -f(P),  f(P+T2) = -1/f(P),  f(P+T3) = 1/f(P)
// verified exactly over prime fields, and the divisor bookkeeping of
// div(f) = (T1) - (T2) - (T3) + (O) on the abstract torsion group Z/4 x Z/2.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brick/curves.hpp"

namespace brick {

// Element (i mod 4, j mod 2) of Z/4 x Z/2; T4 = (1,0), G = (0,1).
struct TorsionElement {
  int i = 0;
  int j = 0;

  static TorsionElement make(int i, int j) { return {((i % 4) + 4) % 4, ((j % 2) + 2) % 2}; }
  TorsionElement operator+(TorsionElement o) const { return make(i + o.i, j + o.j); }
  TorsionElement operator-() const { return make(-i, -j); }
  TorsionElement operator-(TorsionElement o) const { return *this + (-o); }
  int order() const;
  // Index in the canonical column order O, T4, 2T4, 3T4, G, T4+G, 2T4+G, 3T4+G.
  int index() const { return i + 4 * j; }
  std::string label() const;

  friend bool operator==(const TorsionElement&, const TorsionElement&) = default;
};

std::array<TorsionElement, 8> torsion_elements();

struct TorsionDivisor {
  std::array<int, 8> coeff{};  // indexed by TorsionElement::index()

  int at(TorsionElement e) const { return coeff[e.index()]; }
  int& at(TorsionElement e) { return coeff[e.index()]; }
  int degree() const;
  // Sum of n_P * P in the group.
  TorsionElement sum() const;
};

// Which rational 2-torsion point is 2*T4.
enum class Labeling { kT1 = 1, kT2 = 2, kT3 = 3 };

// Abstract image of T_i (i in 1..3): T_k -> 2T4 for the labeled k; the other
// two go to G and 2T4 + G in index order.
TorsionElement embed_two_torsion(Labeling labeling, int i);

TorsionDivisor divisor_of_f(Labeling labeling);

struct CurveDivisor {
  Labeling labeling;
  RationalPoint T4;
  TorsionDivisor divisor;
  std::array<RationalPoint, 8> points;  // actual point for each abstract element
};

// Uses the computed torsion group; DomainError unless it is Z/4 x Z/2.
CurveDivisor divisor_of_f(const CurveFamily& family);

// D(. + t) - D as a coefficient table.
TorsionDivisor translation_difference(const TorsionDivisor& divisor, TorsionElement t);

struct ParityTable {
  std::array<int, 8> net{};
  bool all_odd = false;
};

// DomainError unless T4 has order 4.
ParityTable parity_table(const TorsionDivisor& divisor, TorsionElement T4);

enum class TrialOutcome { kPass, kFail, kExcluded };

struct TrialResult {
  TrialOutcome outcome = TrialOutcome::kExcluded;
  std::array<bool, 3> identity_holds{};
};

// Checks the three identities at one point; excluded when f is undefined or
// zero at P or at some P + T_i.
template <class Field>
TrialResult check_translation_identities(const WeierstrassCurve<Field>& E,
                                         const CurvePoint<Field>& P) {
  const Field& F = E.field();
  TrialResult r;
  if (!E.f_defined(P)) return r;
  auto fP = E.f(P);
  if (F.is_zero(fP)) return r;
  auto t = E.two_torsion();
  std::array<typename Field::Elem, 3> expected{F.neg(fP), F.neg(F.inv(fP)), F.inv(fP)};
  for (int i = 0; i < 3; ++i) {
    auto Q = E.add(P, t[i]);
    if (!E.f_defined(Q)) return TrialResult{};
    r.identity_holds[i] = E.f(Q) == expected[i];
  }
  bool ok = r.identity_holds[0] && r.identity_holds[1] && r.identity_holds[2];
  r.outcome = ok ? TrialOutcome::kPass : TrialOutcome::kFail;
  return r;
}

struct IdentityReport {
  std::uint64_t trials = 0;
  std::uint64_t excluded = 0;
  std::array<std::uint64_t, 3> passes{};
  std::array<std::uint64_t, 3> failures{};
  std::vector<std::uint64_t> primes_used;
  std::vector<std::uint64_t> primes_skipped;  // bad reduction
  // f(P) square => f(P+T1) non-square, checked at p = 3 mod 4 only
  std::uint64_t sign_flip_checks = 0;
  std::uint64_t sign_flip_failures = 0;
  std::vector<std::string> counterexamples;  // first few, human-readable

  bool clean() const {
    return failures[0] == 0 && failures[1] == 0 && failures[2] == 0 && sign_flip_failures == 0;
  }
};

// For each good prime, samples `trials_per_prime` random points (x uniform
// until the cubic is a nonzero square, random sign of y) with a deterministic
// per-prime seed. Throws DomainError if no supplied prime has good reduction.
IdentityReport verify_translation_identities(const CurveFamily& family,
                                             std::uint64_t trials_per_prime,
                                             std::span<const std::uint64_t> primes,
                                             std::uint64_t seed);

// The first `count` primes >= `start` with good reduction for the family.
std::vector<std::uint64_t> good_primes(const CurveFamily& family, std::size_t count,
                                       std::uint64_t start = 3);

}  // namespace brick
