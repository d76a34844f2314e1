#include "brick/kummer.hpp"

#include <random>

namespace brick {

int TorsionElement::order() const {
  if (i == 0 && j == 0) return 1;
  if (i % 2 == 0) return 2;
  return 4;
}

std::string TorsionElement::label() const {
  static const char* kLabels[] = {"O", "T4", "2T4", "3T4", "G", "T4+G", "2T4+G", "3T4+G"};
  return kLabels[index()];
}

std::array<TorsionElement, 8> torsion_elements() {
  std::array<TorsionElement, 8> out;
  for (int k = 0; k < 8; ++k) out[k] = TorsionElement::make(k % 4, k / 4);
  return out;
}

int TorsionDivisor::degree() const {
  int d = 0;
  for (int c : coeff) d += c;
  return d;
}

TorsionElement TorsionDivisor::sum() const {
  TorsionElement acc;
  for (const auto& e : torsion_elements()) acc = acc + TorsionElement::make(e.i * at(e), e.j * at(e));
  return acc;
}

TorsionElement embed_two_torsion(Labeling labeling, int i) {
  if (i < 1 || i > 3) throw DomainError("2-torsion index must be 1, 2 or 3");
  const int k = static_cast<int>(labeling);
  if (i == k) return TorsionElement::make(2, 0);
  const int first_other = (k == 1) ? 2 : 1;
  return i == first_other ? TorsionElement::make(0, 1) : TorsionElement::make(2, 1);
}

TorsionDivisor divisor_of_f(Labeling labeling) {
  TorsionDivisor d;
  d.at(TorsionElement{}) += 1;
  d.at(embed_two_torsion(labeling, 1)) += 1;
  d.at(embed_two_torsion(labeling, 2)) -= 1;
  d.at(embed_two_torsion(labeling, 3)) -= 1;
  return d;
}

CurveDivisor divisor_of_f(const CurveFamily& family) {
  const RationalCurve& E = family.over_rationals();
  TorsionGroup group = torsion_subgroup(family);
  if (group.points.size() != 8 || group.cyclic_order != 4) {
    throw DomainError("divisor_of_f needs torsion Z/4 x Z/2, found " + group.structure());
  }
  const auto t2 = E.two_torsion();
  CurveDivisor out;
  out.T4 = group.generator;
  const RationalPoint twice = E.dbl(out.T4);
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    if (t2[i] == twice) k = i + 1;
  }
  if (k == 0) throw std::logic_error("2*T4 is not a 2-torsion point");
  out.labeling = static_cast<Labeling>(k);
  out.divisor = divisor_of_f(out.labeling);
  // G is the 2-torsion point embedded at (0,1)
  RationalPoint G;
  for (int i = 1; i <= 3; ++i) {
    if (embed_two_torsion(out.labeling, i) == TorsionElement::make(0, 1)) G = t2[i - 1];
  }
  for (const auto& e : torsion_elements()) {
    out.points[e.index()] = E.add(E.multiply(out.T4, e.i), E.multiply(G, e.j));
  }
  return out;
}

TorsionDivisor translation_difference(const TorsionDivisor& divisor, TorsionElement t) {
  TorsionDivisor out;
  // div(f(. + t)) has coefficient n_{Q+t} at Q
  for (const auto& e : torsion_elements()) out.at(e) = divisor.at(e + t) - divisor.at(e);
  return out;
}

ParityTable parity_table(const TorsionDivisor& divisor, TorsionElement T4) {
  if (T4.order() != 4) {
    throw DomainError("parity_table: translate " + T4.label() + " does not have order 4");
  }
  ParityTable table;
  table.net = translation_difference(divisor, T4).coeff;
  table.all_odd = true;
  for (int c : table.net) table.all_odd = table.all_odd && (c % 2 != 0);
  return table;
}

std::vector<std::uint64_t> good_primes(const CurveFamily& family, std::size_t count,
                                       std::uint64_t start) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(start, 3); out.size() < count; ++p) {
    if (family.good_reduction(p)) out.push_back(p);
  }
  return out;
}

IdentityReport verify_translation_identities(const CurveFamily& family,
                                             std::uint64_t trials_per_prime,
                                             std::span<const std::uint64_t> primes,
                                             std::uint64_t seed) {
  IdentityReport report;
  for (std::uint64_t p : primes) {
    auto E = family.over_prime(p);
    if (!E) {
      report.primes_skipped.push_back(p);
      continue;
    }
    report.primes_used.push_back(p);
    const PrimeField& F = E->field();
    std::mt19937_64 rng(seed ^ (p * 0x9E3779B97F4A7C15ull));
    std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
    for (std::uint64_t trial = 0; trial < trials_per_prime; ++trial) {
      ++report.trials;
      std::optional<ModPoint> P;
      for (int attempt = 0; attempt < 1000 && !P; ++attempt) {
        std::uint64_t x = pick(rng);
        auto rhs = E->rhs(x);
        if (!F.is_nonzero_square(rhs)) continue;
        std::uint64_t y = *F.sqrt(rhs);
        if (rng() & 1) y = F.neg(y);
        P = ModPoint::affine(x, y);
      }
      if (!P) {
        ++report.excluded;
        continue;
      }
      TrialResult r = check_translation_identities(*E, *P);
      if (r.outcome == TrialOutcome::kExcluded) {
        ++report.excluded;
        continue;
      }
      for (int i = 0; i < 3; ++i) {
        if (r.identity_holds[i]) ++report.passes[i];
        else ++report.failures[i];
      }
      if (r.outcome == TrialOutcome::kFail && report.counterexamples.size() < 5) {
        report.counterexamples.push_back("p=" + std::to_string(p) + " P=(" + std::to_string(P->x) +
                                         "," + std::to_string(P->y) + ")");
      }
      if (p % 4 == 3) {
        auto fP = E->f(*P);
        if (F.is_nonzero_square(fP)) {
          ++report.sign_flip_checks;
          auto fQ = E->f(E->add(*P, E->two_torsion()[0]));
          if (F.is_nonzero_square(fQ)) ++report.sign_flip_failures;
        }
      }
    }
  }
  if (report.primes_used.empty()) throw DomainError("no prime of good reduction supplied");
  return report;
}

}  // namespace brick
