#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "brick/search.hpp"

namespace brick {

std::vector<BigRational> default_sieve_parameters() {
  return {make_rational(18, 41), make_rational(18, 47), make_rational(23, 59), make_rational(23, 64),
          make_rational(29, 65)};
}

std::vector<std::uint64_t> sieve_primes(const CurveFamily& family, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p < bound; p += 2) {
    if (is_prime_u64(p) && family.good_reduction(p)) out.push_back(p);
  }
  return out;
}

namespace {

// survive[r]: can a point with x = r mod p carry f in (F_p*)^2 for some branch?
// Residues carrying no information (x = +-2, cubic = 0) survive.
std::vector<bool> survival_table(const CurveFamily& family, std::uint64_t p) {
  const ModCurve E = *family.over_prime(p);
  const PrimeField& F = E.field();
  std::vector<bool> table(p, true);
  for (std::uint64_t x = 0; x < p; ++x) {
    const auto d = F.sub(F.mul(x, x), F.from_int(4));
    if (d == 0) continue;
    const auto g = E.rhs(x);
    if (g == 0) continue;
    const auto y = F.sqrt(g);
    if (!y) {
      table[x] = false;
      continue;
    }
    const auto f = F.div(F.mul(2, *y), d);
    table[x] = F.is_nonzero_square(f) || F.is_nonzero_square(F.neg(f));
  }
  return table;
}

struct PrimeTable {
  std::uint64_t p;
  std::vector<bool> survive;
};

std::vector<PrimeTable> tables_for(const CurveFamily& family, std::uint64_t bound) {
  std::vector<PrimeTable> out;
  for (std::uint64_t p : sieve_primes(family, bound)) out.push_back({p, survival_table(family, p)});
  return out;
}

}  // namespace

std::optional<std::uint64_t> eliminating_prime(const CurveFamily& family, std::uint64_t bound,
                                               const BigRational& x) {
  for (const PrimeTable& t : tables_for(family, bound)) {
    if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), t.p)) continue;
    const PrimeField F(t.p);
    if (!t.survive[F.from_rational(x)]) return t.p;
  }
  return std::nullopt;
}

SieveResult modular_sieve(const SieveConfig& config) {
  if (config.height < 1) throw DomainError("sieve height must be positive");
  const CurveFamily family = CurveFamily::from_s(config.s);
  if (family.degenerate()) throw DegenerateFamilyError("modular_sieve: degenerate s = " + to_string(config.s));

  const std::vector<PrimeTable> tables = tables_for(family, config.prime_bound);
  SieveResult result;
  for (const auto& t : tables) result.primes_used.push_back(t.p);

  std::set<std::pair<std::int64_t, std::int64_t>> torsion_uw;
  for (const RationalPoint& P : torsion_subgroup(family).points) {
    if (P.infinity) continue;
    auto w = perfect_square_root(P.x.get_den());
    if (w && w->fits_slong_p() && P.x.get_num().fits_slong_p()) {
      torsion_uw.insert({P.x.get_num().get_si(), w->get_si()});
    }
  }

  const auto H = config.height;
  const auto wmax = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(H)));
  std::atomic<std::int64_t> next_w{1};
  std::mutex mu;
  std::vector<std::pair<std::int64_t, std::int64_t>> listed;

  auto worker = [&] {
    SieveResult local;
    std::vector<std::pair<std::int64_t, std::int64_t>> local_list;
    std::vector<std::uint64_t> inv_w2(tables.size());
    for (std::int64_t w; (w = next_w.fetch_add(1)) <= wmax;) {
      for (std::size_t k = 0; k < tables.size(); ++k) {
        const std::uint64_t p = tables[k].p;
        if (w % static_cast<std::int64_t>(p) == 0) {
          inv_w2[k] = 0;  // p | w: no information at p
        } else {
          const PrimeField F(p);
          inv_w2[k] = F.inv(F.mul(F.from_int(w), F.from_int(w)));
        }
      }
      const std::int64_t umax = H * w * w;
      for (std::int64_t u = -umax; u <= umax; ++u) {
        if (std::gcd(u, w) != 1) continue;
        if (torsion_uw.contains({u, w})) {
          ++local.torsion_excluded;
          continue;
        }
        ++local.candidates;
        bool alive = true;
        for (std::size_t k = 0; k < tables.size() && alive; ++k) {
          if (inv_w2[k] == 0) continue;
          const auto p = static_cast<std::int64_t>(tables[k].p);
          const auto ur = static_cast<std::uint64_t>(((u % p) + p) % p);
          const auto r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(ur) * inv_w2[k] % tables[k].p);
          alive = tables[k].survive[r];
        }
        if (alive) {
          ++local.survivors;
          if (local_list.size() < config.max_listed) local_list.push_back({u, w});
        }
      }
    }
    std::lock_guard lock(mu);
    result.candidates += local.candidates;
    result.survivors += local.survivors;
    result.torsion_excluded += local.torsion_excluded;
    listed.insert(listed.end(), local_list.begin(), local_list.end());
  };

  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }

  for (const auto& [u, w] : listed) result.survivor_list.push_back(make_rational(u, BigInt(w) * w));
  std::sort(result.survivor_list.begin(), result.survivor_list.end());
  if (result.survivor_list.size() > config.max_listed) result.survivor_list.resize(config.max_listed);
  return result;
}

}  // namespace brick
