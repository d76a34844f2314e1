#pragma once

// Exhaustive experiments over Euclid-pair tuples (a, b, m, n): the f1*f2
// square sweep, blocker-prime statistics, the Gaussian view of blockers, and
// the modular sieve for square values of f.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brick/curves.hpp"
#include "brick/param.hpp"

namespace brick {

struct SweepConfig {
  std::int64_t max_param = 200;
  // Opposite-parity pairs only. Off enumerates all coprime pairs.
  bool parity_filter = true;
  // Also test f1 and f2 individually (the simultaneous brick condition).
  bool both_factors = false;
  // Residue pre-filter before the exact square root.
  bool prefilter = true;
  // Half-open range of first-pair indices; end = 0 means "to the end".
  std::size_t first_begin = 0;
  std::size_t first_end = 0;
  std::string checkpoint_path;  // empty: no checkpointing
  std::string output_path;      // empty: no record stream
  unsigned jobs = 1;
  // Stop after this many completed first pairs (0 = no limit); the run is
  // then resumable from its checkpoint.
  std::size_t stop_after = 0;
};

enum class BlockerClass { kTwo = 0, kOneMod4 = 1, kThreeMod4 = 2 };
const char* blocker_class_name(BlockerClass c);  // "2", "1mod4", "3mod4"
BlockerClass classify_prime(const BigInt& p);

struct SweepStats {
  std::uint64_t tuples = 0;
  std::uint64_t squares = 0;            // f1 * f2 a perfect square
  std::uint64_t f1_squares = 0;         // with both_factors
  std::uint64_t f2_squares = 0;         // with both_factors
  std::uint64_t simultaneous_squares = 0;
  std::uint64_t blockers = 0;           // blocker analysis only
  std::array<std::uint64_t, 3> blocker_classes{};
  std::map<std::uint64_t, std::uint64_t> per_prime;  // smallest blocker -> count

  void merge(const SweepStats& other);
  friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

// Stats as a JSON object with every count an exact decimal string.
std::string stats_to_json_text(const SweepStats& stats);
SweepStats stats_from_json_text(const std::string& text);

struct TupleRecord {
  CoprimePair first;
  CoprimePair second;
  BigInt f1;
  BigInt f2;
  bool square = false;
  std::optional<BigInt> blocker;
  std::optional<BlockerClass> blocker_class;
};

// One JSON object per line: {a, b, m, n, f1, f2, square, blocker, blocker_class}.
std::string to_json_line(const TupleRecord& record);
TupleRecord parse_json_line(const std::string& line);

struct SweepResult {
  SweepStats stats;
  std::vector<TupleRecord> hits;     // square findings (sweep) or all reports (blockers, when kept)
  std::size_t first_pairs_total = 0;
  std::size_t resumed_at = 0;        // first-pair index the run started from
  bool completed = false;
};

// Tests f1 * f2 for squareness on every tuple; resumable from the checkpoint.
SweepResult sweep(const SweepConfig& config);

// Least prime with odd exponent in f1 * f2 for every tuple, with the
// histogram by class. Per-tuple reports are kept in memory when keep_reports.
SweepResult blocker_analysis(const SweepConfig& config, bool keep_reports = false);

// Least prime p with v_p(f1 f2) odd, or nullopt when f1 f2 is a square.
std::optional<BigInt> smallest_blocker(const BigInt& f1, const BigInt& f2);

struct InertObservation {
  BigInt prime;
  int valuation = 0;  // v_p(f1 f2), always even
};

struct GaussianBlockerReport {
  QuarticPair pair;
  std::optional<BigInt> blocker;
  std::optional<BlockerClass> blocker_class;
  int v_f1 = 0;
  int v_f2 = 0;
  std::optional<GaussianValuation> z1;  // of L1 + i L3 at the blocker
  std::optional<GaussianValuation> z2;  // of L2 + i L3 at the blocker
  // Gaussian valuations reproduce v_p(f1), v_p(f2) and their odd sum.
  bool consistent = false;
  std::vector<InertObservation> inert_primes;  // all p = 3 mod 4 dividing f1 f2
  bool inert_blocker = false;                  // would contradict the norm argument
};

GaussianBlockerReport gaussian_blocker_check(const CoprimePair& first, const CoprimePair& second);

// ---------------------------------------------------------------------------
// Modular sieve

struct SieveConfig {
  BigRational s;
  std::int64_t height = 1000;
  std::uint64_t prime_bound = 200;
  unsigned jobs = 1;
  std::size_t max_listed = 100;  // survivors kept in the list
};

struct SieveResult {
  std::uint64_t candidates = 0;
  std::uint64_t survivors = 0;
  std::uint64_t torsion_excluded = 0;  // candidates equal to x of a torsion point
  std::vector<BigRational> survivor_list;
  std::vector<std::uint64_t> primes_used;
};

// Five specializations used as the standard sieve workload.
std::vector<BigRational> default_sieve_parameters();

// Candidates x = u/w^2, 1 <= w <= sqrt(height), |u| <= height w^2,
// gcd(u, w) = 1. A candidate is eliminated at a good odd prime p (p not
// dividing w) when x is not +-2 mod p, the cubic is nonzero mod p, and no
// square root y of the cubic makes 2y/(x^2 - 4) a nonzero square mod p.
SieveResult modular_sieve(const SieveConfig& config);

// Odd primes below bound with good reduction for the family.
std::vector<std::uint64_t> sieve_primes(const CurveFamily& family, std::uint64_t bound);

// First sieve prime (below bound) eliminating x, or nullopt if x survives.
std::optional<std::uint64_t> eliminating_prime(const CurveFamily& family, std::uint64_t bound,
                                               const BigRational& x);

}  // namespace brick
