#include "brick/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <thread>

namespace brick {

using json = nlohmann::json;
using u128 = unsigned __int128;

const char* blocker_class_name(BlockerClass c) {
  switch (c) {
    case BlockerClass::kTwo: return "2";
    case BlockerClass::kOneMod4: return "1mod4";
    case BlockerClass::kThreeMod4: return "3mod4";
  }
  return "?";
}

BlockerClass classify_prime(const BigInt& p) {
  if (p == 2) return BlockerClass::kTwo;
  return mpz_fdiv_ui(p.get_mpz_t(), 4) == 1 ? BlockerClass::kOneMod4 : BlockerClass::kThreeMod4;
}

void SweepStats::merge(const SweepStats& o) {
  tuples += o.tuples;
  squares += o.squares;
  f1_squares += o.f1_squares;
  f2_squares += o.f2_squares;
  simultaneous_squares += o.simultaneous_squares;
  blockers += o.blockers;
  for (int i = 0; i < 3; ++i) blocker_classes[i] += o.blocker_classes[i];
  for (const auto& [p, n] : o.per_prime) per_prime[p] += n;
}

namespace {

BigInt from_u128(u128 v) {
  BigInt r = static_cast<unsigned long>(v >> 64);
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  return r;
}

std::string count(std::uint64_t n) { return std::to_string(n); }
std::uint64_t uncount(const json& j) { return std::stoull(j.get<std::string>()); }

json stats_to_json(const SweepStats& s) {
  json per = json::object();
  for (const auto& [p, n] : s.per_prime) per[std::to_string(p)] = count(n);
  return {{"tuples", count(s.tuples)},
          {"squares", count(s.squares)},
          {"f1_squares", count(s.f1_squares)},
          {"f2_squares", count(s.f2_squares)},
          {"simultaneous_squares", count(s.simultaneous_squares)},
          {"blockers", count(s.blockers)},
          {"blocker_classes",
           {{"2", count(s.blocker_classes[0])},
            {"1mod4", count(s.blocker_classes[1])},
            {"3mod4", count(s.blocker_classes[2])}}},
          {"per_prime", per}};
}

SweepStats stats_from_json(const json& j) {
  SweepStats s;
  s.tuples = uncount(j.at("tuples"));
  s.squares = uncount(j.at("squares"));
  s.f1_squares = uncount(j.at("f1_squares"));
  s.f2_squares = uncount(j.at("f2_squares"));
  s.simultaneous_squares = uncount(j.at("simultaneous_squares"));
  s.blockers = uncount(j.at("blockers"));
  const json& cls = j.at("blocker_classes");
  s.blocker_classes = {uncount(cls.at("2")), uncount(cls.at("1mod4")), uncount(cls.at("3mod4"))};
  for (const auto& [p, n] : j.at("per_prime").items()) s.per_prime[std::stoull(p)] = uncount(n);
  return s;
}

// Per-second-pair data shared by every first pair.
struct SecondEntry {
  CoprimePair pair;
  std::uint64_t mn;
  std::uint64_t U2;
  std::uint64_t mn_mod;
  std::uint64_t U2_mod;
};

struct Legs {
  u128 f1;
  u128 f2;
};

struct Chunk {
  SweepStats stats;
  std::vector<TupleRecord> records;
  bool finding = false;
};

using FirstPairWork = std::function<void(const CoprimePair&, const std::vector<SecondEntry>&, Chunk&)>;

// Runs `work` over the first-pair range with `jobs` threads; commits chunks in
// index order so that output, checkpoint and stats are scheduling independent.
SweepResult drive(const SweepConfig& config, const std::string& mode, const FirstPairWork& work,
                  bool keep_records, bool halt_on_finding) {
  if (config.max_param < 2) throw DomainError("max_param must be at least 2");
  if (config.max_param > 3'000'000) throw DomainError("max_param too large for 64-bit legs");
  const std::vector<CoprimePair> pairs = enumerate_pairs(config.max_param, config.parity_filter);
  const std::size_t end = config.first_end == 0 ? pairs.size() : std::min(config.first_end, pairs.size());
  const std::size_t begin = std::min(config.first_begin, end);

  constexpr std::uint64_t M = SquareResidueFilter::kModulus;
  std::vector<SecondEntry> seconds;
  seconds.reserve(pairs.size());
  for (const auto& p : pairs) {
    const auto mn = static_cast<std::uint64_t>(p.a * p.b), U2 = static_cast<std::uint64_t>(p.U());
    seconds.push_back({p, mn, U2, mn % M, U2 % M});
  }

  SweepResult result;
  result.first_pairs_total = pairs.size();
  const json identity = {{"mode", mode},
                         {"max_param", config.max_param},
                         {"parity_filter", config.parity_filter},
                         {"both_factors", config.both_factors},
                         {"first_begin", begin},
                         {"first_end", end}};

  std::size_t start = begin;
  if (!config.checkpoint_path.empty() && std::filesystem::exists(config.checkpoint_path)) {
    std::ifstream in(config.checkpoint_path);
    json cp;
    try {
      in >> cp;
    } catch (const json::exception& e) {
      throw std::runtime_error("unreadable checkpoint " + config.checkpoint_path + ": " + e.what());
    }
    if (cp.at("config") != identity) {
      throw std::runtime_error("checkpoint " + config.checkpoint_path + " belongs to a different run");
    }
    result.stats = stats_from_json(cp.at("stats"));
    if (cp.at("cursor").is_null()) {
      start = end;
    } else {
      const CoprimePair cur{cp["cursor"][0].get<std::int64_t>(), cp["cursor"][1].get<std::int64_t>()};
      auto it = std::lower_bound(pairs.begin(), pairs.end(), cur);
      if (it == pairs.end() || *it != cur) throw std::runtime_error("checkpoint cursor is not a pair of this run");
      start = static_cast<std::size_t>(it - pairs.begin());
    }
  }
  result.resumed_at = start;

  std::ofstream out;
  if (!config.output_path.empty()) {
    out.open(config.output_path, start > begin ? std::ios::app : std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output " + config.output_path);
  }

  const bool streaming = out.is_open();

  auto write_checkpoint = [&](std::size_t cursor) {
    if (config.checkpoint_path.empty()) return;
    json cp = {{"config", identity}, {"stats", stats_to_json(result.stats)}};
    cp["cursor"] = cursor < end ? json::array({pairs[cursor].a, pairs[cursor].b}) : json(nullptr);
    const std::string tmp = config.checkpoint_path + ".tmp";
    {
      std::ofstream f(tmp, std::ios::trunc);
      f << cp.dump() << '\n';
      if (!f) throw std::runtime_error("cannot write checkpoint " + tmp);
    }
    std::filesystem::rename(tmp, config.checkpoint_path);
  };

  const std::size_t limit = config.stop_after == 0 ? end : std::min(end, start + config.stop_after);
  std::atomic<std::size_t> next{start};
  std::atomic<bool> halted{false};
  std::mutex mu;
  std::map<std::size_t, Chunk> pending;
  std::size_t committed = start;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      for (;;) {
        if (halted.load()) return;
        const std::size_t i = next.fetch_add(1);
        if (i >= limit) return;
        Chunk chunk;
        work(pairs[i], seconds, chunk);
        std::lock_guard lock(mu);
        pending.emplace(i, std::move(chunk));
        while (!pending.empty() && pending.begin()->first == committed) {
          Chunk& c = pending.begin()->second;
          result.stats.merge(c.stats);
          for (auto& r : c.records) {
            if (streaming) out << to_json_line(r) << '\n';
          }
          if (streaming) out.flush();
          const bool finding = c.finding;
          if (keep_records || finding) {
            for (auto& r : c.records) result.hits.push_back(std::move(r));
          }
          pending.erase(pending.begin());
          ++committed;
          write_checkpoint(committed);
          if (finding && halt_on_finding) {
            halted = true;
            return;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      halted = true;
    }
  };

  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  if (streaming && !out) throw std::runtime_error("write failure on " + config.output_path);
  result.completed = committed == end;
  return result;
}

Legs legs(std::uint64_t U1, std::uint64_t V1, std::uint64_t W1, const SecondEntry& s) {
  const u128 L1 = static_cast<u128>(2 * U1) * s.mn;
  const u128 L2 = static_cast<u128>(V1) * s.mn * 2;
  const u128 L3 = static_cast<u128>(W1) * s.U2;
  return {L1 * L1 + L3 * L3, L2 * L2 + L3 * L3};
}

bool exact_square(u128 v) { return is_perfect_square(from_u128(v)); }

}  // namespace

std::string stats_to_json_text(const SweepStats& stats) { return stats_to_json(stats).dump(); }
SweepStats stats_from_json_text(const std::string& text) { return stats_from_json(json::parse(text)); }

std::string to_json_line(const TupleRecord& r) {
  json j = {{"a", r.first.a},       {"b", r.first.b},       {"m", r.second.a},
            {"n", r.second.b},      {"f1", to_string(r.f1)}, {"f2", to_string(r.f2)},
            {"square", r.square}};
  if (r.blocker && r.blocker->fits_ulong_p()) {
    j["blocker"] = r.blocker->get_ui();
  } else if (r.blocker) {
    j["blocker"] = to_string(*r.blocker);
  } else {
    j["blocker"] = nullptr;
  }
  j["blocker_class"] = r.blocker_class ? json(blocker_class_name(*r.blocker_class)) : json(nullptr);
  return j.dump();
}

TupleRecord parse_json_line(const std::string& line) {
  const json j = json::parse(line);
  TupleRecord r;
  r.first = {j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>()};
  r.second = {j.at("m").get<std::int64_t>(), j.at("n").get<std::int64_t>()};
  r.f1 = parse_integer(j.at("f1").get<std::string>());
  r.f2 = parse_integer(j.at("f2").get<std::string>());
  r.square = j.at("square").get<bool>();
  const json& b = j.at("blocker");
  if (b.is_number_unsigned()) r.blocker = BigInt(static_cast<unsigned long>(b.get<std::uint64_t>()));
  else if (b.is_string()) r.blocker = parse_integer(b.get<std::string>());
  const json& c = j.at("blocker_class");
  if (c.is_string()) {
    const std::string name = c.get<std::string>();
    if (name == "2") r.blocker_class = BlockerClass::kTwo;
    else if (name == "1mod4") r.blocker_class = BlockerClass::kOneMod4;
    else if (name == "3mod4") r.blocker_class = BlockerClass::kThreeMod4;
    else throw std::invalid_argument("unknown blocker_class " + name);
  }
  return r;
}

SweepResult sweep(const SweepConfig& config) {
  const auto& filter = SquareResidueFilter::instance();
  constexpr std::uint64_t M = SquareResidueFilter::kModulus;
  const bool prefilter = config.prefilter, both = config.both_factors;

  auto work = [&](const CoprimePair& first, const std::vector<SecondEntry>& seconds, Chunk& chunk) {
    const auto U1 = static_cast<std::uint64_t>(first.U()), V1 = static_cast<std::uint64_t>(first.V()),
               W1 = static_cast<std::uint64_t>(first.W());
    const std::uint64_t U1m = U1 % M, V1m = V1 % M, W1m = W1 % M;
    auto maybe = [&](std::uint64_t residue) { return !prefilter || filter.maybe_square_residue(static_cast<std::uint32_t>(residue)); };
    for (const SecondEntry& s : seconds) {
      ++chunk.stats.tuples;
      const std::uint64_t l1 = 2 * U1m * s.mn_mod % M, l2 = 2 * V1m * s.mn_mod % M, l3 = W1m * s.U2_mod % M;
      const std::uint64_t f1m = (l1 * l1 + l3 * l3) % M, f2m = (l2 * l2 + l3 * l3) % M;
      bool square = false;
      Legs f{};
      if (maybe(f1m * f2m % M)) {
        f = legs(U1, V1, W1, s);
        square = is_perfect_square(from_u128(f.f1) * from_u128(f.f2));
      }
      bool s1 = false, s2 = false;
      if (both) {
        if (maybe(f1m)) {
          if (f.f1 == 0) f = legs(U1, V1, W1, s);
          s1 = exact_square(f.f1);
        }
        if (maybe(f2m)) {
          if (f.f1 == 0) f = legs(U1, V1, W1, s);
          s2 = exact_square(f.f2);
        }
        chunk.stats.f1_squares += s1;
        chunk.stats.f2_squares += s2;
        chunk.stats.simultaneous_squares += s1 && s2;
      }
      if (square || (s1 && s2)) {
        chunk.stats.squares += square;
        chunk.finding = true;
        TupleRecord r;
        r.first = first;
        r.second = s.pair;
        r.f1 = from_u128(f.f1);
        r.f2 = from_u128(f.f2);
        r.square = square;
        chunk.records.push_back(std::move(r));
      }
    }
  };
  return drive(config, "sweep", work, true, true);
}

std::optional<BigInt> smallest_blocker(const BigInt& f1, const BigInt& f2) {
  if (f1 <= 0 || f2 <= 0) throw DomainError("smallest_blocker: f1, f2 must be positive");
  std::map<BigInt, unsigned> exponents;
  for (const BigInt* f : {&f1, &f2}) {
    if (f->fits_ulong_p()) {
      for (auto [p, e] : factorize_u64(f->get_ui())) exponents[BigInt(static_cast<unsigned long>(p))] += e;
    } else {
      for (const auto& pp : factorize(*f).factors) exponents[pp.prime] += pp.exponent;
    }
  }
  for (const auto& [p, e] : exponents) {
    if (e % 2 == 1) return p;
  }
  return std::nullopt;
}

SweepResult blocker_analysis(const SweepConfig& config, bool keep_reports) {
  auto work = [&](const CoprimePair& first, const std::vector<SecondEntry>& seconds, Chunk& chunk) {
    const auto U1 = static_cast<std::uint64_t>(first.U()), V1 = static_cast<std::uint64_t>(first.V()),
               W1 = static_cast<std::uint64_t>(first.W());
    for (const SecondEntry& s : seconds) {
      ++chunk.stats.tuples;
      const Legs f = legs(U1, V1, W1, s);
      TupleRecord r;
      r.first = first;
      r.second = s.pair;
      r.f1 = from_u128(f.f1);
      r.f2 = from_u128(f.f2);
      r.blocker = smallest_blocker(r.f1, r.f2);
      if (r.blocker) {
        r.blocker_class = classify_prime(*r.blocker);
        ++chunk.stats.blockers;
        ++chunk.stats.blocker_classes[static_cast<int>(*r.blocker_class)];
        if (r.blocker->fits_ulong_p()) ++chunk.stats.per_prime[r.blocker->get_ui()];
      } else {
        r.square = true;
        ++chunk.stats.squares;
        chunk.finding = true;
      }
      chunk.records.push_back(std::move(r));
    }
  };
  return drive(config, "blockers", work, keep_reports, false);
}

GaussianBlockerReport gaussian_blocker_check(const CoprimePair& first, const CoprimePair& second) {
  GaussianBlockerReport out;
  out.pair = quartic_pair(first, second);
  const QuarticPair& q = out.pair;
  out.blocker = smallest_blocker(q.f1, q.f2);

  std::map<BigInt, unsigned> exps;
  for (const BigInt* f : {&q.f1, &q.f2}) {
    for (const auto& pp : factorize(*f).factors) exps[pp.prime] += pp.exponent;
  }
  for (const auto& [p, e] : exps) {
    if (classify_prime(p) == BlockerClass::kThreeMod4) out.inert_primes.push_back({p, static_cast<int>(e)});
  }
  if (!out.blocker) return out;

  const BigInt& p = *out.blocker;
  out.blocker_class = classify_prime(p);
  out.inert_blocker = *out.blocker_class == BlockerClass::kThreeMod4;
  out.v_f1 = valuation(q.f1, p);
  out.v_f2 = valuation(q.f2, p);
  out.z1 = gaussian_valuations({q.L1, q.L3}, p);
  out.z2 = gaussian_valuations({q.L2, q.L3}, p);
  out.consistent = out.z1->norm_valuation() == out.v_f1 && out.z2->norm_valuation() == out.v_f2 &&
                   (out.v_f1 + out.v_f2) % 2 == 1 && !out.inert_blocker;
  return out;
}

}  // namespace brick
