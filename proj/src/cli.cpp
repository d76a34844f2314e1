#include "brick/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "brick/descent.hpp"
#include "brick/kummer.hpp"
#include "brick/search.hpp"

namespace brick::cli {

using json = nlohmann::json;

namespace {

// Thrown when a command completes but reports a finding.
struct Finding {};

BigRational parse_pair_ratio(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--pair expects a,b");
  const BigInt a = parse_integer(text.substr(0, comma)), b = parse_integer(text.substr(comma + 1));
  if (b == 0) throw std::invalid_argument("--pair: b must be nonzero");
  return make_rational(a, b);
}

// Resolves the --s / --pair options to a list of parameters.
struct ParamOptions {
  std::vector<std::string> s;
  std::vector<std::string> pair;
  std::size_t random = 0;
  std::uint64_t seed = 1;

  void add(CLI::App* cmd, bool allow_random) {
    cmd->add_option("--s", s, "parameter s as p/q (repeatable)");
    cmd->add_option("--pair", pair, "parameter s = a/b given as a,b (repeatable)");
    if (allow_random) {
      cmd->add_option("--random", random, "use N seeded random parameters");
      cmd->add_option("--seed", seed, "seed for --random");
    }
  }

  std::vector<BigRational> resolve(const std::vector<BigRational>& fallback) const {
    std::vector<BigRational> out;
    for (const auto& t : s) out.push_back(parse_rational(t));
    for (const auto& t : pair) out.push_back(parse_pair_ratio(t));
    if (random > 0) {
      auto r = random_parameters(random, seed);
      out.insert(out.end(), r.begin(), r.end());
    }
    if (out.empty()) out = fallback;
    if (out.empty()) throw std::invalid_argument("give --s p/q or --pair a,b");
    return out;
  }
};

std::string point_str(const RationalPoint& P) {
  if (P.infinity) return "O";
  return "(" + to_string(P.x) + ", " + to_string(P.y) + ")";
}

json point_json(const RationalPoint& P) {
  if (P.infinity) return "O";
  return json::array({to_string(P.x), to_string(P.y)});
}

std::string pct(std::uint64_t part, std::uint64_t whole) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << (whole ? 100.0 * static_cast<double>(part) / static_cast<double>(whole) : 0.0) << "%";
  return s.str();
}

json stats_json(const SweepStats& st) { return json::parse(stats_to_json_text(st)); }

struct SweepOptions {
  std::int64_t max = 200;
  unsigned jobs = 1;
  std::string checkpoint;
  std::string out;
  bool coprime = false;
  bool no_prefilter = false;
  bool both = false;
  std::size_t first_begin = 0;
  std::size_t first_end = 0;
  std::size_t stop_after = 0;

  void add(CLI::App* cmd) {
    cmd->add_option("--max", max, "largest pair entry")->check(CLI::Range(std::int64_t{2}, std::int64_t{3'000'000}));
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    cmd->add_option("--checkpoint", checkpoint, "checkpoint file (resumes if present)");
    cmd->add_option("--out", out, "JSONL record stream");
    cmd->add_flag("--coprime", coprime, "all coprime pairs (no opposite-parity filter)");
    cmd->add_option("--first-begin", first_begin, "first first-pair index of this shard");
    cmd->add_option("--first-end", first_end, "one past the last first-pair index (0 = end)");
    cmd->add_option("--stop-after", stop_after, "stop after N first pairs (resumable)");
  }

  SweepConfig config() const {
    SweepConfig c;
    c.max_param = max;
    c.parity_filter = !coprime;
    c.prefilter = !no_prefilter;
    c.both_factors = both;
    c.first_begin = first_begin;
    c.first_end = first_end;
    c.checkpoint_path = checkpoint;
    c.output_path = out;
    c.jobs = jobs;
    c.stop_after = stop_after;
    return c;
  }
};

void print_progress(std::ostream& out, const SweepResult& r) {
  if (!r.completed) out << "status: incomplete (" << r.first_pairs_total << " first pairs; resume with the same --checkpoint)\n";
}

// ---------------------------------------------------------------------------

void cmd_pairs(std::ostream& out, std::int64_t max, bool coprime, bool list, bool as_json) {
  const auto pairs = enumerate_pairs(max, !coprime);
  const std::uint64_t n = pairs.size();
  if (as_json) {
    json j = {{"max", max}, {"parity_filter", !coprime}, {"pairs", std::to_string(n)},
              {"tuples", std::to_string(n * n)}};
    if (list) {
      j["list"] = json::array();
      for (const auto& p : pairs) j["list"].push_back({p.a, p.b});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "pairs: " << n << "\ntuples: " << n * n << '\n';
  if (list) {
    for (const auto& p : pairs) out << p.a << ' ' << p.b << '\n';
  }
}

void cmd_sweep(std::ostream& out, const SweepOptions& opt, bool stats, bool as_json) {
  const SweepResult r = sweep(opt.config());
  const SweepStats& st = r.stats;
  if (as_json) {
    json j = stats_json(st);
    j["completed"] = r.completed;
    j["hits"] = json::array();
    for (const auto& h : r.hits) j["hits"].push_back(json::parse(to_json_line(h)));
    out << j.dump(2) << '\n';
  } else {
    out << "tuples: " << st.tuples << ", squares: " << st.squares << '\n';
    if (stats) {
      out << "first pairs: " << r.first_pairs_total << '\n';
      if (opt.both) {
        out << "f1 squares: " << st.f1_squares << ", f2 squares: " << st.f2_squares
            << ", simultaneous: " << st.simultaneous_squares << '\n';
      }
    }
    for (const auto& h : r.hits) {
      out << "FINDING: (a,b,m,n) = (" << h.first.a << "," << h.first.b << "," << h.second.a << ","
          << h.second.b << ") f1 = " << h.f1 << " f2 = " << h.f2 << (h.square ? " [f1*f2 square]" : "")
          << '\n';
    }
    print_progress(out, r);
  }
  if (st.squares > 0 || st.simultaneous_squares > 0) throw Finding{};
}

void cmd_blockers(std::ostream& out, const SweepOptions& opt, std::size_t top, bool as_json) {
  const SweepResult r = blocker_analysis(opt.config());
  const SweepStats& st = r.stats;
  if (as_json) {
    json j = stats_json(st);
    j["completed"] = r.completed;
    out << j.dump(2) << '\n';
  } else {
    const auto& c = st.blocker_classes;
    out << "tuples: " << st.tuples << "\nsquares: " << st.squares << "\nblockers: " << st.blockers << '\n'
        << "p = 2: " << c[0] << " (" << pct(c[0], st.tuples) << ")\n"
        << "p = 1 mod 4: " << c[1] << " (" << pct(c[1], st.tuples) << ")\n"
        << "p = 3 mod 4: " << c[2] << " (" << pct(c[2], st.tuples) << ")\n";
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranked(st.per_prime.begin(), st.per_prime.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](auto& x, auto& y) { return x.second > y.second; });
    if (ranked.size() > top) ranked.resize(top);
    out << "most frequent:";
    for (const auto& [p, n] : ranked) out << ' ' << p << ':' << n;
    out << '\n';
    print_progress(out, r);
  }
  if (st.squares > 0 || st.blocker_classes[2] > 0) throw Finding{};
}

void cmd_sieve(std::ostream& out, const std::vector<BigRational>& params, std::int64_t height,
               std::uint64_t prime_bound, unsigned jobs, bool list, bool as_json) {
  json arr = json::array();
  std::uint64_t total = 0;
  for (const BigRational& s : params) {
    SieveConfig cfg;
    cfg.s = s;
    cfg.height = height;
    cfg.prime_bound = prime_bound;
    cfg.jobs = jobs;
    const SieveResult r = modular_sieve(cfg);
    total += r.survivors;
    if (as_json) {
      json j = {{"s", to_string(s)},
                {"candidates", std::to_string(r.candidates)},
                {"survivors", std::to_string(r.survivors)},
                {"torsion_excluded", std::to_string(r.torsion_excluded)},
                {"primes", r.primes_used.size()}};
      j["survivor_list"] = json::array();
      for (const auto& x : r.survivor_list) j["survivor_list"].push_back(to_string(x));
      arr.push_back(j);
    } else {
      out << "s = " << to_string(s) << ": candidates " << r.candidates << ", survivors " << r.survivors
          << ", primes " << r.primes_used.size() << ", torsion excluded " << r.torsion_excluded << '\n';
      if (list) {
        for (const auto& x : r.survivor_list) out << "  x = " << to_string(x) << '\n';
      }
    }
  }
  if (as_json) out << arr.dump(2) << '\n';
  if (total > 0) throw Finding{};
}

void cmd_brick_check(std::ostream& out, const std::vector<std::string>& edge_text, bool as_json) {
  BrickCandidate c;
  for (int i = 0; i < 3; ++i) c.edges[i] = parse_integer(edge_text[i]);
  const BrickReport r = check_brick(c);
  auto diag = [](const DiagonalCheck& d) { return d.root ? to_string(*d.root) : "sqrt(" + to_string(d.sum_of_squares) + ")"; };
  if (as_json) {
    json j = {{"edges", {to_string(c.edges[0]), to_string(c.edges[1]), to_string(c.edges[2])}},
              {"faces", {diag(r.faces[0]), diag(r.faces[1]), diag(r.faces[2])}},
              {"space", diag(r.space)},
              {"euler", r.is_euler},
              {"perfect", r.is_perfect}};
    out << j.dump(2) << '\n';
  } else {
    out << "edges: " << c.edges[0] << ' ' << c.edges[1] << ' ' << c.edges[2] << '\n'
        << "face diagonals: " << diag(r.faces[0]) << ' ' << diag(r.faces[1]) << ' ' << diag(r.faces[2]) << '\n'
        << "space diagonal: " << diag(r.space) << '\n'
        << "Euler brick: " << (r.is_euler ? "yes" : "no") << '\n'
        << "perfect: " << (r.is_perfect ? "yes" : "no") << '\n';
  }
  if (r.is_perfect) throw Finding{};
}

void cmd_curve_info(std::ostream& out, const BigRational& s, bool as_json) {
  const CurveFamily family = CurveFamily::from_s(s);
  const FamilyParams& fp = family.params();
  if (family.degenerate()) throw DegenerateFamilyError("degenerate s = " + to_string(s) + " (kappa = 0, singular curve)");
  const TorsionGroup tg = torsion_subgroup(family);
  const auto t2 = two_torsion(family);
  if (as_json) {
    json j = {{"s", to_string(s)},         {"c", to_string(fp.c)},
              {"kappa", to_string(fp.kappa)}, {"A", to_string(fp.A)},
              {"two_torsion", {point_json(t2[0]), point_json(t2[1]), point_json(t2[2])}},
              {"torsion", tg.structure()}, {"generator", point_json(tg.generator)}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "s: " << to_string(s) << "\nc: " << to_string(fp.c) << "\nkappa: " << to_string(fp.kappa)
      << "\nA: " << to_string(fp.A) << "\ncurve: y^2 = (x + " << to_string(fp.A) << ")(x - 2)(x + 2)\n"
      << "genus 3: w^2 = lambda^8 + " << to_string(fp.A) << " lambda^4 + 1\n"
      << "two-torsion: T1 = " << point_str(t2[0]) << ", T2 = " << point_str(t2[1]) << ", T3 = " << point_str(t2[2])
      << "\ntorsion: " << tg.structure() << "\ngenerator: " << point_str(tg.generator) << '\n';
}

void cmd_torsion(std::ostream& out, const BigRational& s, bool as_json) {
  const CurveFamily family = CurveFamily::from_s(s);
  if (family.degenerate()) throw DegenerateFamilyError("degenerate s = " + to_string(s));
  const TorsionGroup tg = torsion_subgroup(family);
  if (as_json) {
    json pts = json::array();
    for (std::size_t i = 0; i < tg.points.size(); ++i) pts.push_back({{"point", point_json(tg.points[i])}, {"order", tg.orders[i]}});
    out << json{{"s", to_string(s)}, {"structure", tg.structure()}, {"points", pts},
                {"halvable_two_torsion", tg.halvable_two_torsion}}
               .dump(2)
        << '\n';
    return;
  }
  out << "torsion: " << tg.structure() << '\n';
  for (std::size_t i = 0; i < tg.points.size(); ++i) out << "  order " << tg.orders[i] << ": " << point_str(tg.points[i]) << '\n';
  out << "halvable 2-torsion:";
  for (int i : tg.halvable_two_torsion) out << " T" << i;
  out << '\n';
}

void cmd_kummer(std::ostream& out, const std::vector<BigRational>& params, std::size_t primes,
                std::uint64_t trials, std::uint64_t seed, bool as_json) {
  bool clean = true;
  json j = {{"identities", json::array()}, {"parity", json::array()}};
  for (const BigRational& s : params) {
    const CurveFamily family = CurveFamily::from_s(s);
    if (family.degenerate()) throw DegenerateFamilyError("degenerate s = " + to_string(s));
    const auto ps = good_primes(family, primes, 5);
    const IdentityReport r = verify_translation_identities(family, trials, ps, seed);
    clean = clean && r.clean();
    if (as_json) {
      j["identities"].push_back({{"s", to_string(s)},
                                 {"trials", r.trials},
                                 {"excluded", r.excluded},
                                 {"passes", r.passes},
                                 {"failures", r.failures},
                                 {"sign_flip_checks", r.sign_flip_checks},
                                 {"sign_flip_failures", r.sign_flip_failures}});
    } else {
      out << "s = " << to_string(s) << ": " << r.primes_used.size() << " primes, " << r.trials << " trials, "
          << r.excluded << " excluded; failures T1/T2/T3 = " << r.failures[0] << '/' << r.failures[1] << '/'
          << r.failures[2] << "; sign flip " << r.sign_flip_checks - r.sign_flip_failures << '/'
          << r.sign_flip_checks << '\n';
      for (const auto& c : r.counterexamples) out << "  counterexample " << c << '\n';
    }
  }
  for (Labeling lab : {Labeling::kT1, Labeling::kT2, Labeling::kT3}) {
    const TorsionDivisor d = divisor_of_f(lab);
    for (const TorsionElement& t : torsion_elements()) {
      if (t.order() != 4) continue;
      const ParityTable table = parity_table(d, t);
      clean = clean && table.all_odd;
      if (as_json) {
        j["parity"].push_back({{"labeling", static_cast<int>(lab)}, {"translate", t.label()},
                               {"net", table.net}, {"all_odd", table.all_odd}});
      } else {
        out << "labeling T" << static_cast<int>(lab) << ", translate " << t.label() << ": net (";
        for (int k = 0; k < 8; ++k) out << (k ? "," : "") << (table.net[k] > 0 ? "+" : "") << table.net[k];
        out << ") " << (table.all_odd ? "all odd" : "NOT all odd") << '\n';
      }
    }
  }
  if (as_json) out << j.dump(2) << '\n';
  if (!clean) throw Finding{};
}

void cmd_descent(std::ostream& out, const std::vector<BigRational>& params, std::int64_t height, bool as_json) {
  bool finding = false;
  json arr = json::array();
  for (const BigRational& s : params) {
    const CurveFamily family = CurveFamily::from_s(s);
    if (family.degenerate()) throw DegenerateFamilyError("degenerate s = " + to_string(s));
    const TorsionGroup tg = torsion_subgroup(family);
    HarvestConfig hc;
    hc.height = height;
    const auto points = harvest_points(family, hc);
    if (!as_json) out << "s = " << to_string(s) << ": " << points.size() << " points\n";
    for (const RationalPoint& P : points) {
      if (P.y == 0) continue;
      const D3Verdict v = d3_obstruction(family, P, &tg);
      const bool product = v.cls.product_is_square();
      // f(P) a square at a non-torsion point would lift P to the genus-3 curve
      const bool lifts = !v.torsion && v.f_square_class == 1;
      finding = finding || !product || lifts || v.case_a_violation || !v.case_b_violations.empty();
      if (as_json) {
        arr.push_back({{"s", to_string(s)},
                       {"point", point_json(P)},
                       {"delta", {to_string(v.cls.delta1), to_string(v.cls.delta2), to_string(v.cls.delta3)}},
                       {"product_square", product},
                       {"torsion", v.torsion},
                       {"f_class", to_string(v.f_square_class)},
                       {"f_class_not_2", v.case_a_violation},
                       {"f_square", lifts},
                       {"case_b_violations", v.case_b_violations.size()},
                       {"residual_class", v.residual_class}});
      } else {
        out << "  " << point_str(P) << (v.torsion ? " [torsion]" : "") << " delta = (" << v.cls.delta1 << ", "
            << v.cls.delta2 << ", " << v.cls.delta3 << ")" << (product ? "" : " PRODUCT NOT SQUARE")
            << " f class " << v.f_square_class << (v.case_a_violation ? " CASE (a) COUNTEREXAMPLE: delta3 = 1, class not 2" : "")
            << (lifts ? " F SQUARE" : "")
            << (v.case_b_violations.empty() ? "" : " CASE (b) VIOLATION")
            << (v.residual_class ? " residual class" : "") << '\n';
      }
    }
  }
  if (as_json) out << arr.dump(2) << '\n';
  if (finding) throw Finding{};
}

void cmd_delta_generic(std::ostream& out, const std::vector<BigRational>& params, bool as_json) {
  bool ok = true;
  json arr = json::array();
  for (const BigRational& s : params) {
    const DeltaGenericReport r = check_delta_generic(s);
    ok = ok && r.passes;
    if (as_json) {
      arr.push_back({{"s", to_string(s)}, {"Delta1", to_string(r.Delta1)}, {"Delta2", to_string(r.Delta2)},
                     {"class1", to_string(r.class1)}, {"class2", to_string(r.class2)}, {"passes", r.passes}});
    } else {
      out << "s = " << to_string(s) << ": Delta1 = " << to_string(r.Delta1) << " (class " << r.class1
          << "), Delta2 = " << to_string(r.Delta2) << " (class " << r.class2 << ")" << (r.passes ? "" : " FAIL") << '\n';
    }
  }
  if (as_json) out << arr.dump(2) << '\n';
  if (!ok) throw Finding{};
}

void cmd_c_primes(std::ostream& out, const std::vector<BigRational>& params, bool as_json) {
  bool ok = c_factor_polynomials_coprime();
  json arr = json::array();
  for (const BigRational& s : params) {
    const CPrimesReport r = check_c_primes(s);
    ok = ok && r.passes;
    if (as_json) {
      json primes = json::array();
      for (const auto& e : r.primes) {
        primes.push_back({{"p", to_string(e.prime)}, {"v_class", e.v_square_class},
                          {"v_4ab", e.v_four_alpha_beta}, {"v_diff", e.v_difference}});
      }
      arr.push_back({{"s", to_string(s)}, {"c", to_string(r.c)}, {"primes", primes}, {"passes", r.passes}});
    } else {
      out << "s = " << to_string(s) << ": c = " << to_string(r.c) << ';';
      for (const auto& e : r.primes) {
        out << " p=" << e.prime << " v=(" << e.v_square_class << "," << e.v_four_alpha_beta << "," << e.v_difference << ")";
      }
      out << (r.passes ? " even" : " ODD") << '\n';
    }
  }
  if (as_json) out << arr.dump(2) << '\n';
  if (!ok) throw Finding{};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler brick reduction chain: experiments and checks", "brickctl"};
  app.require_subcommand(1, 1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::int64_t pairs_max = 40;
  bool pairs_coprime = false, pairs_list = false;
  auto* pairs = app.add_subcommand("pairs", "count Euclid pairs");
  pairs->add_option("--max", pairs_max, "largest pair entry")->check(CLI::Range(std::int64_t{2}, std::int64_t{1'000'000}));
  pairs->add_flag("--coprime", pairs_coprime, "all coprime pairs (no parity filter)");
  pairs->add_flag("--list", pairs_list, "list the pairs");

  SweepOptions sweep_opt;
  bool sweep_stats = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "test f1*f2 for squareness over all tuples");
  sweep_opt.add(sweep_cmd);
  sweep_cmd->add_flag("--stats", sweep_stats, "print extra statistics");
  sweep_cmd->add_flag("--both-factors", sweep_opt.both, "also test f1 and f2 individually");
  sweep_cmd->add_flag("--no-prefilter", sweep_opt.no_prefilter, "skip the residue pre-filter");

  SweepOptions blocker_opt;
  blocker_opt.max = 40;
  std::size_t top = 10;
  auto* blockers = app.add_subcommand("blockers", "smallest blocker prime of every tuple");
  blocker_opt.add(blockers);
  blockers->add_option("--top", top, "most frequent blockers to list");

  ParamOptions sieve_params;
  std::int64_t sieve_height = 1000;
  std::uint64_t prime_bound = 200;
  unsigned sieve_jobs = 1;
  bool sieve_list = false;
  auto* sieve = app.add_subcommand("sieve", "modular sieve for f(P) square");
  sieve_params.add(sieve, false);
  sieve->add_option("--height", sieve_height, "box height")->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000}));
  sieve->add_option("--prime-bound", prime_bound, "use odd good primes below B");
  sieve->add_option("--jobs", sieve_jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  sieve->add_flag("--list", sieve_list, "list survivors");

  std::vector<std::string> edges;
  auto* brick_check = app.add_subcommand("brick-check", "check a box for integral diagonals");
  brick_check->add_option("edges", edges, "three edges")->required()->expected(3);

  ParamOptions info_params;
  auto* curve_info = app.add_subcommand("curve-info", "family coefficients and curve data");
  info_params.add(curve_info, false);

  ParamOptions torsion_params;
  auto* torsion = app.add_subcommand("torsion", "rational torsion subgroup");
  torsion_params.add(torsion, false);

  ParamOptions kummer_params;
  std::size_t kummer_primes = 20;
  std::uint64_t trials = 50;
  auto* kummer = app.add_subcommand("kummer-verify", "translation identities mod p and the parity table");
  kummer_params.add(kummer, true);
  kummer->add_option("--primes", kummer_primes, "good primes per parameter");
  kummer->add_option("--trials", trials, "points per prime");

  ParamOptions descent_params;
  std::int64_t descent_height = 10000;
  auto* descent = app.add_subcommand("descent", "2-descent classes of harvested points");
  descent_params.add(descent, true);
  descent->add_option("--height", descent_height, "harvest height")->check(CLI::Range(std::int64_t{1}, std::int64_t{10'000'000}));

  ParamOptions delta_params;
  auto* delta = app.add_subcommand("delta-generic", "square classes of Delta1, Delta2");
  delta_params.add(delta, true);

  ParamOptions cprime_params;
  auto* cprimes = app.add_subcommand("c-primes", "even valuations at primes of c");
  cprime_params.add(cprimes, true);

  // --json is accepted before or after the subcommand
  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> owned{"brickctl"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : owned) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitError;
  }

  try {
    if (*pairs) cmd_pairs(out, pairs_max, pairs_coprime, pairs_list, as_json);
    else if (*sweep_cmd) cmd_sweep(out, sweep_opt, sweep_stats, as_json);
    else if (*blockers) cmd_blockers(out, blocker_opt, top, as_json);
    else if (*sieve) cmd_sieve(out, sieve_params.resolve(default_sieve_parameters()), sieve_height, prime_bound, sieve_jobs, sieve_list, as_json);
    else if (*brick_check) cmd_brick_check(out, edges, as_json);
    else if (*curve_info) cmd_curve_info(out, info_params.resolve({}).front(), as_json);
    else if (*torsion) cmd_torsion(out, torsion_params.resolve({}).front(), as_json);
    else if (*kummer) cmd_kummer(out, kummer_params.resolve({}), kummer_primes, trials, kummer_params.seed, as_json);
    else if (*descent) cmd_descent(out, descent_params.resolve({}), descent_height, as_json);
    else if (*delta) cmd_delta_generic(out, delta_params.resolve({}), as_json);
    else if (*cprimes) cmd_c_primes(out, cprime_params.resolve({}), as_json);
  } catch (const Finding&) {
    return kExitFinding;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitClean;
}

}  // namespace brick::cli
