#include "starconf/cli.hpp"

#include <chrono>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "starconf/conjecture.hpp"
#include "starconf/errors.hpp"
#include "starconf/parallel.hpp"
#include "starconf/star_config.hpp"
#include "starconf/tutte.hpp"

namespace starconf {

namespace {

class Stopwatch {
 public:
  Stopwatch(RunReport& report, bool enabled) : report_(report), enabled_(enabled) {}

  template <class Fn>
  auto time(const std::string& phase, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto record = [&] {
      if (enabled_)
        report_.timings[phase] += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      record();
    } else {
      auto value = fn();
      record();
      return value;
    }
  }

 private:
  RunReport& report_;
  bool enabled_;
};

InputDocument load_document(const RunOptions& o) {
  if (o.example && o.input_file) throw InputError("give either --example or an input file, not both");
  if (o.example) return builtin_example(*o.example);
  if (o.input_file) return read_input_file(*o.input_file);
  throw InputError("no input: give an input file or --example <e0|b3>");
}

BivarPoly tutte_with_cache(const LinearCode& code, const RunOptions& o) {
  std::optional<TutteCache> cache;
  if (!o.no_cache)
    if (auto dir = resolve_cache_dir(o.cache_dir)) cache.emplace(*dir);
  const std::string key = canonical_matroid_key(code.matrix());
  if (cache)
    if (auto hit = cache->load(key)) return *hit;
  TutteMemo memo;
  BivarPoly t = tutte_deletion_contraction(code.matroid(), {Execution::parallel, &memo});
  if (cache) cache->store(key, t);
  return t;
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names = {"tutte", "ghw",     "profile",    "primes",
                                                 "mu",    "verify",  "conjecture", "identity"};
  return names;
}

FitWindow parse_window(const std::string& text) {
  const auto colon = text.find(':');
  auto bad = [&] { return InputError("--window expects lo:hi with 0 <= lo < hi, got '" + text + "'"); };
  if (colon == std::string::npos) throw bad();
  try {
    std::size_t used = 0;
    const long lo = std::stol(text.substr(0, colon), &used);
    if (used != colon) throw bad();
    const std::string rest = text.substr(colon + 1);
    const long hi = std::stol(rest, &used);
    if (used != rest.size() || lo < 0 || hi <= lo) throw bad();
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw bad();
  }
}

RunReport run_command(const std::string& sub, const RunOptions& o) {
  if (std::find(subcommand_names().begin(), subcommand_names().end(), sub) == subcommand_names().end())
    throw InputError("unknown subcommand '" + sub + "'");
  if (o.threads > 0) set_thread_count(o.threads);

  RunReport report;
  report.command = sub;
  Stopwatch clock(report, o.timings);

  if (sub == "identity") {
    if (o.max_alpha < 0) throw InputError("--max-alpha must be nonnegative");
    const IdentitySweep sweep = clock.time("identity", [&] { return binomial_identity_sweep(o.max_alpha); });
    report.details["identity"] = {{"max_alpha", o.max_alpha}, {"checked", sweep.checked}, {"failures", sweep.failures}};
    return report;
  }

  const LinearCode code = clock.time("parse", [&] { return load_document(o).to_code(); });
  report.code = code_to_json(code);
  const BivarPoly t = clock.time("tutte", [&] { return tutte_with_cache(code, o); });
  const ShiftedCoeffs shifted = whitney_shift(t);
  const WeightHierarchy h = hierarchy_from_tutte(shifted, code);
  report.tutte = t;
  report.shifted = shifted;
  report.hierarchy = h;

  if (sub == "tutte") {
    const BivarPoly exhaustive = clock.time("subset_sum", [&] {
      return tutte_subset_sum(code.matroid(), {Execution::parallel, o.max_n});
    });
    report.details["engines"] = {{"subset_sum", exhaustive.to_string()},
                                 {"deletion_contraction", t.to_string()},
                                 {"agree", exhaustive == t}};
    return report;
  }

  if (sub == "ghw") {
    const WeightHierarchy brute =
        clock.time("bruteforce", [&] { return hierarchy_bruteforce(code.matroid(), Execution::parallel, o.max_n); });
    const WeightHierarchy dual =
        clock.time("dual_rank", [&] { return hierarchy_from_dual_rank(code.matroid(), Execution::parallel, o.max_n); });
    const WeiDuality wei = clock.time("wei", [&] { return wei_duality_check(code, Execution::parallel, o.max_n); });
    bool bounds_ok = true;
    try {
      h.validate(code.n());
    } catch (const InvariantViolation&) {
      bounds_ok = false;
    }
    report.details["routes"] = {{"bruteforce", hierarchy_to_json(brute)},
                                {"tutte", hierarchy_to_json(h)},
                                {"dual_rank", hierarchy_to_json(dual)}};
    report.details["agree"] = brute == h && dual == h;
    report.details["bounds_ok"] = bounds_ok;
    report.details["wei"] = {
        {"holds", wei.holds}, {"lhs", wei.lhs}, {"rhs", wei.rhs}, {"dual", hierarchy_to_json(wei.dual)}};
    return report;
  }

  if (sub == "conjecture") {
    ConjectureOptions co;
    co.t_max = o.t_max;
    co.compare_degrees = o.compare_degrees;
    const ConjectureReport cr = clock.time("conjecture", [&] { return conjecture_report(code, co); });
    report.details["conjecture"] = conjecture_to_json(cr);
    return report;
  }

  report.profiles = clock.time("profile", [&] { return full_profile(code, shifted, h); });

  if (sub == "profile") {
    json hilbert = json::array();
    const bool small = code.k() <= kProfileOracleMaxK && code.n() <= kProfileOracleMaxN;
    clock.time("hilbert", [&] {
      for (const auto& p : report.profiles) {
        json row = {{"a", p.a}, {"hp", nullptr}};
        if (small) {
          try {
            row["hp"] = fit_hilbert_polynomial(code, p.a, o.window).poly.p_basis_string();
          } catch (const Inconclusive&) {
          }
        }
        hilbert.push_back(row);
      }
    });
    report.details["hilbert"] = hilbert;
  } else if (sub == "verify") {
    const OracleCheck check = clock.time("oracle", [&] { return oracle_agreement(code, report.profiles, o.window); });
    report.details["oracle"] = oracle_to_json(check);
  }
  return report;
}

int report_exit_code(const RunReport& r) {
  const json& d = r.details;
  if (r.command == "tutte" && !d.at("engines").at("agree").get<bool>()) return kExitInvariant;
  if (r.command == "ghw" && !(d.at("agree").get<bool>() && d.at("bounds_ok").get<bool>() &&
                              d.at("wei").at("holds").get<bool>()))
    return kExitInvariant;
  if (r.command == "verify")
    for (const auto& row : d.at("oracle").at("rows"))
      if (!row.at("ok").get<bool>()) return kExitInvariant;
  if (r.command == "conjecture" && d.at("conjecture").at("counts").at("proved_violations").get<std::size_t>() > 0)
    return kExitInvariant;
  if (r.command == "identity" && d.at("identity").at("failures").get<std::size_t>() > 0) return kExitInvariant;
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tutte polynomials of linear codes and invariants of generalized star configurations"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunOptions o;
  bool as_json = false;
  std::string window;
  std::string example;
  bool no_degrees = false;
  app.add_option("--example", example, "Built-in example (e0 or b3)");
  app.add_flag("--json", as_json, "Print the JSON report");
  app.add_option("--window", window, "Hilbert fit window lo:hi");
  app.add_option("--cache-dir", o.cache_dir, "Tutte cache directory (overrides STARCONFIG_CACHE_DIR)");
  app.add_flag("--no-cache", o.no_cache, "Do not read or write the Tutte cache");
  app.add_option("--threads", o.threads, "OpenMP thread count")->check(CLI::NonNegativeNumber);
  app.add_option("--max-n", o.max_n, "Largest n for exhaustive subset enumeration")->check(CLI::Range(1, 63));
  app.add_flag("--timings", o.timings, "Record phase timings in the report");

  const std::map<std::string, std::string> about = {
      {"tutte", "Tutte polynomial by both engines"},
      {"ghw", "Generalized Hamming weights by every route, with the Wei check"},
      {"profile", "Height, degree, HP, mu and prime counts for every a"},
      {"primes", "Low-height minimal primes with exponents"},
      {"mu", "Minimal generator counts"},
      {"verify", "Compare every profile row with the Hilbert function oracle"},
      {"conjecture", "Colon ideal graded dimensions against the predicted values"},
      {"identity", "Sweep the binomial identity"}};
  std::string input;
  for (const auto& name : subcommand_names()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    if (name != "identity") sub->add_option("input", input, "Input matrix file");
    if (name == "identity") sub->add_option("--max-alpha", o.max_alpha, "Largest alpha in the sweep");
    if (name == "conjecture") {
      sub->add_option("--t-max", o.t_max, "Largest degree compared (default n + 1)");
      sub->add_flag("--no-degrees", no_degrees, "Skip the fitted degree comparison");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    if (!example.empty()) o.example = example;
    if (!input.empty()) o.input_file = input;
    if (!window.empty()) o.window = parse_window(window);
    o.compare_degrees = !no_degrees;
    const RunReport report = run_command(sub, o);
    const json j = report_to_json(report);
    if (as_json) out << j.dump(2) << "\n";
    else out << render_table(j);
    return report_exit_code(report);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace starconf
