#include "starconf/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "starconf/errors.hpp"

namespace starconf {

namespace {

json opt_mpz(const std::optional<mpz_class>& v) { return v ? json(v->get_str()) : json(nullptr); }

std::optional<mpz_class> mpz_opt(const json& j) {
  if (j.is_null()) return std::nullopt;
  return mpz_class(j.get<std::string>());
}

CellStatus status_from_string(const std::string& s) {
  if (s == "=") return CellStatus::equal;
  if (s == "≠") return CellStatus::differ;
  if (s == "auto") return CellStatus::automatic;
  return CellStatus::inconclusive;
}

FieldSpec field_from_name(const std::string& name) {
  if (name == "Q") return FieldSpec::rationals();
  if (name.size() > 4 && name.rfind("GF(", 0) == 0) return FieldSpec::prime_field(std::stoull(name.substr(3)));
  throw InputError("unknown field name '" + name + "'");
}

using Table = std::vector<std::vector<std::string>>;

std::size_t visible_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

void print_table(std::ostream& out, const Table& rows, bool header_rule = true) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], visible_width(row[c]));
    }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << " ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const auto& cell = rows[r][c];
      out << " " << cell << std::string(width[c] - visible_width(cell), ' ') << (c == 0 ? " ||" : " |");
    }
    out << "\n";
    if (r == 0 && header_rule) {
      std::size_t total = 1;
      for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c == 0 ? 4 : 3);
      out << "  " << std::string(total - 1, '-') << "\n";
    }
  }
}

std::string str(const json& j) {
  if (j.is_null()) return "n/a";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  return j.dump();
}

std::string join(const json& arr, const std::string& sep = ", ") {
  std::string s;
  for (const auto& v : arr) s += (s.empty() ? "" : sep) + str(v);
  return s;
}

std::vector<std::string> labels_of(const json& report) {
  return report.at("code").at("labels").get<std::vector<std::string>>();
}

std::string prime_string(const json& prime, const std::vector<std::string>& labels) {
  std::string s = "(";
  bool first = true;
  for (const auto& e : prime.at("flat")) {
    s += (first ? "" : ", ") + labels.at(e.get<std::size_t>() - 1);
    first = false;
  }
  s += ")";
  const long e = prime.at("exponent").get<long>();
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

void render_code(std::ostream& out, const json& code) {
  out << "[" << code.at("n").get<std::size_t>() << "," << code.at("k").get<std::size_t>() << "] code over "
      << code.at("field").get<std::string>() << "\n";
  out << "forms: " << join(code.at("labels")) << "\n";
}

void render_tutte(std::ostream& out, const json& r) {
  out << "T(x,y)   = " << r.at("tutte").at("string").get<std::string>() << "\n";
  out << "T(x+1,y) = " << r.at("shifted").at("string").get<std::string>() << "\n";
  const json& e = r.at("details").at("engines");
  out << "subset-sum engine:          " << str(e.at("subset_sum")) << "\n";
  out << "deletion-contraction engine: " << str(e.at("deletion_contraction")) << "\n";
  out << "engines agree: " << str(e.at("agree")) << "\n";
}

void render_ghw(std::ostream& out, const json& r) {
  const json& d = r.at("details");
  const json& routes = d.at("routes");
  Table t{{"r"}, {"brute force"}, {"Tutte"}, {"dual rank"}};
  const std::size_t k = routes.at("tutte").size();
  for (std::size_t i = 1; i < k; ++i) {
    t[0].push_back(std::to_string(i));
    t[1].push_back(str(routes.at("bruteforce").at(i)));
    t[2].push_back(str(routes.at("tutte").at(i)));
    t[3].push_back(str(routes.at("dual_rank").at(i)));
  }
  print_table(out, t);
  out << "routes agree: " << str(d.at("agree")) << "\n";
  out << "monotone with d_r <= n-k+r: " << str(d.at("bounds_ok")) << "\n";
  const json& w = d.at("wei");
  out << "Wei duality: {d_r(C)} = {" << join(w.at("lhs")) << "}, [n] \\ {n+1-d_s(C^perp)} = {" << join(w.at("rhs"))
      << "}, holds: " << str(w.at("holds")) << "\n";
  out << "dual hierarchy: (" << join(w.at("dual")) << ")\n";
}

const json* hilbert_for(const json& r, long a) {
  if (!r.at("details").contains("hilbert")) return nullptr;
  for (const auto& h : r.at("details").at("hilbert"))
    if (h.at("a").get<long>() == a) return &h;
  return nullptr;
}

void render_profile(std::ostream& out, const json& r) {
  const json& profiles = r.at("profiles");
  const std::size_t k = r.at("code").at("k").get<std::size_t>();
  Table artinian{{"a"}, {"deg"}};
  Table positive{{"a"}, {"HP"}};
  for (const auto& p : profiles) {
    const long a = p.at("a").get<long>();
    if (p.at("height").get<std::size_t>() == k) {
      artinian[0].push_back(std::to_string(a));
      artinian[1].push_back(str(p.at("degree")));
    } else {
      const json* h = hilbert_for(r, a);
      positive[0].push_back(std::to_string(a));
      positive[1].push_back(h ? str(h->at("hp")) : "n/a");
    }
  }
  if (artinian[0].size() > 1) print_table(out, artinian);
  if (artinian[0].size() > 1 && positive[0].size() > 1) out << "\n";
  if (positive[0].size() > 1) print_table(out, positive);
  out << "\n";
  Table all{{"a"}, {"height"}, {"deg"}, {"HP"}, {"mu"}, {"primes"}};
  for (const auto& p : profiles) {
    const long a = p.at("a").get<long>();
    const json* h = hilbert_for(r, a);
    all[0].push_back(std::to_string(a));
    all[1].push_back(str(p.at("height")));
    all[2].push_back(str(p.at("degree")));
    all[3].push_back(h ? str(h->at("hp")) : "n/a");
    all[4].push_back(str(p.at("mu")));
    all[5].push_back(std::to_string(p.at("primes").size()));
  }
  print_table(out, all);
}

void render_primes(std::ostream& out, const json& r) {
  const auto labels = labels_of(r);
  for (const auto& p : r.at("profiles")) {
    out << "a=" << p.at("a").get<long>() << "  height " << p.at("height").get<std::size_t>();
    if (p.at("power_of_maximal").get<bool>()) out << "  (power of the maximal ideal)";
    out << "\n";
    for (const auto& prime : p.at("primes"))
      out << "  " << prime_string(prime, labels) << "  nu=" << prime.at("nu").get<std::size_t>() << "\n";
    if (const json& k = p.at("embedded_component"); !k.is_null())
      out << "  " << k.at("name").get<std::string>() << "  height > " << k.at("height_greater_than").get<std::size_t>()
          << ", not computed\n";
  }
}

void render_mu(std::ostream& out, const json& r) {
  Table t{{"a"}, {"mu"}};
  for (const auto& p : r.at("profiles")) {
    t[0].push_back(std::to_string(p.at("a").get<long>()));
    t[1].push_back(str(p.at("mu")));
  }
  print_table(out, t);
}

void render_verify(std::ostream& out, const json& r) {
  const json& o = r.at("details").at("oracle");
  Table t{{"a", "HP", "stable from", "deg (Tutte)", "deg (HP)", "height", "mu (formula)", "mu (span)", "ok"}};
  for (const auto& row : o.at("rows")) {
    const long a = row.at("a").get<long>();
    const json* prof = nullptr;
    for (const auto& p : r.at("profiles"))
      if (p.at("a").get<long>() == a) prof = &p;
    const json& fit = row.at("fit");
    t.push_back({std::to_string(a), str(fit.at("p_basis")), str(fit.at("stable_from")),
                 prof ? str(prof->at("degree")) : "n/a", str(fit.at("degree")), str(fit.at("implied_height")),
                 prof ? str(prof->at("mu")) : "n/a", str(row.at("mu")), row.at("ok").get<bool>() ? "ok" : "FAIL"});
  }
  print_table(out, t);
  if (!o.at("inconclusive").empty()) out << "inconclusive for a = " << join(o.at("inconclusive")) << "\n";
  out << "oracle agreement: " << (o.at("all_ok").get<bool>() ? "all green" : "NOT all green") << "\n";
}

void render_identity(std::ostream& out, const json& r) {
  const json& d = r.at("details").at("identity");
  out << "binomial identity, alpha <= " << d.at("max_alpha").get<long>() << ": " << d.at("checked").get<std::size_t>()
      << " triples checked, " << d.at("failures").get<std::size_t>() << " failures\n";
}

}  // namespace

ShiftedCoeffs shifted_from_json(const json& j) {
  ShiftedCoeffs s;
  s.poly = poly_from_json(j.at("poly"));
  s.p = j.at("p").get<std::vector<int>>();
  s.rank = j.at("rank").get<std::size_t>();
  return s;
}

json fitted_to_json(const FittedHP& fit) {
  return {{"window", {fit.window.lo, fit.window.hi}},
          {"hp", fit.poly.to_string()},
          {"p_basis", fit.poly.p_basis_string()},
          {"stable_from", fit.stable_from},
          {"dim_proj", fit.dim_proj},
          {"degree", fit.degree.get_str()},
          {"implied_height", fit.implied_height},
          {"hf", fit.hf}};
}

json oracle_to_json(const OracleCheck& check) {
  json rows = json::array();
  for (const auto& row : check.rows)
    rows.push_back({{"a", row.a},
                    {"fit", fitted_to_json(row.fit)},
                    {"mu", row.mu},
                    {"degree_ok", row.degree_ok},
                    {"height_ok", row.height_ok},
                    {"mu_ok", row.mu_ok},
                    {"ok", row.ok()}});
  return {{"rows", rows}, {"inconclusive", check.inconclusive}, {"all_ok", check.all_ok()}};
}

json conjecture_to_json(const ConjectureReport& report) {
  json stability = json::array();
  for (const auto& s : report.stability)
    stability.push_back({{"a", s.a},
                         {"stable_from", s.stable_from ? json(*s.stable_from) : json(nullptr)},
                         {"consistent_with_linear_resolution", s.consistent_with_linear_resolution}});
  json rows = json::array();
  for (const auto& row : report.rows) {
    json cells = json::array();
    for (const auto& c : row.cells)
      cells.push_back({{"t", c.t},
                       {"colon_dim", c.colon_dim},
                       {"target_dim", c.target_dim},
                       {"status", to_string(c.status)},
                       {"proved", c.proved}});
    rows.push_back({{"a", row.a},
                    {"column", row.ell + 1},
                    {"coloop", row.coloop},
                    {"parallel_others", row.parallel_others},
                    {"automatic", row.automatic},
                    {"cells", cells},
                    {"recdegree_hypothesis", row.recdegree_hypothesis},
                    {"colon_degree", opt_mpz(row.colon_degree)},
                    {"target_degree", opt_mpz(row.target_degree)},
                    {"degree_status", to_string(row.degree_status)}});
  }
  return {{"field", report.field.name()},
          {"outside_char0_hypothesis", report.outside_char0_hypothesis},
          {"t_max", report.t_max},
          {"stability", stability},
          {"rows", rows},
          {"counts",
           {{"berget_violations", report.berget_violations},
            {"coloop_violations", report.coloop_violations},
            {"automatic_violations", report.automatic_violations},
            {"low_degree_violations", report.low_degree_violations},
            {"recdegree_mismatches", report.recdegree_mismatches},
            {"open_differences", report.open_differences},
            {"proved_violations", report.proved_violations()}}}};
}

ConjectureReport conjecture_from_json(const json& j) {
  ConjectureReport r;
  r.field = field_from_name(j.at("field").get<std::string>());
  r.outside_char0_hypothesis = j.at("outside_char0_hypothesis").get<bool>();
  r.t_max = j.at("t_max").get<long>();
  for (const auto& s : j.at("stability")) {
    StabilityRow row;
    row.a = s.at("a").get<long>();
    if (!s.at("stable_from").is_null()) row.stable_from = s.at("stable_from").get<long>();
    row.consistent_with_linear_resolution = s.at("consistent_with_linear_resolution").get<bool>();
    r.stability.push_back(row);
  }
  for (const auto& x : j.at("rows")) {
    ColonRow row;
    row.a = x.at("a").get<long>();
    row.ell = x.at("column").get<std::size_t>() - 1;
    row.coloop = x.at("coloop").get<bool>();
    row.parallel_others = x.at("parallel_others").get<std::size_t>();
    row.automatic = x.at("automatic").get<bool>();
    for (const auto& c : x.at("cells")) {
      ColonCell cell;
      cell.t = c.at("t").get<long>();
      cell.colon_dim = c.at("colon_dim").get<std::size_t>();
      cell.target_dim = c.at("target_dim").get<std::size_t>();
      cell.status = status_from_string(c.at("status").get<std::string>());
      cell.proved = c.at("proved").get<bool>();
      row.cells.push_back(cell);
    }
    row.recdegree_hypothesis = x.at("recdegree_hypothesis").get<bool>();
    row.colon_degree = mpz_opt(x.at("colon_degree"));
    row.target_degree = mpz_opt(x.at("target_degree"));
    row.degree_status = status_from_string(x.at("degree_status").get<std::string>());
    r.rows.push_back(std::move(row));
  }
  const json& c = j.at("counts");
  r.berget_violations = c.at("berget_violations").get<std::size_t>();
  r.coloop_violations = c.at("coloop_violations").get<std::size_t>();
  r.automatic_violations = c.at("automatic_violations").get<std::size_t>();
  r.low_degree_violations = c.at("low_degree_violations").get<std::size_t>();
  r.recdegree_mismatches = c.at("recdegree_mismatches").get<std::size_t>();
  r.open_differences = c.at("open_differences").get<std::size_t>();
  return r;
}

json report_to_json(const RunReport& r) {
  json j = {{"command", r.command}, {"code", r.code}};
  if (r.tutte) {
    json t = {{"string", r.tutte->to_string()}};
    t["terms"] = poly_to_json(*r.tutte).at("terms");
    j["tutte"] = t;
  }
  if (r.shifted) {
    json s = shifted_to_json(*r.shifted);
    s["rank"] = r.shifted->rank;
    j["shifted"] = s;
  }
  if (r.hierarchy) j["hierarchy"] = hierarchy_to_json(*r.hierarchy);
  json profiles = json::array();
  for (const auto& p : r.profiles) profiles.push_back(profile_to_json(p));
  j["profiles"] = profiles;
  j["details"] = r.details;
  if (!r.timings.empty()) j["timings"] = r.timings;
  return j;
}

RunReport report_from_json(const json& j) {
  RunReport r;
  try {
    r.command = j.at("command").get<std::string>();
    r.code = j.at("code");
    if (j.contains("tutte")) r.tutte = poly_from_json(j.at("tutte"));
    if (j.contains("shifted")) r.shifted = shifted_from_json(j.at("shifted"));
    if (j.contains("hierarchy")) r.hierarchy = hierarchy_from_json(j.at("hierarchy"));
    for (const auto& p : j.at("profiles")) r.profiles.push_back(profile_from_json(p));
    r.details = j.at("details");
    if (j.contains("timings")) r.timings = j.at("timings").get<std::map<std::string, double>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

std::string render_table(const json& r) {
  std::ostringstream out;
  const std::string command = r.at("command").get<std::string>();
  if (command != "identity") {
    render_code(out, r.at("code"));
    if (r.contains("hierarchy")) out << "weight hierarchy d = (" << join(r.at("hierarchy")) << ")\n";
    out << "\n";
  }
  if (command == "tutte") render_tutte(out, r);
  else if (command == "ghw") render_ghw(out, r);
  else if (command == "profile") render_profile(out, r);
  else if (command == "primes") render_primes(out, r);
  else if (command == "mu") render_mu(out, r);
  else if (command == "verify") render_verify(out, r);
  else if (command == "conjecture")
    out << render_conjecture_matrix(conjecture_from_json(r.at("details").at("conjecture")), labels_of(r));
  else if (command == "identity") render_identity(out, r);
  if (r.contains("timings")) {
    out << "\ntimings:";
    for (const auto& [phase, secs] : r.at("timings").items())
      out << " " << phase << "=" << std::fixed << std::setprecision(3) << secs.get<double>() << "s";
    out << "\n";
  }
  return out.str();
}

}  // namespace starconf
