#include "starconf/io.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "starconf/errors.hpp"

namespace starconf {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::size_t parse_count(const std::string& word, std::size_t line, const char* what) {
  char* end = nullptr;
  const unsigned long long v = std::strtoull(word.c_str(), &end, 10);
  if (word.empty() || *end != '\0' || word.front() == '-')
    throw InputError("line " + std::to_string(line) + ": bad " + what + " '" + word + "'");
  return static_cast<std::size_t>(v);
}

std::string hex_bytes(std::string_view bytes) {
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned char c : bytes) out << std::setw(2) << static_cast<unsigned>(c);
  return out.str();
}

}  // namespace

LinearCode InputDocument::to_code() const { return LinearCode(matrix, labels); }

InputDocument parse_input(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  {
    std::istringstream in{std::string(text)};
    std::size_t number = 0;
    for (std::string raw; std::getline(in, raw);) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      auto words = split_words(raw);
      if (!words.empty()) lines.emplace_back(number, std::move(words));
    }
  }
  if (lines.empty()) throw InputError("empty input");

  InputDocument doc;
  std::size_t at = 0;
  {
    const auto& [no, w] = lines[at++];
    if (w.size() == 3 && w[0] == "field" && w[1] == "gf") {
      const std::size_t p = parse_count(w[2], no, "modulus");
      try {
        doc.field = FieldSpec::prime_field(p);
      } catch (const std::invalid_argument&) {
        throw InputError("line " + std::to_string(no) + ": modulus " + w[2] + " is not prime");
      }
    } else if (w.size() == 2 && w[0] == "field" && w[1] == "q") {
      doc.field = FieldSpec::rationals();
    } else {
      throw InputError("line " + std::to_string(no) + ": expected 'field gf <p>' or 'field q'");
    }
  }
  {
    if (at >= lines.size()) throw InputError("missing 'size <k> <n>' line");
    const auto& [no, w] = lines[at++];
    if (w.size() != 3 || w[0] != "size") throw InputError("line " + std::to_string(no) + ": expected 'size <k> <n>'");
    doc.k = parse_count(w[1], no, "k");
    doc.n = parse_count(w[2], no, "n");
    if (doc.k == 0 || doc.n == 0) throw InputError("line " + std::to_string(no) + ": k and n must be positive");
    if (doc.n > kMaxGroundSize)
      throw InputError("line " + std::to_string(no) + ": n exceeds " + std::to_string(kMaxGroundSize));
    if (doc.k > doc.n) throw InputError("line " + std::to_string(no) + ": k > n cannot have rank k");
  }
  std::vector<FieldScalar> entries;
  for (std::size_t r = 0; r < doc.k; ++r) {
    if (at >= lines.size()) throw InputError("expected " + std::to_string(doc.k) + " matrix rows, got " + std::to_string(r));
    const auto& [no, w] = lines[at++];
    if (w.size() != doc.n)
      throw InputError("line " + std::to_string(no) + ": expected " + std::to_string(doc.n) + " entries, got " +
                       std::to_string(w.size()));
    for (const auto& token : w) {
      try {
        entries.push_back(FieldScalar::parse(doc.field, token));
      } catch (const std::exception& e) {
        throw InputError("line " + std::to_string(no) + ": " + e.what());
      }
    }
  }
  doc.matrix = ExactMatrix::from_scalars(doc.field, doc.k, doc.n, entries);
  if (at < lines.size()) {
    const auto& [no, w] = lines[at++];
    if (w.empty() || w[0] != "labels") throw InputError("line " + std::to_string(no) + ": unexpected content");
    if (w.size() != doc.n + 1)
      throw InputError("line " + std::to_string(no) + ": expected " + std::to_string(doc.n) + " labels");
    doc.labels.assign(w.begin() + 1, w.end());
  }
  if (at < lines.size()) throw InputError("line " + std::to_string(lines[at].first) + ": unexpected content");
  // Zero columns and rank are checked here so that parse errors surface early.
  doc.to_code();
  return doc;
}

InputDocument read_input_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_input(text.str());
}

std::string format_input(const InputDocument& doc) {
  std::ostringstream out;
  if (doc.field.is_prime_field()) out << "field gf " << doc.field.modulus << "\n";
  else out << "field q\n";
  out << "size " << doc.k << " " << doc.n << "\n";
  for (std::size_t r = 0; r < doc.k; ++r) {
    for (std::size_t c = 0; c < doc.n; ++c) out << (c ? " " : "") << doc.matrix.at(r, c).to_string();
    out << "\n";
  }
  if (!doc.labels.empty()) {
    out << "labels";
    for (const auto& l : doc.labels) out << " " << l;
    out << "\n";
  }
  return out.str();
}

InputDocument builtin_example(std::string_view name) {
  if (name == "e0") {
    return parse_input(
        "field gf 2\n"
        "size 2 3\n"
        "1 0 1\n"
        "0 1 1\n"
        "labels x1 x2 x1+x2\n");
  }
  if (name == "b3") {
    return parse_input(
        "field gf 5\n"
        "size 3 9\n"
        "1 0 0 1  1 1  1 0  0\n"
        "0 1 0 1 -1 0  0 1  1\n"
        "0 0 1 0  0 1 -1 1 -1\n"
        "labels x1 x2 x3 x1+x2 x1-x2 x1+x3 x1-x3 x2+x3 x2-x3\n");
  }
  throw InputError("unknown example '" + std::string(name) + "' (known: e0, b3)");
}

std::vector<std::string> builtin_example_names() { return {"e0", "b3"}; }

json poly_to_json(const BivarPoly& p) {
  json terms = json::array();
  for (const auto& [key, c] : p.terms()) terms.push_back({{"x", key.first}, {"y", key.second}, {"coeff", c.get_str()}});
  return {{"terms", terms}};
}

BivarPoly poly_from_json(const json& j) {
  BivarPoly p;
  try {
    for (const auto& t : j.at("terms")) {
      mpz_class c;
      if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) throw InputError("bad coefficient");
      p.add_term(t.at("x").get<unsigned>(), t.at("y").get<unsigned>(), c);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
  return p;
}

json shifted_to_json(const ShiftedCoeffs& s) {
  return {{"poly", poly_to_json(s.poly)}, {"string", s.poly.to_string()}, {"p", s.p}};
}

json hierarchy_to_json(const WeightHierarchy& h) { return h.d; }

WeightHierarchy hierarchy_from_json(const json& j) { return WeightHierarchy{j.get<std::vector<long>>()}; }

json profile_to_json(const IdealProfile& p) {
  json primes = json::array();
  for (const auto& m : p.primes) {
    std::vector<std::size_t> flat;
    for (auto e : subset_elements(m.flat.members)) flat.push_back(e + 1);
    primes.push_back({{"flat", flat}, {"nu", m.nu}, {"exponent", m.exponent}});
  }
  return {{"a", p.a},
          {"r", p.r},
          {"j", p.j},
          {"height", p.height},
          {"degree", p.degree.get_str()},
          {"mu", p.mu.get_str()},
          {"power_of_maximal", p.power_of_maximal},
          {"primes", primes},
          {"embedded_component",
           p.power_of_maximal ? json(nullptr) : json{{"name", "K"}, {"height_greater_than", p.height}}}};
}

IdealProfile profile_from_json(const json& j) {
  IdealProfile p;
  try {
    p.a = j.at("a").get<long>();
    p.r = j.at("r").get<std::size_t>();
    p.j = j.at("j").get<long>();
    p.height = j.at("height").get<std::size_t>();
    p.degree = mpz_class(j.at("degree").get<std::string>());
    p.mu = mpz_class(j.at("mu").get<std::string>());
    p.power_of_maximal = j.at("power_of_maximal").get<bool>();
    for (const auto& m : j.at("primes")) {
      MinimalPrime prime;
      for (auto e : m.at("flat").get<std::vector<std::size_t>>()) prime.flat.members |= GroundSubset{1} << (e - 1);
      prime.flat.rank = p.height;
      prime.nu = m.at("nu").get<std::size_t>();
      prime.exponent = m.at("exponent").get<long>();
      p.primes.push_back(prime);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed profile JSON: ") + e.what());
  }
  return p;
}

json code_to_json(const LinearCode& code) {
  json rows = json::array();
  for (std::size_t r = 0; r < code.k(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < code.n(); ++c) row.push_back(code.matrix().at(r, c).to_string());
    rows.push_back(row);
  }
  return {{"field", code.field().name()}, {"k", code.k()}, {"n", code.n()}, {"matrix", rows}, {"labels", code.labels()}};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

TutteCache::TutteCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path TutteCache::path_for(const std::string& key) const { return dir_ / ("tutte-" + fnv1a_hex(key) + ".json"); }

std::optional<BivarPoly> TutteCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("key").get<std::string>() != hex_bytes(key)) return std::nullopt;
    return poly_from_json(j.at("tutte"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void TutteCache::store(const std::string& key, const BivarPoly& value) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw InputError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const fs::path target = path_for(key);
  std::random_device rd;
  const fs::path tmp = target.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write cache file " + tmp.string());
    json j = {{"key", hex_bytes(key)}, {"tutte", poly_to_json(value)}};
    out << j.dump() << "\n";
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw InputError("cannot publish cache file " + target.string());
  }
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("STARCONFIG_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

}  // namespace starconf
