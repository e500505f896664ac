#ifndef STARCONF_IO_HPP
#define STARCONF_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "starconf/bivar_poly.hpp"
#include "starconf/code_invariants.hpp"
#include "starconf/exact_arith.hpp"
#include "starconf/star_config.hpp"
#include "starconf/tutte.hpp"

namespace starconf {

using json = nlohmann::ordered_json;

/// Input file:
///   field gf <p> | field q
///   size <k> <n>
///   k rows of n entries (integers or a/b)
///   [labels <n names>]
/// Blank lines and text after '#' are ignored.
struct InputDocument {
  FieldSpec field;
  std::size_t k = 0;
  std::size_t n = 0;
  ExactMatrix matrix;
  std::vector<std::string> labels;

  /// Throws InputError (zero column, rank deficiency).
  LinearCode to_code() const;
};

/// Throws InputError with a line number.
InputDocument parse_input(std::string_view text);
InputDocument read_input_file(const std::filesystem::path& path);
std::string format_input(const InputDocument& doc);

/// "e0" (the [3,2] code over GF(2)) or "b3" (the B3 root system over GF(5)).
InputDocument builtin_example(std::string_view name);
std::vector<std::string> builtin_example_names();

json poly_to_json(const BivarPoly& p);
/// Throws InputError on malformed input.
BivarPoly poly_from_json(const json& j);

json shifted_to_json(const ShiftedCoeffs& s);
json hierarchy_to_json(const WeightHierarchy& h);
WeightHierarchy hierarchy_from_json(const json& j);

/// Flats are written 1-based.
json profile_to_json(const IdealProfile& p);
IdealProfile profile_from_json(const json& j);

json code_to_json(const LinearCode& code);

/// Content-addressed store of Tutte polynomials, one file per canonical
/// matroid key. Writes go to a temporary file that is then renamed.
class TutteCache {
 public:
  explicit TutteCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;
  std::optional<BivarPoly> load(const std::string& key) const;
  void store(const std::string& key, const BivarPoly& value) const;

 private:
  std::filesystem::path dir_;
};

/// --cache-dir beats STARCONFIG_CACHE_DIR; nothing when neither is set.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

std::string fnv1a_hex(std::string_view bytes);

}  // namespace starconf

#endif  // STARCONF_IO_HPP
