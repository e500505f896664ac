#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "starconf/cli.hpp"
#include "starconf/errors.hpp"
#include "starconf/io.hpp"
#include "starconf/report.hpp"
#include "starconf/tutte.hpp"

using namespace starconf;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("starconf_test_io_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse the e0 matrix") {
  const InputDocument doc = parse_input("# e0\nfield gf 2\n\nsize 2 3\n1 0 1\n0 1 1  # second row\n");
  CHECK(doc.k == 2);
  CHECK(doc.n == 3);
  CHECK(doc.field.name() == "GF(2)");
  const LinearCode c = doc.to_code();
  CHECK(c.labels() == std::vector<std::string>{"x1", "x2", "x1 + x2"});
}

TEST_CASE("rational entries and labels") {
  const InputDocument doc = parse_input("field q\nsize 2 3\n1 0 1/2\n0 1 -3/4\nlabels a b c\n");
  CHECK(doc.matrix.at(0, 2).rational() == mpq_class(1, 2));
  CHECK(doc.labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(parse_input(format_input(doc)).matrix == doc.matrix);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_input("field gf x\nsize 1 1\n1\n"), doctest::Contains("line 1"), InputError);
  CHECK_THROWS_WITH_AS(parse_input("field gf 4\nsize 1 1\n1\n"), doctest::Contains("not prime"), InputError);
  CHECK_THROWS_WITH_AS(parse_input("fields q\n"), doctest::Contains("line 1"), InputError);
  CHECK_THROWS_WITH_AS(parse_input("field q\nsize 2 3\n1 0 1\n0 1\n"), doctest::Contains("line 4: expected 3 entries"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_input("field q\nsize 2 3\n1 0 1\n"), doctest::Contains("matrix rows"), InputError);
  CHECK_THROWS_WITH_AS(parse_input("field gf 3\nsize 2 3\n1 0 0\n0 1 0\n"), doctest::Contains("column 3"), InputError);
  CHECK_THROWS_WITH_AS(parse_input("field gf 3\nsize 2 3\n1 0 0\n0 1 0\n"), doctest::Contains("no loops"), InputError);
  CHECK_THROWS_WITH_AS(parse_input("field gf 3\nsize 2 2\n1 1\n2 2\n"), doctest::Contains("rank(G) = k"), InputError);
  CHECK_THROWS_WITH_AS(parse_input("field gf 3\nsize 1 2\n1 1/3\n"), doctest::Contains("line 3"), InputError);
  CHECK_THROWS_WITH_AS(parse_input("field q\nsize 1 2\n1 1\nlabels a\n"), doctest::Contains("labels"), InputError);
  CHECK_THROWS_WITH_AS(parse_input("field q\nsize 1 2\n1 1\nextra\n"), doctest::Contains("unexpected"), InputError);
  CHECK_THROWS_AS(parse_input(""), InputError);
}

TEST_CASE("built-in examples") {
  const LinearCode e0 = builtin_example("e0").to_code();
  CHECK(e0.n() == 3);
  CHECK(e0.field().name() == "GF(2)");
  const LinearCode b3 = builtin_example("b3").to_code();
  CHECK(b3.n() == 9);
  CHECK(b3.k() == 3);
  CHECK(b3.field().name() == "GF(5)");
  CHECK(b3.matrix().at(1, 4).residue() == 4);
  CHECK_THROWS_AS(builtin_example("b4"), InputError);
}

TEST_CASE("polynomial and profile JSON round trips") {
  BivarPoly p;
  p.add_term(2, 0, 1);
  p.add_term(0, 1, mpz_class("123456789012345678901234567890"));
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK_THROWS_AS(poly_from_json(json::parse(R"({"terms":[{"x":1}]})")), InputError);

  RunOptions o;
  o.example = "b3";
  for (const auto& prof : run_command("primes", o).profiles) CHECK(profile_from_json(profile_to_json(prof)) == prof);
}

TEST_CASE("report JSON round trips for every subcommand") {
  RunOptions o;
  o.example = "e0";
  for (const auto& sub : subcommand_names()) {
    const RunReport r = run_command(sub, o);
    const json j = report_to_json(r);
    CHECK(report_to_json(report_from_json(j)) == j);
    CHECK(report_to_json(report_from_json(json::parse(j.dump()))) == j);
    CHECK_FALSE(render_table(j).empty());
  }
}

TEST_CASE("conjecture JSON round trip") {
  RunOptions o;
  o.example = "e0";
  const json block = run_command("conjecture", o).details.at("conjecture");
  CHECK(conjecture_to_json(conjecture_from_json(block)) == block);
}

TEST_CASE("fnv1a") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("tutte cache stores and reloads") {
  const fs::path dir = scratch_dir("cache");
  const TutteCache cache(dir);
  const LinearCode c = builtin_example("b3").to_code();
  const std::string key = canonical_matroid_key(c.matrix());
  CHECK_FALSE(cache.load(key).has_value());
  const BivarPoly t = tutte_deletion_contraction(c.matroid());
  cache.store(key, t);
  CHECK(fs::exists(cache.path_for(key)));
  CHECK(cache.load(key) == t);
  CHECK_FALSE(cache.load(key + "x").has_value());
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  fs::remove_all(dir);
}

TEST_CASE("corrupt cache files are ignored") {
  const fs::path dir = scratch_dir("corrupt");
  const TutteCache cache(dir);
  fs::create_directories(dir);
  std::ofstream(cache.path_for("k")) << "{not json";
  CHECK_FALSE(cache.load("k").has_value());
  fs::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  ::unsetenv("STARCONFIG_CACHE_DIR");
  CHECK_FALSE(resolve_cache_dir(std::nullopt).has_value());
  ::setenv("STARCONFIG_CACHE_DIR", "/tmp/from_env", 1);
  CHECK(resolve_cache_dir(std::nullopt) == fs::path("/tmp/from_env"));
  CHECK(resolve_cache_dir(std::string("/tmp/from_flag")) == fs::path("/tmp/from_flag"));
  ::unsetenv("STARCONFIG_CACHE_DIR");
}

TEST_CASE("cache on and off give identical reports") {
  const fs::path dir = scratch_dir("identical");
  RunOptions off;
  off.example = "b3";
  off.no_cache = true;
  RunOptions on = off;
  on.no_cache = false;
  on.cache_dir = dir.string();
  const std::string plain = report_to_json(run_command("profile", off)).dump();
  CHECK(report_to_json(run_command("profile", on)).dump() == plain);
  CHECK(report_to_json(run_command("profile", on)).dump() == plain);
  CHECK_FALSE(fs::is_empty(dir));
  fs::remove_all(dir);
}
