#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "starconf/errors.hpp"
#include "starconf/tutte.hpp"
#include "support/oracles.hpp"

using namespace starconf;

namespace {

BivarPoly poly(std::initializer_list<std::tuple<unsigned, unsigned, long>> terms) {
  BivarPoly p;
  for (const auto& [i, j, c] : terms) p.add_term(i, j, c);
  return p;
}

VectorMatroid matroid_of(const oracle::IntMatrix& g, std::int64_t p) {
  return VectorMatroid(ExactMatrix::from_rows(FieldSpec::prime_field(p), g));
}

const oracle::IntMatrix kB3 = {{1, 0, 0, 1, 1, 1, 1, 0, 0}, {0, 1, 0, 1, -1, 0, 0, 1, 1}, {0, 0, 1, 0, 0, 1, -1, 1, -1}};

}  // namespace

TEST_CASE("e0 Tutte polynomial") {
  const VectorMatroid m = matroid_of({{1, 0, 1}, {0, 1, 1}}, 2);
  const BivarPoly t = tutte_subset_sum(m);
  CHECK(t.to_string() == "x^2 + x + y");
  CHECK(tutte_deletion_contraction(m) == t);
  const ShiftedCoeffs s = whitney_shift(t);
  CHECK(s.poly.to_string() == "x^2 + 3x + y + 2");
  CHECK(s.p == std::vector<int>{1, 0, 0});
  CHECK(s.rank == 2);
}

TEST_CASE("B3 shifted coefficients") {
  const BivarPoly t = tutte_deletion_contraction(matroid_of(kB3, 5));
  const BivarPoly expected = poly({{0, 6, 1}, {0, 5, 3}, {0, 4, 6}, {3, 0, 1}, {1, 2, 3}, {0, 3, 10}, {2, 0, 9},
                                   {1, 1, 10}, {0, 2, 15}, {1, 0, 23}, {0, 1, 18}, {0, 0, 15}});
  CHECK(whitney_shift(t).poly == expected);
  CHECK(tutte_subset_sum(matroid_of(kB3, 5)) == t);
}

TEST_CASE("uniform matroid U(2,4)") {
  const BivarPoly t = tutte_deletion_contraction(matroid_of({{1, 0, 1, 1}, {0, 1, 1, 2}}, 3));
  CHECK(t == poly({{2, 0, 1}, {1, 0, 2}, {0, 1, 2}, {0, 2, 1}}));
}

TEST_CASE("evaluations count bases and subsets") {
  std::mt19937_64 rng(21);
  const auto g = oracle::random_code(rng, 3, 7, 3);
  const BivarPoly t = tutte_deletion_contraction(matroid_of(g, 3));
  std::size_t bases = 0;
  for (std::uint64_t s = 0; s < 128; ++s)
    if (__builtin_popcountll(s) == 3 && oracle::column_rank(g, s, 3) == 3) ++bases;
  CHECK(evaluate(t, 1, 1) == bases);
  CHECK(evaluate(t, 2, 2) == 128);
}

TEST_CASE("engines agree with the naive subset sum") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const std::int64_t p = std::array<std::int64_t, 3>{2, 3, 5}[trial % 3];
    const std::size_t k = 1 + trial % 4, n = k + trial % 6;
    const auto g = oracle::random_code(rng, k, n, p);
    const BivarPoly naive = oracle::naive_tutte(g, p);
    const VectorMatroid m = matroid_of(g, p);
    CHECK(tutte_subset_sum(m, {Execution::serial}) == naive);
    CHECK(tutte_subset_sum(m, {Execution::parallel}) == naive);
    CHECK(tutte_deletion_contraction(m) == naive);
    TutteMemo memo;
    CHECK(tutte_deletion_contraction(m, {Execution::parallel, &memo}) == naive);
  }
}

TEST_CASE("serial and parallel tallies agree") {
  std::mt19937_64 rng(23);
  const auto g = oracle::random_code(rng, 4, 12, 5);
  const VectorMatroid m = matroid_of(g, 5);
  CHECK(rank_size_tally(m, Execution::serial) == rank_size_tally(m, Execution::parallel));
}

TEST_CASE("subset sum refuses ground sets above the cap") {
  CHECK_THROWS_AS(tutte_subset_sum(matroid_of(kB3, 5), {Execution::serial, 8}), CapExceeded);
}

TEST_CASE("canonical key ignores column order and scaling") {
  const FieldSpec f = FieldSpec::prime_field(5);
  const ExactMatrix a = ExactMatrix::from_rows(f, {{1, 0, 1, 2}, {0, 1, 1, 3}});
  const ExactMatrix b = ExactMatrix::from_rows(f, {{3, 2, 0, 1}, {3, 3, 1, 0}});
  CHECK(canonical_matroid_key(a) == canonical_matroid_key(b));
  const ExactMatrix c = ExactMatrix::from_rows(f, {{1, 0, 1, 1}, {0, 1, 1, 1}});
  CHECK(canonical_matroid_key(a) != canonical_matroid_key(c));
}

TEST_CASE("memo is reused across calls") {
  TutteMemo memo;
  const VectorMatroid m = matroid_of(kB3, 5);
  const BivarPoly first = tutte_deletion_contraction(m, {Execution::serial, &memo});
  const std::size_t entries = memo.size();
  CHECK(entries > 0);
  CHECK(tutte_deletion_contraction(m, {Execution::serial, &memo}) == first);
  CHECK(memo.size() == entries);
  CHECK(memo.hits() > 0);
}

TEST_CASE("loops and coloops factor out") {
  const VectorMatroid m = matroid_of({{1, 0, 0, 1}, {0, 1, 0, 0}}, 3);
  // Columns 0 and 3 parallel, 1 a coloop, 2 a loop.
  CHECK(tutte_deletion_contraction(m) == poly({{2, 1, 1}, {1, 2, 1}}));
  CHECK(tutte_subset_sum(m) == tutte_deletion_contraction(m));
}

TEST_CASE("one-element and free matroids") {
  CHECK(tutte_subset_sum(matroid_of({{1}}, 2)).to_string() == "x");
  CHECK(tutte_subset_sum(matroid_of({{0}}, 2)).to_string() == "y");
  CHECK(tutte_deletion_contraction(matroid_of({{0}}, 2)).to_string() == "y");
  CHECK(tutte_subset_sum(matroid_of({{1, 1}}, 3)) == poly({{1, 0, 1}, {0, 1, 1}}));
  CHECK(tutte_deletion_contraction(matroid_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 5)) == poly({{3, 0, 1}}));
  CHECK(whitney_shift(BivarPoly::constant(1)).poly == BivarPoly::constant(1));
}

TEST_CASE("B3 row maxima and e0 evaluations") {
  CHECK(whitney_shift(tutte_deletion_contraction(matroid_of(kB3, 5))).p == std::vector<int>{6, 2, 0, 0});
  const BivarPoly e0 = tutte_deletion_contraction(matroid_of({{1, 0, 1}, {0, 1, 1}}, 2));
  CHECK(evaluate(e0, 1, 1) == 3);
  CHECK(evaluate(e0, 2, 1) == 7);
  CHECK(evaluate(e0, 2, 2) == 8);
}
