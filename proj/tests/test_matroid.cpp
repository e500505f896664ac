#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "starconf/matroid.hpp"
#include "support/oracles.hpp"

using namespace starconf;

namespace {

VectorMatroid matroid_of(const oracle::IntMatrix& g, std::int64_t p) {
  return VectorMatroid(ExactMatrix::from_rows(FieldSpec::prime_field(p), g));
}

}  // namespace

TEST_CASE("ranks match a naive elimination on every subset") {
  std::mt19937_64 rng(5);
  for (std::int64_t p : {2, 3, 5}) {
    const auto g = oracle::random_code(rng, 3, 8, p);
    const VectorMatroid m = matroid_of(g, p);
    for (GroundSubset s = 0; s < (GroundSubset{1} << 8); ++s) CHECK(m.rank(s) == oracle::column_rank(g, s, p));
  }
}

TEST_CASE("loops and coloops") {
  const VectorMatroid m = matroid_of({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 0, 0}}, 3);
  CHECK(m.full_rank() == 2);
  CHECK(m.is_loop(2));
  CHECK_FALSE(m.is_loop(0));
  const VectorMatroid c = matroid_of({{1, 0, 0}, {0, 1, 1}}, 5);
  CHECK(c.is_coloop(0));
  CHECK_FALSE(c.is_coloop(1));
}

TEST_CASE("closure of the e0 columns") {
  const VectorMatroid m = matroid_of({{1, 0, 1}, {0, 1, 1}}, 2);
  CHECK(m.closure(subset_of({0})).members == subset_of({0}));
  CHECK(m.closure(subset_of({0, 1})).members == full_subset(3));
  CHECK(m.closure(0).members == 0);
}

TEST_CASE("deletion and contraction ranks") {
  std::mt19937_64 rng(8);
  const auto g = oracle::random_code(rng, 3, 6, 3);
  const VectorMatroid m = matroid_of(g, 3);
  const VectorMatroid del = m.deleted(2);
  const VectorMatroid con = m.contracted(2);
  CHECK(del.size() == 5);
  CHECK(con.size() == 5);
  for (GroundSubset s = 0; s < (GroundSubset{1} << 5); ++s) {
    GroundSubset lifted = 0;
    for (auto e : subset_elements(s)) lifted |= GroundSubset{1} << (e < 2 ? e : e + 1);
    CHECK(del.rank(s) == m.rank(lifted));
    CHECK(con.rank(s) == m.rank(lifted | subset_of({2})) - m.rank(subset_of({2})));
  }
}

TEST_CASE("dual rank formula") {
  std::mt19937_64 rng(9);
  const auto g = oracle::random_code(rng, 3, 7, 5);
  const VectorMatroid m = matroid_of(g, 5);
  for (GroundSubset s = 0; s < (GroundSubset{1} << 7); ++s) {
    const std::size_t rest = oracle::column_rank(g, full_subset(7) & ~s, 5);
    CHECK(m.dual_rank(s) == rest + subset_size(s) - 3);
  }
}

TEST_CASE("flats of each rank are exactly the closed sets") {
  std::mt19937_64 rng(10);
  for (std::int64_t p : {2, 3}) {
    const auto g = oracle::random_code(rng, 3, 7, p);
    const VectorMatroid m = matroid_of(g, p);
    for (std::size_t r = 0; r <= 3; ++r) {
      std::set<GroundSubset> expected;
      for (GroundSubset s = 0; s < (GroundSubset{1} << 7); ++s) {
        if (oracle::column_rank(g, s, p) != r) continue;
        bool closed = true;
        for (std::size_t e = 0; e < 7 && closed; ++e)
          if (!(s >> e & 1) && oracle::column_rank(g, s | (GroundSubset{1} << e), p) == r) closed = false;
        if (closed) expected.insert(s);
      }
      std::set<GroundSubset> got;
      for (const auto& f : m.flats_of_rank(r)) {
        CHECK(f.rank == r);
        got.insert(f.members);
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("serial and parallel rank precompute agree") {
  std::mt19937_64 rng(12);
  const auto g = oracle::random_code(rng, 4, 12, 3);
  const VectorMatroid a = matroid_of(g, 3), b = matroid_of(g, 3);
  a.precompute_ranks(Execution::serial);
  b.precompute_ranks(Execution::parallel);
  for (GroundSubset s = 0; s < (GroundSubset{1} << 12); s += 7) CHECK(a.rank(s) == b.rank(s));
}

TEST_CASE("subset helpers") {
  CHECK(subset_of({0, 3}) == 9);
  CHECK(full_subset(4) == 15);
  CHECK(subset_size(full_subset(63)) == 63);
  CHECK(subset_elements(subset_of({1, 4})) == std::vector<std::size_t>{1, 4});
}

TEST_CASE("e0 and B3 fixed instances") {
  const VectorMatroid e0 = matroid_of({{1, 0, 1}, {0, 1, 1}}, 2);
  const VectorMatroid b3 = matroid_of(
      {{1, 0, 0, 1, 1, 1, 1, 0, 0}, {0, 1, 0, 1, -1, 0, 0, 1, 1}, {0, 0, 1, 0, 0, 1, -1, 1, -1}}, 5);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(e0.rank(subset_of({i, (i + 1) % 3})) == 2);
    CHECK_FALSE(e0.is_loop(i));
    CHECK_FALSE(e0.is_coloop(i));
  }
  CHECK(e0.rank(0) == 0);
  CHECK(b3.rank(subset_of({0, 1, 3, 4})) == 2);
  CHECK(b3.closure(subset_of({0, 1})).members == subset_of({0, 1, 3, 4}));
  CHECK(matroid_of({{1}}, 3).is_coloop(0));

  const VectorMatroid con = e0.contracted(2);
  CHECK(con.size() == 2);
  CHECK(con.full_rank() == 1);
  CHECK(con.rank(subset_of({0, 1})) == 1);
  CHECK(con.rank(subset_of({0})) == 1);
  const VectorMatroid del = e0.deleted(2);
  CHECK(del.is_coloop(0));
  CHECK(del.is_coloop(1));

  CHECK(e0.dual_rank(0) == 0);
  CHECK(e0.dual_rank(full_subset(3)) == 1);
  CHECK(e0.dual_rank(subset_of({2})) == 1);

  std::vector<GroundSubset> rank1;
  for (const auto& f : e0.flats_of_rank(1)) rank1.push_back(f.members);
  CHECK(rank1 == std::vector<GroundSubset>{1, 2, 4});
  REQUIRE(b3.flats_of_rank(3).size() == 1);
  CHECK(b3.flats_of_rank(3)[0].members == full_subset(9));
  std::vector<GroundSubset> four;
  for (const auto& f : b3.flats_of_rank(2))
    if (subset_size(f.members) == 4) four.push_back(f.members);
  CHECK(four == std::vector<GroundSubset>{subset_of({0, 1, 3, 4}), subset_of({0, 2, 5, 6}), subset_of({1, 2, 7, 8})});
}

TEST_CASE("closure agrees with the kernel description") {
  std::mt19937_64 rng(17);
  const std::int64_t p = 3;
  const auto g = oracle::random_code(rng, 3, 7, p);
  const ExactMatrix mat = ExactMatrix::from_rows(FieldSpec::prime_field(p), g);
  const VectorMatroid m(mat);
  for (GroundSubset s = 0; s < (GroundSubset{1} << 7); ++s) {
    const auto kernel = left_kernel_basis(mat, subset_elements(s));
    GroundSubset same = 0;
    for (std::size_t j = 0; j < 7; ++j) {
      bool kills = true;
      for (const auto& v : kernel) {
        std::int64_t dot = 0;
        for (std::size_t i = 0; i < 3; ++i) dot += static_cast<std::int64_t>(v[i].residue()) * g[i][j];
        kills = kills && oracle::mod(dot, p) == 0;
      }
      if (kills) same |= GroundSubset{1} << j;
    }
    CHECK(m.closure(s).members == same);
  }
}
