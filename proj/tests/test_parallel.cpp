#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "starconf/parallel.hpp"
#include "starconf/tutte.hpp"
#include "support/oracles.hpp"

using namespace starconf;

TEST_CASE("thread count can be set") {
  const int before = thread_count();
  CHECK(before >= 1);
  set_thread_count(2);
#ifdef _OPENMP
  CHECK(thread_count() == 2);
#endif
  set_thread_count(before);
}

TEST_CASE("parallel kernels match their serial references") {
  std::mt19937_64 rng(71);
  for (int threads : {1, 2, 4}) {
    set_thread_count(threads);
    for (int trial = 0; trial < 6; ++trial) {
      const std::int64_t p = std::array<std::int64_t, 3>{2, 3, 5}[trial % 3];
      const auto g = oracle::random_code(rng, 3 + trial % 2, 10 + trial % 3, p);
      const LinearCode c = oracle::to_code(g, p);
      const VectorMatroid& m = c.matroid();
      CHECK(rank_size_tally(m, Execution::serial) == rank_size_tally(m, Execution::parallel));
      CHECK(tutte_subset_sum(m, {Execution::serial}) == tutte_subset_sum(m, {Execution::parallel}));
      TutteMemo a, b;
      CHECK(tutte_deletion_contraction(m, {Execution::serial, &a}) ==
            tutte_deletion_contraction(m, {Execution::parallel, &b, 4}));
      CHECK(hierarchy_bruteforce(m, Execution::serial) == hierarchy_bruteforce(m, Execution::parallel));
      CHECK(hierarchy_from_dual_rank(m, Execution::serial) == hierarchy_from_dual_rank(m, Execution::parallel));
    }
  }
}
