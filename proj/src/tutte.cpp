#include "starconf/tutte.hpp"

#include <map>
#include <string>

#include "starconf/errors.hpp"

namespace starconf {

ShiftedCoeffs whitney_shift(const BivarPoly& t) {
  ShiftedCoeffs out;
  for (const auto& [key, c] : t.terms()) {
    const auto [i, j] = key;
    for (unsigned m = 0; m <= i; ++m) out.poly.add_term(m, j, c * binomial(i, m));
  }
  out.rank = t.x_degree();
  out.p.assign(out.rank + 1, -1);
  for (const auto& [key, c] : out.poly.terms()) {
    if (key.first <= out.rank) out.p[key.first] = std::max(out.p[key.first], static_cast<int>(key.second));
  }
  return out;
}

RankSizeTally rank_size_tally(const VectorMatroid& m, Execution exec) {
  const std::size_t n = m.size();
  const std::size_t k = m.full_rank();
  const auto total = static_cast<std::int64_t>(std::int64_t{1} << n);
  RankSizeTally tally(k + 1, std::vector<std::uint64_t>(n + 1, 0));

  if (exec == Execution::serial) {
    for (std::int64_t s = 0; s < total; ++s) {
      auto sub = static_cast<GroundSubset>(s);
      ++tally[m.rank(sub)][subset_size(sub)];
    }
    return tally;
  }

  // Each thread folds a private table; tables are summed afterwards.
#pragma omp parallel
  {
    RankSizeTally local(k + 1, std::vector<std::uint64_t>(n + 1, 0));
#pragma omp for schedule(dynamic, 4096) nowait
    for (std::int64_t s = 0; s < total; ++s) {
      auto sub = static_cast<GroundSubset>(s);
      ++local[m.rank(sub)][subset_size(sub)];
    }
#pragma omp critical(starconf_tally_merge)
    for (std::size_t r = 0; r <= k; ++r)
      for (std::size_t z = 0; z <= n; ++z) tally[r][z] += local[r][z];
  }
  return tally;
}

BivarPoly tutte_from_tally(const RankSizeTally& tally, std::size_t full_rank) {
  BivarPoly t;
  for (std::size_t r = 0; r < tally.size(); ++r) {
    for (std::size_t s = r; s < tally[r].size(); ++s) {
      if (tally[r][s] == 0) continue;
      mpz_class count(static_cast<unsigned long>(tally[r][s]));
      BivarPoly term = shifted_power(static_cast<unsigned>(full_rank - r), static_cast<unsigned>(s - r));
      for (const auto& [key, c] : term.terms()) t.add_term(key.first, key.second, c * count);
    }
  }
  return t;
}

BivarPoly tutte_subset_sum(const VectorMatroid& m, const SubsetSumOptions& options) {
  if (m.size() > options.cap)
    throw CapExceeded("subset-sum Tutte needs n <= " + std::to_string(options.cap) + ", got n = " +
                      std::to_string(m.size()));
  if (m.size() <= kEagerRankLimit) m.precompute_ranks(options.exec);
  return tutte_from_tally(rank_size_tally(m, options.exec), m.full_rank());
}

}  // namespace starconf
