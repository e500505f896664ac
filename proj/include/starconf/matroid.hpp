#ifndef STARCONF_MATROID_HPP
#define STARCONF_MATROID_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <vector>

#include "starconf/exact_arith.hpp"
#include "starconf/parallel.hpp"

namespace starconf {

/// Subset of the ground set: bit i is element i (0-based; the CLI prints i+1).
using GroundSubset = std::uint64_t;

constexpr std::size_t kMaxGroundSize = 63;
/// Default ceiling for anything that walks all 2^n subsets.
constexpr std::size_t kDefaultExhaustiveCap = 24;
/// precompute_ranks() refuses anything larger.
constexpr std::size_t kEagerRankLimit = 20;

inline GroundSubset subset_of(std::initializer_list<std::size_t> elems) {
  GroundSubset s = 0;
  for (auto e : elems) s |= GroundSubset{1} << e;
  return s;
}
inline GroundSubset full_subset(std::size_t n) {
  return n == 0 ? 0 : (~GroundSubset{0} >> (64 - n));
}
inline std::size_t subset_size(GroundSubset s) { return static_cast<std::size_t>(std::popcount(s)); }
std::vector<std::size_t> subset_elements(GroundSubset s);

struct Flat {
  GroundSubset members = 0;
  std::size_t rank = 0;
  friend bool operator==(const Flat&, const Flat&) = default;
};

class RankCache;

/// Column matroid of a matrix. Ranks are memoised in a cache shared by all
/// copies; concurrent lookups are safe (racing writers store equal values).
class VectorMatroid {
 public:
  explicit VectorMatroid(ExactMatrix matrix);

  const ExactMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.cols(); }
  std::size_t full_rank() const { return full_rank_; }
  GroundSubset ground() const { return full_subset(size()); }

  std::size_t rank(GroundSubset s) const;
  /// Bypasses the cache; used to audit it.
  std::size_t rank_uncached(GroundSubset s) const;

  Flat closure(GroundSubset s) const;
  bool is_loop(std::size_t i) const;
  bool is_coloop(std::size_t i) const;

  VectorMatroid deleted(std::size_t i) const;
  /// Pivots column i to a unit vector and drops that row and column. A loop
  /// is contracted as a deletion.
  VectorMatroid contracted(std::size_t i) const;

  /// r*(I) = r([n] \ I) + |I| - r([n])
  std::size_t dual_rank(GroundSubset s) const;

  /// All flats of rank s sorted by bitmask. Each is the closure of an
  /// independent s-subset.
  std::vector<Flat> flats_of_rank(std::size_t s) const;

  /// Fills the cache for all 2^n subsets (n <= kEagerRankLimit).
  void precompute_ranks(Execution exec = Execution::parallel) const;
  bool ranks_precomputed() const;

 private:
  void check_element(std::size_t i) const;
  void check_subset(GroundSubset s) const;

  ExactMatrix matrix_;
  std::size_t full_rank_ = 0;
  std::shared_ptr<RankCache> cache_;
};

}  // namespace starconf

#endif  // STARCONF_MATROID_HPP
