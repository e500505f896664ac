#ifndef STARCONF_TUTTE_HPP
#define STARCONF_TUTTE_HPP

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "starconf/bivar_poly.hpp"
#include "starconf/matroid.hpp"
#include "starconf/parallel.hpp"

namespace starconf {

/// Coefficients c[r][j] of T(x+1, y) together with p_r = max{ j : c[r][j] != 0 }.
struct ShiftedCoeffs {
  BivarPoly poly;          // T(x+1, y)
  std::vector<int> p;      // index r = 0..rank; -1 if row r is empty
  std::size_t rank = 0;    // x-degree of T, i.e. r(M)

  mpz_class c(long r, long j) const {
    if (r < 0 || j < 0) return 0;
    return poly.coeff(static_cast<unsigned>(r), static_cast<unsigned>(j));
  }
};

/// x -> x + 1 by binomial expansion, then reads off every p_r.
ShiftedCoeffs whitney_shift(const BivarPoly& t);

/// table[r][s] = #{ I : r(I) = r, |I| = s }.
using RankSizeTally = std::vector<std::vector<std::uint64_t>>;

RankSizeTally rank_size_tally(const VectorMatroid& m, Execution exec = Execution::parallel);
BivarPoly tutte_from_tally(const RankSizeTally& tally, std::size_t full_rank);

struct SubsetSumOptions {
  Execution exec = Execution::parallel;
  std::size_t cap = kDefaultExhaustiveCap;
};

/// Sum over all 2^n subsets of (x-1)^{k-r(I)} (y-1)^{|I|-r(I)}. Throws
/// CapExceeded when n > options.cap.
BivarPoly tutte_subset_sum(const VectorMatroid& m, const SubsetSumOptions& options = {});

/// Thread-safe memo for deletion-contraction, keyed by canonical minor bytes.
class TutteMemo {
 public:
  std::optional<BivarPoly> find(const std::string& key) const;
  void insert(const std::string& key, const BivarPoly& value);
  std::size_t size() const;
  std::uint64_t hits() const { return hits_.load(); }

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::string, BivarPoly> map;
  };
  std::array<Shard, kShards> shards_;
  mutable std::atomic<std::uint64_t> hits_{0};
};

struct DeletionContractionOptions {
  Execution exec = Execution::serial;
  /// Shared memo; a private one is used when null.
  TutteMemo* memo = nullptr;
  /// Recursion depth down to which branches are spawned as OpenMP tasks.
  int task_depth = 8;
};

/// Strips loops (factor y) and coloops (factor x), then recurses on the
/// lowest-index remaining element: T(M) = T(M \ e) + T(M / e).
BivarPoly tutte_deletion_contraction(const VectorMatroid& m,
                                     const DeletionContractionOptions& options = {});

/// Canonical byte string of a matrix's column matroid: RREF with zero rows
/// dropped, columns scaled to a leading 1 and sorted (multiplicities kept),
/// loop count appended. Equal keys imply isomorphic matroids.
std::string canonical_matroid_key(const ExactMatrix& m);

}  // namespace starconf

#endif  // STARCONF_TUTTE_HPP
