#include "starconf/matroid.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace starconf {

std::vector<std::size_t> subset_elements(GroundSubset s) {
  std::vector<std::size_t> out;
  out.reserve(subset_size(s));
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

/// Dense atomic table for small ground sets, sharded hash maps beyond that.
class RankCache {
 public:
  explicit RankCache(std::size_t n) {
    if (n <= kEagerRankLimit) {
      std::size_t size = std::size_t{1} << n;
      dense_ = std::make_unique<std::atomic<std::int8_t>[]>(size);
      for (std::size_t i = 0; i < size; ++i) dense_[i].store(-1, std::memory_order_relaxed);
    }
  }

  int lookup(GroundSubset s) const {
    if (dense_) return dense_[s].load(std::memory_order_relaxed);
    auto& shard = shards_[s % kShards];
    std::lock_guard lock(shard.mu);
    auto it = shard.map.find(s);
    return it == shard.map.end() ? -1 : it->second;
  }

  void store(GroundSubset s, std::size_t r) {
    if (dense_) {
      dense_[s].store(static_cast<std::int8_t>(r), std::memory_order_relaxed);
      return;
    }
    auto& shard = shards_[s % kShards];
    std::lock_guard lock(shard.mu);
    shard.map[s] = static_cast<std::int8_t>(r);
  }

  std::atomic<bool> complete{false};

 private:
  static constexpr std::size_t kShards = 32;
  struct Shard {
    std::mutex mu;
    std::unordered_map<GroundSubset, std::int8_t> map;
  };
  std::unique_ptr<std::atomic<std::int8_t>[]> dense_;
  mutable std::array<Shard, kShards> shards_;
};

namespace {

template <class F>
std::size_t rank_of_subset(const F& f, const ExactMatrix& m, GroundSubset s) {
  using V = typename F::value_type;
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  const std::size_t w = subset_size(s);
  if (w == 0 || k == 0) return 0;
  thread_local std::vector<V> buf;
  buf.assign(k * w, f.zero());
  const auto& v = m.values<F>();
  std::size_t j = 0;
  for (GroundSubset t = s; t; t &= t - 1, ++j) {
    auto c = static_cast<std::size_t>(std::countr_zero(t));
    for (std::size_t r = 0; r < k; ++r) buf[r * w + j] = v[r * n + c];
  }
  return kernels::rank_in_place(f, std::span<V>(buf.data(), buf.size()), k, w);
}

}  // namespace

VectorMatroid::VectorMatroid(ExactMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.cols() > kMaxGroundSize)
    throw std::invalid_argument("ground set larger than " + std::to_string(kMaxGroundSize));
  cache_ = std::make_shared<RankCache>(matrix_.cols());
  full_rank_ = rank(ground());
}

std::size_t VectorMatroid::rank_uncached(GroundSubset s) const {
  check_subset(s);
  return with_field(matrix_.spec(), [&](const auto& f) { return rank_of_subset(f, matrix_, s); });
}

std::size_t VectorMatroid::rank(GroundSubset s) const {
  check_subset(s);
  int cached = cache_->lookup(s);
  if (cached >= 0) return static_cast<std::size_t>(cached);
  std::size_t r = rank_uncached(s);
  cache_->store(s, r);
  return r;
}

Flat VectorMatroid::closure(GroundSubset s) const {
  const std::size_t r = rank(s);
  GroundSubset cl = s;
  for (std::size_t j = 0; j < size(); ++j) {
    GroundSubset bit = GroundSubset{1} << j;
    if (!(s & bit) && rank(s | bit) == r) cl |= bit;
  }
  return Flat{cl, r};
}

bool VectorMatroid::is_loop(std::size_t i) const {
  check_element(i);
  return matrix_.column_is_zero(i);
}

bool VectorMatroid::is_coloop(std::size_t i) const {
  check_element(i);
  return rank(ground() & ~(GroundSubset{1} << i)) + 1 == full_rank_;
}

VectorMatroid VectorMatroid::deleted(std::size_t i) const {
  check_element(i);
  return VectorMatroid(matrix_.remove_column(i));
}

VectorMatroid VectorMatroid::contracted(std::size_t i) const {
  check_element(i);
  if (is_loop(i)) return deleted(i);
  return with_field(matrix_.spec(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    const std::size_t k = matrix_.rows();
    const std::size_t n = matrix_.cols();
    std::vector<typename F::value_type> a = matrix_.values<F>();
    std::size_t piv = 0;
    while (f.is_zero(a[piv * n + i])) ++piv;
    auto inv = f.inv(a[piv * n + i]);
    for (std::size_t c = 0; c < n; ++c) a[piv * n + c] = f.mul(a[piv * n + c], inv);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == piv || f.is_zero(a[r * n + i])) continue;
      auto factor = a[r * n + i];
      for (std::size_t c = 0; c < n; ++c) a[r * n + c] = f.sub_mul(a[r * n + c], factor, a[piv * n + c]);
    }
    std::vector<typename F::value_type> out;
    out.reserve((k - 1) * (n - 1));
    for (std::size_t r = 0; r < k; ++r) {
      if (r == piv) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (c != i) out.push_back(a[r * n + c]);
    }
    return VectorMatroid(ExactMatrix::from_values(f, k - 1, n - 1, std::move(out)));
  });
}

std::size_t VectorMatroid::dual_rank(GroundSubset s) const {
  check_subset(s);
  return rank(ground() & ~s) + subset_size(s) - full_rank_;
}

std::vector<Flat> VectorMatroid::flats_of_rank(std::size_t s) const {
  const std::size_t n = size();
  if (s > full_rank_) return {};
  std::set<GroundSubset> seen;
  if (s == 0) {
    seen.insert(closure(0).members);
  } else if (s <= n) {
    // Gosper's hack over s-subsets; only independent ones generate new flats.
    GroundSubset sub = full_subset(s);
    const GroundSubset limit = GroundSubset{1} << n;
    while (sub < limit) {
      if (rank(sub) == s) {
        Flat fl = closure(sub);
        seen.insert(fl.members);
      }
      GroundSubset c = sub & -sub;
      GroundSubset r = sub + c;
      if (r == 0) break;
      sub = (((r ^ sub) >> 2) / c) | r;
    }
  }
  std::vector<Flat> out;
  out.reserve(seen.size());
  for (auto m : seen) out.push_back(Flat{m, s});
  return out;
}

void VectorMatroid::precompute_ranks(Execution exec) const {
  const std::size_t n = size();
  if (n > kEagerRankLimit)
    throw std::length_error("eager rank precompute is limited to n <= " + std::to_string(kEagerRankLimit));
  if (cache_->complete) return;
  const auto total = static_cast<std::int64_t>(std::int64_t{1} << n);
  if (exec == Execution::serial) {
    for (std::int64_t s = 0; s < total; ++s) rank(static_cast<GroundSubset>(s));
  } else {
#pragma omp parallel for schedule(dynamic, 1024)
    for (std::int64_t s = 0; s < total; ++s) rank(static_cast<GroundSubset>(s));
  }
  cache_->complete = true;
}

bool VectorMatroid::ranks_precomputed() const { return cache_->complete; }

void VectorMatroid::check_element(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("element " + std::to_string(i) + " outside ground set");
}

void VectorMatroid::check_subset(GroundSubset s) const {
  if (s & ~ground()) throw std::out_of_range("subset not contained in the ground set");
}

}  // namespace starconf
