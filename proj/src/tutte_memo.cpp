#include <algorithm>
#include <cstring>
#include <functional>
#include <numeric>

#include "starconf/tutte.hpp"

namespace starconf {

std::optional<BivarPoly> TutteMemo::find(const std::string& key) const {
  const auto& shard = shards_[std::hash<std::string>{}(key) % kShards];
  std::lock_guard lock(shard.mu);
  auto it = shard.map.find(key);
  if (it == shard.map.end()) return std::nullopt;
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void TutteMemo::insert(const std::string& key, const BivarPoly& value) {
  auto& shard = shards_[std::hash<std::string>{}(key) % kShards];
  std::lock_guard lock(shard.mu);
  shard.map.insert_or_assign(key, value);
}

std::size_t TutteMemo::size() const {
  std::size_t total = 0;
  for (const auto& shard : shards_) {
    std::lock_guard lock(shard.mu);
    total += shard.map.size();
  }
  return total;
}

namespace {

template <class F>
struct Minor {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<typename F::value_type> a;  // row-major
};

void append_value(std::string& key, std::uint64_t v) {
  char buf[sizeof v];
  std::memcpy(buf, &v, sizeof v);
  key.append(buf, sizeof v);
}

void append_value(std::string& key, const mpq_class& v) {
  key += v.get_str();
  key += ',';
}

/// Result of splitting a minor into loops, coloops and the remaining core.
template <class F>
struct Split {
  unsigned loops = 0;
  unsigned coloops = 0;
  Minor<F> core;  // full row rank, columns normalised and sorted
  std::string key;
};

template <class F>
Split<F> split_minor(const F& f, Minor<F> m) {
  using V = typename F::value_type;
  Split<F> out;
  std::vector<std::size_t> pivots;
  const std::size_t rank = kernels::rref_in_place(f, std::span<V>(m.a), m.rows, m.cols, &pivots);

  // In RREF with full row rank, column c is a coloop iff it is a pivot column
  // whose row has no other nonzero entry.
  std::vector<bool> drop_row(rank, false);
  std::vector<bool> drop_col(m.cols, false);
  for (std::size_t c = 0; c < m.cols; ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < rank && zero; ++r) zero = f.is_zero(m.a[r * m.cols + c]);
    if (zero) {
      drop_col[c] = true;
      ++out.loops;
    }
  }
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t nonzero = 0;
    for (std::size_t c = 0; c < m.cols; ++c)
      if (!f.is_zero(m.a[r * m.cols + c])) ++nonzero;
    if (nonzero == 1) {
      drop_row[r] = true;
      drop_col[pivots[r]] = true;
      ++out.coloops;
    }
  }

  std::vector<std::vector<V>> columns;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (drop_col[c]) continue;
    std::vector<V> col;
    for (std::size_t r = 0; r < rank; ++r)
      if (!drop_row[r]) col.push_back(m.a[r * m.cols + c]);
    // Scale so the first nonzero entry is 1; scaling keeps the matroid.
    auto lead = std::find_if(col.begin(), col.end(), [&](const V& x) { return !f.is_zero(x); });
    V inv = f.inv(*lead);
    for (auto& x : col) x = f.mul(x, inv);
    columns.push_back(std::move(col));
  }
  std::sort(columns.begin(), columns.end());

  auto& core = out.core;
  core.cols = columns.size();
  core.rows = core.cols == 0 ? 0 : columns.front().size();
  core.a.assign(core.rows * core.cols, f.zero());
  for (std::size_t c = 0; c < core.cols; ++c)
    for (std::size_t r = 0; r < core.rows; ++r) core.a[r * core.cols + c] = columns[c][r];

  auto& key = out.key;
  key = f.spec().name() + ':' + std::to_string(core.rows) + 'x' + std::to_string(core.cols) + ':';
  for (const auto& x : core.a) append_value(key, x);
  return out;
}

template <class F>
Minor<F> delete_first(const Minor<F>& m) {
  Minor<F> d;
  d.rows = m.rows;
  d.cols = m.cols - 1;
  d.a.reserve(d.rows * d.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 1; c < m.cols; ++c) d.a.push_back(m.a[r * m.cols + c]);
  return d;
}

template <class F>
Minor<F> contract_first(const F& f, const Minor<F>& m) {
  std::vector<typename F::value_type> a = m.a;
  const std::size_t n = m.cols;
  std::size_t piv = 0;
  while (f.is_zero(a[piv * n])) ++piv;
  auto inv = f.inv(a[piv * n]);
  for (std::size_t c = 0; c < n; ++c) a[piv * n + c] = f.mul(a[piv * n + c], inv);
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (r == piv || f.is_zero(a[r * n])) continue;
    auto factor = a[r * n];
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = f.sub_mul(a[r * n + c], factor, a[piv * n + c]);
  }
  Minor<F> out;
  out.rows = m.rows - 1;
  out.cols = n - 1;
  out.a.reserve(out.rows * out.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (r == piv) continue;
    for (std::size_t c = 1; c < n; ++c) out.a.push_back(a[r * n + c]);
  }
  return out;
}

template <class F>
class DeletionContraction {
 public:
  DeletionContraction(const F& f, TutteMemo& memo, Execution exec, int task_depth)
      : f_(f), memo_(memo), exec_(exec), task_depth_(task_depth) {}

  BivarPoly solve(Minor<F> m, int depth) {
    Split<F> split = split_minor(f_, std::move(m));
    if (split.core.cols == 0) return BivarPoly::monomial(split.coloops, split.loops);
    if (auto hit = memo_.find(split.key)) return hit->shifted(split.coloops, split.loops);

    Minor<F> del = delete_first(split.core);
    Minor<F> con = contract_first(f_, split.core);
    BivarPoly t_del, t_con;
    if (exec_ == Execution::parallel && depth < task_depth_) {
#pragma omp task default(none) shared(t_del, del) firstprivate(depth)
      t_del = solve(std::move(del), depth + 1);
      t_con = solve(std::move(con), depth + 1);
#pragma omp taskwait
    } else {
      t_del = solve(std::move(del), depth + 1);
      t_con = solve(std::move(con), depth + 1);
    }
    t_del += t_con;
    memo_.insert(split.key, t_del);
    return t_del.shifted(split.coloops, split.loops);
  }

 private:
  F f_;
  TutteMemo& memo_;
  Execution exec_;
  int task_depth_;
};

template <class F>
Minor<F> minor_of(const ExactMatrix& m) {
  return Minor<F>{m.rows(), m.cols(), m.values<F>()};
}

}  // namespace

BivarPoly tutte_deletion_contraction(const VectorMatroid& m, const DeletionContractionOptions& options) {
  TutteMemo local;
  TutteMemo& memo = options.memo ? *options.memo : local;
  return with_field(m.matrix().spec(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    DeletionContraction<F> engine(f, memo, options.exec, options.task_depth);
    BivarPoly result;
    if (options.exec == Execution::parallel) {
#pragma omp parallel default(none) shared(engine, result, m)
#pragma omp single
      result = engine.solve(minor_of<F>(m.matrix()), 0);
    } else {
      result = engine.solve(minor_of<F>(m.matrix()), 0);
    }
    return result;
  });
}

std::string canonical_matroid_key(const ExactMatrix& m) {
  return with_field(m.spec(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    Split<F> split = split_minor(f, minor_of<F>(m));
    return split.key + "|coloops=" + std::to_string(split.coloops) + "|loops=" + std::to_string(split.loops);
  });
}

}  // namespace starconf
