#ifndef STARCONF_GRADED_HPP
#define STARCONF_GRADED_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "starconf/exact_arith.hpp"

namespace starconf {

/// Monomials of K[x_1..x_k] packed eight bits per variable, x_1 in the top
/// byte, so that numeric order on equal degree is lex order with x_1 largest.
/// Index 0 of every degree is x_1^t; larger index means smaller monomial.
using PackedMonomial = std::uint64_t;

constexpr std::size_t kMaxOracleVars = 8;
constexpr unsigned kMaxOracleDegree = 250;

class MonomialTable {
 public:
  /// Throws std::invalid_argument unless 1 <= nvars <= kMaxOracleVars.
  explicit MonomialTable(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  /// Builds degrees 0..t. Throws std::invalid_argument past kMaxOracleDegree.
  void ensure(unsigned t);
  std::size_t count(unsigned t) const { return degrees_.at(t).mons.size(); }
  const std::vector<PackedMonomial>& monomials(unsigned t) const { return degrees_.at(t).mons; }
  std::uint32_t index_of(unsigned t, PackedMonomial m) const { return degrees_.at(t).index.at(m); }
  /// Index in degree t + 1 of x_v times monomial idx of degree t. Needs ensure(t + 1).
  std::uint32_t times_var(unsigned t, std::uint32_t idx, std::size_t v) const {
    return degrees_[t].up[idx * nvars_ + v];
  }
  unsigned exponent(PackedMonomial m, std::size_t v) const {
    return static_cast<unsigned>((m >> (8 * (7 - v))) & 0xFF);
  }
  PackedMonomial var_bit(std::size_t v) const { return PackedMonomial{1} << (8 * (7 - v)); }

 private:
  struct Degree {
    std::vector<PackedMonomial> mons;
    std::unordered_map<PackedMonomial, std::uint32_t> index;
    std::vector<std::uint32_t> up;  // filled once degree t + 1 exists
  };
  std::size_t nvars_;
  std::vector<Degree> degrees_;
};

/// A homogeneous generator: dense coefficients over the monomials of its degree.
template <class F>
struct TypedGenerator {
  unsigned degree = 0;
  std::vector<typename F::value_type> coeffs;
};

/// Multiplies a degree-t coefficient vector by the linear form sum_v form[v] x_v.
template <class F>
std::vector<typename F::value_type> times_linear(const F& f, const MonomialTable& table, unsigned t,
                                                 std::span<const typename F::value_type> poly,
                                                 std::span<const typename F::value_type> form) {
  std::vector<typename F::value_type> out(table.count(t + 1), f.zero());
  for (std::uint32_t i = 0; i < poly.size(); ++i) {
    if (f.is_zero(poly[i])) continue;
    for (std::size_t v = 0; v < table.nvars(); ++v) {
      if (f.is_zero(form[v])) continue;
      auto& slot = out[table.times_var(t, i, v)];
      slot = f.add(slot, f.mul(poly[i], form[v]));
    }
  }
  return out;
}

/// All products form[i_1] * ... * form[i_a] over i_1 < ... < i_a (or i_1 <=
/// ... <= i_a with repetition), in lexicographic order of the index tuple.
template <class F>
std::vector<TypedGenerator<F>> form_products(const F& f, MonomialTable& table,
                                             const std::vector<std::vector<typename F::value_type>>& forms,
                                             unsigned a, bool repetition) {
  using V = typename F::value_type;
  table.ensure(a + 1);
  std::vector<TypedGenerator<F>> out;
  std::vector<std::vector<V>> partial(a + 1);
  partial[0] = {f.one()};
  auto rec = [&](auto&& self, unsigned depth, std::size_t start) -> void {
    if (depth == a) {
      out.push_back({a, partial[a]});
      return;
    }
    for (std::size_t i = start; i < forms.size(); ++i) {
      if (!repetition && forms.size() - i < a - depth) break;
      partial[depth + 1] = times_linear(f, table, depth, std::span<const V>(partial[depth]),
                                        std::span<const V>(forms[i]));
      self(self, depth + 1, repetition ? i : i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Homogeneous ideal tracked one degree at a time. In degree t it keeps a
/// basis of I_t in which every row is a leading monomial plus a tail over the
/// standard monomials (those that lead no row), all smaller than the lead.
/// I_{t+1} is spanned by x_v * I_t plus the generators of degree t + 1.
template <class F>
class GradedIdeal {
 public:
  using V = typename F::value_type;

  GradedIdeal(const F& f, MonomialTable& table, std::vector<TypedGenerator<F>> gens)
      : f_(f), table_(table), gens_(std::move(gens)) {
    table_.ensure(1);
    start_degree();
    for (const auto& g : gens_) {
      if (g.degree == 0 && std::any_of(g.coeffs.begin(), g.coeffs.end(), [&](const V& c) { return !f_.is_zero(c); }))
        throw std::invalid_argument("unit ideal generators are not supported");
    }
  }

  unsigned degree() const { return t_; }
  std::size_t space_dim() const { return table_.count(t_); }
  std::size_t ideal_dim() const { return full_ ? space_dim() : rows_.size(); }
  std::size_t quotient_dim() const { return space_dim() - ideal_dim(); }

  /// Positions of the standard monomials (degree t indices).
  const std::vector<std::uint32_t>& standard() const { return standard_; }

  /// Coordinates over standard() of the class of a dense degree-t vector.
  void normal_form(std::span<const V> v, std::vector<V>& out) const {
    out.assign(standard_.size(), f_.zero());
    if (full_) return;
    for (std::uint32_t m = 0; m < v.size(); ++m) {
      if (f_.is_zero(v[m])) continue;
      const std::int32_t row = lead_row_[m];
      if (row < 0) {
        auto& slot = out[static_cast<std::size_t>(std_pos_[m])];
        slot = f_.add(slot, v[m]);
      } else {
        for (const auto& [s, c] : rows_[static_cast<std::size_t>(row)].tail) {
          auto& slot = out[static_cast<std::size_t>(std_pos_[s])];
          slot = f_.sub_mul(slot, v[m], c);
        }
      }
    }
  }

  /// Same as normal_form for a sparse input (monomial index, coefficient).
  void normal_form_sparse(std::span<const std::pair<std::uint32_t, V>> v, std::vector<V>& out) const {
    out.assign(standard_.size(), f_.zero());
    if (full_) return;
    for (const auto& [m, c] : v) {
      if (f_.is_zero(c)) continue;
      const std::int32_t row = lead_row_[m];
      if (row < 0) {
        auto& slot = out[static_cast<std::size_t>(std_pos_[m])];
        slot = f_.add(slot, c);
      } else {
        for (const auto& [s, tc] : rows_[static_cast<std::size_t>(row)].tail) {
          auto& slot = out[static_cast<std::size_t>(std_pos_[s])];
          slot = f_.sub_mul(slot, c, tc);
        }
      }
    }
  }

  void advance() {
    const unsigned next = t_ + 1;
    table_.ensure(next + 1);
    if (full_) {
      t_ = next;
      start_degree();
      full_ = true;
      standard_.clear();
      return;
    }
    const std::size_t k = table_.nvars();
    const std::size_t d1 = table_.count(next);

    // Pick one multiple x_v * row for every monomial reachable as x_v * lead.
    std::vector<std::int64_t> chosen(d1, -1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> extras;  // (row, var)
    for (std::uint32_t b = 0; b < rows_.size(); ++b) {
      for (std::uint32_t v = 0; v < k; ++v) {
        const std::uint32_t m = table_.times_var(t_, rows_[b].lead, v);
        if (chosen[m] < 0) chosen[m] = static_cast<std::int64_t>(b) * static_cast<std::int64_t>(k) + v;
        else extras.emplace_back(b, v);
      }
    }
    std::vector<std::int32_t> npos(d1, -1);
    std::vector<std::uint32_t> nmons;
    for (std::uint32_t m = 0; m < d1; ++m)
      if (chosen[m] < 0) {
        npos[m] = static_cast<std::int32_t>(nmons.size());
        nmons.push_back(m);
      }
    const std::size_t nn = nmons.size();

    // Chosen rows in increasing monomial order; their tails only reach
    // smaller monomials, which are already expressed over the N part.
    std::vector<std::vector<std::pair<std::uint32_t, V>>> red(d1);
    std::vector<V> acc(nn, f_.zero());
    std::vector<std::uint32_t> touched;
    auto add_at = [&](std::uint32_t m, const V& c) {
      if (npos[m] >= 0) {
        auto p = static_cast<std::uint32_t>(npos[m]);
        if (f_.is_zero(acc[p])) touched.push_back(p);
        acc[p] = f_.add(acc[p], c);
      } else {
        for (const auto& [p, rc] : red[m]) {
          if (f_.is_zero(acc[p])) touched.push_back(p);
          acc[p] = f_.sub_mul(acc[p], c, rc);
        }
      }
    };
    auto drain_sparse = [&]() {
      std::vector<std::pair<std::uint32_t, V>> out;
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (auto p : touched) {
        if (!f_.is_zero(acc[p])) out.emplace_back(p, acc[p]);
        acc[p] = f_.zero();
      }
      touched.clear();
      return out;
    };
    for (std::uint32_t m = static_cast<std::uint32_t>(d1); m-- > 0;) {
      if (chosen[m] < 0) continue;
      const auto b = static_cast<std::size_t>(chosen[m] / static_cast<std::int64_t>(k));
      const auto v = static_cast<std::size_t>(chosen[m] % static_cast<std::int64_t>(k));
      for (const auto& [s, c] : rows_[b].tail) add_at(table_.times_var(t_, s, v), c);
      red[m] = drain_sparse();
    }

    // Everything else reduces to vectors over N.
    std::vector<V> residues;
    std::size_t nres = 0;
    auto push_residue = [&]() {
      auto sparse = drain_sparse();
      if (sparse.empty()) return;
      residues.resize((nres + 1) * nn, f_.zero());
      for (const auto& [p, c] : sparse) residues[nres * nn + p] = c;
      ++nres;
    };
    if (nn > 0) {
      for (const auto& [b, v] : extras) {
        add_at(table_.times_var(t_, rows_[b].lead, v), f_.one());
        for (const auto& [s, c] : rows_[b].tail) add_at(table_.times_var(t_, s, v), c);
        push_residue();
      }
      for (const auto& g : gens_) {
        if (g.degree != next) continue;
        for (std::uint32_t m = 0; m < d1; ++m)
          if (!f_.is_zero(g.coeffs[m])) add_at(m, g.coeffs[m]);
        push_residue();
      }
    }
    std::vector<std::size_t> pivots;
    const std::size_t rank =
        nres == 0 ? 0 : kernels::rref_in_place(f_, std::span<V>(residues), nres, nn, &pivots);

    t_ = next;
    start_degree();
    std::vector<std::int32_t> pivot_row(nn, -1);
    for (std::size_t i = 0; i < rank; ++i) pivot_row[pivots[i]] = static_cast<std::int32_t>(i);
    for (std::size_t p = 0; p < nn; ++p)
      if (pivot_row[p] < 0) {
        std_pos_[nmons[p]] = static_cast<std::int32_t>(standard_.size());
        standard_.push_back(nmons[p]);
      }

    for (std::size_t i = 0; i < rank; ++i) {
      Row row;
      row.lead = nmons[pivots[i]];
      for (std::size_t p = pivots[i] + 1; p < nn; ++p) {
        const V& c = residues[i * nn + p];
        if (!f_.is_zero(c)) row.tail.emplace_back(nmons[p], c);
      }
      add_row(std::move(row));
    }
    for (std::uint32_t m = 0; m < d1; ++m) {
      if (chosen[m] < 0) continue;
      for (const auto& [p, c] : red[m]) {
        if (pivot_row[p] >= 0) {
          const auto i = static_cast<std::size_t>(pivot_row[p]);
          for (std::size_t q = p + 1; q < nn; ++q) {
            const V& rc = residues[i * nn + q];
            if (f_.is_zero(rc)) continue;
            if (f_.is_zero(acc[q])) touched.push_back(static_cast<std::uint32_t>(q));
            acc[q] = f_.sub_mul(acc[q], c, rc);
          }
        } else {
          if (f_.is_zero(acc[p])) touched.push_back(p);
          acc[p] = f_.add(acc[p], c);
        }
      }
      Row row;
      row.lead = m;
      for (const auto& [p, c] : drain_sparse()) row.tail.emplace_back(nmons[p], c);
      add_row(std::move(row));
    }
    if (rows_.size() == d1) {
      full_ = true;
      rows_.clear();
      lead_row_.clear();
    }
  }

  /// Advances until degree() == t. Throws std::logic_error when t < degree().
  void advance_to(unsigned t) {
    if (t < t_) throw std::logic_error("graded ideal cannot move to a lower degree");
    while (t_ < t) advance();
  }

 private:
  struct Row {
    std::uint32_t lead = 0;
    std::vector<std::pair<std::uint32_t, V>> tail;
  };

  void start_degree() {
    const std::size_t d = table_.count(t_);
    rows_.clear();
    standard_.clear();
    full_ = false;
    lead_row_.assign(d, -1);
    std_pos_.assign(d, -1);
    if (t_ == 0) {
      standard_.push_back(0);
      std_pos_[0] = 0;
    }
  }

  void add_row(Row row) {
    lead_row_[row.lead] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(row));
  }

  F f_;
  MonomialTable& table_;
  std::vector<TypedGenerator<F>> gens_;
  unsigned t_ = 0;
  bool full_ = false;
  std::vector<Row> rows_;
  std::vector<std::int32_t> lead_row_;
  std::vector<std::int32_t> std_pos_;
  std::vector<std::uint32_t> standard_;
};

}  // namespace starconf

#endif  // STARCONF_GRADED_HPP
