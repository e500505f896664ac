// Naive reference computations used only by the tests. Nothing here calls the
// library's rank, elimination or graded-ideal code.
#ifndef STARCONF_TEST_ORACLES_HPP
#define STARCONF_TEST_ORACLES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "starconf/bivar_poly.hpp"
#include "starconf/code_invariants.hpp"
#include "starconf/exact_arith.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t mod(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a = mod(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Rank of a list of row vectors mod p.
inline std::size_t rank_rows(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && mod(rows[piv][c], p) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t inv = inverse(rows[rank][c], p);
    for (auto& v : rows[rank]) v = mod(v * inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const std::int64_t f = mod(rows[r][c], p);
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = mod(rows[r][j] - f * rows[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

/// Rank of the columns of g listed in mask.
inline std::size_t column_rank(const IntMatrix& g, std::uint64_t mask, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> cols;
  for (std::size_t c = 0; c < g[0].size(); ++c) {
    if (!(mask >> c & 1)) continue;
    std::vector<std::int64_t> col;
    for (const auto& row : g) col.push_back(row[c]);
    cols.push_back(col);
  }
  return rank_rows(cols, p);
}

inline starconf::LinearCode to_code(const IntMatrix& g, std::uint64_t p) {
  return starconf::LinearCode(starconf::ExactMatrix::from_rows(starconf::FieldSpec::prime_field(p), g));
}

/// Uniform k x n matrix over GF(p) with no zero column and rank k.
inline IntMatrix random_code(std::mt19937_64& rng, std::size_t k, std::size_t n, std::int64_t p) {
  std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
  while (true) {
    IntMatrix g(k, std::vector<std::int64_t>(n));
    for (auto& row : g)
      for (auto& v : row) v = entry(rng);
    bool zero_col = false;
    for (std::size_t c = 0; c < n; ++c) {
      bool all_zero = true;
      for (const auto& row : g) all_zero = all_zero && row[c] == 0;
      zero_col = zero_col || all_zero;
    }
    if (zero_col) continue;
    if (rank_rows(g, p) == k) return g;
  }
}

/// Sum over all subsets of (x-1)^(k-r) (y-1)^(|I|-r).
inline starconf::BivarPoly naive_tutte(const IntMatrix& g, std::int64_t p) {
  const std::size_t n = g[0].size();
  const std::size_t k = column_rank(g, (std::uint64_t{1} << n) - 1, p);
  std::map<std::pair<unsigned, unsigned>, mpz_class> tally;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const std::size_t r = column_rank(g, s, p);
    tally[{static_cast<unsigned>(k - r), static_cast<unsigned>(__builtin_popcountll(s) - r)}] += 1;
  }
  starconf::BivarPoly t;
  for (const auto& [e, count] : tally) {
    const auto [a, b] = e;
    for (unsigned i = 0; i <= a; ++i)
      for (unsigned j = 0; j <= b; ++j) {
        mpz_class c = count * starconf::binomial(a, i) * starconf::binomial(b, j);
        if ((a - i + b - j) % 2) c = -c;
        t.add_term(i, j, c);
      }
  }
  return t;
}

/// d_r = min |S| such that at least p^r codewords are supported inside S.
inline std::vector<long> naive_hierarchy(const IntMatrix& g, std::int64_t p) {
  const std::size_t k = g.size(), n = g[0].size();
  std::vector<std::uint64_t> inside(std::size_t{1} << n, 0);
  std::vector<std::int64_t> msg(k, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(p);
  for (std::uint64_t m = 0; m < total; ++m) {
    std::uint64_t x = m;
    for (std::size_t i = 0; i < k; ++i, x /= p) msg[i] = static_cast<std::int64_t>(x % p);
    std::uint64_t support = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < k; ++i) v += msg[i] * g[i][c];
      if (mod(v, p)) support |= std::uint64_t{1} << c;
    }
    ++inside[support];
  }
  for (std::size_t b = 0; b < n; ++b)
    for (std::uint64_t s = 0; s < inside.size(); ++s)
      if (s >> b & 1) inside[s] += inside[s ^ (std::uint64_t{1} << b)];
  std::vector<long> d(k + 1, 0);
  for (std::size_t r = 1; r <= k; ++r) {
    std::uint64_t need = 1;
    for (std::size_t i = 0; i < r; ++i) need *= static_cast<std::uint64_t>(p);
    long best = static_cast<long>(n);
    for (std::uint64_t s = 0; s < inside.size(); ++s)
      if (inside[s] >= need) best = std::min(best, static_cast<long>(__builtin_popcountll(s)));
    d[r] = best;
  }
  return d;
}

using Exponent = std::vector<int>;
using Poly = std::map<Exponent, std::int64_t>;

inline std::vector<Exponent> monomials(std::size_t vars, int degree) {
  std::vector<Exponent> out;
  Exponent e(vars, 0);
  auto rec = [&](auto& self, std::size_t v, int left) -> void {
    if (v + 1 == vars) {
      e[v] = left;
      out.push_back(e);
      return;
    }
    for (int i = left; i >= 0; --i) {
      e[v] = i;
      self(self, v + 1, left - i);
    }
  };
  if (vars == 0) return degree == 0 ? std::vector<Exponent>{Exponent{}} : std::vector<Exponent>{};
  rec(rec, 0, degree);
  return out;
}

inline Poly times_form(const Poly& f, const std::vector<std::int64_t>& form, std::int64_t p) {
  Poly out;
  for (const auto& [e, c] : f)
    for (std::size_t v = 0; v < form.size(); ++v) {
      if (!form[v]) continue;
      Exponent x = e;
      ++x[v];
      out[x] = mod(out[x] + c * form[v], p);
    }
  for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
  return out;
}

/// Column c of g as a linear form in k variables.
inline std::vector<std::int64_t> form_of(const IntMatrix& g, std::size_t c) {
  std::vector<std::int64_t> f;
  for (const auto& row : g) f.push_back(row[c]);
  return f;
}

/// dim_K (R / (generators))_t, with every generator a product of linear
/// forms (each product a list of forms). All products m * gen spanned densely.
inline std::size_t naive_quotient_dim(const std::vector<std::vector<std::vector<std::int64_t>>>& products,
                                      std::size_t vars, int t, std::int64_t p) {
  const auto basis = monomials(vars, t);
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& prod : products) {
    const int deg = static_cast<int>(prod.size());
    if (deg > t) continue;
    Poly g{{Exponent(vars, 0), 1}};
    for (const auto& form : prod) g = times_form(g, form, p);
    for (const auto& m : monomials(vars, t - deg)) {
      std::vector<std::int64_t> row(basis.size(), 0);
      for (const auto& [e, c] : g) {
        Exponent x = e;
        for (std::size_t v = 0; v < vars; ++v) x[v] += m[v];
        row[index.at(x)] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  return basis.size() - rank_rows(std::move(rows), p);
}

/// All a-fold products of the columns of g.
inline std::vector<std::vector<std::vector<std::int64_t>>> afold_products(const IntMatrix& g, std::size_t a) {
  const std::size_t n = g[0].size();
  std::vector<std::vector<std::vector<std::int64_t>>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (static_cast<std::size_t>(__builtin_popcountll(s)) != a) continue;
    std::vector<std::vector<std::int64_t>> prod;
    for (std::size_t c = 0; c < n; ++c)
      if (s >> c & 1) prod.push_back(form_of(g, c));
    out.push_back(prod);
  }
  return out;
}

inline std::size_t naive_star_quotient_dim(const IntMatrix& g, std::size_t a, int t, std::int64_t p) {
  return naive_quotient_dim(afold_products(g, a), g.size(), t, p);
}

}  // namespace oracle

#endif  // STARCONF_TEST_ORACLES_HPP
