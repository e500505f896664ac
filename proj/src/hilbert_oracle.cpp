#include "starconf/hilbert_oracle.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "starconf/errors.hpp"
#include "starconf/graded.hpp"

namespace starconf {

// ---------------------------------------------------------------- RationalPoly

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RationalPoly RationalPoly::interpolate(long t0, const std::vector<mpq_class>& values) {
  // Newton forward differences: P(t) = sum_i D^i(t0) C(t - t0, i).
  std::vector<mpq_class> diff = values;
  RationalPoly basis({mpq_class(1)});
  RationalPoly out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out = out - basis.scaled(-diff[0]);
    for (std::size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = diff[j + 1] - diff[j];
    if (!diff.empty()) diff.pop_back();
    RationalPoly step({mpq_class(-(t0 + static_cast<long>(i))), mpq_class(1)});
    basis = (basis * step).scaled(mpq_class(1, static_cast<unsigned long>(i + 1)));
  }
  return out;
}

RationalPoly RationalPoly::p_basis(long m) {
  RationalPoly p({mpq_class(1)});
  for (long j = 1; j <= m; ++j) p = (p * RationalPoly({mpq_class(j), mpq_class(1)})).scaled(mpq_class(1, j));
  return p;
}

mpq_class RationalPoly::operator()(long t) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> r = c_;
  for (auto& x : r) x *= s;
  return RationalPoly(std::move(r));
}

namespace {

void append_signed(std::ostringstream& out, bool first, const mpq_class& c, const std::string& unit) {
  mpq_class mag = abs(c);
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (unit.empty() || mag != 1) out << mag.get_str();
  out << unit;
}

}  // namespace

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    std::string unit = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    append_signed(out, first, c_[i], unit);
    first = false;
  }
  return out.str();
}

std::vector<std::pair<long, mpq_class>> RationalPoly::in_p_basis() const {
  std::vector<std::pair<long, mpq_class>> out;
  RationalPoly rest = *this;
  while (!rest.is_zero()) {
    const long m = rest.degree();
    mpq_class b = rest.c_.back();
    for (long j = 2; j <= m; ++j) b *= j;
    out.emplace_back(m, b);
    rest = rest - p_basis(m).scaled(b);
  }
  return out;
}

std::string RationalPoly::p_basis_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, b] : in_p_basis()) {
    append_signed(out, first, b, "P_" + std::to_string(m));
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------- windows/fit

FitWindow default_window(long a, std::size_t k) {
  return {std::max(0L, a - 1), a + static_cast<long>(k) + 3};
}

long window_cap(long a, std::size_t k) { return a + 4 * static_cast<long>(k) + 8; }

FittedHP fit_hilbert_values(const HilbertSource& source, std::size_t nvars, FitWindow window, long cap) {
  const long k = static_cast<long>(nvars);
  if (window.lo < 0 || window.hi - window.lo < k + 1)
    throw std::invalid_argument("fit window must contain at least k + 2 degrees");
  cap = std::max(cap, window.hi);
  std::vector<std::size_t> hf;
  auto need = [&](long t) {
    while (static_cast<long>(hf.size()) <= t) hf.push_back(source(static_cast<long>(hf.size())));
  };
  long hi = window.hi;
  while (true) {
    need(hi);
    std::vector<mpq_class> tail;
    for (long t = hi - k + 1; t <= hi; ++t) tail.emplace_back(static_cast<unsigned long>(hf[t]));
    RationalPoly p = RationalPoly::interpolate(hi - k + 1, tail);
    auto matches = [&](long t) { return p(t) == mpq_class(static_cast<unsigned long>(hf[t])); };
    bool ok = true;
    for (long t = hi - k - 1; t <= hi - k; ++t) ok = ok && matches(t);
    if (ok) {
      FittedHP fit;
      fit.window = {window.lo, hi};
      fit.stable_from = hi - k - 1;
      while (fit.stable_from > 0 && matches(fit.stable_from - 1)) --fit.stable_from;
      fit.poly = p;
      fit.dim_proj = p.degree();
      if (p.is_zero()) {
        fit.degree = 0;
        for (auto v : hf) fit.degree += static_cast<unsigned long>(v);
        fit.implied_height = nvars;
      } else {
        mpq_class lead = p.coeffs().back();
        for (long j = 2; j <= fit.dim_proj; ++j) lead *= j;
        if (lead.get_den() != 1) throw InvariantViolation("Hilbert polynomial has non-integral degree");
        fit.degree = lead.get_num();
        fit.implied_height = nvars - static_cast<std::size_t>(fit.dim_proj + 1);
      }
      fit.hf = std::move(hf);
      return fit;
    }
    if (hi >= cap)
      throw Inconclusive("Hilbert function not polynomial on the last " + std::to_string(k + 2) +
                         " degrees up to t = " + std::to_string(cap) + "; widen the window");
    ++hi;
  }
}

// ---------------------------------------------------------------- typed engines

namespace {

template <class F>
using Forms = std::vector<std::vector<typename F::value_type>>;

template <class F>
Forms<F> columns_of(const ExactMatrix& m) {
  const auto& vals = m.values<F>();
  Forms<F> out(m.cols(), std::vector<typename F::value_type>(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[c][r] = vals[r * m.cols() + c];
  return out;
}

template <class F>
typename F::value_type typed(const F& f, const FieldScalar& s) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    (void)f;
    return s.residue();
  } else {
    (void)f;
    return s.rational();
  }
}

template <class F>
struct IdealState {
  F f;
  MonomialTable table;
  std::unique_ptr<GradedIdeal<F>> ideal;

  IdealState(const F& field, std::size_t nvars) : f(field), table(nvars) {}
};

template <class F>
std::shared_ptr<IdealState<F>> make_state(const F& f, std::size_t nvars,
                                          const std::function<std::vector<TypedGenerator<F>>(MonomialTable&)>& gens) {
  auto st = std::make_shared<IdealState<F>>(f, nvars);
  st->ideal = std::make_unique<GradedIdeal<F>>(f, st->table, gens(st->table));
  return st;
}

template <class F>
std::shared_ptr<IdealState<F>> product_state(const F& f, const ExactMatrix& forms, long a) {
  auto cols = columns_of<F>(forms);
  return make_state<F>(f, forms.rows(), [&](MonomialTable& table) {
    return form_products(f, table, cols, static_cast<unsigned>(a), false);
  });
}

template <class F>
std::shared_ptr<IdealState<F>> dense_state(const F& f, const std::vector<DensePoly>& gens) {
  return make_state<F>(f, gens.front().nvars, [&](MonomialTable& table) {
    std::vector<TypedGenerator<F>> out;
    for (const auto& g : gens) {
      table.ensure(g.degree + 1);
      if (g.coeffs.size() != table.count(g.degree)) throw std::invalid_argument("generator length mismatch");
      TypedGenerator<F> tg{g.degree, {}};
      for (const auto& c : g.coeffs) tg.coeffs.push_back(typed(f, c));
      out.push_back(std::move(tg));
    }
    return out;
  });
}

/// dim (R / (I : l))_t, the rank of R_t -> (R/I)_{t+1}, f -> l f.
template <class F>
std::size_t colon_quotient_dim(IdealState<F>& st, const std::vector<typename F::value_type>& form, long t) {
  using V = typename F::value_type;
  const auto td = static_cast<unsigned>(t);
  st.ideal->advance_to(td + 1);
  const std::size_t q = st.ideal->quotient_dim();
  if (q == 0) return 0;
  const std::size_t d = st.table.count(td);
  std::vector<V> mat;
  mat.reserve(d * q);
  std::vector<V> nf;
  std::vector<std::pair<std::uint32_t, V>> sparse;
  for (std::uint32_t m = 0; m < d; ++m) {
    sparse.clear();
    for (std::size_t v = 0; v < form.size(); ++v)
      if (!st.f.is_zero(form[v])) sparse.emplace_back(st.table.times_var(td, m, v), form[v]);
    st.ideal->normal_form_sparse(sparse, nf);
    mat.insert(mat.end(), nf.begin(), nf.end());
  }
  return kernels::rank_in_place(st.f, std::span<V>(mat), d, q);
}

template <class F>
HilbertSource quotient_source(std::shared_ptr<IdealState<F>> st) {
  return [st](long t) {
    st->ideal->advance_to(static_cast<unsigned>(t));
    return st->ideal->quotient_dim();
  };
}

std::size_t monomial_count(long t, std::size_t k) {
  return static_cast<std::size_t>(binomial(t + static_cast<long>(k) - 1, static_cast<long>(k) - 1).get_ui());
}

void check_a(const LinearCode& code, long a, long lo) {
  if (a < lo || a > static_cast<long>(code.n()))
    throw std::out_of_range("a = " + std::to_string(a) + " outside " + std::to_string(lo) + ".." +
                            std::to_string(code.n()));
}

void check_t(long t) {
  if (t < 0) throw std::out_of_range("negative degree");
}

}  // namespace

// ---------------------------------------------------------------- public API

std::string DensePoly::to_string() const {
  MonomialTable table(nvars);
  table.ensure(degree);
  std::ostringstream out;
  bool first = true;
  const auto& mons = table.monomials(degree);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const FieldScalar& c = coeffs[i];
    if (c.is_zero()) continue;
    std::string mono;
    for (std::size_t v = 0; v < nvars; ++v) {
      unsigned e = table.exponent(mons[i], v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    mpq_class q;
    if (spec.is_prime_field()) {
      const std::uint64_t p = spec.modulus, r = c.residue();
      q = (p > 2 && r > p / 2) ? -mpq_class(mpz_class(static_cast<unsigned long>(p - r)))
                               : mpq_class(mpz_class(static_cast<unsigned long>(r)));
    } else {
      q = c.rational();
    }
    std::string unit = mono;
    if (!unit.empty() && abs(q) != 1) unit = "*" + unit;
    mpq_class mag = abs(q);
    if (first) {
      if (q < 0) out << "-";
    } else {
      out << (q < 0 ? " - " : " + ");
    }
    if (mono.empty() || mag != 1) out << mag.get_str();
    out << unit;
    first = false;
  }
  return first ? "0" : out.str();
}

std::vector<DensePoly> afold_generators(const LinearCode& code, long a) {
  check_a(code, a, 1);
  return with_field(code.field(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    MonomialTable table(code.k());
    auto gens = form_products(f, table, columns_of<F>(code.matrix()), static_cast<unsigned>(a), false);
    std::vector<DensePoly> out;
    for (auto& g : gens) {
      DensePoly p{code.field(), code.k(), g.degree, {}};
      for (const auto& c : g.coeffs) {
        if constexpr (std::is_same_v<F, PrimeField>) p.coeffs.push_back(FieldScalar::from_residue(code.field(), c));
        else p.coeffs.push_back(FieldScalar::from_rational(code.field(), c));
      }
      out.push_back(std::move(p));
    }
    return out;
  });
}

std::size_t graded_dim_ideal(const std::vector<DensePoly>& gens, long t) {
  check_t(t);
  if (gens.empty()) throw std::invalid_argument("no generators");
  return with_field(gens.front().spec, [&](const auto& f) {
    auto st = dense_state(f, gens);
    st->ideal->advance_to(static_cast<unsigned>(t));
    return st->ideal->ideal_dim();
  });
}

GradedDims quotient_dims(const std::vector<DensePoly>& gens, long t_lo, long t_hi) {
  check_t(t_lo);
  if (gens.empty()) throw std::invalid_argument("no generators");
  GradedDims out{"R/I", {}};
  with_field(gens.front().spec, [&](const auto& f) {
    auto st = dense_state(f, gens);
    for (long t = t_lo; t <= t_hi; ++t) {
      st->ideal->advance_to(static_cast<unsigned>(t));
      out.entries[t] = st->ideal->quotient_dim();
    }
    return 0;
  });
  return out;
}

FittedHP fit_product_ideal(const ExactMatrix& forms, long a, std::optional<FitWindow> window) {
  if (a < 1 || a > static_cast<long>(forms.cols())) throw std::out_of_range("a outside 1..columns");
  const std::size_t k = forms.rows();
  FitWindow w = window.value_or(default_window(a, k));
  return with_field(forms.spec(), [&](const auto& f) {
    return fit_hilbert_values(quotient_source(product_state(f, forms, a)), k, w, window_cap(a, k));
  });
}

FittedHP fit_hilbert_polynomial(const LinearCode& code, long a, std::optional<FitWindow> window) {
  check_a(code, a, 1);
  return fit_product_ideal(code.matrix(), a, window);
}

std::size_t mu_oracle(const LinearCode& code, long a) {
  check_a(code, a, 1);
  return with_field(code.field(), [&](const auto& f) {
    auto st = product_state(f, code.matrix(), a);
    st->ideal->advance_to(static_cast<unsigned>(a));
    return st->ideal->ideal_dim();
  });
}

std::size_t colon_graded_dim(const LinearCode& code, std::size_t ell, long a, long t) {
  check_a(code, a, 2);
  check_t(t);
  if (ell >= code.n()) throw std::out_of_range("ell outside the code");
  return with_field(code.field(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto st = product_state(f, code.matrix(), a);
    return monomial_count(t, code.k()) - colon_quotient_dim<F>(*st, columns_of<F>(code.matrix())[ell], t);
  });
}

ColonDims colon_graded_dims(const LinearCode& code, std::size_t ell, long a, long t_max) {
  check_a(code, a, 2);
  if (ell >= code.n()) throw std::out_of_range("ell outside the code");
  ColonDims out{{"I_a(C):l", {}}, {"I_{a-1}(C\\l)", {}}};
  const std::size_t k = code.k();
  std::vector<std::size_t> rest_idx;
  for (std::size_t i = 0; i < code.n(); ++i)
    if (i != ell) rest_idx.push_back(i);
  ExactMatrix rest = code.matrix().select_columns(rest_idx);
  with_field(code.field(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto big = product_state(f, code.matrix(), a);
    auto small = product_state(f, rest, a - 1);
    auto form = columns_of<F>(code.matrix())[ell];
    for (long t = 0; t <= t_max; ++t) {
      out.colon.entries[t] = monomial_count(t, k) - colon_quotient_dim<F>(*big, form, t);
      small->ideal->advance_to(static_cast<unsigned>(t));
      out.target.entries[t] = small->ideal->ideal_dim();
    }
    return 0;
  });
  return out;
}

FittedHP fit_colon_hilbert(const LinearCode& code, std::size_t ell, long a, std::optional<FitWindow> window) {
  check_a(code, a, 2);
  if (ell >= code.n()) throw std::out_of_range("ell outside the code");
  const std::size_t k = code.k();
  FitWindow w = window.value_or(default_window(a, k));
  return with_field(code.field(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto st = product_state(f, code.matrix(), a);
    auto form = columns_of<F>(code.matrix())[ell];
    HilbertSource src = [st, form](long t) { return colon_quotient_dim<F>(*st, form, t); };
    return fit_hilbert_values(src, k, w, window_cap(a, k));
  });
}

FittedHP fit_prime_power_intersection(const std::vector<PrimePower>& components, std::size_t nvars,
                                      std::optional<FitWindow> window) {
  if (components.empty()) throw std::invalid_argument("no components");
  unsigned top = 1;
  for (const auto& c : components) {
    if (c.forms.rows() != nvars || c.forms.cols() == 0 || c.exponent == 0)
      throw std::invalid_argument("malformed prime power");
    std::vector<std::size_t> all(c.forms.cols());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (column_rank(c.forms, all) != all.size()) throw std::invalid_argument("prime generators must be independent");
    top = std::max(top, c.exponent);
  }
  const FieldSpec spec = components.front().forms.spec();
  FitWindow w = window.value_or(default_window(top, nvars));
  return with_field(spec, [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    using V = typename F::value_type;
    std::vector<std::shared_ptr<IdealState<F>>> states;
    for (const auto& c : components) {
      auto cols = columns_of<F>(c.forms);
      states.push_back(make_state<F>(f, nvars, [&](MonomialTable& table) {
        return form_products(f, table, cols, c.exponent, true);
      }));
    }
    HilbertSource src = [states, f](long t) {
      const auto td = static_cast<unsigned>(t);
      std::size_t width = 0;
      for (auto& st : states) {
        st->ideal->advance_to(td);
        width += st->ideal->quotient_dim();
      }
      if (width == 0) return std::size_t{0};
      const std::size_t d = states.front()->table.count(td);
      std::vector<V> mat;
      mat.reserve(d * width);
      std::vector<V> nf;
      for (std::uint32_t m = 0; m < d; ++m) {
        std::pair<std::uint32_t, V> unit{m, f.one()};
        for (auto& st : states) {
          st->ideal->normal_form_sparse(std::span<const std::pair<std::uint32_t, V>>(&unit, 1), nf);
          mat.insert(mat.end(), nf.begin(), nf.end());
        }
      }
      return kernels::rank_in_place(f, std::span<V>(mat), d, width);
    };
    return fit_hilbert_values(src, nvars, w, window_cap(top, nvars));
  });
}

bool OracleCheck::all_ok() const {
  return inconclusive.empty() && std::all_of(rows.begin(), rows.end(), [](const OracleRow& r) { return r.ok(); });
}

OracleCheck oracle_agreement(const LinearCode& code, const std::vector<IdealProfile>& profiles,
                             std::optional<FitWindow> window) {
  OracleCheck out;
  for (const auto& p : profiles) {
    OracleRow row;
    row.a = p.a;
    try {
      row.fit = fit_hilbert_polynomial(code, p.a, window);
    } catch (const Inconclusive&) {
      out.inconclusive.push_back(p.a);
      continue;
    }
    row.mu = mu_oracle(code, p.a);
    row.degree_ok = row.fit.degree == p.degree;
    row.height_ok = row.fit.implied_height == p.height;
    row.mu_ok = p.mu == static_cast<unsigned long>(row.mu);
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace starconf
