#ifndef STARCONF_HILBERT_ORACLE_HPP
#define STARCONF_HILBERT_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "starconf/code_invariants.hpp"
#include "starconf/exact_arith.hpp"
#include "starconf/star_config.hpp"

namespace starconf {

/// Homogeneous polynomial of one degree in nvars variables; coeffs are
/// indexed like MonomialTable (graded lex, x_1 largest first).
struct DensePoly {
  FieldSpec spec;
  std::size_t nvars = 0;
  unsigned degree = 0;
  std::vector<FieldScalar> coeffs;

  std::string to_string() const;
};

/// All C(n, a) products l_{i_1} ... l_{i_a}, i_1 < ... < i_a.
std::vector<DensePoly> afold_generators(const LinearCode& code, long a);

/// t -> dimension of one graded object.
struct GradedDims {
  std::string tag;
  std::map<long, std::size_t> entries;
};

/// dim_K (I)_t for the ideal generated by gens (non-empty, one field, one
/// number of variables).
std::size_t graded_dim_ideal(const std::vector<DensePoly>& gens, long t);

/// dim_K (R/I)_t for t_lo <= t <= t_hi.
GradedDims quotient_dims(const std::vector<DensePoly>& gens, long t_lo, long t_hi);

/// Univariate polynomial in t with rational coefficients, lowest degree first.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> coeffs);

  /// Degree <= values.size() - 1 polynomial through (t0 + i, values[i]).
  static RationalPoly interpolate(long t0, const std::vector<mpq_class>& values);
  /// P_m(t) = C(t + m, m).
  static RationalPoly p_basis(long m);

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class operator()(long t) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly scaled(const mpq_class& s) const;
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  /// "9t - 27"
  std::string to_string() const;
  /// Coefficients b_m with P = sum b_m P_m, highest m first.
  std::vector<std::pair<long, mpq_class>> in_p_basis() const;
  /// "9P_1 - 36P_0"
  std::string p_basis_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

struct FitWindow {
  long lo = 0;
  long hi = 0;
};

/// [a - 1, a + k + 3].
FitWindow default_window(long a, std::size_t k);
/// a + 4k + 8.
long window_cap(long a, std::size_t k);

struct FittedHP {
  RationalPoly poly;
  long stable_from = 0;          // HF(t) = poly(t) for all sampled t >= stable_from
  long dim_proj = -1;            // degree of poly, -1 for the zero polynomial
  mpz_class degree;              // lc * dim_proj!, or sum of HF when poly = 0
  std::size_t implied_height = 0;
  FitWindow window;              // window actually used
  std::vector<std::size_t> hf;   // HF(t) for t = 0..window.hi
};

/// Supplies HF(t); called for t = 0, 1, 2, ... in increasing order.
using HilbertSource = std::function<std::size_t(long t)>;

/// Interpolates the last k samples of [lo, hi], requires agreement on at least
/// k + 2 trailing samples, and otherwise extends hi one degree at a time up to cap. Throws
/// Inconclusive when the cap is reached without stabilisation and
/// std::invalid_argument when hi - lo < k + 1.
FittedHP fit_hilbert_values(const HilbertSource& hf, std::size_t nvars, FitWindow window, long cap);

/// HF of R / I_a(C).
FittedHP fit_hilbert_polynomial(const LinearCode& code, long a, std::optional<FitWindow> window = {});

/// HF of R / I_a(D) where D is the collection of columns of forms (k rows;
/// columns need not span K^k).
FittedHP fit_product_ideal(const ExactMatrix& forms, long a, std::optional<FitWindow> window = {});

/// dim (I_a(C))_a.
std::size_t mu_oracle(const LinearCode& code, long a);

/// dim (I_a(C) : l_ell)_t, ell 0-based.
std::size_t colon_graded_dim(const LinearCode& code, std::size_t ell, long a, long t);

struct ColonDims {
  GradedDims colon;   // dim (I_a(C) : l)_t
  GradedDims target;  // dim (I_{a-1}(C \ l))_t
};
ColonDims colon_graded_dims(const LinearCode& code, std::size_t ell, long a, long t_max);

/// HF of R / (I_a(C) : l_ell).
FittedHP fit_colon_hilbert(const LinearCode& code, std::size_t ell, long a,
                           std::optional<FitWindow> window = {});

/// A linear prime q generated by the (independent) columns of forms, raised
/// to the power exponent.
struct PrimePower {
  ExactMatrix forms;
  unsigned exponent = 1;
};

/// HF of R / (q_1^{e_1} ∩ ... ∩ q_s^{e_s}) in nvars variables.
FittedHP fit_prime_power_intersection(const std::vector<PrimePower>& components, std::size_t nvars,
                                      std::optional<FitWindow> window = {});

struct OracleRow {
  long a = 0;
  FittedHP fit;
  std::size_t mu = 0;
  bool degree_ok = false;
  bool height_ok = false;
  bool mu_ok = false;
  bool ok() const { return degree_ok && height_ok && mu_ok; }
};

/// Runs the oracle for every profile and compares degree, height and mu.
/// Rows whose fit is inconclusive are omitted and listed in inconclusive.
struct OracleCheck {
  std::vector<OracleRow> rows;
  std::vector<long> inconclusive;
  bool all_ok() const;
};
OracleCheck oracle_agreement(const LinearCode& code, const std::vector<IdealProfile>& profiles,
                             std::optional<FitWindow> window = {});

}  // namespace starconf

#endif  // STARCONF_HILBERT_ORACLE_HPP
