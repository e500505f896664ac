#ifndef STARCONF_CODE_INVARIANTS_HPP
#define STARCONF_CODE_INVARIANTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "starconf/exact_arith.hpp"
#include "starconf/matroid.hpp"
#include "starconf/parallel.hpp"
#include "starconf/tutte.hpp"

namespace starconf {

/// An [n, k] code given by a full-rank k x n generator matrix without zero
/// columns. Column i is the linear form l_i = sum_j G[j][i] x_{j+1}.
class LinearCode {
 public:
  /// Throws InputError on a zero column or rank(G) < k. Empty labels are
  /// replaced by the rendered linear forms.
  explicit LinearCode(ExactMatrix generator, std::vector<std::string> labels = {});

  const ExactMatrix& matrix() const { return matroid_.matrix(); }
  const VectorMatroid& matroid() const { return matroid_; }
  const FieldSpec& field() const { return matrix().spec(); }
  std::size_t n() const { return matrix().cols(); }
  std::size_t k() const { return matrix().rows(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  VectorMatroid matroid_;
  std::vector<std::string> labels_;
};

/// "x1 - x2", "2x1 + x3", ... Residues above p/2 print as negatives.
std::string render_linear_form(const ExactMatrix& m, std::size_t col);

/// d_0 .. d_k, with d_0 = 0.
struct WeightHierarchy {
  std::vector<long> d;

  std::size_t k() const { return d.empty() ? 0 : d.size() - 1; }
  /// The r with d_r < a <= d_{r+1}. Throws std::out_of_range.
  std::size_t interval_of(long a) const;
  /// Throws InvariantViolation unless d_0 = 0, d strictly increases,
  /// d_r <= n - k + r and d_k = n.
  void validate(std::size_t n) const;

  friend bool operator==(const WeightHierarchy&, const WeightHierarchy&) = default;
};

/// d_r = n - max{ |J| : r(J) = k - r } by scanning all 2^n subsets. Works for
/// matroids with loops too (used on dual codes). Throws CapExceeded.
WeightHierarchy hierarchy_bruteforce(const VectorMatroid& m, Execution exec = Execution::parallel,
                                     std::size_t cap = kDefaultExhaustiveCap);
long ghw_bruteforce(const LinearCode& code, std::size_t r, Execution exec = Execution::parallel,
                    std::size_t cap = kDefaultExhaustiveCap);

/// d_r = n - p_r - k + r.
long ghw_from_tutte(const ShiftedCoeffs& coeffs, const LinearCode& code, std::size_t r);
WeightHierarchy hierarchy_from_tutte(const ShiftedCoeffs& coeffs, const LinearCode& code);

/// d_r = min{ |I| : |I| - r*(I) = r }.
WeightHierarchy hierarchy_from_dual_rank(const VectorMatroid& m, Execution exec = Execution::parallel,
                                         std::size_t cap = kDefaultExhaustiveCap);
long ghw_from_dual_rank(const LinearCode& code, std::size_t r, Execution exec = Execution::parallel,
                        std::size_t cap = kDefaultExhaustiveCap);

/// H = (-A^T | I_{n-k}) for rref(G) = (I_k | A) up to a column permutation,
/// with columns returned in the original order. (n-k) x n.
ExactMatrix dual_generator(const ExactMatrix& g);

struct WeiDuality {
  bool holds = false;
  std::vector<long> lhs;  // { d_r(C) : 1 <= r <= k }
  std::vector<long> rhs;  // [n] minus { n + 1 - d_s(C^perp) }
  WeightHierarchy dual;
};

WeiDuality wei_duality_check(const LinearCode& code, Execution exec = Execution::parallel,
                             std::size_t cap = kDefaultExhaustiveCap);

struct Subcode {
  std::vector<std::vector<FieldScalar>> basis;  // codewords of length n
  GroundSubset support = 0;
  Flat source_flat;
};

/// The subcode spanned by v G over a basis v of the left kernel of G_f.
/// Throws std::invalid_argument unless f is a flat of rank < k.
Subcode subcode_from_flat(const LinearCode& code, const Flat& f);

/// c_{r, p_r}.
mpz_class minimal_support_subcode_count(const ShiftedCoeffs& coeffs, std::size_t r);

/// #{ flats of rank k - r with exactly (k - r) + p_r elements }.
std::size_t minimal_support_flat_count(const LinearCode& code, const ShiftedCoeffs& coeffs,
                                       std::size_t r);

}  // namespace starconf

#endif  // STARCONF_CODE_INVARIANTS_HPP
