#ifndef STARCONF_EXACT_ARITH_HPP
#define STARCONF_EXACT_ARITH_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace starconf {

enum class FieldKind { prime, rationals };

/// The field a computation runs over: GF(p) for a prime p < 2^64, or Q.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t modulus = 0;  // 0 for Q

  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime_field(std::uint64_t p);
  static FieldSpec rationals() { return {}; }

  bool is_prime_field() const { return kind == FieldKind::prime; }
  std::uint64_t characteristic() const { return modulus; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// GF(p) with residues in [0, p). Cheap to copy.
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  FieldSpec spec() const { return FieldSpec{FieldKind::prime, p_}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type add(value_type a, value_type b) const {
    return a >= p_ - b ? a - (p_ - b) : a + b;
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : a + (p_ - b);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    if (p_ <= 0xFFFFFFFFull) return a * b % p_;
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p_);
  }
  /// a - b * c
  value_type sub_mul(value_type a, value_type b, value_type c) const {
    return sub(a, mul(b, c));
  }
  value_type inv(value_type a) const;

  value_type from_int(std::int64_t v) const;
  value_type from_mpz(const mpz_class& v) const;
  /// Throws std::domain_error when the denominator vanishes mod p.
  value_type from_rational(const mpq_class& v) const;
  mpq_class to_rational(value_type a) const { return mpq_class(mpz_class(static_cast<unsigned long>(a))); }
  std::string to_string(value_type a) const { return std::to_string(a); }

 private:
  std::uint64_t p_;
  std::shared_ptr<const std::vector<std::uint64_t>> inverses_;
};

/// Q with canonical (reduced, positive-denominator) fractions.
class RationalField {
 public:
  using value_type = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type sub_mul(const value_type& a, const value_type& b, const value_type& c) const {
    return a - b * c;
  }
  value_type inv(const value_type& a) const;

  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  value_type from_mpz(const mpz_class& v) const { return mpq_class(v); }
  value_type from_rational(const mpq_class& v) const { return v; }
  mpq_class to_rational(const value_type& a) const { return a; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
};

/// Runs fn with the concrete field object matching spec. Both instantiations
/// must return the same type.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_prime_field()) return fn(PrimeField(spec.modulus));
  return fn(RationalField{});
}

using ScalarStorage = std::variant<std::vector<std::uint64_t>, std::vector<mpq_class>>;

/// An exact field element tagged with its field.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(const FieldSpec& spec, std::int64_t v);

  static FieldScalar from_rational(const FieldSpec& spec, const mpq_class& v);
  static FieldScalar from_residue(const FieldSpec& spec, std::uint64_t residue);
  /// Accepts "12", "-3" and "a/b" tokens.
  static FieldScalar parse(const FieldSpec& spec, std::string_view token);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  std::uint64_t residue() const;
  const mpq_class& rational() const;
  std::string to_string() const;

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;
  bool operator==(const FieldScalar& o) const;

 private:
  void require_same_field(const FieldScalar& o) const;

  FieldSpec spec_;
  std::uint64_t residue_ = 0;
  mpq_class rational_;
};

/// Dense row-major matrix over one field. Zero-sized shapes are allowed so
/// that matroid minors can shrink down to the empty matroid.
class ExactMatrix {
 public:
  ExactMatrix() : ExactMatrix(FieldSpec::rationals(), 0, 0) {}
  ExactMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);

  static ExactMatrix from_rows(const FieldSpec& spec,
                               const std::vector<std::vector<std::int64_t>>& rows);
  static ExactMatrix from_scalars(const FieldSpec& spec, std::size_t rows, std::size_t cols,
                                  const std::vector<FieldScalar>& entries);
  template <class F>
  static ExactMatrix from_values(const F& field, std::size_t rows, std::size_t cols,
                                 std::vector<typename F::value_type> values) {
    ExactMatrix m(field.spec(), 0, 0);
    m.rows_ = rows;
    m.cols_ = cols;
    if (values.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
    m.data_ = std::move(values);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& spec() const { return spec_; }

  FieldScalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldScalar& v);
  bool column_is_zero(std::size_t c) const;

  ExactMatrix select_columns(std::span<const std::size_t> cols) const;
  ExactMatrix remove_column(std::size_t c) const;
  ExactMatrix transposed() const;

  template <class F>
  const std::vector<typename F::value_type>& values() const {
    return std::get<std::vector<typename F::value_type>>(data_);
  }
  template <class F>
  std::vector<typename F::value_type>& values() {
    return std::get<std::vector<typename F::value_type>>(data_);
  }

  bool operator==(const ExactMatrix& o) const;
  std::string to_string() const;

 private:
  FieldSpec spec_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ScalarStorage data_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form; the pivot is the first nonzero entry in column order.
RrefResult rref(const ExactMatrix& m);

/// Rank of the submatrix on the given columns. Throws std::out_of_range.
std::size_t column_rank(const ExactMatrix& m, std::span<const std::size_t> cols);

/// Basis of { v in K^k : v * m[:, cols] = 0 }. Throws std::out_of_range.
std::vector<std::vector<FieldScalar>> left_kernel_basis(const ExactMatrix& m,
                                                        std::span<const std::size_t> cols);

/// v * m for a row vector v of length m.rows().
std::vector<FieldScalar> row_times(std::span<const FieldScalar> v, const ExactMatrix& m);

namespace kernels {

/// In-place RREF of a row-major rows x cols block. Returns the rank and
/// optionally the pivot columns.
template <class F>
std::size_t rref_in_place(const F& f, std::span<typename F::value_type> a, std::size_t rows,
                          std::size_t cols, std::vector<std::size_t>* pivots = nullptr) {
  using V = typename F::value_type;
  std::size_t rank = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && f.is_zero(a[piv * cols + c])) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    V inv = f.inv(a[rank * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[rank * cols + j] = f.mul(a[rank * cols + j], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || f.is_zero(a[r * cols + c])) continue;
      V factor = a[r * cols + c];
      for (std::size_t j = c; j < cols; ++j)
        a[r * cols + j] = f.sub_mul(a[r * cols + j], factor, a[rank * cols + j]);
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

/// Forward elimination only (row echelon, pivots not normalised away from
/// other rows). Cheaper than full RREF when only the rank is wanted.
template <class F>
std::size_t rank_in_place(const F& f, std::span<typename F::value_type> a, std::size_t rows,
                          std::size_t cols) {
  using V = typename F::value_type;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && f.is_zero(a[piv * cols + c])) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    V inv = f.inv(a[rank * cols + c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (f.is_zero(a[r * cols + c])) continue;
      V factor = f.mul(a[r * cols + c], inv);
      for (std::size_t j = c; j < cols; ++j)
        a[r * cols + j] = f.sub_mul(a[r * cols + j], factor, a[rank * cols + j]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace kernels

}  // namespace starconf

#endif  // STARCONF_EXACT_ARITH_HPP
