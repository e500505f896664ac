#include "starconf/exact_arith.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

namespace starconf {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Inverse tables are built once per small modulus, on first use.
constexpr std::uint64_t kInverseTableLimit = 1u << 16;

std::shared_ptr<const std::vector<std::uint64_t>> inverse_table(std::uint64_t p) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const std::vector<std::uint64_t>>> tables;
  std::lock_guard lock(mu);
  auto it = tables.find(p);
  if (it != tables.end()) return it->second;
  auto t = std::make_shared<std::vector<std::uint64_t>>(p, 0);
  if (p > 1) (*t)[1] = 1;
  for (std::uint64_t i = 2; i < p; ++i) (*t)[i] = (p - (p / i) * (*t)[p % i] % p) % p;
  tables.emplace(p, t);
  return t;
}

std::uint64_t ext_euclid_inverse(std::uint64_t a, std::uint64_t p) {
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::prime, p};
}

std::string FieldSpec::name() const {
  return is_prime_field() ? "GF(" + std::to_string(modulus) + ")" : "Q";
}

// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("GF(p) needs p >= 2");
  if (p <= kInverseTableLimit) inverses_ = inverse_table(p);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("division by zero in " + spec().name());
  if (inverses_) return (*inverses_)[a];
  return ext_euclid_inverse(a, p_);
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1;  // |v| without overflow
  return neg(m % p_);
}

PrimeField::value_type PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return r.get_ui();
}

PrimeField::value_type PrimeField::from_rational(const mpq_class& v) const {
  value_type den = from_mpz(v.get_den());
  if (den == 0)
    throw std::domain_error("denominator of " + v.get_str() + " vanishes in " + spec().name());
  return mul(from_mpz(v.get_num()), inv(den));
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
  return 1 / a;
}

// ---------------------------------------------------------------------------

FieldScalar::FieldScalar(const FieldSpec& spec, std::int64_t v) : spec_(spec) {
  if (spec.is_prime_field())
    residue_ = PrimeField(spec.modulus).from_int(v);
  else
    rational_ = static_cast<long>(v);
}

FieldScalar FieldScalar::from_rational(const FieldSpec& spec, const mpq_class& v) {
  FieldScalar s;
  s.spec_ = spec;
  if (spec.is_prime_field()) {
    s.residue_ = PrimeField(spec.modulus).from_rational(v);
  } else {
    s.rational_ = v;
    s.rational_.canonicalize();
  }
  return s;
}

FieldScalar FieldScalar::from_residue(const FieldSpec& spec, std::uint64_t residue) {
  if (!spec.is_prime_field()) return FieldScalar(spec, static_cast<std::int64_t>(residue));
  FieldScalar s;
  s.spec_ = spec;
  s.residue_ = residue % spec.modulus;
  return s;
}

FieldScalar FieldScalar::parse(const FieldSpec& spec, std::string_view token) {
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = token.find('/');
  std::string_view num = token.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : token.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("bad matrix entry '" + std::string(token) + "'");
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  mpq_class q{mpz_class(n), mpz_class(std::string(den))};
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  q.canonicalize();
  return from_rational(spec, q);
}

bool FieldScalar::is_zero() const {
  return spec_.is_prime_field() ? residue_ == 0 : sgn(rational_) == 0;
}

std::uint64_t FieldScalar::residue() const {
  if (!spec_.is_prime_field()) throw std::logic_error("residue() on a rational scalar");
  return residue_;
}

const mpq_class& FieldScalar::rational() const {
  if (spec_.is_prime_field()) throw std::logic_error("rational() on a GF(p) scalar");
  return rational_;
}

std::string FieldScalar::to_string() const {
  return spec_.is_prime_field() ? std::to_string(residue_) : rational_.get_str();
}

void FieldScalar::require_same_field(const FieldScalar& o) const {
  if (!(spec_ == o.spec_))
    throw std::invalid_argument("mixing scalars from " + spec_.name() + " and " + o.spec_.name());
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  require_same_field(o);
  FieldScalar r = *this;
  if (spec_.is_prime_field())
    r.residue_ = PrimeField(spec_.modulus).add(residue_, o.residue_);
  else
    r.rational_ = rational_ + o.rational_;
  return r;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  require_same_field(o);
  FieldScalar r = *this;
  if (spec_.is_prime_field())
    r.residue_ = PrimeField(spec_.modulus).mul(residue_, o.residue_);
  else
    r.rational_ = rational_ * o.rational_;
  return r;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  require_same_field(o);
  FieldScalar r = *this;
  if (spec_.is_prime_field()) {
    PrimeField f(spec_.modulus);
    r.residue_ = f.mul(residue_, f.inv(o.residue_));
  } else {
    r.rational_ = rational_ * RationalField{}.inv(o.rational_);
  }
  return r;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  if (spec_.is_prime_field())
    r.residue_ = PrimeField(spec_.modulus).neg(residue_);
  else
    r.rational_ = -rational_;
  return r;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (!(spec_ == o.spec_)) return false;
  return spec_.is_prime_field() ? residue_ == o.residue_ : rational_ == o.rational_;
}

// ---------------------------------------------------------------------------

ExactMatrix::ExactMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols) {
  if (spec.is_prime_field())
    data_ = std::vector<std::uint64_t>(rows * cols, 0);
  else
    data_ = std::vector<mpq_class>(rows * cols);
}

ExactMatrix ExactMatrix::from_rows(const FieldSpec& spec,
                                   const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(spec, rows.size(), cols);
  with_field(spec, [&](const auto& f) {
    auto& v = m.values<std::decay_t<decltype(f)>>();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) v[r * cols + c] = f.from_int(rows[r][c]);
    }
  });
  return m;
}

ExactMatrix ExactMatrix::from_scalars(const FieldSpec& spec, std::size_t rows, std::size_t cols,
                                      const std::vector<FieldScalar>& entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
  ExactMatrix m(spec, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i / cols, i % cols, entries[i]);
  return m;
}

FieldScalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (spec_.is_prime_field()) return FieldScalar::from_residue(spec_, values<PrimeField>()[r * cols_ + c]);
  return FieldScalar::from_rational(spec_, values<RationalField>()[r * cols_ + c]);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const FieldScalar& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (!(v.spec() == spec_)) throw std::invalid_argument("scalar field does not match matrix field");
  if (spec_.is_prime_field())
    values<PrimeField>()[r * cols_ + c] = v.residue();
  else
    values<RationalField>()[r * cols_ + c] = v.rational();
}

bool ExactMatrix::column_is_zero(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  return with_field(spec_, [&](const auto& f) {
    const auto& v = values<std::decay_t<decltype(f)>>();
    for (std::size_t r = 0; r < rows_; ++r)
      if (!f.is_zero(v[r * cols_ + c])) return false;
    return true;
  });
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> cols) const {
  for (auto c : cols)
    if (c >= cols_) throw std::out_of_range("column index " + std::to_string(c) + " out of range");
  ExactMatrix m(spec_, rows_, cols.size());
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(m.data_);
        for (std::size_t r = 0; r < rows_; ++r)
          for (std::size_t j = 0; j < cols.size(); ++j) dst[r * cols.size() + j] = src[r * cols_ + cols[j]];
      },
      data_);
  return m;
}

ExactMatrix ExactMatrix::remove_column(std::size_t c) const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols_; ++j)
    if (j != c) keep.push_back(j);
  return select_columns(keep);
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix m(spec_, cols_, rows_);
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(m.data_);
        for (std::size_t r = 0; r < rows_; ++r)
          for (std::size_t c = 0; c < cols_; ++c) dst[c * rows_ + r] = src[r * cols_ + c];
      },
      data_);
  return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return spec_ == o.spec_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << at(r, c).to_string();
    out << "]\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

RrefResult rref(const ExactMatrix& m) {
  RrefResult res;
  res.reduced = m;
  with_field(m.spec(), [&](const auto& f) {
    auto& v = res.reduced.template values<std::decay_t<decltype(f)>>();
    res.rank = kernels::rref_in_place(f, std::span(v), m.rows(), m.cols(), &res.pivot_cols);
  });
  return res;
}

std::size_t column_rank(const ExactMatrix& m, std::span<const std::size_t> cols) {
  if (cols.empty()) {
    return 0;
  }
  ExactMatrix sub = m.select_columns(cols);
  return with_field(m.spec(), [&](const auto& f) {
    auto& v = sub.template values<std::decay_t<decltype(f)>>();
    return kernels::rank_in_place(f, std::span(v), sub.rows(), sub.cols());
  });
}

std::vector<std::vector<FieldScalar>> left_kernel_basis(const ExactMatrix& m,
                                                        std::span<const std::size_t> cols) {
  // v * G_I = 0  <=>  G_I^T v^T = 0: null space of the |I| x k transpose.
  ExactMatrix t = m.select_columns(cols).transposed();
  const std::size_t k = m.rows();
  std::vector<std::vector<FieldScalar>> basis;
  with_field(m.spec(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto& v = t.template values<F>();
    std::vector<std::size_t> pivots;
    kernels::rref_in_place(f, std::span(v), t.rows(), k, &pivots);
    std::vector<bool> is_pivot(k, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < k; ++free) {
      if (is_pivot[free]) continue;
      std::vector<typename F::value_type> vec(k, f.zero());
      vec[free] = f.one();
      for (std::size_t i = 0; i < pivots.size(); ++i) vec[pivots[i]] = f.neg(v[i * k + free]);
      std::vector<FieldScalar> out;
      out.reserve(k);
      for (auto& x : vec) out.push_back(FieldScalar::from_rational(m.spec(), f.to_rational(x)));
      basis.push_back(std::move(out));
    }
  });
  return basis;
}

std::vector<FieldScalar> row_times(std::span<const FieldScalar> v, const ExactMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row vector length does not match matrix");
  std::vector<FieldScalar> out(m.cols(), FieldScalar(m.spec(), 0));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out[c] = out[c] + v[r] * m.at(r, c);
  return out;
}

}  // namespace starconf
