#ifndef STARCONF_BIVAR_POLY_HPP
#define STARCONF_BIVAR_POLY_HPP

#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace starconf {

/// Sparse polynomial in x, y with big-integer coefficients. Zero
/// coefficients are never stored.
class BivarPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (x-degree, y-degree)

  BivarPoly() = default;
  static BivarPoly constant(const mpz_class& c);
  static BivarPoly monomial(unsigned i, unsigned j, const mpz_class& c = 1);

  mpz_class coeff(unsigned i, unsigned j) const;
  void add_term(unsigned i, unsigned j, const mpz_class& c);
  const std::map<Key, mpz_class>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  unsigned x_degree() const;
  unsigned y_degree() const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  /// Multiplies by x^i y^j.
  BivarPoly shifted(unsigned i, unsigned j) const;
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  /// Highest total degree first, e.g. "x^2 + x + y".
  std::string to_string() const;

 private:
  std::map<Key, mpz_class> terms_;
};

mpz_class evaluate(const BivarPoly& p, const mpz_class& x, const mpz_class& y);

/// (x - 1)^a (y - 1)^b, expanded.
BivarPoly shifted_power(unsigned a, unsigned b);

/// C(n, k) for arbitrary-size n, 0 when k < 0 or k > n (n >= 0); negative n
/// follows the usual extension C(n, k) = n(n-1)...(n-k+1)/k!.
mpz_class binomial(long n, long k);

}  // namespace starconf

#endif  // STARCONF_BIVAR_POLY_HPP
