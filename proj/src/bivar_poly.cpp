#include "starconf/bivar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace starconf {

BivarPoly BivarPoly::constant(const mpz_class& c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(unsigned i, unsigned j, const mpz_class& c) {
  BivarPoly p;
  p.add_term(i, j, c);
  return p;
}

mpz_class BivarPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void BivarPoly::add_term(unsigned i, unsigned j, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned BivarPoly::x_degree() const {
  unsigned d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first);
  return d;
}

unsigned BivarPoly::y_degree() const {
  unsigned d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.second);
  return d;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly r = *this;
  r += o;
  return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add_term(a.first + b.first, a.second + b.second, ca * cb);
  return r;
}

BivarPoly BivarPoly::shifted(unsigned i, unsigned j) const {
  if (i == 0 && j == 0) return *this;
  BivarPoly r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(Key{key.first + i, key.second + j}, c);
  return r;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, mpz_class>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    unsigned da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : ordered) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool bare = key.first == 0 && key.second == 0;
    if (mag != 1 || bare) out << mag.get_str();
    auto var = [&](char v, unsigned e) {
      if (e == 0) return;
      out << v;
      if (e > 1) out << '^' << e;
    };
    var('x', key.first);
    var('y', key.second);
  }
  return out.str();
}

mpz_class evaluate(const BivarPoly& p, const mpz_class& x, const mpz_class& y) {
  mpz_class total = 0;
  for (const auto& [key, c] : p.terms()) {
    mpz_class xp, yp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), key.first);
    mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), key.second);
    total += c * xp * yp;
  }
  return total;
}

mpz_class binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  // Multiplicative formula; each partial product is an integer.
  mpz_class r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

BivarPoly shifted_power(unsigned a, unsigned b) {
  BivarPoly r;
  for (unsigned i = 0; i <= a; ++i) {
    mpz_class ci = binomial(a, i);
    if ((a - i) % 2) ci = -ci;
    for (unsigned j = 0; j <= b; ++j) {
      mpz_class cj = binomial(b, j);
      if ((b - j) % 2) cj = -cj;
      r.add_term(i, j, ci * cj);
    }
  }
  return r;
}

}  // namespace starconf
