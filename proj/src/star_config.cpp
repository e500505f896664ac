#include "starconf/star_config.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "starconf/errors.hpp"

namespace starconf {

namespace {

void check_a(const LinearCode& code, long a) {
  if (a < 1 || a > static_cast<long>(code.n()))
    throw std::out_of_range("a = " + std::to_string(a) + " outside 1.." + std::to_string(code.n()));
}

}  // namespace

std::size_t height_of_ideal(const LinearCode& code, const WeightHierarchy& h, long a) {
  check_a(code, a);
  return code.k() - h.interval_of(a);
}

mpz_class degree_from_tutte(const LinearCode& code, const ShiftedCoeffs& coeffs, const WeightHierarchy& h,
                            long a) {
  check_a(code, a);
  const std::size_t r = h.interval_of(a);
  const long j = a - h.d[r];
  if (r >= coeffs.p.size() || coeffs.p[r] < 0) throw InvariantViolation("p_r undefined");
  mpz_class deg = 0;
  for (long t = 0; t < j; ++t) deg += coeffs.c(static_cast<long>(r), coeffs.p[r] - t);
  if (r == 0) {
    const long k = static_cast<long>(code.k());
    if (deg != binomial(k + a - 1, k))
      throw InvariantViolation("degree of I_" + std::to_string(a) + " at r = 0 is " + deg.get_str() +
                               ", expected C(k+a-1, k)");
  }
  return deg;
}

std::vector<MinimalPrime> minimal_primes_low_height(const LinearCode& code, const WeightHierarchy& h, long a,
                                                    const std::vector<std::vector<Flat>>* flats_by_rank) {
  check_a(code, a);
  const std::size_t r = h.interval_of(a);
  const std::size_t s = code.k() - r;
  const long n = static_cast<long>(code.n());
  std::vector<Flat> own;
  const std::vector<Flat>* flats = nullptr;
  if (flats_by_rank) {
    flats = &(*flats_by_rank)[s];
  } else {
    own = code.matroid().flats_of_rank(s);
    flats = &own;
  }
  std::vector<MinimalPrime> out;
  for (const auto& f : *flats) {
    const long nu = static_cast<long>(subset_size(f.members));
    if (nu >= n - a + 1) out.push_back({f, static_cast<std::size_t>(nu), a - n + nu});
  }
  return out;
}

mpz_class degree_from_primes(const LinearCode& code, const WeightHierarchy& h,
                             const std::vector<MinimalPrime>& primes, long a) {
  check_a(code, a);
  const std::size_t r = h.interval_of(a);
  if (r == 0) throw std::invalid_argument("prime-sum degree needs r >= 1; I_a(C) is a power of m here");
  const long n = static_cast<long>(code.n());
  const long c = static_cast<long>(code.k() - r);
  mpz_class deg = 0;
  for (const auto& p : primes) deg += binomial(static_cast<long>(p.nu) - n + a + c - 1, c);
  return deg;
}

mpz_class mu_of_ideal(const LinearCode& code, const ShiftedCoeffs& coeffs, long a) {
  check_a(code, a);
  const long k = static_cast<long>(code.k()), n = static_cast<long>(code.n());
  mpz_class mu = 0;
  for (long u = 0; u <= std::min(k, n - a); ++u) mu += coeffs.c(k - u, n - a - u);
  return mu;
}

IdentitySides binomial_identity_sides(long alpha, long beta, long gamma) {
  if (!(alpha > beta && beta >= gamma && gamma >= 1))
    throw std::invalid_argument("need alpha > beta >= gamma >= 1");
  IdentitySides s;
  s.lhs = binomial(alpha - beta + gamma - 1, gamma - 1);
  s.rhs = 0;
  for (long u = beta; u <= alpha; ++u) {
    mpz_class term = binomial(alpha, u) * binomial(u - gamma, u - beta);
    if ((u - beta) % 2) s.rhs -= term;
    else s.rhs += term;
  }
  return s;
}

bool binomial_identity_check(long alpha, long beta, long gamma) {
  return binomial_identity_sides(alpha, beta, gamma).holds();
}

IdentitySweep binomial_identity_sweep(long max_alpha) {
  IdentitySweep sweep;
  for (long alpha = 2; alpha <= max_alpha; ++alpha)
    for (long beta = 1; beta < alpha; ++beta)
      for (long gamma = 1; gamma <= beta; ++gamma) {
        ++sweep.checked;
        if (!binomial_identity_check(alpha, beta, gamma)) ++sweep.failures;
      }
  return sweep;
}

std::vector<IdealProfile> full_profile(const LinearCode& code, const ShiftedCoeffs& coeffs,
                                       const WeightHierarchy& h) {
  std::vector<std::vector<Flat>> flats(code.k() + 1);
  for (std::size_t s = 0; s <= code.k(); ++s) flats[s] = code.matroid().flats_of_rank(s);

  std::vector<IdealProfile> out;
  for (long a = 1; a <= static_cast<long>(code.n()); ++a) {
    IdealProfile p;
    p.a = a;
    p.r = h.interval_of(a);
    p.j = a - h.d[p.r];
    p.height = code.k() - p.r;
    p.degree = degree_from_tutte(code, coeffs, h, a);
    p.mu = mu_of_ideal(code, coeffs, a);
    p.power_of_maximal = p.r == 0;
    p.primes = minimal_primes_low_height(code, h, a, &flats);
    if (p.r > 0) {
      mpz_class via_primes = degree_from_primes(code, h, p.primes, a);
      if (via_primes != p.degree)
        throw InvariantViolation("deg I_" + std::to_string(a) + ": Tutte route gives " + p.degree.get_str() +
                                 ", prime sum gives " + via_primes.get_str());
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace starconf
