#ifndef STARCONF_STAR_CONFIG_HPP
#define STARCONF_STAR_CONFIG_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "starconf/code_invariants.hpp"
#include "starconf/matroid.hpp"
#include "starconf/tutte.hpp"

namespace starconf {

/// A height-(k - r) minimal prime p_F of I_a(C), F a flat of rank k - r,
/// appearing with exponent a - n + |F|.
struct MinimalPrime {
  Flat flat;
  std::size_t nu = 0;  // |F|
  long exponent = 0;

  friend bool operator==(const MinimalPrime&, const MinimalPrime&) = default;
};

struct IdealProfile {
  long a = 0;
  std::size_t r = 0;  // d_r < a <= d_{r+1}
  long j = 0;         // a - d_r
  std::size_t height = 0;
  mpz_class degree;
  mpz_class mu;
  /// For r = 0 the ideal is m^a; primes then holds the single flat [n].
  bool power_of_maximal = false;
  std::vector<MinimalPrime> primes;

  friend bool operator==(const IdealProfile&, const IdealProfile&) = default;
};

/// k - r. Throws std::out_of_range unless 1 <= a <= n.
std::size_t height_of_ideal(const LinearCode& code, const WeightHierarchy& h, long a);

/// sum_{t=0}^{j-1} c_{r, p_r - t}; for r = 0 also checked against C(k+a-1, k).
mpz_class degree_from_tutte(const LinearCode& code, const ShiftedCoeffs& coeffs,
                            const WeightHierarchy& h, long a);

/// Flats of rank k - r with |F| >= n - a + 1. flats_by_rank[s], when given,
/// must hold flats_of_rank(s).
std::vector<MinimalPrime> minimal_primes_low_height(
    const LinearCode& code, const WeightHierarchy& h, long a,
    const std::vector<std::vector<Flat>>* flats_by_rank = nullptr);

/// sum over primes of C(nu - n + a + k - r - 1, k - r). Throws
/// std::invalid_argument when r = 0.
mpz_class degree_from_primes(const LinearCode& code, const WeightHierarchy& h,
                             const std::vector<MinimalPrime>& primes, long a);

/// sum_{u=0}^{min(k, n-a)} c_{k-u, n-a-u}.
mpz_class mu_of_ideal(const LinearCode& code, const ShiftedCoeffs& coeffs, long a);

/// Both sides of C(alpha-beta+gamma-1, gamma-1) = sum_{u=beta}^{alpha}
/// (-1)^{u-beta} C(alpha,u) C(u-gamma, u-beta).
struct IdentitySides {
  mpz_class lhs, rhs;
  bool holds() const { return lhs == rhs; }
};
/// Throws std::invalid_argument unless alpha > beta >= gamma >= 1.
IdentitySides binomial_identity_sides(long alpha, long beta, long gamma);
bool binomial_identity_check(long alpha, long beta, long gamma);

struct IdentitySweep {
  std::size_t checked = 0;
  std::size_t failures = 0;
};
/// Every triple with max_alpha >= alpha > beta >= gamma >= 1.
IdentitySweep binomial_identity_sweep(long max_alpha);

/// One profile per a = 1..n. Throws InvariantViolation when the Tutte and
/// prime-sum degrees disagree.
std::vector<IdealProfile> full_profile(const LinearCode& code, const ShiftedCoeffs& coeffs,
                                       const WeightHierarchy& h);

}  // namespace starconf

#endif  // STARCONF_STAR_CONFIG_HPP
