#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "starconf/errors.hpp"
#include "starconf/hilbert_oracle.hpp"
#include "starconf/star_config.hpp"
#include "starconf/tutte.hpp"
#include "support/oracles.hpp"

using namespace starconf;

namespace {

const oracle::IntMatrix kE0 = {{1, 0, 1}, {0, 1, 1}};
const oracle::IntMatrix kB3 = {{1, 0, 0, 1, 1, 1, 1, 0, 0}, {0, 1, 0, 1, -1, 0, 0, 1, 1}, {0, 0, 1, 0, 0, 1, -1, 1, -1}};

std::vector<IdealProfile> profiles_of(const LinearCode& c) {
  const ShiftedCoeffs s = whitney_shift(tutte_deletion_contraction(c.matroid()));
  return full_profile(c, s, hierarchy_from_tutte(s, c));
}

ExactMatrix identity_columns(std::size_t k, const std::vector<std::size_t>& cols, std::uint64_t p = 5) {
  std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(cols.size(), 0));
  std::size_t j = 0;
  for (auto c : cols) rows[c][j++] = 1;
  return ExactMatrix::from_rows(FieldSpec::prime_field(p), rows);
}

}  // namespace

TEST_CASE("interpolation and the P basis") {
  const RationalPoly p = RationalPoly::interpolate(2, {mpq_class(9), mpq_class(18), mpq_class(27)});
  CHECK(p.to_string() == "9t - 9");
  CHECK(p.degree() == 1);
  CHECK(p.p_basis_string() == "9P_1 - 18P_0");
  CHECK(RationalPoly::p_basis(2)(3) == 10);
  CHECK(RationalPoly::interpolate(0, {mpq_class(0), mpq_class(0)}).is_zero());
  CHECK(RationalPoly::interpolate(0, {mpq_class(3)}).p_basis_string() == "3P_0");
}

TEST_CASE("fit of a synthetic Hilbert function") {
  // Twisted cubic style: HF(t) = 3t + 1 after t = 0, one garbage value first.
  const HilbertSource hf = [](long t) -> std::size_t { return t == 0 ? 1 : 3 * t + 1; };
  const FittedHP fit = fit_hilbert_values(hf, 3, {0, 6}, 20);
  CHECK(fit.poly.to_string() == "3t + 1");
  CHECK(fit.degree == 3);
  CHECK(fit.implied_height == 1);
  CHECK(fit.stable_from == 0);
}

TEST_CASE("fit widens the window and gives up at the cap") {
  const HilbertSource late = [](long t) -> std::size_t { return t < 12 ? static_cast<std::size_t>(t * t * t) : 5; };
  const FittedHP fit = fit_hilbert_values(late, 2, {0, 4}, 40);
  CHECK(fit.poly.to_string() == "5");
  CHECK(fit.stable_from == 12);
  CHECK(fit.window.hi > 12);
  const HilbertSource never = [](long t) -> std::size_t { return static_cast<std::size_t>(t * t * t); };
  CHECK_THROWS_AS(fit_hilbert_values(never, 2, {0, 4}, 16), Inconclusive);
  CHECK_THROWS_AS(fit_hilbert_values(never, 3, {0, 3}, 16), std::invalid_argument);
}

TEST_CASE("quotient dimensions match the naive span") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 12; ++trial) {
    const std::int64_t p = std::array<std::int64_t, 3>{2, 3, 5}[trial % 3];
    const std::size_t k = 2 + trial % 3, n = k + 1 + trial % 4;
    const auto g = oracle::random_code(rng, k, n, p);
    const LinearCode c = oracle::to_code(g, p);
    for (std::size_t a = 1; a <= n; ++a) {
      const FittedHP fit = fit_hilbert_polynomial(c, static_cast<long>(a));
      for (int t = 0; t <= std::min<int>(static_cast<int>(fit.hf.size()) - 1, static_cast<int>(a) + 3); ++t)
        CHECK(fit.hf[t] == oracle::naive_star_quotient_dim(g, a, t, p));
    }
  }
}

TEST_CASE("e0 Hilbert polynomials") {
  const LinearCode c = oracle::to_code(kE0, 2);
  CHECK(fit_hilbert_polynomial(c, 1).poly.is_zero());
  CHECK(fit_hilbert_polynomial(c, 2).degree == 3);
  const FittedHP three = fit_hilbert_polynomial(c, 3, FitWindow{0, 8});
  CHECK(three.poly.p_basis_string() == "3P_0");
  CHECK(three.implied_height == 1);
  CHECK(mu_oracle(c, 3) == 1);
  CHECK(mu_oracle(c, 1) == 2);
}

TEST_CASE("B3 Hilbert polynomials") {
  const LinearCode c = oracle::to_code(kB3, 5);
  CHECK(fit_hilbert_polynomial(c, 6).poly.p_basis_string() == "3P_0");
  CHECK(fit_hilbert_polynomial(c, 7).poly.p_basis_string() == "13P_0");
  CHECK(fit_hilbert_polynomial(c, 8).poly.p_basis_string() == "36P_0");
  CHECK(fit_hilbert_polynomial(c, 9).poly.p_basis_string() == "9P_1 - 36P_0");
  CHECK(fit_hilbert_polynomial(c, 5).degree == 35);
  const OracleCheck check = oracle_agreement(c, profiles_of(c), FitWindow{0, 14});
  CHECK(check.all_ok());
  CHECK(check.rows.size() == 9);
}

TEST_CASE("colon dimensions match the naive span") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 8; ++trial) {
    const std::int64_t p = std::array<std::int64_t, 3>{2, 3, 5}[trial % 3];
    const std::size_t k = 2 + trial % 2, n = k + 2 + trial % 2;
    const auto g = oracle::random_code(rng, k, n, p);
    const LinearCode c = oracle::to_code(g, p);
    for (std::size_t a = 2; a <= n; ++a)
      for (std::size_t ell = 0; ell < n; ++ell)
        for (int t = 0; t <= static_cast<int>(a) + 1; ++t) {
          auto products = oracle::afold_products(g, a);
          const std::size_t without = oracle::naive_quotient_dim(products, k, t + 1, p);
          products.push_back({oracle::form_of(g, ell)});
          const std::size_t with = oracle::naive_quotient_dim(products, k, t + 1, p);
          const std::size_t expected = oracle::monomials(k, t).size() - (without - with);
          CHECK(colon_graded_dim(c, ell, static_cast<long>(a), t) == expected);
        }
  }
}

TEST_CASE("colon of e0 by a form") {
  const LinearCode c = oracle::to_code(kE0, 2);
  const ColonDims d = colon_graded_dims(c, 0, 2, 3);
  for (long t = 0; t <= 3; ++t) CHECK(d.colon.entries.at(t) == d.target.entries.at(t));
  CHECK(d.colon.entries.at(1) == 2);
}

TEST_CASE("powers of linear primes") {
  for (std::size_t c = 1; c <= 3; ++c)
    for (unsigned i = 1; i <= 4; ++i) {
      std::vector<std::size_t> cols(c);
      std::iota(cols.begin(), cols.end(), 0);
      const FittedHP fit = fit_prime_power_intersection({{identity_columns(5, cols), i}}, 5);
      CHECK(fit.degree == binomial(static_cast<long>(c + i) - 1, static_cast<long>(c)));
      CHECK(fit.implied_height == c);
    }
}

TEST_CASE("degree is additive over distinct primes of one height") {
  const std::vector<PrimePower> parts = {{identity_columns(4, {0, 1}), 2},
                                         {identity_columns(4, {2, 3}), 1},
                                         {identity_columns(4, {0, 2}), 3}};
  mpz_class sum = 0;
  for (const auto& part : parts) sum += fit_prime_power_intersection({part}, 4).degree;
  CHECK(fit_prime_power_intersection(parts, 4).degree == sum);
  CHECK(sum == 3 + 1 + 6);
}

TEST_CASE("dependent prime generators are rejected") {
  const ExactMatrix twice = ExactMatrix::from_rows(FieldSpec::prime_field(5), {{1, 2}, {0, 0}, {0, 0}});
  CHECK_THROWS_AS(fit_prime_power_intersection({{twice, 1}}, 3), std::invalid_argument);
}

TEST_CASE("dense generators print readably") {
  const auto gens = afold_generators(oracle::to_code(kE0, 2), 3);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].to_string() == "x1^2*x2 + x1*x2^2");
}

TEST_CASE("generators and graded dimensions of fixed instances") {
  const LinearCode e0 = oracle::to_code(kE0, 2);
  CHECK(afold_generators(e0, 1).size() == 3);
  const auto quadrics = afold_generators(e0, 2);
  CHECK(quadrics.size() == 3);
  CHECK(graded_dim_ideal(quadrics, 2) == 3);
  CHECK(graded_dim_ideal(quadrics, 1) == 0);
  const LinearCode b3 = oracle::to_code(kB3, 5);
  CHECK(graded_dim_ideal(afold_generators(b3, 5), 5) == 21);
  CHECK(mu_oracle(b3, 7) == 23);
  const FittedHP six = fit_hilbert_polynomial(b3, 6);
  CHECK(six.poly.to_string() == "3");
  CHECK(six.implied_height == 2);
  const FittedHP nine = fit_hilbert_polynomial(b3, 9);
  CHECK(nine.poly.to_string() == "9t - 27");
  CHECK(nine.degree == 9);
  CHECK(nine.implied_height == 1);
  const FittedHP two = fit_hilbert_polynomial(e0, 2);
  CHECK(two.poly.is_zero());
  CHECK(two.implied_height == 2);
  CHECK(two.hf[0] == 1);
  CHECK(two.hf[1] == 2);
  CHECK(two.hf[2] == 0);
}
