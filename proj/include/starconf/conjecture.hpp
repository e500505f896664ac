#ifndef STARCONF_CONJECTURE_HPP
#define STARCONF_CONJECTURE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "starconf/code_invariants.hpp"
#include "starconf/exact_arith.hpp"

namespace starconf {

enum class CellStatus { equal, differ, automatic, inconclusive };
std::string to_string(CellStatus s);

/// dim (I_a(C) : l)_t against dim (I_{a-1}(C \ l))_t.
struct ColonCell {
  long t = 0;
  std::size_t colon_dim = 0;
  std::size_t target_dim = 0;
  CellStatus status = CellStatus::equal;
  /// Equality here is a theorem: t <= a - 1, a coloop, or I_a(C) = l I_{a-1}(C \ l).
  bool proved = false;
};

struct ColonRow {
  long a = 0;
  std::size_t ell = 0;                 // 0-based column
  bool coloop = false;
  std::size_t parallel_others = 0;     // other columns proportional to l
  bool automatic = false;              // a >= n - parallel_others
  std::vector<ColonCell> cells;

  /// Degree comparison of R/(I_a : l) and R/I_{a-1}(C \ l) via fitted HPs.
  bool recdegree_hypothesis = false;   // j >= 2, or j = 1 and p_r = p'_r, or coloop
  std::optional<mpz_class> colon_degree;
  std::optional<mpz_class> target_degree;
  CellStatus degree_status = CellStatus::inconclusive;
};

/// HF stabilisation of R / I_a(C).
struct StabilityRow {
  long a = 0;
  std::optional<long> stable_from;
  /// stable_from <= a: a necessary condition for reg(R/I_a) = a - 1, nothing more.
  bool consistent_with_linear_resolution = false;
};

struct ConjectureOptions {
  long t_max = -1;           // negative: n + 1
  bool compare_degrees = true;
};

struct ConjectureReport {
  FieldSpec field;
  bool outside_char0_hypothesis = false;
  long t_max = 0;
  std::vector<StabilityRow> stability;
  std::vector<ColonRow> rows;

  std::size_t berget_violations = 0;     // t = a - 1, l not a coloop
  std::size_t coloop_violations = 0;     // l a coloop, any t
  std::size_t automatic_violations = 0;  // a >= n - parallel_others
  std::size_t low_degree_violations = 0; // t < a - 1 (both sides vanish)
  std::size_t recdegree_mismatches = 0;  // hypothesis holds but degrees differ
  std::size_t open_differences = 0;      // t >= a cells that differ

  std::size_t proved_violations() const {
    return berget_violations + coloop_violations + automatic_violations + low_degree_violations;
  }
};

/// Columns other than ell that are nonzero multiples of column ell.
std::size_t parallel_count(const LinearCode& code, std::size_t ell);

ConjectureReport conjecture_report(const LinearCode& code, const ConjectureOptions& options = {});

/// Rows: (a, l); columns: t; cells "=", "≠", "auto", "inconclusive".
std::string render_conjecture_matrix(const ConjectureReport& report, const std::vector<std::string>& labels);

}  // namespace starconf

#endif  // STARCONF_CONJECTURE_HPP
