#include "starconf/conjecture.hpp"

#include <algorithm>
#include <sstream>

#include "starconf/errors.hpp"
#include "starconf/hilbert_oracle.hpp"
#include "starconf/tutte.hpp"

namespace starconf {

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::equal: return "=";
    case CellStatus::differ: return "≠";
    case CellStatus::automatic: return "auto";
    case CellStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::size_t parallel_count(const LinearCode& code, std::size_t ell) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (i == ell) continue;
    std::size_t pair[] = {ell, i};
    if (column_rank(code.matrix(), pair) == 1) ++count;
  }
  return count;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  std::size_t visible = s == "≠" ? 1 : s.size();
  return visible >= width ? s : s + std::string(width - visible, ' ');
}

ShiftedCoeffs shifted_of(const ExactMatrix& m) {
  return whitney_shift(tutte_deletion_contraction(VectorMatroid(m)));
}

}  // namespace

ConjectureReport conjecture_report(const LinearCode& code, const ConjectureOptions& options) {
  const long n = static_cast<long>(code.n());
  ConjectureReport report;
  report.field = code.field();
  report.outside_char0_hypothesis = code.field().is_prime_field();
  report.t_max = options.t_max < 0 ? n + 1 : options.t_max;

  const ShiftedCoeffs coeffs = shifted_of(code.matrix());
  const WeightHierarchy h = hierarchy_from_tutte(coeffs, code);

  for (long a = 1; a <= n; ++a) {
    StabilityRow row;
    row.a = a;
    try {
      row.stable_from = fit_hilbert_polynomial(code, a).stable_from;
      row.consistent_with_linear_resolution = *row.stable_from <= a;
    } catch (const Inconclusive&) {
    }
    report.stability.push_back(row);
  }

  for (long a = 2; a <= n; ++a) {
    const std::size_t r = h.interval_of(a);
    const long j = a - h.d[r];
    for (std::size_t ell = 0; ell < code.n(); ++ell) {
      ColonRow row;
      row.a = a;
      row.ell = ell;
      row.coloop = code.matroid().is_coloop(ell);
      row.parallel_others = parallel_count(code, ell);
      row.automatic = a >= n - static_cast<long>(row.parallel_others);

      ColonDims dims = colon_graded_dims(code, ell, a, report.t_max);
      for (long t = 0; t <= report.t_max; ++t) {
        ColonCell cell;
        cell.t = t;
        cell.colon_dim = dims.colon.entries.at(t);
        cell.target_dim = dims.target.entries.at(t);
        cell.proved = t <= a - 1 || row.coloop || row.automatic;
        const bool same = cell.colon_dim == cell.target_dim;
        if (!same) {
          cell.status = CellStatus::differ;
          if (row.automatic) ++report.automatic_violations;
          else if (row.coloop) ++report.coloop_violations;
          else if (t == a - 1) ++report.berget_violations;
          else if (t < a - 1) ++report.low_degree_violations;
          else ++report.open_differences;
        } else {
          cell.status = row.automatic ? CellStatus::automatic : CellStatus::equal;
        }
        row.cells.push_back(cell);
      }

      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < code.n(); ++i)
        if (i != ell) rest.push_back(i);
      const ExactMatrix rest_matrix = code.matrix().select_columns(rest);
      if (row.coloop || j >= 2) {
        row.recdegree_hypothesis = true;
      } else {
        const ShiftedCoeffs rest_coeffs = shifted_of(rest_matrix);
        row.recdegree_hypothesis = r < rest_coeffs.p.size() && rest_coeffs.p[r] == coeffs.p[r];
      }
      if (options.compare_degrees) {
        try {
          row.colon_degree = fit_colon_hilbert(code, ell, a).degree;
          row.target_degree = fit_product_ideal(rest_matrix, a - 1).degree;
          row.degree_status = *row.colon_degree == *row.target_degree ? CellStatus::equal : CellStatus::differ;
          if (row.recdegree_hypothesis && row.degree_status == CellStatus::differ) ++report.recdegree_mismatches;
        } catch (const Inconclusive&) {
          row.degree_status = CellStatus::inconclusive;
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string render_conjecture_matrix(const ConjectureReport& report, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "field " << report.field.name();
  if (report.outside_char0_hypothesis) out << " (outside the stated hypothesis: char 0)";
  out << "\n\nHilbert function stabilisation of R/I_a(C)\n";
  for (const auto& s : report.stability) {
    out << "  a=" << s.a << "  stable_from=";
    if (s.stable_from) out << *s.stable_from;
    else out << "inconclusive";
    out << (s.consistent_with_linear_resolution ? "  consistent with reg = a-1" : "") << "\n";
  }
  out << "\nI_a(C):l vs I_{a-1}(C\\l), dimension in degree t\n";
  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.size());
  out << "  a  " << pad("l", width) << " |";
  for (long t = 0; t <= report.t_max; ++t) out << " " << pad("t" + std::to_string(t), 4);
  out << " | deg\n";
  for (const auto& row : report.rows) {
    out << "  " << row.a << "  " << pad(labels.at(row.ell), width) << " |";
    for (const auto& c : row.cells) out << " " << pad(to_string(c.status), 4);
    out << " | " << to_string(row.degree_status);
    if (row.recdegree_hypothesis) out << " (recdegree hypothesis holds)";
    if (row.coloop) out << " coloop";
    out << "\n";
  }
  out << "\nproved-slice violations: " << report.proved_violations()
      << "  open differences (t >= a): " << report.open_differences
      << "  recdegree mismatches: " << report.recdegree_mismatches << "\n";
  return out.str();
}

}  // namespace starconf
