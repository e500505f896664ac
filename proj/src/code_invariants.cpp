#include "starconf/code_invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>

#include "starconf/errors.hpp"

namespace starconf {

namespace {

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + " scans all 2^n subsets and needs n <= " + std::to_string(cap) +
                      ", got n = " + std::to_string(n));
}

std::string signed_coefficient(const FieldScalar& s, bool& negative) {
  if (s.spec().is_prime_field()) {
    std::uint64_t p = s.spec().modulus, v = s.residue();
    negative = p > 2 && v > p / 2;
    return std::to_string(negative ? p - v : v);
  }
  mpq_class q = s.rational();
  negative = q < 0;
  return mpq_class(abs(q)).get_str();
}

}  // namespace

std::string render_linear_form(const ExactMatrix& m, std::size_t col) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    FieldScalar s = m.at(r, col);
    if (s.is_zero()) continue;
    bool negative = false;
    std::string mag = signed_coefficient(s, negative);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != "1") out += mag;
    out += "x" + std::to_string(r + 1);
  }
  return out.empty() ? "0" : out;
}

LinearCode::LinearCode(ExactMatrix generator, std::vector<std::string> labels)
    : matroid_(std::move(generator)), labels_(std::move(labels)) {
  const ExactMatrix& g = matroid_.matrix();
  if (g.rows() == 0 || g.cols() == 0) throw InputError("generator matrix must have k >= 1 and n >= 1");
  if (g.cols() > kMaxGroundSize)
    throw InputError("n = " + std::to_string(g.cols()) + " exceeds the ground-set limit " +
                     std::to_string(kMaxGroundSize));
  for (std::size_t c = 0; c < g.cols(); ++c)
    if (g.column_is_zero(c))
      throw InputError("column " + std::to_string(c + 1) +
                       " is zero; codes may not have zero columns (no loops in the matroid)");
  if (matroid_.full_rank() != g.rows())
    throw InputError("generator matrix has rank " + std::to_string(matroid_.full_rank()) +
                     " but k = " + std::to_string(g.rows()) + "; rank(G) = k is required");
  if (labels_.empty()) {
    for (std::size_t c = 0; c < g.cols(); ++c) labels_.push_back(render_linear_form(g, c));
  } else if (labels_.size() != g.cols()) {
    throw InputError("expected " + std::to_string(g.cols()) + " labels, got " + std::to_string(labels_.size()));
  }
}

std::size_t WeightHierarchy::interval_of(long a) const {
  if (d.size() < 2 || a < 1 || a > d.back())
    throw std::out_of_range("a = " + std::to_string(a) + " outside 1..n");
  for (std::size_t r = 0; r + 1 < d.size(); ++r)
    if (d[r] < a && a <= d[r + 1]) return r;
  throw std::out_of_range("hierarchy does not cover a = " + std::to_string(a));
}

void WeightHierarchy::validate(std::size_t n) const {
  const std::size_t k = this->k();
  auto fail = [&](const std::string& why) { throw InvariantViolation("weight hierarchy: " + why); };
  if (d.empty() || d[0] != 0) fail("d_0 must be 0");
  for (std::size_t r = 1; r <= k; ++r) {
    if (d[r] <= d[r - 1]) fail("d_" + std::to_string(r) + " does not exceed d_" + std::to_string(r - 1));
    if (d[r] > static_cast<long>(n - k + r)) fail("d_" + std::to_string(r) + " > n - k + r");
  }
  if (k > 0 && d[k] != static_cast<long>(n)) fail("d_k != n");
}

WeightHierarchy hierarchy_bruteforce(const VectorMatroid& m, Execution exec, std::size_t cap) {
  const std::size_t n = m.size(), k = m.full_rank();
  require_cap(n, cap, "brute-force GHW");
  if (n <= kEagerRankLimit) m.precompute_ranks(exec);
  const auto total = static_cast<std::int64_t>(std::int64_t{1} << n);
  // best[s] = max{ |J| : r(J) = s }
  std::vector<long> best(k + 1, -1);
  if (exec == Execution::serial) {
    for (std::int64_t s = 0; s < total; ++s) {
      auto sub = static_cast<GroundSubset>(s);
      auto& b = best[m.rank(sub)];
      b = std::max(b, static_cast<long>(subset_size(sub)));
    }
  } else {
#pragma omp parallel
    {
      std::vector<long> local(k + 1, -1);
#pragma omp for schedule(dynamic, 4096) nowait
      for (std::int64_t s = 0; s < total; ++s) {
        auto sub = static_cast<GroundSubset>(s);
        auto& b = local[m.rank(sub)];
        b = std::max(b, static_cast<long>(subset_size(sub)));
      }
#pragma omp critical(starconf_ghw_merge)
      for (std::size_t r = 0; r <= k; ++r) best[r] = std::max(best[r], local[r]);
    }
  }
  WeightHierarchy h;
  h.d.resize(k + 1);
  for (std::size_t r = 0; r <= k; ++r) h.d[r] = static_cast<long>(n) - best[k - r];
  return h;
}

long ghw_bruteforce(const LinearCode& code, std::size_t r, Execution exec, std::size_t cap) {
  if (r > code.k()) throw std::out_of_range("r > k");
  return hierarchy_bruteforce(code.matroid(), exec, cap).d[r];
}

long ghw_from_tutte(const ShiftedCoeffs& coeffs, const LinearCode& code, std::size_t r) {
  if (r > code.k() || r >= coeffs.p.size() || coeffs.p[r] < 0)
    throw InvariantViolation("p_" + std::to_string(r) + " undefined for this Tutte polynomial");
  return static_cast<long>(code.n()) - coeffs.p[r] - static_cast<long>(code.k()) + static_cast<long>(r);
}

WeightHierarchy hierarchy_from_tutte(const ShiftedCoeffs& coeffs, const LinearCode& code) {
  WeightHierarchy h;
  for (std::size_t r = 0; r <= code.k(); ++r) h.d.push_back(ghw_from_tutte(coeffs, code, r));
  return h;
}

WeightHierarchy hierarchy_from_dual_rank(const VectorMatroid& m, Execution exec, std::size_t cap) {
  const std::size_t n = m.size(), k = m.full_rank();
  require_cap(n, cap, "dual-rank GHW");
  if (n <= kEagerRankLimit) m.precompute_ranks(exec);
  const auto total = static_cast<std::int64_t>(std::int64_t{1} << n);
  constexpr long kNone = std::numeric_limits<long>::max();
  // best[r] = min{ |I| : |I| - r*(I) = r }
  std::vector<long> best(k + 1, kNone);
  auto visit = [&](std::vector<long>& acc, GroundSubset sub) {
    std::size_t r = subset_size(sub) - m.dual_rank(sub);
    if (r <= k) acc[r] = std::min(acc[r], static_cast<long>(subset_size(sub)));
  };
  if (exec == Execution::serial) {
    for (std::int64_t s = 0; s < total; ++s) visit(best, static_cast<GroundSubset>(s));
  } else {
#pragma omp parallel
    {
      std::vector<long> local(k + 1, kNone);
#pragma omp for schedule(dynamic, 4096) nowait
      for (std::int64_t s = 0; s < total; ++s) visit(local, static_cast<GroundSubset>(s));
#pragma omp critical(starconf_dual_merge)
      for (std::size_t r = 0; r <= k; ++r) best[r] = std::min(best[r], local[r]);
    }
  }
  WeightHierarchy h;
  for (long b : best) {
    if (b == kNone) throw InvariantViolation("dual-rank route left some d_r undefined");
    h.d.push_back(b);
  }
  return h;
}

long ghw_from_dual_rank(const LinearCode& code, std::size_t r, Execution exec, std::size_t cap) {
  if (r > code.k()) throw std::out_of_range("r > k");
  return hierarchy_from_dual_rank(code.matroid(), exec, cap).d[r];
}

ExactMatrix dual_generator(const ExactMatrix& g) {
  RrefResult red = rref(g);
  const std::size_t n = g.cols(), k = red.rank;
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  ExactMatrix h(g.spec(), free_cols.size(), n);
  const FieldScalar one(g.spec(), 1);
  for (std::size_t s = 0; s < free_cols.size(); ++s) {
    h.set(s, free_cols[s], one);
    for (std::size_t i = 0; i < k; ++i) h.set(s, red.pivot_cols[i], -red.reduced.at(i, free_cols[s]));
  }
  return h;
}

WeiDuality wei_duality_check(const LinearCode& code, Execution exec, std::size_t cap) {
  const long n = static_cast<long>(code.n());
  WeiDuality out;
  WeightHierarchy own = hierarchy_bruteforce(code.matroid(), exec, cap);
  out.lhs.assign(own.d.begin() + 1, own.d.end());

  ExactMatrix h = dual_generator(code.matrix());
  std::set<long> rhs;
  for (long i = 1; i <= n; ++i) rhs.insert(i);
  if (h.rows() > 0) {
    out.dual = hierarchy_bruteforce(VectorMatroid(h), exec, cap);
    for (std::size_t s = 1; s < out.dual.d.size(); ++s) rhs.erase(n + 1 - out.dual.d[s]);
  } else {
    out.dual.d = {0};
  }
  out.rhs.assign(rhs.begin(), rhs.end());
  out.holds = out.lhs == out.rhs;
  return out;
}

Subcode subcode_from_flat(const LinearCode& code, const Flat& f) {
  const VectorMatroid& m = code.matroid();
  if (m.closure(f.members).members != f.members) throw std::invalid_argument("subset is not a flat");
  if (m.rank(f.members) != f.rank) throw std::invalid_argument("flat rank mismatch");
  if (f.rank >= code.k()) throw std::invalid_argument("flat of rank k gives the zero subcode");
  auto cols = subset_elements(f.members);
  Subcode out;
  out.source_flat = f;
  for (const auto& v : left_kernel_basis(code.matrix(), cols)) {
    auto w = row_times(v, code.matrix());
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!w[i].is_zero()) out.support |= GroundSubset{1} << i;
    out.basis.push_back(std::move(w));
  }
  return out;
}

mpz_class minimal_support_subcode_count(const ShiftedCoeffs& coeffs, std::size_t r) {
  if (r >= coeffs.p.size() || coeffs.p[r] < 0) return 0;
  return coeffs.c(static_cast<long>(r), coeffs.p[r]);
}

std::size_t minimal_support_flat_count(const LinearCode& code, const ShiftedCoeffs& coeffs, std::size_t r) {
  if (r > code.k() || r >= coeffs.p.size() || coeffs.p[r] < 0) return 0;
  const std::size_t target = code.k() - r + static_cast<std::size_t>(coeffs.p[r]);
  std::size_t count = 0;
  for (const auto& f : code.matroid().flats_of_rank(code.k() - r))
    if (subset_size(f.members) == target) ++count;
  return count;
}

}  // namespace starconf
