#include "starconf/graded.hpp"

#include <functional>
#include <string>

namespace starconf {

MonomialTable::MonomialTable(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0 || nvars > kMaxOracleVars)
    throw std::invalid_argument("oracle supports 1.." + std::to_string(kMaxOracleVars) + " variables");
  ensure(0);
}

void MonomialTable::ensure(unsigned t) {
  if (t > kMaxOracleDegree) throw std::invalid_argument("oracle degree limit exceeded");
  while (degrees_.size() <= t) {
    const auto d = static_cast<unsigned>(degrees_.size());
    Degree deg;
    // Exponent vectors of total degree d, x_1 exponent descending first.
    std::function<void(std::size_t, unsigned, PackedMonomial)> rec = [&](std::size_t v, unsigned left,
                                                                         PackedMonomial acc) {
      if (v + 1 == nvars_) {
        deg.mons.push_back(acc + left * var_bit(v));
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) rec(v + 1, left - e, acc + e * var_bit(v));
    };
    rec(0, d, 0);
    deg.index.reserve(deg.mons.size());
    for (std::uint32_t i = 0; i < deg.mons.size(); ++i) deg.index.emplace(deg.mons[i], i);
    if (d > 0) {
      Degree& below = degrees_[d - 1];
      below.up.resize(below.mons.size() * nvars_);
      for (std::uint32_t i = 0; i < below.mons.size(); ++i)
        for (std::size_t v = 0; v < nvars_; ++v)
          below.up[i * nvars_ + v] = deg.index.at(below.mons[i] + var_bit(v));
    }
    degrees_.push_back(std::move(deg));
  }
}

}  // namespace starconf
