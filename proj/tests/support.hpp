#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "chebyknot/diagram.hpp"
#include "chebyknot/laurent.hpp"
#include "chebyknot/skein.hpp"
#include "chebyknot/terms.hpp"

namespace testing {

using namespace chebyknot;

// Bracket straight from a PD code: A-smoothing of X[i,j,k,l] joins i-j and k-l.
// Shares nothing with the diagram-side state sum.
inline LaurentPoly pd_bracket(const PdCode& pd) {
  const std::size_t n = pd.crossings.size();
  int max_label = 0;
  for (const auto& x : pd.crossings) {
    for (int v : x) max_label = std::max(max_label, v);
  }
  LaurentPoly total;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::vector<int> parent(max_label + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    auto unite = [&](int u, int v) { parent[find(u)] = find(v); };
    int a_count = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const auto& x = pd.crossings[c];
      if ((state >> c) & 1) {
        unite(x[0], x[3]);
        unite(x[1], x[2]);
      } else {
        ++a_count;
        unite(x[0], x[1]);
        unite(x[2], x[3]);
      }
    }
    int loops = 0;
    std::vector<bool> seen(max_label + 1, false);
    for (const auto& x : pd.crossings) {
      for (int v : x) {
        int r = find(v);
        if (!seen[r]) {
          seen[r] = true;
          ++loops;
        }
      }
    }
    loops += static_cast<int>(pd.loops.size());
    const int b_count = static_cast<int>(n) - a_count;
    total += LaurentPoly::monomial(a_count - b_count) * LaurentPoly::delta_power(loops - 1);
  }
  if (n == 0) total = LaurentPoly::delta_power(static_cast<unsigned>(std::max<std::size_t>(pd.loops.size(), 1) - 1));
  return total;
}

// Number of sign sequences where `sum` disagrees with the state-sum oracle.
inline std::size_t oracle_mismatches(const TermSum& sum, const BilliardDiagram& d) {
  std::size_t bad = 0;
  for (const auto& [s, p] : bracket_all_signs(d)) {
    if (eval_sum(sum, s) != p) ++bad;
  }
  return bad;
}

inline std::size_t oracle_mismatches(const SkeletonSum& sum, const BilliardDiagram& d) {
  std::size_t bad = 0;
  for (const auto& [s, p] : bracket_all_signs(d)) {
    if (eval_skeletons(sum, s) != p) ++bad;
  }
  return bad;
}

inline LaurentPoly A(int e, Coeff c = 1) { return LaurentPoly::monomial(e, c); }

}  // namespace testing
