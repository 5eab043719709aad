#include "chebyknot/tables.hpp"

#include <algorithm>
#include <stdexcept>

#include "chebyknot/recursions.hpp"

namespace chebyknot {

const std::vector<TableRow>& table_rows(int which) {
  static const std::vector<TableRow> two_bridge = {
      {2, "U", {1, 0}},
      {4, "3_1", {1, -1, 0, -1}},
      {5, "4_1", {1, -1, 1, -1, 1}},
      {7, "6_3", {-1, 2, -2, 3, -2, 2, -1}},
      {8, "7_7", {1, -3, 3, -4, 4, -3, 2, -1}},
      {10, "9_31", {-1, 4, -6, 8, -10, 9, -8, 5, -3, 1}},
      {11, "10_45", {-1, 4, -7, 11, -14, 15, -14, 11, -7, 4, -1}},
  };
  // The 6_2 row is printed as "2-2"; read as two entries.
  static const std::vector<TableRow> three_bridge = {
      {2, "U", {1}},
      {3, "4_1", {1, -1, 1, -1, 1}},
      {4, "6_2", {1, -1, 2, -2, 2, -2, 1}},
      {6, "10_116", {1, -4, 8, -11, 15, -16, 15, -12, 8, -4, 1}},
      {7, "12a_0960", {1, -5, 13, -23, 34, -42, 45, -42, 34, -23, 13, -5, 1}},
  };
  if (which == 1) return two_bridge;
  if (which == 2) return three_bridge;
  throw std::invalid_argument("table must be 1 or 2");
}

SignSequence table_signs(int which, int b) {
  std::string s;
  if (which == 1) {
    for (int k = 0; k < b - 1; ++k) s += k % 2 == 0 ? '+' : '-';
  } else if (which == 2) {
    for (int k = 0; k < 2 * (b - 1); ++k) s += (k / 2) % 2 == 0 ? '+' : '-';
  } else {
    throw std::invalid_argument("table must be 1 or 2");
  }
  return SignSequence::parse(s);
}

LaurentPoly table_bracket(int which, int b) {
  auto s = table_signs(which, b);
  if (which == 1) return eval_skeletons(f_skeletons(b), s);
  if (b >= 4) return eval_skeletons(h_skeletons(b), s);
  return eval_sum(h_terms(b), s);
}

bool coefficients_match(const std::vector<Coeff>& computed, const std::vector<Coeff>& printed) {
  return computed == printed || std::equal(computed.rbegin(), computed.rend(), printed.begin(), printed.end());
}

std::vector<Coeff> oriented_like(const std::vector<Coeff>& computed, const std::vector<Coeff>& printed) {
  if (computed == printed) return computed;
  std::vector<Coeff> rev(computed.rbegin(), computed.rend());
  return rev == printed ? rev : computed;
}

std::string tuple_string(const std::vector<Coeff>& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(c[k]);
  }
  return out + ")";
}

}  // namespace chebyknot
