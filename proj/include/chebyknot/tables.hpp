#pragma once

// The two alternating families: T(3,b) with signs +-+-... and T(5,b) with
// signs ++--++--..., with their printed coefficient strings.

#include <string>
#include <vector>

#include "chebyknot/diagram.hpp"
#include "chebyknot/laurent.hpp"

namespace chebyknot {

struct TableRow {
  int b = 0;
  std::string knot;
  std::vector<Coeff> printed;
};

/// which = 1: T(3,b) rows; which = 2: T(5,b) rows. Throws std::invalid_argument otherwise.
const std::vector<TableRow>& table_rows(int which);
SignSequence table_signs(int which, int b);
/// Bracket from the recursion (f_b or h_b).
LaurentPoly table_bracket(int which, int b);

/// Equal to `printed` read forwards or backwards.
bool coefficients_match(const std::vector<Coeff>& computed, const std::vector<Coeff>& printed);
/// `computed` or its reverse, whichever matches `printed` (computed if neither).
std::vector<Coeff> oriented_like(const std::vector<Coeff>& computed, const std::vector<Coeff>& printed);
std::string tuple_string(const std::vector<Coeff>& c);

}  // namespace chebyknot
