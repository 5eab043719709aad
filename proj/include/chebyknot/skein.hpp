#pragma once

// Ground-truth Kauffman bracket by summing over every smoothing state.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "chebyknot/diagram.hpp"
#include "chebyknot/laurent.hpp"

namespace chebyknot {

inline constexpr int kDefaultCrossingLimit = 24;
inline constexpr int kDefaultSweepLimit = 14;

/// Sum over all 2^n states of A^(#A - #B) * delta^(loops - 1).
/// Throws std::length_error above `crossing_limit` crossings.
LaurentPoly bracket_bruteforce(const SignedDiagram& d, int crossing_limit = kDefaultCrossingLimit);

/// Same state sum with state bit i driving crossing `order[i]`; `order` must
/// be a permutation of the crossings.
LaurentPoly bracket_bruteforce(const SignedDiagram& d, std::span<const int> order,
                               int crossing_limit = kDefaultCrossingLimit);

QuarterPoly jones(const SignedDiagram& d, int crossing_limit = kDefaultCrossingLimit);

/// Loop count of every geometric smoothing state. Bit c of the state index
/// set means crossing c is smoothed vertically (NW-SW and NE-SE joined).
std::vector<std::uint8_t> state_loop_counts(const BilliardDiagram& d, std::span<const int> order = {});

/// Bracket of every sign assignment of the diagram's crossing slots (skipped
/// slots carry '_'). Evaluations run on `threads` workers (0 picks the
/// hardware concurrency). Throws std::length_error above `slot_limit`.
std::map<SignSequence, LaurentPoly> bracket_all_signs(const BilliardDiagram& d,
                                                      int slot_limit = kDefaultSweepLimit,
                                                      unsigned threads = 0);

/// The sign sequence for mask bits over the diagram's real crossings, with
/// skipped slots filled in.
SignSequence signs_for_mask(const BilliardDiagram& d, std::uint64_t mask);

}  // namespace chebyknot
