#pragma once

// Compressed bracket expansions for T(3,b), T(5,b) and the notched 5-high
// tables, their term counts, and the writhe increments for a = 3, 5.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "chebyknot/diagram.hpp"
#include "chebyknot/terms.hpp"

namespace chebyknot {

using Composition = std::vector<int>;

/// Ordered compositions of n in lexicographic order; n = 0 gives {()}.
std::vector<Composition> compositions(int n);

/// a(0) = 1, a(1) = a(2) = 0, a(n) = a(n-2) + a(n-3).
std::uint64_t padovan(int n);

// ---------------------------------------------------------------------------
// T(3,b)

/// Summands of f_b as block sequences. A trailing [f_2^∓,A^∓] pair is kept as
/// two factor blocks. b >= 1; f_1 is the empty product.
SkeletonSum f_skeletons(int b);
TermSum f_terms(int b);
/// Summand count from the (x, y, z) bookkeeping; b >= 4.
std::uint64_t count_f_terms(int b);

// ---------------------------------------------------------------------------
// T(5,b)

/// How the index-free P_i of a skeleton is resolved to P'_i or P~'_i.
enum class PRule {
  /// A block placed after the first J columns is P'_i for even J, P~'_i for odd J.
  ColumnParity,
  /// j = slot pairs before the block within the tail (0 in the head), P'_i iff i + j odd.
  TailOffset,
  /// j = index of the part in the tail (0 in the head), P'_i iff i + j odd.
  PartIndex,
};

struct HOptions {
  PRule p_rule = PRule::ColumnParity;
  BlockVariants blocks;
};

enum class HHead { H3, H2, Q };

/// One summand of the h_b sum before blocks are expanded.
struct HSkeleton {
  int i = 3;
  HHead head = HHead::H3;
  Composition tail;
  /// Resolved variants: for the head P-block (if any) then each tail part.
  std::vector<bool> tilde;
};

std::vector<HSkeleton> h_skeleton_list(int b, const HOptions& opt = {});
/// Number of (i, composition) pairs; b >= 4.
std::uint64_t count_h_skeletons(int b);
SkeletonSum h_skeletons(int b, const HOptions& opt = {});
/// h_1 = 1, h_2, h_3 base blocks; b >= 4 from the skeleton sum. Cached for the
/// default options.
TermSum h_terms(int b, const HOptions& opt = {});
/// The block named "h_b" with expansion h_terms(b).
Block h_block(int b);
nlohmann::json h_skeletons_json(int b, const HOptions& opt = {});

// ---------------------------------------------------------------------------
// Notched tables

/// Bracket of B2(5,n) with skip slots where the notch removes a crossing.
SkeletonSum b_skeletons(int n);
TermSum b_terms(int n);
/// Bracket of B1(5,n).
SkeletonSum bt_skeletons(int n);
TermSum bt_terms(int n);

// ---------------------------------------------------------------------------
// Writhe

/// Writhe of T(a,b) with a in {3,5}: writhe_direct below b = a, then the
/// per-crossing increments for each added block of a columns. Throws
/// std::invalid_argument when a divides b or on a sign-length mismatch.
int writhe_recursive(int a, int b, const SignSequence& s);
/// Increment coefficients (+1 for ±, -1 for ∓) taking T(a,b) to T(a,b+a).
std::vector<int> writhe_pattern(int a, int b);

}  // namespace chebyknot
