#pragma once

// Tile sequences on a 2 x n board and their correspondence with the summands
// of f_b.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chebyknot/terms.hpp"

namespace chebyknot {

/// V: vertical domino. H: two horizontal dominoes. C: 2 x 2 square.
/// S1, S2: start tiles standing for f_2^± and f_3.
enum class Tile : std::uint8_t { V, H, C, S1, S2 };

using TileSequence = std::vector<Tile>;

int tile_width(Tile t);
int board_length(const TileSequence& t);

/// Number of domino tilings of the 2 x n board: F_0 = F_1 = 1.
std::uint64_t count_domino_tilings(int n);
/// Every domino tiling of the 2 x n board as a word over {V, H}.
std::vector<std::string> domino_tilings(int n);

/// Tile sequences of board length b - 1 for f_b, b >= 4: S2 followed by a word
/// in (C | V H)* V?, or S1 H followed by such a word. Lexicographic order.
std::vector<TileSequence> enumerate_term_tilings(int b);

/// V -> A^±, H -> f_2^∓ A^∓, C -> C, S2 -> f_3, S1 -> f_2^±.
Skeleton tiling_to_skeleton(const TileSequence& t);
TermSum tiling_to_term(const TileSequence& t);

/// Domino words obtained by reading each C and S2 as either VV or H.
std::vector<std::string> domino_expansions(const TileSequence& t);

/// "S2 C V H V"
std::string render(const TileSequence& t);
/// Inverse of render; also accepts "S_2" and comma separators. Throws
/// std::invalid_argument on an unknown tile.
TileSequence parse_tiles(std::string_view text);

struct TilingReport {
  int b = 0;
  std::size_t tilings = 0;
  std::uint64_t f_term_count = 0;
  bool widths_ok = false;
  bool injective = false;
  bool matches_f_terms = false;      // as a set of summands
  bool covers_dominoes = false;      // expansions partition all domino tilings
};

TilingReport check_tiling_bijection(int b);

}  // namespace chebyknot
