#include "chebyknot/tiling.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chebyknot/recursions.hpp"

namespace chebyknot {

int tile_width(Tile t) {
  switch (t) {
    case Tile::V:
    case Tile::S1:
      return 1;
    case Tile::H:
    case Tile::C:
    case Tile::S2:
      return 2;
  }
  return 0;
}

int board_length(const TileSequence& t) {
  int n = 0;
  for (Tile x : t) n += tile_width(x);
  return n;
}

std::uint64_t count_domino_tilings(int n) {
  if (n < 0) throw std::invalid_argument("board length must be >= 0");
  std::uint64_t prev = 1, cur = 1;
  for (int k = 2; k <= n; ++k) {
    std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<std::string> domino_tilings(int n) {
  if (n < 0) throw std::invalid_argument("board length must be >= 0");
  if (n == 0) return {""};
  std::vector<std::string> out;
  for (auto& w : domino_tilings(n - 1)) out.push_back("V" + w);
  if (n >= 2) {
    for (auto& w : domino_tilings(n - 2)) out.push_back("H" + w);
  }
  return out;
}

namespace {

// Words in (C | V H)* V? of the given length.
void body_words(int length, TileSequence& prefix, std::vector<TileSequence>& out) {
  if (length == 0) {
    out.push_back(prefix);
    return;
  }
  if (length == 1) {
    prefix.push_back(Tile::V);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  prefix.push_back(Tile::C);
  body_words(length - 2, prefix, out);
  prefix.pop_back();
  if (length >= 3) {
    prefix.push_back(Tile::V);
    prefix.push_back(Tile::H);
    body_words(length - 3, prefix, out);
    prefix.resize(prefix.size() - 2);
  }
}

}  // namespace

std::vector<TileSequence> enumerate_term_tilings(int b) {
  if (b < 4) throw std::invalid_argument("term tilings need b >= 4");
  const int n = b - 1;
  std::vector<TileSequence> out;
  TileSequence prefix{Tile::S2};
  body_words(n - 2, prefix, out);
  prefix = {Tile::S1, Tile::H};
  body_words(n - 3, prefix, out);
  return out;
}

Skeleton tiling_to_skeleton(const TileSequence& t) {
  Skeleton sk;
  for (Tile x : t) {
    switch (x) {
      case Tile::V: sk.push_back(factor_block(Factor::Apm)); break;
      case Tile::H:
        sk.push_back(factor_block(Factor::F2mp));
        sk.push_back(factor_block(Factor::Amp));
        break;
      case Tile::C: sk.push_back(make_block(BlockName::C)); break;
      case Tile::S1: sk.push_back(factor_block(Factor::F2pm)); break;
      case Tile::S2: sk.push_back(make_block(BlockName::F3)); break;
    }
  }
  return sk;
}

TermSum tiling_to_term(const TileSequence& t) { return flatten(tiling_to_skeleton(t)); }

std::vector<std::string> domino_expansions(const TileSequence& t) {
  std::vector<std::string> out{""};
  for (Tile x : t) {
    std::vector<std::string> choices;
    switch (x) {
      case Tile::V:
      case Tile::S1:
        choices = {"V"};
        break;
      case Tile::H:
        choices = {"H"};
        break;
      case Tile::C:
      case Tile::S2:
        choices = {"VV", "H"};
        break;
    }
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (const auto& c : choices) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

std::string render(const TileSequence& t) {
  std::string out;
  for (Tile x : t) {
    if (!out.empty()) out += ' ';
    switch (x) {
      case Tile::V: out += "V"; break;
      case Tile::H: out += "H"; break;
      case Tile::C: out += "C"; break;
      case Tile::S1: out += "S1"; break;
      case Tile::S2: out += "S2"; break;
    }
  }
  return out;
}

TileSequence parse_tiles(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  TileSequence out;
  std::string tok;
  while (in >> tok) {
    if (tok == "V") out.push_back(Tile::V);
    else if (tok == "H") out.push_back(Tile::H);
    else if (tok == "C") out.push_back(Tile::C);
    else if (tok == "S1" || tok == "S_1") out.push_back(Tile::S1);
    else if (tok == "S2" || tok == "S_2") out.push_back(Tile::S2);
    else throw std::invalid_argument("unknown tile '" + tok + "'");
  }
  return out;
}

TilingReport check_tiling_bijection(int b) {
  TilingReport r;
  r.b = b;
  auto tilings = enumerate_term_tilings(b);
  r.tilings = tilings.size();
  r.f_term_count = count_f_terms(b);

  r.widths_ok = std::all_of(tilings.begin(), tilings.end(),
                            [&](const TileSequence& t) { return board_length(t) == b - 1; });

  SkeletonSum from_tiles;
  for (const auto& t : tilings) from_tiles.terms.push_back(tiling_to_skeleton(t));
  auto mine = summand_strings(from_tiles);
  r.injective = std::adjacent_find(mine.begin(), mine.end()) == mine.end();
  r.matches_f_terms = mine == summand_strings(f_skeletons(b)) &&
                      flatten(from_tiles).canonical() == f_terms(b).canonical();

  std::multiset<std::string> words;
  for (const auto& t : tilings) {
    for (auto& w : domino_expansions(t)) words.insert(std::move(w));
  }
  auto all = domino_tilings(b - 1);
  r.covers_dominoes = words.size() == all.size() &&
                      std::set<std::string>(words.begin(), words.end()) ==
                          std::set<std::string>(all.begin(), all.end());
  return r;
}

}  // namespace chebyknot
