#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "chebyknot/recursions.hpp"
#include "chebyknot/tiling.hpp"

using namespace chebyknot;

namespace {

// Tile expressions for f_b as printed, b = 4..10.
const std::map<int, const char*> kPrintedTiles = {
    {4, "(S_2,V)+(S_1,H)"},
    {5, "(S_2,C)+(S_1,H,V)"},
    {6, "(S_2,[C,V]+[V,H])+(S_1,H,C)"},
    {7, "(S_2,C,C)+(S_2,V,H,V)+(S_1,H,[C,V]+[V,H])"},
    {8, "(S_2,C,[C,V]+[V,H])+(S_2,V,H,C) +(S_1,H,C,C)+(S_1,H,V,H,V)"},
    {9, "(S_2,C,C,C)+(S_2,C,V,H,V)+(S_2,V,H,[C,V]+[V,H]) +(S_1,H,C,[C,V]+[V,H]) +(S_1,H,V,H,C)"},
    {10, "(S_2,C,C,[C,V]+[V,H])+(S_2,C,V,H,C) +(S_2,V,H,C,C)+(S_2,V,H,V,H,V) +(S_1,H,C,C,C)+(S_1,H,C,V,H,V)"
         "+(S_1,H,V,H,[C,V]+[V,H])"},
};

std::set<std::string> printed_tilings(const char* text) {
  std::set<std::string> out;
  for (const auto& t : parse_tuple_expression(text)) {
    std::string joined;
    for (const auto& tok : t.tokens) joined += (joined.empty() ? "" : " ") + tok;
    out.insert(render(parse_tiles(joined)));
  }
  return out;
}

}  // namespace

TEST_CASE("domino tilings are counted by Fibonacci numbers") {
  std::vector<std::uint64_t> fib{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  for (std::size_t n = 0; n < fib.size(); ++n) {
    CHECK(count_domino_tilings(static_cast<int>(n)) == fib[n]);
    CHECK(domino_tilings(static_cast<int>(n)).size() == fib[n]);
  }
  CHECK(domino_tilings(3) == std::vector<std::string>{"VVV", "VH", "HV"});
}

TEST_CASE("tile widths") {
  CHECK(board_length(parse_tiles("S2 C V H V")) == 8);
  CHECK(render(parse_tiles("S_1, H, C")) == "S1 H C");
  CHECK_THROWS_AS(parse_tiles("S2 Q"), std::invalid_argument);
}

TEST_CASE("term tilings match the printed tile expressions") {
  for (const auto& [b, text] : kPrintedTiles) {
    CAPTURE(b);
    std::set<std::string> mine;
    for (const auto& t : enumerate_term_tilings(b)) mine.insert(render(t));
    CHECK(mine == printed_tilings(text));
  }
}

TEST_CASE("tilings biject onto f_b summands and cover every domino tiling") {
  for (int b = 4; b <= 14; ++b) {
    CAPTURE(b);
    auto r = check_tiling_bijection(b);
    CHECK(r.tilings == r.f_term_count);
    CHECK(r.widths_ok);
    CHECK(r.injective);
    CHECK(r.matches_f_terms);
    CHECK(r.covers_dominoes);
  }
}

TEST_CASE("tiles translate to blocks") {
  auto t = parse_tiles("S2 V H");
  CHECK(render(tiling_to_skeleton(t)) == "(f_3,A^±,f_2^∓,A^∓)");
  CHECK(tiling_to_term(t).width() == 5);
  CHECK(domino_expansions(parse_tiles("S2 C")) == std::vector<std::string>{"VVVV", "VVH", "HVV", "HH"});
  CHECK_THROWS_AS(enumerate_term_tilings(3), std::invalid_argument);
}
