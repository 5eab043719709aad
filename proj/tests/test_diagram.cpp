#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "chebyknot/diagram.hpp"

using namespace chebyknot;

TEST_CASE("small tables") {
  auto u = build_table(TableSpec::rectangle(3, 1));
  CHECK(u.crossing_count() == 0);
  CHECK(component_count(u) == 1);

  auto t57 = build_table(TableSpec::rectangle(5, 7));
  CHECK(t57.crossing_count() == 12);
  CHECK(component_count(t57) == 1);

  auto t33 = build_table(TableSpec::rectangle(3, 3));
  CHECK(t33.crossing_count() == 2);
  CHECK(component_count(t33) == 2);

  auto t42 = build_table(TableSpec::rectangle(4, 2));
  CHECK(t42.crossing_count() == 2);
  CHECK(component_count(t42) == 2);
}

TEST_CASE("crossing counts of coprime tables") {
  for (int a : {3, 5}) {
    for (int b = 1; b <= 13; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CAPTURE(a);
      CAPTURE(b);
      auto d = build_table(TableSpec::rectangle(a, b));
      CHECK(d.crossing_count() == static_cast<std::size_t>((a - 1) * (b - 1) / 2));
      CHECK(component_count(d) == 1);
    }
  }
}

TEST_CASE("crossings are ordered up each column, then left to right") {
  for (int b : {4, 7, 10}) {
    auto d = build_table(TableSpec::rectangle(5, b));
    auto pts = d.crossings();
    CHECK(std::is_sorted(pts.begin(), pts.end(),
                         [](Point p, Point q) { return p.x != q.x ? p.x < q.x : p.y < q.y; }));
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
  }
}

TEST_CASE("every arc end is paired exactly once") {
  for (auto spec : {TableSpec::rectangle(3, 6), TableSpec::rectangle(5, 6), TableSpec::rectangle(4, 5),
                    TableSpec::b2(7), TableSpec::b1(8)}) {
    CAPTURE(spec.name());
    auto d = build_table(spec);
    const auto& p = d.partners();
    REQUIRE(p.size() == 4 * d.crossing_count());
    for (std::size_t e = 0; e < p.size(); ++e) {
      REQUIRE(p[e] >= 0);
      CHECK(p[p[e]] == static_cast<EndId>(e));
      CHECK(p[e] != static_cast<EndId>(e));
    }
  }
}

TEST_CASE("bumpered tables") {
  CHECK(TableSpec::b2(7).side == BumperSide::Top);
  CHECK(TableSpec::b2(8).side == BumperSide::Bottom);
  CHECK(TableSpec::b1(8).side == BumperSide::Top);
  CHECK(TableSpec::b1(7).side == BumperSide::Bottom);
  CHECK(TableSpec::b2(7).name() == "B^2(5,7)");
  CHECK(TableSpec::b1(7).name() == "B_1(5,7)");

  auto b27 = build_table(TableSpec::b2(7));
  CHECK(component_count(b27) == 1);
  CHECK(b27.crossing_count() == 11);

  auto b28 = build_table(TableSpec::b2(8));
  CHECK(component_count(b28) == 2);
  int long_knots = 0;
  for (const auto& c : b28.components()) long_knots += c.long_knot;
  CHECK(long_knots == 1);

  auto b13 = build_table(TableSpec::b1(3));
  CHECK(b13.slot_count() == 4);
  CHECK(b13.crossing_count() == 4);

  auto b24 = build_table(TableSpec::b2(4));
  CHECK(b24.slot_count() == 6);
  CHECK(b24.crossing_count() == 5);
  CHECK_FALSE(b24.slots()[4].has_value());
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(build_table(TableSpec::rectangle(6, 3)), std::invalid_argument);
  CHECK_THROWS_AS(build_table(TableSpec::rectangle(3, 0)), std::invalid_argument);
  TableSpec wrong_side = TableSpec::b2(7);
  wrong_side.side = BumperSide::Bottom;
  CHECK_THROWS_AS(build_table(wrong_side), std::invalid_argument);
  TableSpec tall = TableSpec::b2(7);
  tall.a = 3;
  CHECK_THROWS_AS(build_bumpered(tall), std::invalid_argument);
}

TEST_CASE("sign sequences") {
  auto s = SignSequence::parse("+-_+");
  CHECK(s.size() == 4);
  CHECK(s.is_skip(2));
  CHECK(s.to_string() == "+-_+");
  CHECK(s.flipped().to_string() == "-+_-");
  CHECK(SignSequence::parse("+−+").to_string() == "+-+");
  CHECK_THROWS_AS(SignSequence::parse("+x"), std::invalid_argument);
  CHECK(SignSequence::from_mask(0b101, 3).size() == 3);

  auto d = build_table(TableSpec::rectangle(3, 4));
  CHECK_THROWS_AS(assign_signs(d, SignSequence::parse("++")), std::invalid_argument);
  CHECK_THROWS_AS(assign_signs(d, SignSequence::parse("+_+")), std::invalid_argument);
  auto b24 = build_table(TableSpec::b2(4));
  CHECK_THROWS_AS(assign_signs(b24, SignSequence::parse("++++++")), std::invalid_argument);
  CHECK_NOTHROW(assign_signs(b24, SignSequence::parse("++++_+")));
}

TEST_CASE("writhe and codes of the trefoil") {
  auto d = assign_signs(build_table(TableSpec::rectangle(3, 4)), SignSequence::parse("+-+"));
  CHECK(writhe_direct(d) == 3);
  auto mirror = assign_signs(build_table(TableSpec::rectangle(3, 4)), SignSequence::parse("-+-"));
  CHECK(writhe_direct(mirror) == -3);

  auto pd = export_pd(d);
  REQUIRE(pd.crossings.size() == 3);
  std::map<int, int> uses;
  for (const auto& x : pd.crossings) {
    for (int v : x) ++uses[v];
  }
  CHECK(uses.size() == 6);
  for (auto [label, count] : uses) CHECK(count == 2);
  CHECK(pd.to_string().rfind("PD[X[", 0) == 0);

  auto g = gauss_code(d);
  REQUIRE(g.size() == 1);
  CHECK(g[0].size() == 6);
  int sum = 0;
  for (int v : g[0]) sum += v;
  CHECK(sum == 0);
}

TEST_CASE("writhe of a two-component link counts the linking") {
  auto t33 = build_table(TableSpec::rectangle(3, 3));
  auto hopf = assign_signs(t33, SignSequence::parse("+-"));
  auto unlink = assign_signs(t33, SignSequence::parse("++"));
  CHECK(std::abs(writhe_direct(hopf)) == 2);
  CHECK(writhe_direct(unlink) == 0);
}

TEST_CASE("json export") {
  auto d = build_table(TableSpec::rectangle(5, 3));
  auto j = d.to_json();
  CHECK(j.contains("crossings"));
  CHECK(j["crossings"].size() == 4);
}
