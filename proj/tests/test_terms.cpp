#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chebyknot/recursions.hpp"
#include "chebyknot/terms.hpp"
#include "support.hpp"

using namespace chebyknot;
using testing::A;

namespace {

TermSum parse_flat(const char* text) { return expand_tokens(parse_tuple_expression(text)); }

bool same_values(const TermSum& x, const TermSum& y) {
  const auto w = x.width();
  if (y.width() != w) return false;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << w); ++m) {
    auto s = SignSequence::from_mask(m, w);
    if (eval_sum(x, s) != eval_sum(y, s)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("factor values") {
  auto p = Sign::Plus, m = Sign::Minus;
  CHECK(factor_value(Factor::Apm, p).exponent == 1);
  CHECK(factor_value(Factor::Apm, m).exponent == -1);
  CHECK(factor_value(Factor::Amp, p).exponent == -1);
  CHECK(factor_value(Factor::F2pm, p).exponent == -3);
  CHECK(factor_value(Factor::F2pm, p).sign == -1);
  CHECK(factor_value(Factor::F2mp, p).exponent == 3);
  CHECK(factor_value(Factor::F2mp, m).exponent == -3);
  CHECK_THROWS_AS(factor_value(Factor::Skip, p), std::invalid_argument);
  CHECK(factor_token(Factor::F2mp) == "f_2^∓");
}

TEST_CASE("sums, products and widths") {
  auto c = expand_block(BlockName::C);
  CHECK(c.size() == 2);
  CHECK(c.width() == 2);
  CHECK(concat(c, c).size() == 4);
  CHECK(repeat(c, 0) == TermSum::unit());
  CHECK(repeat(c, 3).width() == 6);
  TermSum mixed = TermSum::of({Factor::Apm});
  CHECK_THROWS_AS(mixed += c, std::logic_error);
  CHECK_THROWS_AS(TermSum().width(), std::logic_error);
  auto doubled = c + c;
  CHECK(doubled.canonical().size() == 2);
  CHECK(doubled.canonical() == c.scaled(LaurentPoly(2)).canonical());
  CHECK((c + c.scaled(LaurentPoly(-1))).canonical().empty());
}

TEST_CASE("rendering") {
  CHECK(render(expand_block(BlockName::C)) == "(A^±,A^±)+(f_2^∓,A^∓)");
  CHECK(render(expand_block(BlockName::X)) == "δ(A^±,A^±)+(A^±,A^∓)+(A^∓,A^±)");
  CHECK(block_name(BlockName::PTildePrime, 3) == "P~'_3");
  SkeletonSum s{{Skeleton{make_block(BlockName::H3), make_block(BlockName::PPrime, 1)}}};
  CHECK(render(s) == "(h_3,P'_1)");
}

TEST_CASE("evaluation of the small blocks") {
  auto f3 = expand_block(BlockName::F3);
  auto delta = LaurentPoly::delta();
  CHECK(eval_sum(f3, SignSequence::parse("++")) == delta);
  CHECK(eval_sum(f3, SignSequence::parse("+-")) == A(4, -1) + A(-4, -1));
  auto g2 = expand_block(BlockName::G2);
  CHECK(eval_sum(g2, SignSequence::parse("++")) == A(4, -1) + A(-4, -1));
  CHECK(eval_sum(g2, SignSequence::parse("-+")) == delta);
  auto x = expand_block(BlockName::X);
  CHECK(eval_sum(x, SignSequence::parse("++")) == LaurentPoly(1) - A(4));
  CHECK(eval_sum(x, SignSequence::parse("--")) == LaurentPoly(1) - A(-4));
  CHECK(eval_sum(x, SignSequence::parse("+-")).is_zero());
  auto h2 = expand_block(BlockName::H2);
  CHECK(eval_sum(h2, SignSequence::parse("++")) == A(-6));
  CHECK(eval_sum(h2, SignSequence::parse("+-")) == LaurentPoly(1));
}

TEST_CASE("skips must line up with missing crossings") {
  auto t = TermSum::of({Factor::Apm, Factor::Skip, Factor::Amp});
  CHECK(eval_sum(t, SignSequence::parse("+_-")) == LaurentPoly(1) * A(1) * A(1));
  CHECK_THROWS_AS(eval_sum(t, SignSequence::parse("+--")), std::invalid_argument);
  CHECK_THROWS_AS(eval_sum(TermSum::of({Factor::Apm, Factor::Apm}), SignSequence::parse("+_")),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_sum(t, SignSequence::parse("+-")), std::invalid_argument);
}

TEST_CASE("parser handles printed notation") {
  auto terms = parse_tuple_expression(R"((f_3,[C,A^\pm]+[A^\pm,f_2^\mp,A^\mp])+(f_2^\pm,f_2^\mp,A^\mp,C))");
  CHECK(terms.size() == 3);
  CHECK(summand_strings(terms) ==
        std::vector<std::string>{"(f_2^±,f_2^∓,A^∓,C)", "(f_3,A^±,f_2^∓,A^∓)", "(f_3,C,A^±)"});
  auto scaled = parse_tuple_expression(R"(\delta^2[A^\mp,A^\mp]+\delta(A^\pm,A^\mp))");
  REQUIRE(scaled.size() == 2);
  CHECK(scaled[0].scalar == LaurentPoly::delta_power(2));
  auto tilde = parse_tuple_expression(R"((h_2,X,\widetilde{N})+(M,\_,A^\pm))");
  CHECK(tilde[0].tokens.back() == "N~");
  CHECK(tilde[1].tokens[1] == "_");
  CHECK_THROWS_AS(parse_tuple_expression("(A^\\pm,"), std::invalid_argument);
  CHECK_THROWS_AS(expand_tokens(parse_tuple_expression("(Z)")), std::invalid_argument);
}

TEST_CASE("blocks equal their printed expansions") {
  CHECK(same_values(expand_block(BlockName::H3),
                    parse_flat(R"((h_2,A^\pm,A^\pm)+(f_2^\mp,f_2^\mp,A^\mp,A^\mp)+(g_2,A^\pm,A^\mp)+(f_2^\mp,f_2^\pm,A^\mp,A^\pm))")));
  CHECK(same_values(expand_block(BlockName::H3), parse_flat("(h_2,A^\\pm,A^\\pm)+(K)+(g_2,A^\\pm,A^\\mp)+(M,A^\\pm)")));

  auto p2 = expand_block(BlockName::PPrime, 2);
  CHECK(p2.canonical() == parse_flat("[K]+[A^\\pm,L]+[X,A^\\mp,A^\\pm]").canonical());
  CHECK(p2.canonical() ==
        parse_flat(R"([f_2^\mp,f_2^\mp,A^\mp,A^\mp]+[A^\pm,f_2^\mp,A^\pm,A^\mp]+\delta[A^\pm,A^\pm,A^\mp,A^\pm]+[A^\pm,A^\mp,A^\mp,A^\pm]+[A^\mp,A^\pm,A^\mp,A^\pm])")
            .canonical());

  auto pt2 = expand_block(BlockName::PTildePrime, 2);
  CHECK(pt2.canonical() == parse_flat("[X,A^\\pm,A^\\mp]+[L,A^\\pm]+[K]").canonical());
  CHECK(pt2.canonical() ==
        parse_flat(R"(\delta[A^\pm,A^\pm,A^\pm,A^\mp]+[A^\pm,A^\mp,A^\pm,A^\mp]+[A^\mp,A^\pm,A^\pm,A^\mp]+[f_2^\mp,A^\pm,A^\mp,A^\pm]+[f_2^\mp,f_2^\mp,A^\mp,A^\mp])")
            .canonical());

  auto p3 = expand_block(BlockName::PPrime, 3);
  CHECK(p3.canonical() == parse_flat("[R,A^\\pm,A^\\mp]+[A^\\pm,K,A^\\pm]").canonical());
  CHECK(p3.canonical() ==
        parse_flat(R"([f_2^\mp,A^\pm,A^\mp,A^\mp,A^\pm,A^\mp]+[A^\pm,f_2^\mp,f_2^\mp,A^\mp,A^\mp,A^\pm])").canonical());

  CHECK(expand_block(BlockName::PPrime, 1) == expand_block(BlockName::PTildePrime, 1));
}

TEST_CASE("parametric blocks have width 2i") {
  for (int i = 1; i <= 9; ++i) {
    CAPTURE(i);
    CHECK(expand_block(BlockName::PPrime, i).width() == static_cast<std::size_t>(2 * i));
    CHECK(expand_block(BlockName::PTildePrime, i).width() == static_cast<std::size_t>(2 * i));
    if (i >= 3) CHECK(expand_block(BlockName::Q, i).width() == static_cast<std::size_t>(2 * i));
  }
  CHECK_THROWS(expand_block(BlockName::Q, 2));
}

TEST_CASE("even P' filler variants first differ at width 8") {
  BlockVariants printed;
  printed.p_fill = PEvenFill::N;
  CHECK(expand_block(BlockName::PPrime, 2, printed) == expand_block(BlockName::PPrime, 2));
  CHECK_FALSE(same_values(expand_block(BlockName::PPrime, 4, printed), expand_block(BlockName::PPrime, 4)));
}

TEST_CASE("skeleton evaluation matches flat evaluation") {
  for (int b : {4, 5, 6, 7}) {
    auto sk = h_skeletons(b);
    auto flat = flatten(sk);
    auto d = build_table(TableSpec::rectangle(5, b));
    for (std::uint64_t m : {0ull, 1ull, 0x5aull, 0x3ffull}) {
      auto s = signs_for_mask(d, m);
      CHECK(eval_skeletons(sk, s) == eval_sum(flat, s));
    }
  }
}
