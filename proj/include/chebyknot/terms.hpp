#pragma once

// Tuple notation made executable: per-slot factors evaluated against a sign
// sequence, flat term sums, and named blocks that expand to term sums.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chebyknot/diagram.hpp"
#include "chebyknot/laurent.hpp"

namespace chebyknot {

/// Apm: A^s, Amp: A^-s, F2pm: -A^(-3s), F2mp: -A^(3s), Skip: 1 on a '_' slot.
enum class Factor : std::uint8_t { Apm, Amp, F2pm, F2mp, Skip };

/// value = sign * A^exponent
struct Monomial {
  int sign = 1;
  int exponent = 0;
};
/// Throws std::invalid_argument for Skip.
Monomial factor_value(Factor f, Sign s);
std::string factor_token(Factor f);

struct SlotTerm {
  LaurentPoly scalar{1};
  std::vector<Factor> factors;

  friend bool operator==(const SlotTerm&, const SlotTerm&) = default;
};

/// Finite sum of slot terms sharing one width.
class TermSum {
 public:
  TermSum() = default;

  /// The empty product: one term, scalar 1, width 0.
  static TermSum unit();
  static TermSum of(std::vector<Factor> factors, LaurentPoly scalar = LaurentPoly(1));

  const std::vector<SlotTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// Common width of the terms. Throws std::logic_error if they disagree or
  /// the sum is empty.
  std::size_t width() const;

  TermSum& operator+=(const TermSum& other);
  friend TermSum operator+(TermSum l, const TermSum& r) { return l += r; }
  friend bool operator==(const TermSum&, const TermSum&) = default;

  TermSum scaled(const LaurentPoly& by) const;
  /// Terms with equal factor lists merged (zero scalars dropped), then sorted.
  TermSum canonical() const;

 private:
  std::vector<SlotTerm> terms_;
};

/// Distributive juxtaposition: every prefix term followed by every suffix term.
TermSum concat(const TermSum& prefix, const TermSum& suffix);
/// `block` juxtaposed with itself `times` times (unit for 0).
TermSum repeat(const TermSum& block, int times);
std::size_t slot_width(const TermSum& ts);

/// Sum over terms of scalar * product of factor values. Throws
/// std::invalid_argument on width mismatch, on a Skip factor over a real sign,
/// or on a real factor over '_'.
LaurentPoly eval_sum(const TermSum& ts, const SignSequence& s);

/// "(A^±,A^±)+δ(A^±,A^∓)"
std::string render(const TermSum& ts);

// ---------------------------------------------------------------------------
// Blocks

/// A named macro occupying a fixed number of slots. Expansions are shared.
struct Block {
  std::string name;
  std::shared_ptr<const TermSum> expansion;

  std::size_t width() const { return expansion->width(); }
};

Block make_named(std::string name, TermSum expansion);

/// A juxtaposition (X, Y, Z) of blocks.
using Skeleton = std::vector<Block>;

struct SkeletonSum {
  std::vector<Skeleton> terms;

  void append(const SkeletonSum& other);
};

TermSum flatten(const Skeleton& sk);
TermSum flatten(const SkeletonSum& sum);
std::size_t slot_width(const Skeleton& sk);
/// Block names joined as in the printed lists: "(h_3,P'_1)+(M,L)".
std::string render(const Skeleton& sk);
std::string render(const SkeletonSum& sum);
/// Rendered summands, sorted.
std::vector<std::string> summand_strings(const SkeletonSum& sum);

/// Block-level evaluation: each block is evaluated once per slot offset and the
/// per-summand products are formed from those values. Agrees with
/// eval_sum(flatten(sum), s).
LaurentPoly eval_skeletons(const SkeletonSum& sum, const SignSequence& s);

enum class BlockName {
  C, X, K, L, M, N, NTilde, R, RTilde, S, G2, H2, H3, F3,
  PPrime,       // P'_i
  PTildePrime,  // P~'_i
  Q,            // Q_i
};

/// Even-index Q_i = [M,K^j,A^±] + [g_2,Y^j,A^±,A^∓]: Y = N or Y = K.
enum class QEvenTail { N, K };
/// Even-index P'_i = [X,Y^j,A^∓,A^±] + [A^±,K^j,L]: Y = N~ or Y = N.
/// The two agree for i = 2; only N~ matches the state sum from i = 4 on.
enum class PEvenFill { NTilde, N };

struct BlockVariants {
  QEvenTail q_tail = QEvenTail::N;
  PEvenFill p_fill = PEvenFill::NTilde;
};

/// Flat expansion of a named block. `index` is i for P'_i, P~'_i (i >= 1) and
/// Q_i (i >= 3) and ignored otherwise. Throws std::invalid_argument on a bad
/// index.
TermSum expand_block(BlockName name, int index = 0, const BlockVariants& v = {});
Block make_block(BlockName name, int index = 0, const BlockVariants& v = {});
std::string block_name(BlockName name, int index = 0);

/// Single-factor block: A^±, A^∓, f_2^±, f_2^∓ or _.
Block factor_block(Factor f);

// ---------------------------------------------------------------------------
// Printed notation

/// One summand of a printed expression: scalar times a token sequence.
struct TokenTerm {
  LaurentPoly scalar{1};
  std::vector<std::string> tokens;

  friend bool operator==(const TokenTerm&, const TokenTerm&) = default;
};

/// Parses printed tuple notation such as
/// "(f_3,[C,A^\pm]+[A^\pm,f_2^\mp,A^\mp])+\delta(X)" into distributed token
/// summands. Accepts LaTeX spellings (A^\pm, \widetilde{N}, \delta, \_) and the
/// rendered ones (A^±, N~, δ, _). Throws std::invalid_argument on bad syntax.
std::vector<TokenTerm> parse_tuple_expression(std::string_view text);

/// Token of each summand joined as "(a,b,c)", sorted; scalars prefix as in render.
std::vector<std::string> summand_strings(const std::vector<TokenTerm>& terms);

/// Maps a token to its expansion, or nullopt if unknown.
using TokenResolver = std::function<std::optional<TermSum>(const std::string&)>;

/// Expansion of the fixed tokens: factors, C, X, K, L, M, N, N~, R, R~, S,
/// g_2, h_2, h_3, f_3, P'_i, P~'_i, Q_i, and the tiles V, H, S_1, S_2.
std::optional<TermSum> builtin_token(const std::string& token, const BlockVariants& v = {});

/// Expands parsed summands; tokens go to `resolver` first, then builtin_token.
/// Throws std::invalid_argument on an unknown token.
TermSum expand_tokens(const std::vector<TokenTerm>& terms, const TokenResolver& resolver = {},
                      const BlockVariants& v = {});

}  // namespace chebyknot
