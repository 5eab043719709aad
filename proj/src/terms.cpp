#include "chebyknot/terms.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace chebyknot {

namespace {

constexpr Factor P = Factor::Apm;
constexpr Factor Mn = Factor::Amp;
constexpr Factor FP = Factor::F2pm;
constexpr Factor FM = Factor::F2mp;

TermSum seq(std::initializer_list<TermSum> parts) {
  TermSum out = TermSum::unit();
  for (const auto& p : parts) out = concat(out, p);
  return out;
}

TermSum f(Factor x) { return TermSum::of({x}); }

TermSum lit(std::vector<Factor> xs, LaurentPoly scalar = LaurentPoly(1)) {
  return TermSum::of(std::move(xs), std::move(scalar));
}

const LaurentPoly& delta_pow(unsigned k) {
  static const std::vector<LaurentPoly> table = [] {
    std::vector<LaurentPoly> t;
    for (unsigned i = 0; i <= 16; ++i) t.push_back(LaurentPoly::delta_power(i));
    return t;
  }();
  return table.at(k);
}

std::string scalar_prefix(const LaurentPoly& c) {
  for (unsigned k = 0; k <= 16; ++k) {
    const auto& d = delta_pow(k);
    std::string pow = k == 0 ? "" : (k == 1 ? "δ" : "δ^" + std::to_string(k));
    if (c == d) return pow;
    if (c == -d) return "-" + pow;
  }
  return "[" + c.to_string() + "]";
}

// Evaluates `ts` on slots [offset, offset + width) of `s`.
LaurentPoly eval_at(const TermSum& ts, const SignSequence& s, std::size_t offset) {
  LaurentPoly out;
  if (ts.empty()) return out;
  std::size_t w = ts.width();
  if (offset + w > s.size()) throw std::invalid_argument("sign sequence shorter than term width");
  const int span = 3 * static_cast<int>(w);
  std::vector<const LaurentPoly*> scalars;
  std::vector<std::vector<Coeff>> hists;
  for (const auto& t : ts.terms()) {
    int sign = 1;
    int exponent = 0;
    for (std::size_t k = 0; k < w; ++k) {
      const auto& slot = s[offset + k];
      Factor x = t.factors[k];
      if (x == Factor::Skip) {
        if (slot) throw std::invalid_argument("skip factor over a real crossing at slot " +
                                              std::to_string(offset + k));
        continue;
      }
      if (!slot) throw std::invalid_argument("real factor over a skipped slot " +
                                             std::to_string(offset + k));
      Monomial m = factor_value(x, *slot);
      sign *= m.sign;
      exponent += m.exponent;
    }
    std::size_t g = 0;
    while (g < scalars.size() && !(*scalars[g] == t.scalar)) ++g;
    if (g == scalars.size()) {
      scalars.push_back(&t.scalar);
      hists.emplace_back(2 * span + 1, 0);
    }
    auto& cell = hists[g][exponent + span];
    cell = checked::add(cell, sign);
  }
  for (std::size_t g = 0; g < scalars.size(); ++g) {
    LaurentPoly h;
    for (int i = 0; i <= 2 * span; ++i) h.add_term(i - span, hists[g][i]);
    out += *scalars[g] * h;
  }
  return out;
}

}  // namespace

Monomial factor_value(Factor x, Sign s) {
  int v = value(s);
  switch (x) {
    case Factor::Apm: return {1, v};
    case Factor::Amp: return {1, -v};
    case Factor::F2pm: return {-1, -3 * v};
    case Factor::F2mp: return {-1, 3 * v};
    case Factor::Skip: break;
  }
  throw std::invalid_argument("skip factor has no value at a real sign");
}

std::string factor_token(Factor x) {
  switch (x) {
    case Factor::Apm: return "A^±";
    case Factor::Amp: return "A^∓";
    case Factor::F2pm: return "f_2^±";
    case Factor::F2mp: return "f_2^∓";
    case Factor::Skip: return "_";
  }
  return "?";
}

TermSum TermSum::unit() { return of({}); }

TermSum TermSum::of(std::vector<Factor> factors, LaurentPoly scalar) {
  TermSum t;
  t.terms_.push_back({std::move(scalar), std::move(factors)});
  return t;
}

std::size_t TermSum::width() const {
  if (terms_.empty()) throw std::logic_error("width of an empty term sum");
  std::size_t w = terms_.front().factors.size();
  for (const auto& t : terms_) {
    if (t.factors.size() != w) throw std::logic_error("term sum with inconsistent widths");
  }
  return w;
}

TermSum& TermSum::operator+=(const TermSum& other) {
  if (!terms_.empty()) {
    for (const auto& t : other.terms_) {
      if (t.factors.size() != terms_.front().factors.size()) {
        throw std::logic_error("adding term sums of different widths");
      }
    }
  }
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

TermSum TermSum::scaled(const LaurentPoly& by) const {
  TermSum out = *this;
  for (auto& t : out.terms_) t.scalar *= by;
  return out;
}

TermSum TermSum::canonical() const {
  std::map<std::vector<Factor>, LaurentPoly> merged;
  for (const auto& t : terms_) merged[t.factors] += t.scalar;
  TermSum out;
  for (auto& [fs, c] : merged) {
    if (!c.is_zero()) out.terms_.push_back({c, fs});
  }
  return out;
}

TermSum concat(const TermSum& prefix, const TermSum& suffix) {
  TermSum out;
  for (const auto& p : prefix.terms()) {
    for (const auto& q : suffix.terms()) {
      std::vector<Factor> fs = p.factors;
      fs.insert(fs.end(), q.factors.begin(), q.factors.end());
      out += TermSum::of(std::move(fs), p.scalar * q.scalar);
    }
  }
  return out;
}

TermSum repeat(const TermSum& block, int times) {
  TermSum out = TermSum::unit();
  for (int k = 0; k < times; ++k) out = concat(out, block);
  return out;
}

std::size_t slot_width(const TermSum& ts) { return ts.width(); }

LaurentPoly eval_sum(const TermSum& ts, const SignSequence& s) {
  if (!ts.empty() && ts.width() != s.size()) {
    throw std::invalid_argument("width mismatch: terms have " + std::to_string(ts.width()) +
                                " slots, signs have " + std::to_string(s.size()));
  }
  return eval_at(ts, s, 0);
}

std::string render(const TermSum& ts) {
  std::string out;
  for (const auto& t : ts.terms()) {
    if (!out.empty()) out += "+";
    out += scalar_prefix(t.scalar) + "(";
    for (std::size_t k = 0; k < t.factors.size(); ++k) {
      if (k) out += ",";
      out += factor_token(t.factors[k]);
    }
    out += ")";
  }
  return out;
}

// ---------------------------------------------------------------------------

Block make_named(std::string name, TermSum expansion) {
  (void)expansion.width();
  return {std::move(name), std::make_shared<const TermSum>(std::move(expansion))};
}

void SkeletonSum::append(const SkeletonSum& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
}

TermSum flatten(const Skeleton& sk) {
  TermSum out = TermSum::unit();
  for (const auto& b : sk) out = concat(out, *b.expansion);
  return out;
}

TermSum flatten(const SkeletonSum& sum) {
  TermSum out;
  for (const auto& sk : sum.terms) out += flatten(sk);
  return out;
}

std::size_t slot_width(const Skeleton& sk) {
  std::size_t w = 0;
  for (const auto& b : sk) w += b.width();
  return w;
}

std::string render(const Skeleton& sk) {
  std::string out = "(";
  for (std::size_t k = 0; k < sk.size(); ++k) {
    if (k) out += ",";
    out += sk[k].name;
  }
  return out + ")";
}

std::string render(const SkeletonSum& sum) {
  std::string out;
  for (const auto& sk : sum.terms) {
    if (!out.empty()) out += "+";
    out += render(sk);
  }
  return out;
}

std::vector<std::string> summand_strings(const SkeletonSum& sum) {
  std::vector<std::string> out;
  for (const auto& sk : sum.terms) out.push_back(render(sk));
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly eval_skeletons(const SkeletonSum& sum, const SignSequence& s) {
  struct KeyHash {
    std::size_t operator()(const std::pair<const TermSum*, std::size_t>& k) const {
      return std::hash<const void*>()(k.first) ^ (k.second * 0x9e3779b97f4a7c15ULL);
    }
  };
  std::unordered_map<std::pair<const TermSum*, std::size_t>, LaurentPoly, KeyHash> cache;
  LaurentPoly out;
  for (const auto& sk : sum.terms) {
    if (slot_width(sk) != s.size()) throw std::invalid_argument("skeleton width mismatch");
    LaurentPoly prod(1);
    std::size_t offset = 0;
    for (const auto& b : sk) {
      auto key = std::make_pair(b.expansion.get(), offset);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, eval_at(*b.expansion, s, offset)).first;
      prod *= it->second;
      offset += b.width();
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

std::string block_name(BlockName name, int index) {
  switch (name) {
    case BlockName::C: return "C";
    case BlockName::X: return "X";
    case BlockName::K: return "K";
    case BlockName::L: return "L";
    case BlockName::M: return "M";
    case BlockName::N: return "N";
    case BlockName::NTilde: return "N~";
    case BlockName::R: return "R";
    case BlockName::RTilde: return "R~";
    case BlockName::S: return "S";
    case BlockName::G2: return "g_2";
    case BlockName::H2: return "h_2";
    case BlockName::H3: return "h_3";
    case BlockName::F3: return "f_3";
    case BlockName::PPrime: return "P'_" + std::to_string(index);
    case BlockName::PTildePrime: return "P~'_" + std::to_string(index);
    case BlockName::Q: return "Q_" + std::to_string(index);
  }
  return "?";
}

TermSum expand_block(BlockName name, int index, const BlockVariants& v) {
  const LaurentPoly d = LaurentPoly::delta();
  switch (name) {
    case BlockName::C: return lit({P, P}) + lit({FM, Mn});
    case BlockName::X: return lit({P, P}, d) + lit({P, Mn}) + lit({Mn, P});
    case BlockName::K: return lit({FM, FM, Mn, Mn});
    case BlockName::L: return lit({FM, P, Mn});
    case BlockName::M: return lit({FM, FP, Mn});
    case BlockName::N: return lit({FM, Mn, Mn, Mn});
    case BlockName::NTilde: return lit({Mn, FM, Mn, Mn});
    case BlockName::R: return lit({FM, P, Mn, Mn});
    case BlockName::RTilde: return lit({P, FM, Mn, Mn});
    case BlockName::S: return lit({FP, FM, Mn, Mn});
    case BlockName::G2: return expand_block(BlockName::X) + lit({Mn, Mn}, d);
    case BlockName::H2:
      return lit({P, P}) + lit({P, Mn}, d) + lit({Mn, P}, d) + lit({Mn, Mn}, d * d);
    case BlockName::H3:
      return seq({expand_block(BlockName::H2), f(P), f(P)}) + lit({FM, FM, Mn, Mn}) +
             seq({expand_block(BlockName::G2), f(P), f(Mn)}) + lit({FM, FP, Mn, P});
    case BlockName::F3: return lit({FP, P}) + lit({FM, Mn});
    case BlockName::PPrime:
    case BlockName::PTildePrime:
    case BlockName::Q:
      break;
  }

  const bool tilde = name == BlockName::PTildePrime;
  const TermSum K = expand_block(BlockName::K);
  const TermSum L = expand_block(BlockName::L);
  const TermSum X = expand_block(BlockName::X);
  const TermSum N = expand_block(BlockName::N);
  const TermSum Nt = expand_block(BlockName::NTilde);

  if (name == BlockName::Q) {
    if (index < 3) throw std::invalid_argument("Q_i needs i >= 3, got " + std::to_string(index));
    const TermSum M = expand_block(BlockName::M);
    if (index % 2 == 1) {
      int j = (index - 3) / 2;
      return seq({M, repeat(K, j), L}) +
             seq({expand_block(BlockName::S), repeat(Nt, j), f(Mn), f(P)});
    }
    int j = (index - 2) / 2;
    const TermSum& tail = v.q_tail == QEvenTail::N ? N : K;
    return seq({M, repeat(K, j), f(P)}) +
           seq({expand_block(BlockName::G2), repeat(tail, j), f(P), f(Mn)});
  }

  if (index < 1) throw std::invalid_argument("P-block needs i >= 1, got " + std::to_string(index));
  if (index == 1) return lit({P, P});
  if (index == 2) {
    if (!tilde) return K + seq({f(P), L}) + seq({X, f(Mn), f(P)});
    return seq({X, f(P), f(Mn)}) + seq({L, f(P)}) + K;
  }
  if (index % 2 == 1) {
    int j = (index - 3) / 2;
    if (!tilde) {
      return seq({expand_block(BlockName::R), repeat(N, j), f(P), f(Mn)}) +
             seq({f(P), repeat(K, j + 1), f(P)});
    }
    return seq({L, repeat(K, j), L}) +
           seq({expand_block(BlockName::RTilde), repeat(Nt, j), f(Mn), f(P)});
  }
  int j = (index - 2) / 2;
  if (!tilde) {
    const TermSum& fill = v.p_fill == PEvenFill::NTilde ? Nt : N;
    return seq({X, repeat(fill, j), f(Mn), f(P)}) + seq({f(P), repeat(K, j), L});
  }
  return seq({L, repeat(K, j), f(P)}) + seq({X, repeat(N, j), f(P), f(Mn)});
}

Block make_block(BlockName name, int index, const BlockVariants& v) {
  using Key = std::tuple<int, int, int, int>;
  static std::mutex mu;
  static std::map<Key, Block> cache;
  bool indexed = name == BlockName::PPrime || name == BlockName::PTildePrime || name == BlockName::Q;
  bool q_even = name == BlockName::Q && index % 2 == 0;
  bool p_even = name == BlockName::PPrime && index % 2 == 0 && index >= 4;
  Key key{static_cast<int>(name), indexed ? index : 0, q_even ? static_cast<int>(v.q_tail) : 0,
          p_even ? static_cast<int>(v.p_fill) : 0};
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Block b = make_named(block_name(name, index), expand_block(name, index, v));
  cache.emplace(key, b);
  return b;
}

Block factor_block(Factor x) {
  static const std::array<Block, 5> blocks = [] {
    std::array<Block, 5> out;
    for (int k = 0; k < 5; ++k) {
      auto fx = static_cast<Factor>(k);
      out[k] = make_named(factor_token(fx), TermSum::of({fx}));
    }
    return out;
  }();
  return blocks[static_cast<int>(x)];
}

// ---------------------------------------------------------------------------
// Printed notation

namespace {

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string normalize_token(std::string raw) {
  replace_all(raw, "\\pm", "±");
  replace_all(raw, "\\mp", "∓");
  replace_all(raw, "\\_", "_");
  replace_all(raw, "\\delta", "δ");
  const std::string wt = "\\widetilde{";
  std::size_t pos;
  while ((pos = raw.find(wt)) != std::string::npos) {
    std::size_t close = raw.find('}', pos);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced \\widetilde");
    std::string inner = raw.substr(pos + wt.size(), close - pos - wt.size());
    raw.replace(pos, close + 1 - pos, inner + "~");
  }
  std::erase(raw, '{');
  std::erase(raw, '}');
  return raw;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<TokenTerm> parse() {
    auto out = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("tuple expression: " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '&') {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "{}" || text_.substr(pos_, 2) == "\\\\") {
        pos_ += 2;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::vector<TokenTerm> expr() {
    auto out = term();
    while (peek('+')) {
      ++pos_;
      auto more = term();
      out.insert(out.end(), more.begin(), more.end());
    }
    return out;
  }

  std::vector<TokenTerm> term() {
    LaurentPoly scalar(1);
    while (true) {
      skip();
      if (pos_ >= text_.size()) fail("expected a term");
      char c = text_[pos_];
      if (c == '(' || c == '[') {
        auto out = group();
        for (auto& t : out) t.scalar = scalar * t.scalar;
        return out;
      }
      std::string tok = name();
      if (tok.rfind("δ", 0) == 0) {
        std::string rest = tok.substr(std::string("δ").size());
        unsigned k = 1;
        if (!rest.empty()) {
          if (rest[0] != '^') fail("bad delta power");
          auto r = std::from_chars(rest.data() + 1, rest.data() + rest.size(), k);
          if (r.ec != std::errc() || r.ptr != rest.data() + rest.size()) fail("bad delta power");
        }
        scalar *= LaurentPoly::delta_power(k);
        continue;
      }
      return {TokenTerm{scalar, {tok}}};
    }
  }

  std::vector<TokenTerm> group() {
    char open = text_[pos_++];
    char close = open == '(' ? ')' : ']';
    std::vector<TokenTerm> acc{TokenTerm{}};
    while (true) {
      auto item = expr();
      std::vector<TokenTerm> next;
      for (const auto& a : acc) {
        for (const auto& b : item) {
          TokenTerm t{a.scalar * b.scalar, a.tokens};
          t.tokens.insert(t.tokens.end(), b.tokens.begin(), b.tokens.end());
          next.push_back(std::move(t));
        }
      }
      acc = std::move(next);
      if (peek(',')) {
        ++pos_;
        continue;
      }
      if (peek(close)) {
        ++pos_;
        return acc;
      }
      fail(std::string("expected ',' or '") + close + "'");
    }
  }

  std::string name() {
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '{') ++depth;
      if (c == '}') --depth;
      if (depth == 0 && (c == ',' || c == '(' || c == ')' || c == '[' || c == ']' || c == '+' ||
                         c == ' ' || c == '&')) {
        break;
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected a name");
    return normalize_token(std::string(text_.substr(start, pos_ - start)));
  }
};

std::optional<int> suffix_index(const std::string& token, std::string_view prefix) {
  if (token.size() <= prefix.size() || token.compare(0, prefix.size(), prefix) != 0) {
    return std::nullopt;
  }
  int v = 0;
  const char* b = token.data() + prefix.size();
  const char* e = token.data() + token.size();
  auto r = std::from_chars(b, e, v);
  if (r.ec != std::errc() || r.ptr != e) return std::nullopt;
  return v;
}

}  // namespace

std::vector<TokenTerm> parse_tuple_expression(std::string_view text) { return Parser(text).parse(); }

std::vector<std::string> summand_strings(const std::vector<TokenTerm>& terms) {
  std::vector<std::string> out;
  for (const auto& t : terms) {
    std::string s = scalar_prefix(t.scalar) + "(";
    for (std::size_t k = 0; k < t.tokens.size(); ++k) {
      if (k) s += ",";
      s += t.tokens[k];
    }
    out.push_back(s + ")");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<TermSum> builtin_token(const std::string& token, const BlockVariants& v) {
  static const std::map<std::string, Factor> factors = {
      {"A^±", P}, {"A^∓", Mn}, {"f_2^±", FP}, {"f_2^∓", FM}, {"_", Factor::Skip}};
  if (auto it = factors.find(token); it != factors.end()) return TermSum::of({it->second});

  static const std::map<std::string, BlockName> fixed = {
      {"C", BlockName::C},       {"X", BlockName::X},        {"K", BlockName::K},
      {"L", BlockName::L},       {"M", BlockName::M},        {"N", BlockName::N},
      {"N~", BlockName::NTilde}, {"R", BlockName::R},        {"R~", BlockName::RTilde},
      {"S", BlockName::S},       {"g_2", BlockName::G2},     {"h_2", BlockName::H2},
      {"h_3", BlockName::H3},    {"f_3", BlockName::F3}};
  if (auto it = fixed.find(token); it != fixed.end()) return *make_block(it->second).expansion;

  if (token == "V") return TermSum::of({P});
  if (token == "H") return TermSum::of({FM, Mn});
  if (token == "S_1") return TermSum::of({FP});
  if (token == "S_2") return *make_block(BlockName::F3).expansion;
  if (token == "h_1" || token == "1") return TermSum::unit();

  // Listings write P_i for P'_i and mark the other variant with a tilde.
  for (auto [prefix, name] : {std::pair{"P'_", BlockName::PPrime}, {"P_", BlockName::PPrime},
                              {"P~'_", BlockName::PTildePrime}, {"P~_", BlockName::PTildePrime},
                              {"Q_", BlockName::Q}}) {
    if (auto i = suffix_index(token, prefix)) return *make_block(name, *i, v).expansion;
  }
  return std::nullopt;
}

TermSum expand_tokens(const std::vector<TokenTerm>& terms, const TokenResolver& resolver,
                      const BlockVariants& v) {
  TermSum out;
  for (const auto& t : terms) {
    TermSum acc = TermSum::of({}, t.scalar);
    for (const auto& tok : t.tokens) {
      std::optional<TermSum> e;
      if (resolver) e = resolver(tok);
      if (!e) e = builtin_token(tok, v);
      if (!e) throw std::invalid_argument("unknown token '" + tok + "'");
      acc = concat(acc, *e);
    }
    out += acc;
  }
  return out;
}

}  // namespace chebyknot
