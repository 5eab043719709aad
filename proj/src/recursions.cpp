#include "chebyknot/recursions.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace chebyknot {

std::vector<Composition> compositions(int n) {
  if (n < 0) throw std::invalid_argument("compositions of a negative integer");
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  for (int first = 1; first <= n; ++first) {
    for (auto& rest : compositions(n - first)) {
      Composition c{first};
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::uint64_t padovan(int n) {
  if (n < 0) throw std::invalid_argument("padovan index must be >= 0");
  std::vector<std::uint64_t> a{1, 0, 0};
  for (int k = 3; k <= n; ++k) a.push_back(a[k - 2] + a[k - 3]);
  return a[n];
}

// ---------------------------------------------------------------------------

namespace {

enum class FTok { S1, S2, V, H, C };

Skeleton f_skeleton_of(const std::vector<FTok>& toks) {
  Skeleton sk;
  for (FTok t : toks) {
    switch (t) {
      case FTok::S1: sk.push_back(factor_block(Factor::F2pm)); break;
      case FTok::S2: sk.push_back(make_block(BlockName::F3)); break;
      case FTok::V: sk.push_back(factor_block(Factor::Apm)); break;
      case FTok::H:
        sk.push_back(factor_block(Factor::F2mp));
        sk.push_back(factor_block(Factor::Amp));
        break;
      case FTok::C: sk.push_back(make_block(BlockName::C)); break;
    }
  }
  return sk;
}

}  // namespace

SkeletonSum f_skeletons(int b) {
  if (b < 1) throw std::invalid_argument("f_b needs b >= 1");
  if (b == 1) return {{Skeleton{}}};
  if (b == 2) return {{Skeleton{factor_block(Factor::F2pm)}}};
  if (b == 3) return {{Skeleton{make_block(BlockName::F3)}}};

  std::vector<std::vector<FTok>> sums{{FTok::S2, FTok::V}, {FTok::S1, FTok::H}};
  for (int k = 4; k < b; ++k) {
    std::vector<std::vector<FTok>> next;
    for (auto& s : sums) {
      switch (s.back()) {
        case FTok::V:
          s.back() = FTok::C;
          next.push_back(s);
          break;
        case FTok::H:
          s.push_back(FTok::V);
          next.push_back(s);
          break;
        case FTok::C: {
          auto alt = s;
          s.push_back(FTok::V);
          next.push_back(s);
          alt.back() = FTok::V;
          alt.push_back(FTok::H);
          next.push_back(alt);
          break;
        }
        default:
          throw std::logic_error("f summand ends in a start tile");
      }
    }
    sums = std::move(next);
  }
  SkeletonSum out;
  for (const auto& s : sums) {
    out.terms.push_back(f_skeleton_of(s));
    if (slot_width(out.terms.back()) != static_cast<std::size_t>(b - 1)) {
      throw std::logic_error("f_b summand of wrong width");
    }
  }
  return out;
}

TermSum f_terms(int b) { return flatten(f_skeletons(b)); }

std::uint64_t count_f_terms(int b) {
  if (b < 4) throw std::invalid_argument("count_f_terms needs b >= 4");
  // summands ending in V, in [f_2^∓,A^∓], in C
  std::uint64_t x = 1, y = 1, z = 0;
  for (int k = 4; k < b; ++k) {
    std::uint64_t nx = y + z, ny = z, nz = x;
    x = nx;
    y = ny;
    z = nz;
  }
  return x + y + z;
}

// ---------------------------------------------------------------------------

namespace {

bool resolve_tilde(PRule rule, int p, int columns_before, int tail_offset, int part_index,
                   bool in_head) {
  switch (rule) {
    case PRule::ColumnParity:
      return columns_before % 2 == 1;
    case PRule::TailOffset:
      return (p + (in_head ? 0 : tail_offset)) % 2 == 0;
    case PRule::PartIndex:
      return (p + (in_head ? 0 : part_index)) % 2 == 0;
  }
  return false;
}

Block p_block(int p, bool tilde, const BlockVariants& v) {
  return make_block(tilde ? BlockName::PTildePrime : BlockName::PPrime, p, v);
}

std::string head_name(HHead h) {
  switch (h) {
    case HHead::H3: return "h_3";
    case HHead::H2: return "h_2";
    case HHead::Q: return "Q";
  }
  return "?";
}

}  // namespace

std::vector<HSkeleton> h_skeleton_list(int b, const HOptions& opt) {
  if (b < 4) throw std::invalid_argument("h skeletons need b >= 4");
  std::vector<HSkeleton> out;
  for (int i = 3; i <= b - 1; ++i) {
    for (const auto& tail : compositions(b - 1 - i)) {
      for (HHead head : {HHead::H3, HHead::H2, HHead::Q}) {
        HSkeleton sk{i, head, tail, {}};
        if (head == HHead::H3) sk.tilde.push_back(resolve_tilde(opt.p_rule, i - 2, 3, 0, 0, true));
        if (head == HHead::H2) sk.tilde.push_back(resolve_tilde(opt.p_rule, i - 1, 2, 0, 0, true));
        int offset = 0;
        for (std::size_t k = 0; k < tail.size(); ++k) {
          int p = tail[k];
          sk.tilde.push_back(
              resolve_tilde(opt.p_rule, p, i + 1 + offset, offset, static_cast<int>(k), false));
          offset += p;
        }
        out.push_back(std::move(sk));
      }
    }
  }
  return out;
}

std::uint64_t count_h_skeletons(int b) {
  if (b < 4) throw std::invalid_argument("count_h_skeletons needs b >= 4");
  std::uint64_t total = 0;
  for (int i = 3; i <= b - 1; ++i) {
    int n = b - 1 - i;
    total += n == 0 ? 1 : (std::uint64_t{1} << (n - 1));
  }
  return total;
}

SkeletonSum h_skeletons(int b, const HOptions& opt) {
  SkeletonSum out;
  for (const auto& hs : h_skeleton_list(b, opt)) {
    Skeleton sk;
    std::size_t v = 0;
    switch (hs.head) {
      case HHead::H3:
        sk.push_back(make_block(BlockName::H3));
        sk.push_back(p_block(hs.i - 2, hs.tilde[v++], opt.blocks));
        break;
      case HHead::H2:
        sk.push_back(make_block(BlockName::H2));
        sk.push_back(p_block(hs.i - 1, hs.tilde[v++], opt.blocks));
        break;
      case HHead::Q:
        sk.push_back(make_block(BlockName::Q, hs.i, opt.blocks));
        break;
    }
    for (int p : hs.tail) sk.push_back(p_block(p, hs.tilde[v++], opt.blocks));
    if (slot_width(sk) != static_cast<std::size_t>(2 * (b - 1))) {
      throw std::logic_error("h_b skeleton of wrong width");
    }
    out.terms.push_back(std::move(sk));
  }
  return out;
}

namespace {

bool is_default(const HOptions& opt) {
  return opt.p_rule == PRule::ColumnParity && opt.blocks.q_tail == QEvenTail::N &&
         opt.blocks.p_fill == PEvenFill::NTilde;
}

TermSum h_terms_uncached(int b, const HOptions& opt) {
  if (b < 1) throw std::invalid_argument("h_b needs b >= 1");
  if (b == 1) return TermSum::unit();
  if (b == 2) return expand_block(BlockName::H2);
  if (b == 3) return expand_block(BlockName::H3);
  return flatten(h_skeletons(b, opt));
}

std::mutex h_mu;
std::map<int, Block> h_cache;

}  // namespace

Block h_block(int b) {
  if (b == 2) return make_block(BlockName::H2);
  if (b == 3) return make_block(BlockName::H3);
  {
    std::lock_guard lock(h_mu);
    if (auto it = h_cache.find(b); it != h_cache.end()) return it->second;
  }
  Block blk = make_named("h_" + std::to_string(b), h_terms_uncached(b, {}));
  std::lock_guard lock(h_mu);
  return h_cache.emplace(b, blk).first->second;
}

TermSum h_terms(int b, const HOptions& opt) {
  if (is_default(opt) && b >= 1) return *h_block(b).expansion;
  return h_terms_uncached(b, opt);
}

nlohmann::json h_skeletons_json(int b, const HOptions& opt) {
  using nlohmann::json;
  json list = json::array();
  auto list_sk = h_skeleton_list(b, opt);
  auto sums = h_skeletons(b, opt);
  for (std::size_t k = 0; k < list_sk.size(); ++k) {
    const auto& hs = list_sk[k];
    json variants = json::array();
    for (std::size_t n = 0; n < sums.terms[k].size(); ++n) variants.push_back(sums.terms[k][n].name);
    list.push_back({{"i", hs.i},
                    {"head", head_name(hs.head)},
                    {"composition", hs.tail},
                    {"blocks", variants},
                    {"width", slot_width(sums.terms[k])},
                    {"terms", flatten(sums.terms[k]).size()}});
  }
  return {{"b", b},
          {"p_rule", opt.p_rule == PRule::ColumnParity ? "column-parity"
                     : opt.p_rule == PRule::TailOffset ? "tail-offset"
                                                       : "part-index"},
          {"q_even_tail", opt.blocks.q_tail == QEvenTail::N ? "N" : "K"},
          {"p_even_fill", opt.blocks.p_fill == PEvenFill::NTilde ? "N~" : "N"},
          {"skeleton_count", count_h_skeletons(b)},
          {"skeletons", list}};
}

// ---------------------------------------------------------------------------

namespace {

Skeleton join(std::initializer_list<Skeleton> parts) {
  Skeleton out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Skeleton pow_block(BlockName name, int times) { return Skeleton(times, make_block(name)); }

Skeleton one(const Block& b) { return {b}; }

}  // namespace

SkeletonSum b_skeletons(int n) {
  if (n < 1) throw std::invalid_argument("b_n needs n >= 1");
  const Block Ap = factor_block(Factor::Apm);
  const Block skip = factor_block(Factor::Skip);
  const Block M = make_block(BlockName::M);
  const Block L = make_block(BlockName::L);
  const Skeleton notch{factor_block(Factor::F2mp), skip, factor_block(Factor::Amp)};
  SkeletonSum out;
  if (n == 1) {
    out.terms.push_back({});
  } else if (n == 2) {
    out.terms.push_back({skip, factor_block(Factor::F2pm)});
  } else if (n % 2 == 1) {
    for (int i = 0; i <= (n - 3) / 2; ++i) {
      out.terms.push_back(join({one(h_block(n - 1 - 2 * i)), one(Ap), pow_block(BlockName::K, i)}));
      if (i <= (n - 5) / 2 && n >= 5) {
        out.terms.push_back(join({one(h_block(n - 2 - 2 * i)), one(L), pow_block(BlockName::K, i)}));
      }
    }
    out.terms.push_back(join({one(M), pow_block(BlockName::K, (n - 3) / 2)}));
  } else {
    out.terms.push_back({h_block(n - 1), skip, Ap});
    for (int i = 0; i <= (n - 4) / 2; ++i) {
      out.terms.push_back(
          join({one(h_block(n - 2 - 2 * i)), one(Ap), pow_block(BlockName::K, i), notch}));
      if (n >= 6 && i <= (n - 6) / 2) {
        out.terms.push_back(
            join({one(h_block(n - 3 - 2 * i)), one(L), pow_block(BlockName::K, i), notch}));
      }
    }
    out.terms.push_back(join({one(M), pow_block(BlockName::K, (n - 4) / 2), notch}));
  }
  return out;
}

TermSum b_terms(int n) { return flatten(b_skeletons(n)); }

SkeletonSum bt_skeletons(int n) {
  if (n < 1) throw std::invalid_argument("bt_n needs n >= 1");
  const Block X = make_block(BlockName::X);
  SkeletonSum out;
  if (n == 1) {
    out.terms.push_back({});
  } else if (n == 2) {
    out.terms.push_back({make_block(BlockName::G2)});
  } else if (n % 2 == 1) {
    for (int i = 0; i <= (n - 3) / 2; ++i) {
      out.terms.push_back(join({one(h_block(n - 1 - 2 * i)), one(X), pow_block(BlockName::NTilde, i)}));
      if (n >= 5 && i <= (n - 5) / 2) {
        out.terms.push_back(join({one(h_block(n - 2 - 2 * i)), one(make_block(BlockName::RTilde)),
                                  pow_block(BlockName::NTilde, i)}));
      }
    }
    out.terms.push_back(join({one(make_block(BlockName::S)), pow_block(BlockName::NTilde, (n - 3) / 2)}));
  } else {
    for (int i = 0; i <= (n - 4) / 2; ++i) {
      out.terms.push_back(join({one(h_block(n - 1 - 2 * i)), one(X), pow_block(BlockName::N, i)}));
      out.terms.push_back(join({one(h_block(n - 2 - 2 * i)), one(make_block(BlockName::R)),
                                pow_block(BlockName::N, i)}));
    }
    out.terms.push_back(join({one(make_block(BlockName::G2)), pow_block(BlockName::N, (n - 2) / 2)}));
  }
  return out;
}

TermSum bt_terms(int n) { return flatten(bt_skeletons(n)); }

// ---------------------------------------------------------------------------

std::vector<int> writhe_pattern(int a, int b) {
  if (a == 3) {
    switch (((b % 3) + 3) % 3) {
      case 1: return {1, -1, 1};
      case 2: return {1, 1, -1};
      default: break;
    }
  } else if (a == 5) {
    bool even = b % 2 == 0;
    switch (((b % 5) + 5) % 5) {
      case 1: return even ? std::vector{1, 1, -1, 1, -1, -1, -1, 1, 1, 1}
                          : std::vector{1, 1, 1, -1, -1, -1, 1, -1, 1, 1};
      case 2: return even ? std::vector{1, 1, 1, -1, -1, 1, 1, 1, -1, -1}
                          : std::vector{1, 1, -1, 1, 1, -1, 1, 1, -1, -1};
      case 3: return even ? std::vector{1, 1, -1, -1, 1, 1, 1, -1, -1, 1}
                          : std::vector{1, 1, -1, -1, 1, 1, -1, 1, 1, -1};
      case 4: return even ? std::vector{1, 1, 1, 1, 1, -1, -1, -1, 1, -1}
                          : std::vector{1, 1, 1, 1, -1, 1, -1, -1, -1, 1};
      default: break;
    }
  } else {
    throw std::invalid_argument("writhe increments are known for a = 3 and a = 5 only");
  }
  throw std::invalid_argument("writhe increments need b coprime to a; got a=" + std::to_string(a) +
                              ", b=" + std::to_string(b));
}

int writhe_recursive(int a, int b, const SignSequence& s) {
  if (a != 3 && a != 5) throw std::invalid_argument("writhe_recursive supports a = 3, 5");
  if (b < 1 || b % a == 0) {
    throw std::invalid_argument("writhe_recursive needs b coprime to a; got b=" + std::to_string(b));
  }
  const std::size_t expected = static_cast<std::size_t>((a - 1) / 2 * (b - 1));
  if (s.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " signs, got " +
                                std::to_string(s.size()));
  }
  if (b < a) return writhe_direct(assign_signs(build_table(TableSpec::rectangle(a, b)), s));
  auto pattern = writhe_pattern(a, b - a);
  const std::size_t head = expected - pattern.size();
  std::vector<std::optional<Sign>> prefix(s.slots().begin(), s.slots().begin() + head);
  int w = writhe_recursive(a, b - a, SignSequence(std::move(prefix)));
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    const auto& sign = s[head + k];
    if (!sign) throw std::invalid_argument("skip in a rectangular sign sequence");
    w += pattern[k] * value(*sign);
  }
  return w;
}

}  // namespace chebyknot
