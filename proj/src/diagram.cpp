#include "chebyknot/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chebyknot {

// ---------------------------------------------------------------------------
// Signs and specs

SignSequence SignSequence::parse(std::string_view text) {
  std::vector<std::optional<Sign>> slots;
  slots.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (text.substr(i, 3) == "\u2212") {  // typographic minus
      slots.emplace_back(Sign::Minus);
      i += 2;
      continue;
    }
    switch (ch) {
      case '+': slots.emplace_back(Sign::Plus); break;
      case '-': slots.emplace_back(Sign::Minus); break;
      case '_': slots.emplace_back(std::nullopt); break;
      default:
        throw std::invalid_argument("invalid sign character '" + std::string(1, ch) + "'");
    }
  }
  return SignSequence(std::move(slots));
}

SignSequence SignSequence::from_mask(std::uint64_t mask, std::size_t length) {
  std::vector<std::optional<Sign>> slots(length);
  for (std::size_t i = 0; i < length; ++i) {
    slots[i] = ((mask >> i) & 1U) ? Sign::Minus : Sign::Plus;
  }
  return SignSequence(std::move(slots));
}

SignSequence SignSequence::flipped() const {
  std::vector<std::optional<Sign>> out = slots_;
  for (auto& s : out) {
    if (s) s = flip(*s);
  }
  return SignSequence(std::move(out));
}

std::string SignSequence::to_string() const {
  std::string out;
  out.reserve(slots_.size());
  for (const auto& s : slots_) out.push_back(!s ? '_' : (*s == Sign::Plus ? '+' : '-'));
  return out;
}

TableSpec TableSpec::b2(int n) { return {5, n, 2, n % 2 == 1 ? BumperSide::Top : BumperSide::Bottom}; }

TableSpec TableSpec::b1(int n) { return {5, n, 1, n % 2 == 0 ? BumperSide::Top : BumperSide::Bottom}; }

std::string TableSpec::name() const {
  std::ostringstream out;
  if (side == BumperSide::None || bumpers == 0) {
    out << "T(" << a << "," << b << ")";
  } else {
    out << "B" << (side == BumperSide::Top ? "^" : "_") << bumpers << "(" << a << "," << b << ")";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Construction

namespace {

constexpr std::array<Dir, 4> kDirs = {Dir::NE, Dir::NW, Dir::SW, Dir::SE};

Point step(Point p, Dir d) { return {p.x + dx(d), p.y + dy(d)}; }

const char* dir_name(Dir d) {
  switch (d) {
    case Dir::NE: return "NE";
    case Dir::NW: return "NW";
    case Dir::SW: return "SW";
    case Dir::SE: return "SE";
  }
  return "?";
}

Dir dir_between(Point from, Point to) {
  int ddx = to.x - from.x;
  int ddy = to.y - from.y;
  if (ddx == 1 && ddy == 1) return Dir::NE;
  if (ddx == -1 && ddy == 1) return Dir::NW;
  if (ddx == -1 && ddy == -1) return Dir::SW;
  return Dir::SE;
}

}  // namespace

class DiagramBuilder {
 public:
  explicit DiagramBuilder(const TableSpec& spec) : spec_(spec) {
    cell_used_.assign(static_cast<std::size_t>(spec.a * spec.b), false);
  }

  BilliardDiagram build() {
    find_special_points();
    pair_pockets();
    trace_strands();
    trace_crossingless();
    orient_components();
    lay_out_slots();
    d_.spec_ = spec_;
    return std::move(d_);
  }

 private:
  bool has_cell(int cx, int cy) const {
    if (cx < 0 || cy < 0 || cx >= spec_.b || cy >= spec_.a) return false;
    if (cx == spec_.b - 1) {
      if (spec_.side == BumperSide::Top && cy >= spec_.a - spec_.bumpers) return false;
      if (spec_.side == BumperSide::Bottom && cy < spec_.bumpers) return false;
    }
    return true;
  }

  // Cell swept when leaving p in direction d.
  static std::pair<int, int> cell_towards(Point p, Dir d) {
    return {dx(d) > 0 ? p.x : p.x - 1, dy(d) > 0 ? p.y : p.y - 1};
  }

  bool can_leave(Point p, Dir d) const {
    auto [cx, cy] = cell_towards(p, d);
    return has_cell(cx, cy);
  }

  int degree(Point p) const {
    int n = 0;
    for (Dir d : kDirs) n += can_leave(p, d) ? 1 : 0;
    return n;
  }

  void mark_cell(Point p, Dir d) {
    auto [cx, cy] = cell_towards(p, d);
    cell_used_[static_cast<std::size_t>(cy * spec_.b + cx)] = true;
  }

  bool cell_marked(int cx, int cy) const { return cell_used_[static_cast<std::size_t>(cy * spec_.b + cx)]; }

  void find_special_points() {
    for (int x = 0; x <= spec_.b; ++x) {
      for (int y = 0; y <= spec_.a; ++y) {
        if ((x + y) % 2 != 0) continue;
        Point p{x, y};
        switch (degree(p)) {
          case 4:
            crossing_index_[p] = static_cast<int>(d_.crossings_.size());
            d_.crossings_.push_back(p);
            break;
          case 3:
            throw std::invalid_argument(spec_.name() + ": trajectory meets the notch corner at (" +
                                        std::to_string(x) + "," + std::to_string(y) + ")");
          case 1: pockets_.push_back(p); break;
          default: break;
        }
      }
    }
    // x-major then y, i.e. bottom to top within a column, columns left to right.
    d_.partner_.assign(4 * d_.crossings_.size(), -1);
  }

  void pair_pockets() {
    std::sort(pockets_.begin(), pockets_.end());
    if (pockets_.size() == 2) {
      add_closure(pockets_[0], pockets_[1]);
    } else if (pockets_.size() == 4) {
      // The two pockets on the right wall close to each other, the others likewise.
      std::vector<Point> right;
      std::vector<Point> rest;
      for (Point p : pockets_) (p.x == spec_.b ? right : rest).push_back(p);
      if (right.size() != 2) {
        throw std::invalid_argument(spec_.name() + ": cannot close pockets without crossings");
      }
      add_closure(rest[0], rest[1]);
      add_closure(right[0], right[1]);
    } else if (!pockets_.empty()) {
      throw std::invalid_argument(spec_.name() + ": unsupported pocket count " +
                                  std::to_string(pockets_.size()));
    }
  }

  void add_closure(Point p, Point q) {
    pocket_partner_[p] = q;
    pocket_partner_[q] = p;
    d_.closures_.emplace_back(p, q);
  }

  Dir only_exit(Point p) const {
    for (Dir d : kDirs) {
      if (can_leave(p, d)) return d;
    }
    throw std::logic_error("pocket without exit");
  }

  // Walks from p in direction d until reaching a crossing (returns the end it
  // arrives at) or returning to `stop` (returns -1).
  EndId walk(Point p, Dir d, Strand& strand, std::optional<Point> stop) {
    Point cur = p;
    Dir dir = d;
    for (;;) {
      mark_cell(cur, dir);
      Point next = step(cur, dir);
      strand.path.push_back(next);
      if (stop && next == *stop) return -1;
      int deg = degree(next);
      if (deg == 4) return end_id(crossing_index_.at(next), opposite(dir));
      if (deg == 2) {
        Dir back = opposite(dir);
        for (Dir e : kDirs) {
          if (e != back && can_leave(next, e)) {
            dir = e;
            break;
          }
        }
        cur = next;
        continue;
      }
      // Pocket: leave the table and re-enter at the paired pocket.
      Point q = pocket_partner_.at(next);
      strand.closure_jumps.push_back(static_cast<int>(strand.path.size()) - 1);
      strand.path.push_back(q);
      if (stop && q == *stop) return -1;
      cur = q;
      dir = only_exit(q);
    }
  }

  void trace_strands() {
    for (int c = 0; c < static_cast<int>(d_.crossings_.size()); ++c) {
      for (Dir d : kDirs) {
        EndId start = end_id(c, d);
        if (d_.partner_[start] != -1) continue;
        Strand s;
        s.from = start;
        s.path.push_back(d_.crossings_[c]);
        s.to = walk(d_.crossings_[c], d, s, std::nullopt);
        d_.partner_[s.from] = s.to;
        d_.partner_[s.to] = s.from;
        d_.strands_.push_back(std::move(s));
      }
    }
  }

  // Components that never meet a crossing.
  void trace_crossingless() {
    for (Point p : pockets_) {
      Dir d = only_exit(p);
      auto [cx, cy] = cell_towards(p, d);
      if (cell_marked(cx, cy)) continue;
      Strand s;
      s.path.push_back(p);
      walk(p, d, s, p);
      Component comp;
      comp.start = p;
      comp.has_pockets = true;
      comp.long_knot = (p == Point{0, 0});
      loose_.push_back(comp);
      d_.strands_.push_back(std::move(s));
    }
    for (int cy = 0; cy < spec_.a; ++cy) {
      for (int cx = 0; cx < spec_.b; ++cx) {
        if (!has_cell(cx, cy) || cell_marked(cx, cy)) continue;
        // Even-parity lower corner of the cell's used diagonal.
        Point p = (cx + cy) % 2 == 0 ? Point{cx, cy} : Point{cx + 1, cy};
        Dir d = (cx + cy) % 2 == 0 ? Dir::NE : Dir::NW;
        Strand s;
        s.path.push_back(p);
        walk(p, d, s, p);
        Component comp;
        comp.start = p;
        loose_.push_back(comp);
        d_.strands_.push_back(std::move(s));
      }
    }
    d_.free_loops_ = static_cast<int>(loose_.size());
  }

  // End of the crossing reached when starting at path[k] of strand s and
  // moving in direction `forward` along the path.
  static EndId entry_from(const Strand& s, bool forward) { return forward ? s.to : s.from; }

  void orient_components() {
    const int n = static_cast<int>(d_.crossings_.size());
    // Union-find over crossing ends: strands and straight passages.
    std::vector<int> parent(4 * static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (int e = 0; e < 4 * n; ++e) {
      unite(e, d_.partner_[e]);
      unite(e, end_id(crossing_of(e), opposite(dir_of(e))));
    }

    struct Start {
      Point at;
      bool pocket = false;
      EndId entry = -1;
    };
    std::map<int, Start> starts;
    auto consider = [&](int root, Start cand) {
      auto it = starts.find(root);
      if (it == starts.end()) {
        starts.emplace(root, cand);
        return;
      }
      Start& cur = it->second;
      if (cand.pocket != cur.pocket) {
        if (cand.pocket) cur = cand;
        return;
      }
      if (cand.at < cur.at) cur = cand;
    };

    for (const Strand& s : d_.strands_) {
      if (s.from < 0) continue;
      int root = find(s.from);
      std::vector<bool> jump_end(s.path.size(), false);  // index lies just after a closure
      std::vector<bool> jump_start(s.path.size(), false);
      for (int k : s.closure_jumps) {
        jump_start[static_cast<std::size_t>(k)] = true;
        jump_end[static_cast<std::size_t>(k) + 1] = true;
      }
      for (std::size_t k = 1; k + 1 < s.path.size(); ++k) {
        Point p = s.path[k];
        if (jump_start[k] || jump_end[k]) {
          // Pocket: move into the table, away from the closure.
          consider(root, {p, true, entry_from(s, jump_end[k])});
          continue;
        }
        // Bounce point: prefer leaving with dx = +1, then dy = +1.
        Dir fwd = dir_between(p, s.path[k + 1]);
        Dir bwd = dir_between(p, s.path[k - 1]);
        auto rank = [](Dir d) { return std::pair{dx(d), dy(d)}; };
        bool forward = rank(fwd) > rank(bwd);
        consider(root, {p, false, entry_from(s, forward)});
      }
    }

    std::vector<bool> done(4 * static_cast<std::size_t>(n), false);
    std::vector<Component> comps;
    d_.travel_.assign(static_cast<std::size_t>(n), {Dir::NE, Dir::NW});
    auto traverse = [&](EndId entry, Component& comp) {
      EndId in = entry;
      do {
        int c = crossing_of(in);
        Dir out = opposite(dir_of(in));
        done[static_cast<std::size_t>(in)] = true;
        done[static_cast<std::size_t>(end_id(c, out))] = true;
        comp.visits.push_back({c, out});
        bool sw_ne = (out == Dir::NE || out == Dir::SW);
        d_.travel_[static_cast<std::size_t>(c)][sw_ne ? 0 : 1] = out;
        in = d_.partner_[end_id(c, out)];
      } while (in != entry);
    };

    for (auto& [root, st] : starts) {
      Component comp;
      comp.start = st.at;
      comp.has_pockets = st.pocket;
      comp.long_knot = st.pocket && st.at == Point{0, 0};
      traverse(st.entry, comp);
      comps.push_back(std::move(comp));
    }
    // Components with neither pockets nor bounce points (not produced by
    // billiard tables, kept for completeness).
    for (int e = 0; e < 4 * n; ++e) {
      if (done[static_cast<std::size_t>(e)]) continue;
      Component comp;
      comp.start = d_.crossings_[static_cast<std::size_t>(crossing_of(e))];
      traverse(e, comp);
      comps.push_back(std::move(comp));
    }
    comps.insert(comps.end(), loose_.begin(), loose_.end());
    std::stable_sort(comps.begin(), comps.end(), [](const Component& l, const Component& r) {
      if (l.long_knot != r.long_knot) return l.long_knot;
      return l.start < r.start;
    });
    d_.components_ = std::move(comps);
  }

  void lay_out_slots() {
    const int n = static_cast<int>(d_.crossings_.size());
    d_.crossing_slot_.assign(static_cast<std::size_t>(n), -1);
    if (spec_.side == BumperSide::None || spec_.bumpers == 0) {
      for (int c = 0; c < n; ++c) {
        d_.slots_.emplace_back(c);
        d_.crossing_slot_[static_cast<std::size_t>(c)] = c;
      }
      return;
    }
    // Positions of the full rectangle; removed crossings become skips, except
    // at the end of the order.
    for (int x = 1; x < spec_.b; ++x) {
      for (int y = 1; y < spec_.a; ++y) {
        if ((x + y) % 2 != 0) continue;
        auto it = crossing_index_.find(Point{x, y});
        if (it == crossing_index_.end()) {
          d_.slots_.emplace_back(std::nullopt);
        } else {
          d_.crossing_slot_[static_cast<std::size_t>(it->second)] = static_cast<int>(d_.slots_.size());
          d_.slots_.emplace_back(it->second);
        }
      }
    }
    while (!d_.slots_.empty() && !d_.slots_.back()) d_.slots_.pop_back();
  }

  TableSpec spec_;
  BilliardDiagram d_;
  std::map<Point, int> crossing_index_;
  std::vector<Point> pockets_;
  std::map<Point, Point> pocket_partner_;
  std::vector<bool> cell_used_;
  std::vector<Component> loose_;
};

namespace {

void validate_common(const TableSpec& spec) {
  if (spec.a < 3 || spec.a > 5) {
    throw std::invalid_argument("unsupported table height a=" + std::to_string(spec.a));
  }
  if (spec.b < 1) throw std::invalid_argument("table width b must be >= 1");
}

}  // namespace

BilliardDiagram build_table(const TableSpec& spec) {
  if (spec.side != BumperSide::None && spec.bumpers != 0) return build_bumpered(spec);
  validate_common(spec);
  return DiagramBuilder(TableSpec::rectangle(spec.a, spec.b)).build();
}

BilliardDiagram build_bumpered(const TableSpec& spec) {
  validate_common(spec);
  if (spec.a != 5) throw std::invalid_argument("bumpered tables require a=5");
  if (spec.side == BumperSide::None || (spec.bumpers != 1 && spec.bumpers != 2)) {
    throw std::invalid_argument("bumpered tables remove one or two cells from the top or bottom");
  }
  BumperSide expected = spec.bumpers == 2 ? TableSpec::b2(spec.b).side : TableSpec::b1(spec.b).side;
  if (spec.side != expected) {
    throw std::invalid_argument(spec.name() + ": bumper side violates the parity rule");
  }
  return DiagramBuilder(spec).build();
}

int component_count(const BilliardDiagram& d) { return static_cast<int>(d.components().size()); }

nlohmann::json BilliardDiagram::to_json() const {
  using nlohmann::json;
  auto pt = [](Point p) { return json::array({p.x, p.y}); };
  json out;
  out["table"] = {{"name", spec_.name()}, {"a", spec_.a}, {"b", spec_.b}, {"bumpers", spec_.bumpers},
                  {"side", spec_.side == BumperSide::Top      ? "top"
                           : spec_.side == BumperSide::Bottom ? "bottom"
                                                               : "none"}};
  json crossings = json::array();
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    crossings.push_back({{"index", c}, {"slot", crossing_slot_[c]}, {"position", pt(crossings_[c])}});
  }
  out["crossings"] = crossings;
  json slots = json::array();
  for (const auto& s : slots_) slots.push_back(s ? json(*s) : json(nullptr));
  out["slots"] = slots;
  json strands = json::array();
  for (const Strand& s : strands_) {
    json path = json::array();
    for (Point p : s.path) path.push_back(pt(p));
    auto end_json = [](EndId e) {
      return e < 0 ? json(nullptr) : json{{"crossing", crossing_of(e)}, {"end", dir_name(dir_of(e))}};
    };
    strands.push_back({{"from", end_json(s.from)}, {"to", end_json(s.to)}, {"path", path},
                       {"closure_jumps", s.closure_jumps}});
  }
  out["strands"] = strands;
  json comps = json::array();
  for (const Component& c : components_) {
    json visits = json::array();
    for (const Visit& v : c.visits) visits.push_back({{"crossing", v.crossing}, {"out", dir_name(v.out)}});
    comps.push_back({{"start", pt(c.start)}, {"long_knot", c.long_knot}, {"has_pockets", c.has_pockets},
                     {"visits", visits}});
  }
  out["components"] = comps;
  json closures = json::array();
  for (const auto& [p, q] : closures_) closures.push_back({pt(p), pt(q)});
  out["closures"] = closures;
  return out;
}

// ---------------------------------------------------------------------------
// Signs, writhe, codes

SignedDiagram::SignedDiagram(BilliardDiagram diagram, std::vector<Sign> crossing_signs)
    : diagram_(std::move(diagram)), signs_(std::move(crossing_signs)) {
  if (signs_.size() != diagram_.crossing_count()) {
    throw std::invalid_argument("one sign per crossing required");
  }
}

bool SignedDiagram::is_over(int crossing, Dir d) const {
  bool sw_ne = (d == Dir::NE || d == Dir::SW);
  return (signs_[static_cast<std::size_t>(crossing)] == Sign::Plus) == sw_ne;
}

SignedDiagram assign_signs(const BilliardDiagram& d, const SignSequence& s) {
  if (s.size() != d.slot_count()) {
    throw std::invalid_argument("sign sequence has " + std::to_string(s.size()) + " slots, diagram " +
                                d.spec().name() + " has " + std::to_string(d.slot_count()));
  }
  std::vector<Sign> signs(d.crossing_count(), Sign::Plus);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& slot = d.slots()[i];
    if (slot.has_value() == s.is_skip(i)) {
      throw std::invalid_argument("slot " + std::to_string(i + 1) +
                                  (slot ? " is a crossing but got '_'" : " is skipped and needs '_'"));
    }
    if (slot) signs[static_cast<std::size_t>(*slot)] = *s[i];
  }
  return SignedDiagram(d, std::move(signs));
}

int crossing_writhe(const SignedDiagram& d, int crossing) {
  const BilliardDiagram& g = d.diagram();
  bool sw_ne_over = d.sign(crossing) == Sign::Plus;
  Dir over = g.travel(crossing, sw_ne_over);
  Dir under = g.travel(crossing, !sw_ne_over);
  int cross = dx(over) * dy(under) - dy(over) * dx(under);
  return cross > 0 ? 1 : -1;
}

int writhe_direct(const SignedDiagram& d) {
  int w = 0;
  for (int c = 0; c < static_cast<int>(d.diagram().crossing_count()); ++c) w += crossing_writhe(d, c);
  return w;
}

PdCode export_pd(const SignedDiagram& d) {
  const BilliardDiagram& g = d.diagram();
  std::vector<std::array<int, 4>> end_label(g.crossing_count(), {0, 0, 0, 0});
  PdCode pd;
  int base = 0;
  for (const Component& comp : g.components()) {
    const int m = static_cast<int>(comp.visits.size());
    if (m == 0) continue;
    for (int i = 0; i < m; ++i) {
      const Visit& v = comp.visits[static_cast<std::size_t>(i)];
      auto& labels = end_label[static_cast<std::size_t>(v.crossing)];
      labels[static_cast<std::size_t>(v.out)] = base + (i + 1) % m + 1;
      labels[static_cast<std::size_t>(opposite(v.out))] = base + i + 1;
    }
    base += m;
  }
  for (int c = 0; c < static_cast<int>(g.crossing_count()); ++c) {
    bool sw_ne_over = d.sign(c) == Sign::Plus;
    Dir under_out = g.travel(c, !sw_ne_over);
    int first = static_cast<int>(opposite(under_out));
    const auto& labels = end_label[static_cast<std::size_t>(c)];
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) x[static_cast<std::size_t>(k)] = labels[static_cast<std::size_t>((first + k) % 4)];
    pd.crossings.push_back(x);
  }
  for (const Component& comp : g.components()) {
    if (comp.visits.empty()) pd.loops.push_back(++base);
  }
  return pd;
}

std::string PdCode::to_string() const {
  std::ostringstream out;
  out << "PD[";
  bool first = true;
  for (const auto& x : crossings) {
    if (!first) out << ", ";
    first = false;
    out << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
  }
  for (int l : loops) {
    if (!first) out << ", ";
    first = false;
    out << "Loop[" << l << "]";
  }
  out << "]";
  return out.str();
}

std::vector<std::vector<int>> gauss_code(const SignedDiagram& d) {
  std::vector<std::vector<int>> out;
  for (const Component& comp : d.diagram().components()) {
    std::vector<int> code;
    for (const Visit& v : comp.visits) {
      code.push_back(d.is_over(v.crossing, v.out) ? v.crossing + 1 : -(v.crossing + 1));
    }
    out.push_back(std::move(code));
  }
  return out;
}

std::string gauss_code_string(const SignedDiagram& d) {
  std::ostringstream out;
  out << "GaussCode[";
  bool first_comp = true;
  for (const auto& code : gauss_code(d)) {
    if (!first_comp) out << ", ";
    first_comp = false;
    out << "{";
    for (std::size_t i = 0; i < code.size(); ++i) out << (i ? ", " : "") << code[i];
    out << "}";
  }
  out << "]";
  return out.str();
}

}  // namespace chebyknot
