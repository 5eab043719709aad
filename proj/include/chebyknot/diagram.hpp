#pragma once

// Combinatorial billiard-table diagrams: slope +-1 trajectories in a b x a
// rectangle of unit cells (optionally with cells removed from the last
// column), their crossings, strands, crossingless closures and orientations.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace chebyknot {

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Directions out of a lattice point, in counterclockwise order.
enum class Dir : std::uint8_t { NE = 0, NW = 1, SW = 2, SE = 3 };

constexpr Dir opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 2) % 4); }
constexpr int dx(Dir d) { return (d == Dir::NE || d == Dir::SE) ? 1 : -1; }
constexpr int dy(Dir d) { return (d == Dir::NE || d == Dir::NW) ? 1 : -1; }

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// One sign per slot; std::nullopt marks a skipped slot ('_').
class SignSequence {
 public:
  SignSequence() = default;
  explicit SignSequence(std::vector<std::optional<Sign>> slots) : slots_(std::move(slots)) {}

  /// Parses '+', '-', '_' characters. Throws std::invalid_argument otherwise.
  static SignSequence parse(std::string_view text);
  /// All-real sequence from a bit mask: bit i set means slot i is '-'.
  static SignSequence from_mask(std::uint64_t mask, std::size_t length);

  std::size_t size() const { return slots_.size(); }
  const std::optional<Sign>& operator[](std::size_t i) const { return slots_[i]; }
  const std::vector<std::optional<Sign>>& slots() const { return slots_; }
  bool is_skip(std::size_t i) const { return !slots_[i].has_value(); }

  SignSequence flipped() const;
  std::string to_string() const;

  friend bool operator==(const SignSequence&, const SignSequence&) = default;
  friend auto operator<=>(const SignSequence& a, const SignSequence& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  std::vector<std::optional<Sign>> slots_;
};

enum class BumperSide : std::uint8_t { None, Top, Bottom };

struct TableSpec {
  int a = 3;  // height
  int b = 1;  // width
  int bumpers = 0;  // cells removed from the last column
  BumperSide side = BumperSide::None;

  static TableSpec rectangle(int a, int b) { return {a, b, 0, BumperSide::None}; }
  /// B2(5,n): two cells removed, from the top for odd n and the bottom for even n.
  static TableSpec b2(int n);
  /// B1(5,n): one cell removed, from the top for even n and the bottom for odd n.
  static TableSpec b1(int n);

  std::string name() const;
};

/// Crossing end identifier: 4 * crossing + direction.
using EndId = int;

constexpr EndId end_id(int crossing, Dir d) { return 4 * crossing + static_cast<int>(d); }
constexpr int crossing_of(EndId e) { return e / 4; }
constexpr Dir dir_of(EndId e) { return static_cast<Dir>(e % 4); }

/// A strand between two crossing ends, or a crossingless closed component.
struct Strand {
  EndId from = -1;  // -1 for a crossingless component
  EndId to = -1;
  std::vector<Point> path;  // lattice points from `from` to `to`, bounces included
  std::vector<int> closure_jumps;  // k such that path[k] -> path[k+1] runs outside the table
};

/// One passage of a component through a crossing.
struct Visit {
  int crossing = 0;
  Dir out = Dir::NE;  // direction of travel leaving the crossing
};

struct Component {
  std::vector<Visit> visits;  // in traversal order
  Point start;                // where the traversal begins
  bool has_pockets = false;   // contains an open trajectory closed outside the table
  bool long_knot = false;     // contains the trajectory starting at (0,0)
};

class BilliardDiagram {
 public:
  const TableSpec& spec() const { return spec_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  const std::vector<Point>& crossings() const { return crossings_; }
  /// Slot layout: crossing index, or nullopt for a skipped position.
  const std::vector<std::optional<int>>& slots() const { return slots_; }
  std::size_t slot_count() const { return slots_.size(); }
  /// Slot index of each crossing.
  int slot_of(int crossing) const { return crossing_slot_[crossing]; }
  /// The end joined to `e` by a strand.
  EndId partner(EndId e) const { return partner_[e]; }
  const std::vector<EndId>& partners() const { return partner_; }
  const std::vector<Strand>& strands() const { return strands_; }
  const std::vector<Component>& components() const { return components_; }
  /// Components that contain no crossing.
  int free_loops() const { return free_loops_; }
  const std::vector<std::pair<Point, Point>>& closures() const { return closures_; }
  /// Direction of travel through `crossing` along its SW-NE strand
  /// (`sw_ne_line` true) or its NW-SE strand.
  Dir travel(int crossing, bool sw_ne_line) const { return travel_[crossing][sw_ne_line ? 0 : 1]; }

  nlohmann::json to_json() const;

 private:
  friend class DiagramBuilder;

  TableSpec spec_;
  std::vector<Point> crossings_;
  std::vector<std::optional<int>> slots_;
  std::vector<int> crossing_slot_;
  std::vector<EndId> partner_;
  std::vector<Strand> strands_;
  std::vector<Component> components_;
  std::vector<std::pair<Point, Point>> closures_;
  std::vector<std::array<Dir, 2>> travel_;
  int free_loops_ = 0;
};

/// Rectangular table T(a,b), a in {3,4,5}. Bumpered specs are forwarded to
/// build_bumpered.
BilliardDiagram build_table(const TableSpec& spec);
/// Notched table (a = 5, one or two cells removed from the last column).
/// Throws std::invalid_argument when a trajectory would meet a notch corner.
BilliardDiagram build_bumpered(const TableSpec& spec);

int component_count(const BilliardDiagram& d);

/// For sign '+', the strand along the SW-NE diagonal passes over.
class SignedDiagram {
 public:
  SignedDiagram(BilliardDiagram diagram, std::vector<Sign> crossing_signs);

  const BilliardDiagram& diagram() const { return diagram_; }
  Sign sign(int crossing) const { return signs_[crossing]; }
  const std::vector<Sign>& signs() const { return signs_; }
  /// Whether the strand through `d` and `opposite(d)` is the over strand.
  bool is_over(int crossing, Dir d) const;

 private:
  BilliardDiagram diagram_;
  std::vector<Sign> signs_;
};

/// Throws std::invalid_argument on length mismatch or when a '_' does not
/// line up with a skipped slot.
SignedDiagram assign_signs(const BilliardDiagram& d, const SignSequence& s);

/// Local writhe sign of a crossing under the diagram's orientation.
int crossing_writhe(const SignedDiagram& d, int crossing);
int writhe_direct(const SignedDiagram& d);

struct PdCode {
  std::vector<std::array<int, 4>> crossings;  // X[i,j,k,l], i = incoming under
  std::vector<int> loops;                     // labels of crossingless components
  std::string to_string() const;
};

PdCode export_pd(const SignedDiagram& d);
/// Per component: +k when passing over crossing k (1-based), -k under.
std::vector<std::vector<int>> gauss_code(const SignedDiagram& d);
std::string gauss_code_string(const SignedDiagram& d);

}  // namespace chebyknot
