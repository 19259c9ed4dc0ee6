#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ivgame/interval_core.hpp"

namespace ivgame {

enum class Side : std::uint8_t { left = 0, right = 1 };

struct Column {
  Side side;
  Color color;
  friend bool operator==(const Column&, const Column&) = default;
};

struct StateMatrix {
  std::vector<Column> columns;

  std::size_t size() const { return columns.size(); }
  bool empty() const { return columns.empty(); }
  std::string sides_string() const;   // e.g. "1010100"
  std::string colors_string() const;  // e.g. "acbacbd"
  static StateMatrix parse(std::string_view sides, std::string_view colors);

  friend bool operator==(const StateMatrix&, const StateMatrix&) = default;
};

// A visible endpoint together with the interval it belongs to.
struct Endpoint {
  Coord at;
  Side side;
  Color color;
  int interval;  // index into GameState::intervals()
};

// Endpoints strictly between the walls, ascending.
std::vector<Endpoint> visible_endpoints(const GameState& state);
StateMatrix state_matrix(const GameState& state);
StateMatrix dual(const StateMatrix& m);
bool equivalent(const StateMatrix& m1, const StateMatrix& m2);
StateMatrix canonical_form(const StateMatrix& m);

// Matrix of a full (unrestricted) family: even length, colors balanced and
// properly nested per color, and realizable by a proper interval family.
bool is_well_formed(const StateMatrix& m);

// Pairs window columns into intervals. Proper intervals keep left and right
// endpoints in the same order, so rights pair with lefts in order once the
// rights of intervals entering from outside are skipped. Returns nullopt when
// no consistent pairing exists. Unpaired ends are reported as -1.
struct ColumnPair {
  int left;   // column index or -1 (starts before the window)
  int right;  // column index or -1 (ends after the window)
  Color color;
};
std::optional<std::vector<ColumnPair>> pair_columns(const StateMatrix& m);

// The state read right to left: every coordinate x becomes 1 - x.
GameState mirror(const GameState& state);

struct Pattern {
  std::string name;
  std::vector<Side> sides;
  std::vector<int> vars;  // color variable per column, 0 = a
  bool all_colors = false;

  int variable_count() const;
  StateMatrix as_matrix() const;  // variables read as colors
};

struct MatchBinding {
  std::string pattern;
  std::size_t first = 0;   // column range in the (possibly dual) matrix
  std::size_t length = 0;
  std::array<std::optional<Color>, kColorCount> sigma{};
  std::vector<Coord> anchor_coords;  // in matched column order
  bool dual = false;

  Color color_of(char variable) const;
};

enum class MatchMode { normal_only, dual_only, either };

// Leftmost contiguous window of m equal to p under an injective variable map.
std::optional<MatchBinding> match_matrix(const StateMatrix& m, const Pattern& p);
std::optional<MatchBinding> match_pattern(const GameState& state, const Pattern& p,
                                          MatchMode mode = MatchMode::either);

class PatternLibrary {
 public:
  static const PatternLibrary& builtin();
  static PatternLibrary from_json(const std::string& text);

  const Pattern& get(const std::string& name) const;
  const std::vector<Pattern>& all() const { return patterns_; }

 private:
  std::vector<Pattern> patterns_;
};

// Bracket diagram: one column per endpoint, '[' opens and ']' closes.
std::string render_matrix(const StateMatrix& m);

}  // namespace ivgame
