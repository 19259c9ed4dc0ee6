#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ivgame/color.hpp"
#include "ivgame/coord.hpp"
#include "ivgame/errors.hpp"

namespace ivgame {

struct PlacedInterval {
  Coord lo;
  Coord hi;
  Color color;
  int move_index;  // 1-based

  friend bool operator==(const PlacedInterval&, const PlacedInterval&) = default;
};

inline bool intersects(const Coord& lo1, const Coord& hi1, const Coord& lo2,
                       const Coord& hi2) {
  return !(hi1 < lo2 || hi2 < lo1);
}

// Geometric legality of [lo,hi] against existing intervals, walls and omega.
// Works for anything exposing .lo and .hi so the fuzzer can reuse it with its
// own palette. Throws GameError.
template <class Range>
void check_candidate(const Range& existing, const Coord& lo, const Coord& hi,
                     const Coord& wall_left, const Coord& wall_right, int omega);
// Non-throwing form; fills detail when given.
template <class Range>
std::optional<ErrorKind> candidate_violation(const Range& existing, const Coord& lo,
                                             const Coord& hi, const Coord& wall_left,
                                             const Coord& wall_right, int omega,
                                             std::string* detail = nullptr);

class PendingMove;

class GameState {
 public:
  explicit GameState(int omega = 4);

  int omega() const { return omega_; }
  const std::vector<PlacedInterval>& intervals() const { return intervals_; }
  const Coord& wall_left() const { return wall_left_; }
  const Coord& wall_right() const { return wall_right_; }
  ColorSet used_colors() const;
  int move_count() const { return static_cast<int>(intervals_.size()); }

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  friend GameState assign(const PendingMove& pending, Color color);
  friend GameState set_walls(const GameState& state, const Coord& l, const Coord& r);

  int omega_;
  std::vector<PlacedInterval> intervals_;
  Coord wall_left_;
  Coord wall_right_;
};

class PendingMove {
 public:
  const GameState& base() const { return base_; }
  const Coord& lo() const { return lo_; }
  const Coord& hi() const { return hi_; }
  // Colors of intervals meeting the candidate.
  ColorSet blocked() const { return blocked_; }

 private:
  friend PendingMove present(const GameState& state, const Coord& lo, const Coord& hi);
  PendingMove(GameState base, Coord lo, Coord hi);

  GameState base_;
  Coord lo_;
  Coord hi_;
  ColorSet blocked_;
};

PendingMove present(const GameState& state, const Coord& lo, const Coord& hi);
ColorSet legal_colors(const PendingMove& pending);
GameState assign(const PendingMove& pending, Color color);
GameState set_walls(const GameState& state, const Coord& l, const Coord& r);
int clique_size(const GameState& state);

// Maximum point coverage of a family of closed intervals with distinct endpoints.
template <class Range>
int max_coverage(const Range& intervals);

// Full invariant check, used after every assignment in tests and the verifier.
void check_invariants(const GameState& state);

// ---- template definitions ----

template <class Range>
int max_coverage(const Range& intervals) {
  int best = 0;
  for (const auto& x : intervals) {
    int cover = 0;
    for (const auto& y : intervals)
      if (y.lo <= x.lo && x.lo <= y.hi) ++cover;
    best = std::max(best, cover);
  }
  return best;
}

template <class Range>
std::optional<ErrorKind> candidate_violation(const Range& existing, const Coord& lo,
                                             const Coord& hi, const Coord& wall_left,
                                             const Coord& wall_right, int omega,
                                             std::string* detail) {
  // Messages are only built when the caller asks for them.
  auto fail = [&](ErrorKind kind, auto&& what) {
    if (detail) *detail = what();
    return std::optional<ErrorKind>(kind);
  };
  auto span = [](const Coord& x, const Coord& y) {
    return "[" + x.to_string() + "," + y.to_string() + "]";
  };
  if (!(lo < hi)) return fail(ErrorKind::invalid_order, [&] { return "interval " + span(lo, hi) + " has lo >= hi"; });
  if (!(wall_left < lo && hi < wall_right))
    return fail(ErrorKind::wall,
                [&] { return "interval " + span(lo, hi) + " is not strictly inside the walls"; });
  for (const auto& x : existing) {
    if (x.lo == lo || x.lo == hi || x.hi == lo || x.hi == hi)
      return fail(ErrorKind::duplicate_endpoint,
                  [&] { return "interval shares an endpoint with " + span(x.lo, x.hi); });
    if ((x.lo < lo && hi < x.hi) || (lo < x.lo && x.hi < hi))
      return fail(ErrorKind::containment, [&] { return "interval nests with " + span(x.lo, x.hi); });
  }
  // Coverage over [lo,hi] peaks at lo or at a left endpoint inside it.
  auto cover_at = [&](const Coord& p) {
    int n = 1;
    for (const auto& x : existing)
      if (x.lo <= p && p <= x.hi) ++n;
    return n;
  };
  int worst = cover_at(lo);
  for (const auto& x : existing)
    if (lo < x.lo && x.lo < hi) worst = std::max(worst, cover_at(x.lo));
  if (worst > omega)
    return fail(ErrorKind::clique, [&] {
      return "a point would be covered " + std::to_string(worst) + " times (omega " +
             std::to_string(omega) + ")";
    });
  return std::nullopt;
}

template <class Range>
void check_candidate(const Range& existing, const Coord& lo, const Coord& hi,
                     const Coord& wall_left, const Coord& wall_right, int omega) {
  std::string detail;
  if (auto kind = candidate_violation(existing, lo, hi, wall_left, wall_right, omega, &detail))
    throw GameError(*kind, detail);
}

}  // namespace ivgame
