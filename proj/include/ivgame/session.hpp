#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivgame/state_algebra.hpp"
#include "ivgame/trace.hpp"

namespace ivgame {

class Adversary {
 public:
  virtual ~Adversary() = default;
  // Must return a member of legal_colors(pending); the session re-checks.
  virtual Color choose(const PendingMove& pending) = 0;
  virtual std::string name() const = 0;
};

enum class Orientation { normal, mirrored };

// Thrown out of Session::present once all seven colors are in use.
struct GameFinished {};

// An endpoint as Builder sees it under the current orientation.
struct ViewEndpoint {
  Coord at;
  Side side;
  Color color;
  int interval;
};

class Session {
 public:
  // Called when a strategy routine starts, after it has fixed its walls.
  using RoutineHook = std::function<void(const Session&, std::string_view routine)>;

  explicit Session(Adversary& adversary, int omega = 4);
  // Starts from the position reached by replaying `prefix` without consulting
  // the adversary. Used for fixtures.
  Session(Adversary& adversary, const Trace& prefix);

  const GameState& state() const { return state_; }
  const Trace& trace() const { return trace_; }
  Orientation orientation() const { return orientation_; }
  Adversary& adversary() { return *adversary_; }
  int answers() const { return answers_; }

  void set_routine_hook(RoutineHook hook) { hook_ = std::move(hook); }
  void enter_routine(std::string_view routine) const;

  // View coordinates. In mirrored orientation x maps to pivot_l + pivot_r - x.
  Coord to_view(const Coord& real) const;
  Coord to_real(const Coord& view) const;
  Coord view_wall_left() const;
  Coord view_wall_right() const;
  std::vector<ViewEndpoint> view() const;
  StateMatrix view_matrix() const;
  std::optional<MatchBinding> match(const Pattern& p) const;

  // Legality probe for a view-space candidate; no adversary involvement.
  // Returns the colors the candidate would meet, or nullopt when illegal.
  std::optional<ColorSet> probe(const Coord& view_lo, const Coord& view_hi) const;
  // Presents a view-space interval, records the adversary's answer, and
  // throws GameFinished when the seventh color appears.
  Color present(const Coord& view_lo, const Coord& view_hi);
  void set_view_walls(const Coord& view_l, const Coord& view_r);
  // Reflects all later placements through the current walls.
  void flip_orientation();

 private:
  Adversary* adversary_;
  GameState state_;
  Trace trace_;
  std::optional<Walls> pending_walls_;
  Orientation orientation_ = Orientation::normal;
  Coord pivot_l_, pivot_r_;
  int answers_ = 0;
  RoutineHook hook_;
};

}  // namespace ivgame
