#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ivgame/session.hpp"

namespace ivgame {

struct Gap {
  Coord lo;
  Coord hi;
};

struct SeparationResult {
  std::vector<PlacedInterval> placed;  // view coordinates, sorted by lo
  int threshold_j = 0;
};

// Inductive separation: k pairwise intersecting intervals with lefts in
// left_gap and rights in right_gap, where the intervals colored from Y come
// first. Coordinates are in the session's view.
SeparationResult separate(Session& session, int k, ColorSet y, const Gap& left_gap,
                          const Gap& right_gap);

// Where a routine hands over: the next routine's name plus its binding.
// Names: aab_dual, bab_dual, aab, bab, abcab, abcac, abcad, bd, ed, abcde, game.
struct Transition {
  std::string next;
  std::optional<MatchBinding> binding;
};

Transition strategy_opening(Session& session);
Transition strategy_aab_to_abcax(Session& session, const MatchBinding& binding);
Transition strategy_bab_to_abcax(Session& session, const MatchBinding& binding);
Transition strategy_abcab_to_bd(Session& session, const MatchBinding& binding);
Transition strategy_abcac_to_bd_or_ed(Session& session, const MatchBinding& binding);
Transition strategy_abcad_to_game(Session& session, const MatchBinding& binding);
Transition strategy_bd_to_game(Session& session, const MatchBinding& binding);
Transition strategy_ed_to_game(Session& session, const MatchBinding& binding);
Transition strategy_abcde_to_game(Session& session, const MatchBinding& binding);

// Plays from the empty state until all seven colors are used.
GameState run_master(Session& session);
// Plays the named routine on the current position and follows the outline to
// the end. "opening" is equivalent to run_master.
GameState run_from(Session& session, const std::string& routine);

const std::vector<std::string>& routine_names();

// A trace whose final wall-restricted matrix is exactly the named pattern,
// colored with the identity assignment. Empty trace for "opening".
Trace fixture(const std::string& routine);

}  // namespace ivgame
