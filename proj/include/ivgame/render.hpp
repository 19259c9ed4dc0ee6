#pragma once

#include <string>

#include "ivgame/interval_core.hpp"

namespace ivgame {

// One bar per interval over the sorted endpoints, with '|' marking the walls.
std::string render_state(const GameState& state);

}  // namespace ivgame
