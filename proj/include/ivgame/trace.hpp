#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ivgame/interval_core.hpp"

namespace ivgame {

struct Walls {
  Coord left;
  Coord right;
  friend bool operator==(const Walls&, const Walls&) = default;
};

struct TraceMove {
  Coord lo;
  Coord hi;
  Color color;
  std::optional<Walls> walls;  // wall update applied before this interval
  friend bool operator==(const TraceMove&, const TraceMove&) = default;
};

struct Trace {
  int omega = 4;
  std::vector<TraceMove> moves;
  std::optional<Walls> final_walls;  // wall update after the last interval
  friend bool operator==(const Trace&, const Trace&) = default;
};

std::string export_trace(const Trace& trace);
// Throws GameError(parse) on malformed input.
Trace import_trace(const std::string& text);
Trace read_trace_file(const std::string& path);
void write_trace_file(const std::string& path, const Trace& trace);

// Revalidates every move. Throws ReplayError carrying the 0-based move index.
GameState replay(const Trace& trace);

}  // namespace ivgame
