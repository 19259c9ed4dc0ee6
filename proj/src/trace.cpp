#include "ivgame/trace.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace ivgame {

using nlohmann::ordered_json;

namespace {

ordered_json walls_json(const Walls& w) {
  return ordered_json{{"left", w.left.to_string()}, {"right", w.right.to_string()}};
}

Walls parse_walls(const ordered_json& j) {
  return {Coord::parse(j.at("left").get<std::string>()),
          Coord::parse(j.at("right").get<std::string>())};
}

}  // namespace

std::string export_trace(const Trace& trace) {
  ordered_json doc;
  doc["format"] = "ivgame-trace";
  doc["version"] = 1;
  doc["omega"] = trace.omega;
  ordered_json moves = ordered_json::array();
  for (const auto& m : trace.moves) {
    ordered_json jm;
    if (m.walls) jm["walls"] = walls_json(*m.walls);
    jm["lo"] = m.lo.to_string();
    jm["hi"] = m.hi.to_string();
    jm["color"] = std::string(1, to_char(m.color));
    moves.push_back(std::move(jm));
  }
  doc["moves"] = std::move(moves);
  if (trace.final_walls) doc["final_walls"] = walls_json(*trace.final_walls);
  return doc.dump(2) + "\n";
}

Trace import_trace(const std::string& text) {
  Trace t;
  try {
    auto doc = ordered_json::parse(text);
    if (doc.at("format").get<std::string>() != "ivgame-trace")
      throw GameError(ErrorKind::parse, "not an ivgame trace");
    if (doc.at("version").get<int>() != 1)
      throw GameError(ErrorKind::parse, "unsupported trace version");
    t.omega = doc.at("omega").get<int>();
    if (t.omega < 1) throw GameError(ErrorKind::parse, "omega must be positive");
    for (const auto& jm : doc.at("moves")) {
      TraceMove m;
      if (jm.contains("walls")) m.walls = parse_walls(jm.at("walls"));
      m.lo = Coord::parse(jm.at("lo").get<std::string>());
      m.hi = Coord::parse(jm.at("hi").get<std::string>());
      auto c = parse_color(jm.at("color").get<std::string>());
      if (!c) throw GameError(ErrorKind::parse, "bad color in trace");
      m.color = *c;
      t.moves.push_back(m);
    }
    if (doc.contains("final_walls")) t.final_walls = parse_walls(doc.at("final_walls"));
  } catch (const nlohmann::json::exception& e) {
    throw GameError(ErrorKind::parse, std::string("trace: ") + e.what());
  }
  return t;
}

Trace read_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameError(ErrorKind::parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return import_trace(ss.str());
}

void write_trace_file(const std::string& path, const Trace& trace) {
  std::ofstream out(path);
  if (!out) throw GameError(ErrorKind::parse, "cannot write " + path);
  out << export_trace(trace);
}

GameState replay(const Trace& trace) {
  GameState s(trace.omega);
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const auto& m = trace.moves[i];
    try {
      if (m.walls) s = set_walls(s, m.walls->left, m.walls->right);
      s = assign(present(s, m.lo, m.hi), m.color);
    } catch (const GameError& e) {
      throw ReplayError(static_cast<int>(i), "move " + std::to_string(i) + ": " + e.what());
    }
  }
  if (trace.final_walls) {
    try {
      s = set_walls(s, trace.final_walls->left, trace.final_walls->right);
    } catch (const GameError& e) {
      throw ReplayError(static_cast<int>(trace.moves.size()), std::string("final walls: ") + e.what());
    }
  }
  return s;
}

}  // namespace ivgame
