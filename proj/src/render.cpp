#include "ivgame/render.hpp"

#include <algorithm>

namespace ivgame {

std::string render_state(const GameState& state) {
  struct Token {
    Coord at;
    bool wall;
  };
  std::vector<Token> tokens{{state.wall_left(), true}, {state.wall_right(), true}};
  for (const auto& iv : state.intervals()) {
    tokens.push_back({iv.lo, false});
    tokens.push_back({iv.hi, false});
  }
  std::stable_sort(tokens.begin(), tokens.end(),
                   [](const Token& x, const Token& y) { return x.at < y.at; });

  std::string out;
  for (const auto& iv : state.intervals()) {
    std::string label = std::to_string(iv.move_index);
    std::string row(4 - std::min<std::size_t>(4, label.size()), ' ');
    row += label + " " + to_char(iv.color) + " ";
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      bool inside = iv.lo < t.at && t.at < iv.hi;
      char c = ' ';
      if (t.wall) c = '|';
      else if (t.at == iv.lo) c = '[';
      else if (t.at == iv.hi) c = ']';
      else if (inside) c = '=';
      row += c;
      bool run_on = (iv.lo <= t.at && t.at < iv.hi);
      row += run_on ? '=' : ' ';
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  return out;
}

}  // namespace ivgame
