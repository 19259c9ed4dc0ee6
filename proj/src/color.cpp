#include "ivgame/color.hpp"

namespace ivgame {

std::optional<Color> parse_color(std::string_view text) {
  if (text.size() != 1 || text[0] < 'a' || text[0] > 'g') return std::nullopt;
  return color_at(text[0] - 'a');
}

std::vector<Color> ColorSet::to_vector() const {
  std::vector<Color> out;
  for (int i = 0; i < kColorCount; ++i)
    if ((mask_ >> i) & 1) out.push_back(color_at(i));
  return out;
}

std::string ColorSet::to_string() const {
  std::string s;
  for (Color c : to_vector()) s.push_back(to_char(c));
  return s;
}

}  // namespace ivgame
