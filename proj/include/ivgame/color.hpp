#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ivgame {

enum class Color : std::uint8_t { a, b, c, d, e, f, g };

inline constexpr int kColorCount = 7;

inline char to_char(Color c) { return static_cast<char>('a' + static_cast<int>(c)); }
inline Color color_at(int index) { return static_cast<Color>(index); }
std::optional<Color> parse_color(std::string_view text);

// Small set of colors as a bitmask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  static constexpr ColorSet all() { return ColorSet(0x7f); }
  static constexpr ColorSet from_mask(std::uint8_t m) { return ColorSet(m & 0x7f); }

  bool contains(Color c) const { return (mask_ >> static_cast<int>(c)) & 1; }
  void insert(Color c) { mask_ |= static_cast<std::uint8_t>(1u << static_cast<int>(c)); }
  void erase(Color c) { mask_ &= static_cast<std::uint8_t>(~(1u << static_cast<int>(c))); }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  std::uint8_t mask() const { return mask_; }
  ColorSet complement() const { return ColorSet(static_cast<std::uint8_t>(~mask_ & 0x7f)); }
  std::optional<Color> first() const {
    if (mask_ == 0) return std::nullopt;
    return color_at(std::countr_zero(mask_));
  }
  std::vector<Color> to_vector() const;
  std::string to_string() const;

  friend ColorSet operator|(ColorSet x, ColorSet y) { return ColorSet(x.mask_ | y.mask_); }
  friend ColorSet operator&(ColorSet x, ColorSet y) { return ColorSet(x.mask_ & y.mask_); }
  friend bool operator==(ColorSet, ColorSet) = default;

 private:
  constexpr explicit ColorSet(std::uint8_t m) : mask_(m) {}
  std::uint8_t mask_ = 0;
};

}  // namespace ivgame
