#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ivgame {

// Exact dyadic rational in [0,1]: numerator / 2^log2_denominator.
class Coord {
 public:
  static constexpr unsigned kMaxLog2Denominator = 62;

  Coord() = default;

  // Normalizes; throws GameError(overflow) or GameError(invalid_order) when
  // the value is not representable or lies outside [0,1].
  static Coord from_parts(std::uint64_t numerator, unsigned log2_denominator);
  static Coord zero() { return Coord(); }
  static Coord one() { return from_parts(1, 0); }
  // Parses "num/2^k". Throws GameError(parse).
  static Coord parse(std::string_view text);

  std::uint64_t numerator() const { return num_; }
  unsigned log2_denominator() const { return exp_; }
  std::string to_string() const;
  double to_double() const;

  friend std::strong_ordering operator<=>(const Coord& a, const Coord& b);
  friend bool operator==(const Coord& a, const Coord& b) = default;

 private:
  std::uint64_t num_ = 0;
  unsigned exp_ = 0;
};

// Exact (a+b)/2. Throws GameError(invalid_order) unless a < b.
Coord midpoint(const Coord& a, const Coord& b);

// left + right - x, the mirror image of x inside [left, right].
Coord reflect(const Coord& left, const Coord& right, const Coord& x);

}  // namespace ivgame
