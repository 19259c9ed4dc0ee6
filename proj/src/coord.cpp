#include "ivgame/coord.hpp"

#include <charconv>

#include "ivgame/errors.hpp"

namespace ivgame {

namespace {

// Brings both values to a common denominator 2^e.
struct Aligned {
  std::uint64_t a, b;
  unsigned e;
};

Aligned align(const Coord& x, const Coord& y) {
  unsigned e = std::max(x.log2_denominator(), y.log2_denominator());
  return {x.numerator() << (e - x.log2_denominator()),
          y.numerator() << (e - y.log2_denominator()), e};
}

}  // namespace

Coord Coord::from_parts(std::uint64_t numerator, unsigned log2_denominator) {
  if (numerator == 0) return Coord();
  while (log2_denominator > 0 && (numerator & 1) == 0) {
    numerator >>= 1;
    --log2_denominator;
  }
  if (log2_denominator > kMaxLog2Denominator)
    throw GameError(ErrorKind::overflow, "coordinate denominator exceeds 2^62");
  if (numerator > (std::uint64_t{1} << log2_denominator))
    throw GameError(ErrorKind::invalid_order, "coordinate outside [0,1]");
  Coord c;
  c.num_ = numerator;
  c.exp_ = log2_denominator;
  return c;
}

Coord Coord::parse(std::string_view text) {
  auto fail = [&]() -> Coord {
    throw GameError(ErrorKind::parse,
                    "malformed coordinate '" + std::string(text) + "'");
  };
  auto slash = text.find("/2^");
  if (slash == std::string_view::npos || slash == 0) return fail();
  std::uint64_t num = 0;
  unsigned exp = 0;
  const char* b = text.data();
  auto r1 = std::from_chars(b, b + slash, num);
  if (r1.ec != std::errc() || r1.ptr != b + slash) return fail();
  const char* e0 = b + slash + 3;
  const char* e1 = b + text.size();
  if (e0 == e1) return fail();
  auto r2 = std::from_chars(e0, e1, exp);
  if (r2.ec != std::errc() || r2.ptr != e1) return fail();
  if (exp > kMaxLog2Denominator || num > (std::uint64_t{1} << exp)) return fail();
  Coord c = from_parts(num, exp);
  // Only the normalized spelling is accepted, so strings round-trip exactly.
  if (c.to_string() != text) return fail();
  return c;
}

std::string Coord::to_string() const {
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

double Coord::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(std::uint64_t{1} << exp_);
}

std::strong_ordering operator<=>(const Coord& x, const Coord& y) {
  auto [a, b, e] = align(x, y);
  return a <=> b;
}

Coord midpoint(const Coord& a, const Coord& b) {
  if (!(a < b))
    throw GameError(ErrorKind::invalid_order,
                    "midpoint requires " + a.to_string() + " < " + b.to_string());
  auto [x, y, e] = align(a, b);
  return Coord::from_parts(x + y, e + 1);
}

Coord reflect(const Coord& left, const Coord& right, const Coord& x) {
  unsigned e = std::max({left.log2_denominator(), right.log2_denominator(),
                         x.log2_denominator()});
  auto lift = [e](const Coord& c) { return c.numerator() << (e - c.log2_denominator()); };
  std::uint64_t sum = lift(left) + lift(right);
  std::uint64_t v = lift(x);
  if (v > sum) throw GameError(ErrorKind::invalid_order, "reflection leaves [0,1]");
  return Coord::from_parts(sum - v, e);
}

}  // namespace ivgame
