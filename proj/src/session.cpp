#include "ivgame/session.hpp"

#include <algorithm>

namespace ivgame {

Session::Session(Adversary& adversary, int omega)
    : adversary_(&adversary), state_(omega) {
  trace_.omega = omega;
}

Session::Session(Adversary& adversary, const Trace& prefix)
    : adversary_(&adversary), state_(replay(prefix)), trace_(prefix) {
  pending_walls_ = trace_.final_walls;
}

void Session::enter_routine(std::string_view routine) const {
  if (hook_) hook_(*this, routine);
}

Coord Session::to_view(const Coord& real) const {
  if (orientation_ == Orientation::normal) return real;
  return reflect(pivot_l_, pivot_r_, real);
}

Coord Session::to_real(const Coord& view) const { return to_view(view); }

Coord Session::view_wall_left() const {
  return orientation_ == Orientation::normal ? state_.wall_left() : to_view(state_.wall_right());
}

Coord Session::view_wall_right() const {
  return orientation_ == Orientation::normal ? state_.wall_right() : to_view(state_.wall_left());
}

std::vector<ViewEndpoint> Session::view() const {
  std::vector<ViewEndpoint> out;
  for (const auto& e : visible_endpoints(state_)) {
    if (orientation_ == Orientation::normal) {
      out.push_back({e.at, e.side, e.color, e.interval});
    } else {
      out.push_back({to_view(e.at), e.side == Side::left ? Side::right : Side::left, e.color,
                     e.interval});
    }
  }
  if (orientation_ == Orientation::mirrored) std::reverse(out.begin(), out.end());
  return out;
}

StateMatrix Session::view_matrix() const {
  StateMatrix m;
  for (const auto& e : view()) m.columns.push_back({e.side, e.color});
  return m;
}

std::optional<MatchBinding> Session::match(const Pattern& p) const {
  auto ends = view();
  StateMatrix m;
  for (const auto& e : ends) m.columns.push_back({e.side, e.color});
  auto b = match_matrix(m, p);
  if (b) {
    b->dual = orientation_ == Orientation::mirrored;
    for (std::size_t j = 0; j < b->length; ++j) b->anchor_coords.push_back(ends[b->first + j].at);
  }
  return b;
}

std::optional<ColorSet> Session::probe(const Coord& view_lo, const Coord& view_hi) const {
  Coord lo = to_real(view_lo), hi = to_real(view_hi);
  if (orientation_ == Orientation::mirrored) std::swap(lo, hi);
  const auto& ivs = state_.intervals();
  if (candidate_violation(ivs, lo, hi, state_.wall_left(), state_.wall_right(), state_.omega()))
    return std::nullopt;
  ColorSet met;
  for (const auto& iv : ivs)
    if (intersects(iv.lo, iv.hi, lo, hi)) met.insert(iv.color);
  return met;
}

Color Session::present(const Coord& view_lo, const Coord& view_hi) {
  Coord lo = to_real(view_lo), hi = to_real(view_hi);
  if (orientation_ == Orientation::mirrored) std::swap(lo, hi);
  PendingMove pending = ivgame::present(state_, lo, hi);
  Color color = adversary_->choose(pending);
  state_ = assign(pending, color);
  ++answers_;
  trace_.moves.push_back({lo, hi, color, pending_walls_});
  pending_walls_.reset();
  trace_.final_walls.reset();
  if (state_.used_colors().size() == kColorCount) throw GameFinished{};
  return color;
}

void Session::set_view_walls(const Coord& view_l, const Coord& view_r) {
  Coord l = to_real(view_l), r = to_real(view_r);
  if (orientation_ == Orientation::mirrored) std::swap(l, r);
  state_ = set_walls(state_, l, r);
  pending_walls_ = Walls{l, r};
  trace_.final_walls = pending_walls_;
}

void Session::flip_orientation() {
  if (orientation_ == Orientation::mirrored)
    throw GameError(ErrorKind::strategy_inconsistency, "orientation already mirrored");
  orientation_ = Orientation::mirrored;
  pivot_l_ = state_.wall_left();
  pivot_r_ = state_.wall_right();
}

}  // namespace ivgame
