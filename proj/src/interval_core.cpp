#include "ivgame/interval_core.hpp"

namespace ivgame {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_order: return "invalid-order";
    case ErrorKind::containment: return "containment";
    case ErrorKind::clique: return "clique";
    case ErrorKind::wall: return "wall";
    case ErrorKind::duplicate_endpoint: return "duplicate-endpoint";
    case ErrorKind::color_conflict: return "color-conflict";
    case ErrorKind::wall_order: return "wall-order";
    case ErrorKind::strategy_inconsistency: return "strategy-inconsistency";
    case ErrorKind::replay: return "replay";
    case ErrorKind::parse: return "parse";
    case ErrorKind::overflow: return "overflow";
  }
  return "unknown";
}

GameState::GameState(int omega)
    : omega_(omega), wall_left_(Coord::zero()), wall_right_(Coord::one()) {
  if (omega < 1) throw GameError(ErrorKind::clique, "omega must be positive");
}

ColorSet GameState::used_colors() const {
  ColorSet s;
  for (const auto& iv : intervals_) s.insert(iv.color);
  return s;
}

PendingMove::PendingMove(GameState base, Coord lo, Coord hi)
    : base_(std::move(base)), lo_(lo), hi_(hi) {
  for (const auto& iv : base_.intervals())
    if (intersects(iv.lo, iv.hi, lo_, hi_)) blocked_.insert(iv.color);
}

PendingMove present(const GameState& state, const Coord& lo, const Coord& hi) {
  check_candidate(state.intervals(), lo, hi, state.wall_left(), state.wall_right(),
                  state.omega());
  return PendingMove(state, lo, hi);
}

ColorSet legal_colors(const PendingMove& pending) { return pending.blocked().complement(); }

GameState assign(const PendingMove& pending, Color color) {
  if (pending.blocked().contains(color))
    throw GameError(ErrorKind::color_conflict,
                    std::string("color ") + to_char(color) +
                        " is used by an intersecting interval; legal: " +
                        legal_colors(pending).to_string());
  GameState next = pending.base();
  next.intervals_.push_back(
      {pending.lo(), pending.hi(), color, static_cast<int>(next.intervals_.size()) + 1});
  return next;
}

GameState set_walls(const GameState& state, const Coord& l, const Coord& r) {
  if (!(state.wall_left() <= l && l < r && r <= state.wall_right()))
    throw GameError(ErrorKind::wall_order,
                    "walls (" + l.to_string() + "," + r.to_string() + ") do not nest in (" +
                        state.wall_left().to_string() + "," + state.wall_right().to_string() +
                        ")");
  GameState next = state;
  next.wall_left_ = l;
  next.wall_right_ = r;
  return next;
}

int clique_size(const GameState& state) { return max_coverage(state.intervals()); }

void check_invariants(const GameState& state) {
  const auto& ivs = state.intervals();
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const auto& x = ivs[i];
    if (!(x.lo < x.hi)) throw GameError(ErrorKind::invalid_order, "interval with lo >= hi");
    for (std::size_t j = i + 1; j < ivs.size(); ++j) {
      const auto& y = ivs[j];
      if (x.lo == y.lo || x.lo == y.hi || x.hi == y.lo || x.hi == y.hi)
        throw GameError(ErrorKind::duplicate_endpoint, "two intervals share an endpoint");
      if ((x.lo < y.lo && y.hi < x.hi) || (y.lo < x.lo && x.hi < y.hi))
        throw GameError(ErrorKind::containment, "two intervals nest");
      if (x.color == y.color && intersects(x.lo, x.hi, y.lo, y.hi))
        throw GameError(ErrorKind::color_conflict, "intersecting intervals share a color");
    }
  }
  if (clique_size(state) > state.omega())
    throw GameError(ErrorKind::clique, "clique bound exceeded");
}

}  // namespace ivgame
