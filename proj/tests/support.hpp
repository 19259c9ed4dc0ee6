#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <vector>

#include "ivgame/adversaries.hpp"
#include "ivgame/strategies.hpp"

namespace ivgame::testing {

inline Coord q(std::uint64_t num, unsigned exp) { return Coord::from_parts(num, exp); }

// Scripted answers first, then First-Fit.
class PrefixAdversary : public Adversary {
 public:
  explicit PrefixAdversary(std::vector<Color> prefix) : prefix_(std::move(prefix)) {}
  Color choose(const PendingMove& pending) override {
    if (next_ < prefix_.size()) {
      Color c = prefix_[next_++];
      REQUIRE_MESSAGE(legal_colors(pending).contains(c), "scripted color is illegal");
      return c;
    }
    return first_fit(pending);
  }
  std::string name() const override { return "prefix"; }

 private:
  std::vector<Color> prefix_;
  std::size_t next_ = 0;
};

// Trace that rebuilds a state: intervals in move order, walls at the end.
inline Trace trace_of(const GameState& s) {
  Trace t;
  t.omega = s.omega();
  for (const auto& iv : s.intervals()) t.moves.push_back({iv.lo, iv.hi, iv.color, std::nullopt});
  t.final_walls = Walls{s.wall_left(), s.wall_right()};
  return t;
}

// Calls body once per canonical answer sequence of `play`, which must run a
// session driven by the given adversary.
inline void for_each_branch(const std::function<void(Adversary&)>& play) {
  std::vector<CanonicalPathAdversary::Step> path;
  for (;;) {
    CanonicalPathAdversary adversary(path);
    play(adversary);
    path.resize(adversary.depth());
    while (!path.empty() && path.back().choice + 1 == path.back().branches) path.pop_back();
    if (path.empty()) return;
    ++path.back().choice;
  }
}

// Random legal play: candidates on a 2^-10 grid, random legal colors, and an
// occasional wall shrink.
inline GameState random_state(std::uint64_t seed, int n, int omega = 4) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> grid(1, 1023);
  GameState s(omega);
  for (int attempts = 0; s.move_count() < n && attempts < 50 * n; ++attempts) {
    Coord lo = q(grid(rng), 10), hi = q(grid(rng), 10);
    if (hi < lo) std::swap(lo, hi);
    if (candidate_violation(s.intervals(), lo, hi, s.wall_left(), s.wall_right(), omega)) continue;
    auto legal = legal_colors(present(s, lo, hi)).to_vector();
    if (legal.empty()) continue;
    s = assign(present(s, lo, hi), legal[rng() % legal.size()]);
  }
  if (rng() % 4 == 0) {
    Coord l = q(grid(rng), 10), r = q(grid(rng), 10);
    if (r < l) std::swap(l, r);
    if (l < r) s = set_walls(s, l, r);
  }
  return s;
}

// Random color permutation applied to every column.
inline StateMatrix permute_colors(const StateMatrix& m, std::uint64_t seed) {
  std::array<int, kColorCount> perm{0, 1, 2, 3, 4, 5, 6};
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  StateMatrix out = m;
  for (auto& c : out.columns) c.color = color_at(perm[static_cast<int>(c.color)]);
  return out;
}

inline std::vector<Color> colors(std::string_view letters) {
  std::vector<Color> out;
  for (char c : letters) out.push_back(color_at(c - 'a'));
  return out;
}

}  // namespace ivgame::testing
