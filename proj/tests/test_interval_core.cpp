#include <doctest.h>

#include <functional>

#include "ivgame/interval_core.hpp"
#include "ivgame/state_algebra.hpp"
#include "ivgame/trace.hpp"
#include "support.hpp"

using namespace ivgame;
using ivgame::testing::q;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GameError& e) {
    return e.kind();
  }
  FAIL("expected a GameError");
  return ErrorKind::parse;
}

GameState with(GameState s, Coord lo, Coord hi, Color c) { return assign(present(s, lo, hi), c); }

}  // namespace

TEST_CASE("first move inside the walls is legal") {
  GameState s;
  PendingMove p = present(s, q(1, 2), q(3, 2));
  CHECK(p.lo() == q(1, 2));
  CHECK(p.hi() == q(3, 2));
  CHECK(legal_colors(p) == ColorSet::all());
}

TEST_CASE("nested candidate is a containment error") {
  GameState s = with(GameState(), q(1, 2), q(3, 2), Color::a);
  CHECK(kind_of([&] { present(s, q(5, 4), q(7, 4)); }) == ErrorKind::containment);
  CHECK(kind_of([&] { present(s, q(1, 3), q(7, 3)); }) == ErrorKind::containment);
  CHECK_NOTHROW(present(s, q(3, 3), q(7, 3)));
}

TEST_CASE("a fifth interval over a point covered four times is a clique error") {
  GameState s;
  s = with(s, q(1, 4), q(9, 4), Color::a);
  s = with(s, q(2, 4), q(10, 4), Color::b);
  s = with(s, q(3, 4), q(11, 4), Color::c);
  s = with(s, q(4, 4), q(12, 4), Color::d);
  CHECK(clique_size(s) == 4);
  CHECK(kind_of([&] { present(s, q(5, 4), q(13, 4)); }) == ErrorKind::clique);
  // Only three of the four reach past 19/32.
  CHECK_NOTHROW(present(s, q(19, 5), q(29, 5)));

  GameState t(5);
  for (const auto& iv : s.intervals()) t = with(t, iv.lo, iv.hi, iv.color);
  CHECK_NOTHROW(present(t, q(5, 4), q(13, 4)));
}

TEST_CASE("wall, order and duplicate endpoint errors") {
  GameState s = set_walls(GameState(), q(1, 2), q(3, 2));
  CHECK(kind_of([&] { present(s, q(1, 3), q(5, 3)); }) == ErrorKind::wall);
  CHECK(kind_of([&] { present(s, q(1, 2), q(5, 3)); }) == ErrorKind::wall);
  CHECK(kind_of([&] { present(s, q(5, 3), q(3, 2)); }) == ErrorKind::wall);
  CHECK(kind_of([&] { present(s, q(5, 3), q(3, 3)); }) == ErrorKind::invalid_order);
  CHECK(kind_of([&] { present(s, q(5, 3), q(5, 3)); }) == ErrorKind::invalid_order);
  s = with(s, q(3, 3), q(5, 3), Color::a);
  CHECK(kind_of([&] { present(s, q(5, 3), q(11, 4)); }) == ErrorKind::duplicate_endpoint);
  CHECK(kind_of([&] { present(s, q(5, 4), q(3, 3)); }) == ErrorKind::duplicate_endpoint);
}

TEST_CASE("legal colors exclude exactly the colors met") {
  GameState s;
  s = with(s, q(1, 3), q(3, 3), Color::a);
  s = with(s, q(2, 3), q(4, 3), Color::b);
  s = with(s, q(13, 4), q(15, 4), Color::c);
  CHECK(legal_colors(present(s, q(5, 4), q(9, 4))).to_string() == "cdefg");
  CHECK(legal_colors(present(s, q(9, 4), q(14, 4))).to_string() == "abdefg");

  GameState u(7);
  for (int i = 0; i < 6; ++i) u = with(u, q(8 + i, 5), q(16 + i, 5), color_at(i));
  CHECK(legal_colors(present(u, q(29, 6), q(45, 6))).to_string() == "g");
}

TEST_CASE("assign appends and rejects conflicting colors") {
  GameState s;
  GameState one = assign(present(s, q(1, 2), q(3, 2)), Color::a);
  REQUIRE(one.intervals().size() == 1);
  CHECK(one.intervals()[0].color == Color::a);
  CHECK(one.intervals()[0].move_index == 1);
  CHECK(one.used_colors().to_string() == "a");
  CHECK(s.intervals().empty());

  PendingMove p = present(one, q(5, 3), q(7, 3));
  CHECK(kind_of([&] { assign(p, Color::a); }) == ErrorKind::color_conflict);
  CHECK(p.base() == one);
  CHECK(assign(p, Color::b).move_count() == 2);
}

TEST_CASE("walls may only shrink") {
  GameState s = set_walls(GameState(), q(1, 2), q(3, 2));
  CHECK(s.wall_left() == q(1, 2));
  CHECK(s.wall_right() == q(3, 2));
  CHECK(kind_of([&] { set_walls(s, Coord::zero(), Coord::one()); }) == ErrorKind::wall_order);
  CHECK(kind_of([&] { set_walls(s, q(1, 1), q(1, 1)); }) == ErrorKind::wall_order);
  CHECK(kind_of([&] { set_walls(s, q(5, 3), q(3, 3)); }) == ErrorKind::wall_order);
  CHECK_NOTHROW(set_walls(s, q(1, 2), q(3, 2)));
  CHECK_NOTHROW(set_walls(s, q(5, 3), q(6, 3)));
}

TEST_CASE("walls excluding one interval drop exactly its columns") {
  GameState s;
  s = with(s, q(1, 3), q(3, 3), Color::a);
  s = with(s, q(2, 3), q(4, 3), Color::b);
  s = with(s, q(10, 4), q(14, 4), Color::a);
  CHECK(state_matrix(s).sides_string() == "001101");
  CHECK(state_matrix(s).colors_string() == "ababaa");
  GameState w = set_walls(s, Coord::zero(), q(9, 4));
  CHECK(state_matrix(w).sides_string() == "0011");
  CHECK(state_matrix(w).colors_string() == "abab");
  CHECK(kind_of([&] { present(w, q(19, 5), q(21, 5)); }) == ErrorKind::wall);
}

TEST_CASE("clique size") {
  CHECK(clique_size(GameState()) == 0);
  GameState s = with(GameState(), q(1, 2), q(3, 2), Color::a);
  CHECK(clique_size(s) == 1);
  GameState t = with(GameState(), q(1, 3), q(1, 1), Color::a);
  t = with(t, q(3, 3), q(7, 3), Color::b);
  CHECK(clique_size(t) == 2);
  t = with(t, q(13, 4), q(15, 4), Color::a);
  CHECK(clique_size(t) == 2);
}

TEST_CASE("a recorded 7-move trace replays to the same matrix") {
  FirstFitAdversary ff;
  Session session(ff);
  run_master(session);
  Trace t = session.trace();
  REQUIRE(t.moves.size() >= 7);
  t.moves.resize(7);
  t.final_walls.reset();
  GameState direct(4);
  for (const auto& m : t.moves) {
    if (m.walls) direct = set_walls(direct, m.walls->left, m.walls->right);
    direct = assign(present(direct, m.lo, m.hi), m.color);
    check_invariants(direct);
  }
  GameState replayed = replay(t);
  CHECK(replayed == direct);
  CHECK(state_matrix(replayed) == state_matrix(direct));
}
