#include <doctest.h>

#include <algorithm>
#include <array>

#include "ivgame/adversaries.hpp"
#include "ivgame/strategies.hpp"
#include "support.hpp"

using namespace ivgame;
using ivgame::testing::colors;
using ivgame::testing::q;

namespace {

GameState with(GameState s, Coord lo, Coord hi, Color c) { return assign(present(s, lo, hi), c); }

std::string letters(const std::vector<Color>& cs) {
  std::string out;
  for (Color c : cs) out += to_char(c);
  return out;
}

std::vector<Color> answers_of(const Trace& t) {
  std::vector<Color> out;
  for (const auto& m : t.moves) out.push_back(m.color);
  return out;
}

}  // namespace

TEST_CASE("first-fit picks the smallest legal color") {
  GameState s = with(GameState(), q(1, 3), q(3, 3), Color::a);
  s = with(s, q(2, 3), q(4, 3), Color::c);
  CHECK(first_fit(present(s, q(5, 4), q(9, 4))) == Color::b);
  CHECK(first_fit(present(s, q(13, 4), q(14, 4))) == Color::a);
}

TEST_CASE("canonical moves are the legal used colors plus one fresh color") {
  GameState s = with(GameState(), q(1, 3), q(3, 3), Color::a);
  s = with(s, q(2, 3), q(4, 3), Color::c);
  s = with(s, q(13, 4), q(15, 4), Color::e);
  CHECK(letters(canonical_moves(present(s, q(5, 4), q(9, 4)))) == "eb");
  CHECK(letters(canonical_moves(present(GameState(), q(1, 2), q(3, 2)))) == "a");

  GameState full(7);
  for (int i = 0; i < 6; ++i) full = with(full, q(8 + i, 5), q(16 + i, 5), color_at(i));
  CHECK(letters(canonical_moves(present(full, q(29, 6), q(45, 6)))) == "g");
  full = with(full, q(1, 6), q(2, 6), Color::g);
  CHECK(letters(canonical_moves(present(full, q(29, 6), q(45, 6)))) == "g");
}

TEST_CASE("random adversary is deterministic per seed") {
  auto play = [](std::uint64_t seed) {
    RandomAdversary adv(seed);
    Session s(adv);
    run_master(s);
    return s.trace();
  };
  CHECK(play(3) == play(3));
  bool any_differs = false;
  for (std::uint64_t seed = 4; seed < 12 && !any_differs; ++seed) any_differs = play(3) != play(seed);
  CHECK(any_differs);
}

TEST_CASE("scripted adversary replays a trace and reports the failing move") {
  FirstFitAdversary ff;
  Session s(ff);
  run_master(s);
  ScriptedAdversary again = ScriptedAdversary::from_trace(s.trace());
  Session s2(again);
  CHECK(run_master(s2) == s.state());

  auto script = answers_of(s.trace());
  script[1] = script[0];  // interval 2 meets interval 1
  ScriptedAdversary bad(script);
  Session s3(bad);
  try {
    run_master(s3);
    FAIL("expected a replay error");
  } catch (const ReplayError& e) {
    CHECK(e.move_index() == 1);
  }

  ScriptedAdversary short_script(colors("ab"));
  Session s4(short_script);
  try {
    run_master(s4);
    FAIL("expected a replay error");
  } catch (const ReplayError& e) {
    CHECK(e.move_index() == 2);
  }
}

TEST_CASE("interactive adversary stops at the first unanswered move") {
  InteractiveAdversary adv(colors("ab"));
  Session s(adv);
  try {
    run_master(s);
    FAIL("expected AwaitColor");
  } catch (const AwaitColor& w) {
    CHECK(w.pending.base().move_count() == 2);
    CHECK(legal_colors(w.pending).size() >= 1);
  }
  InteractiveAdversary wrong(colors("aa"));
  Session s2(wrong);
  CHECK_THROWS_AS(run_master(s2), GameError);
}

TEST_CASE("make adversary") {
  CHECK(make_adversary("first-fit", 0, nullptr)->name() == "first-fit");
  CHECK(make_adversary("random", 1, nullptr)->name() == "random");
  Trace t;
  CHECK(make_adversary("scripted", 0, &t)->name() == "scripted");
  CHECK_THROWS(make_adversary("scripted", 0, nullptr));
  CHECK_THROWS(make_adversary("oracle", 0, nullptr));
}

TEST_CASE("any play is a renamed canonical play") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    CAPTURE(seed);
    RandomAdversary adv(seed);
    Session s(adv);
    run_master(s);
    // Rename colors in order of first appearance.
    std::array<int, kColorCount> sigma;
    sigma.fill(-1);
    int next = 0;
    std::vector<Color> renamed;
    for (Color c : answers_of(s.trace())) {
      int& m = sigma[static_cast<int>(c)];
      if (m < 0) m = next++;
      renamed.push_back(color_at(m));
    }
    // Every renamed answer must be one of the canonical choices.
    std::size_t i = 0;
    class Checking : public Adversary {
     public:
      Checking(const std::vector<Color>& script, std::size_t& i) : script_(script), i_(i) {}
      Color choose(const PendingMove& p) override {
        auto moves = canonical_moves(p);
        Color c = script_.at(i_++);
        CHECK(std::find(moves.begin(), moves.end(), c) != moves.end());
        return c;
      }
      std::string name() const override { return "checking"; }

     private:
      const std::vector<Color>& script_;
      std::size_t& i_;
    } checking(renamed, i);
    Session c(checking);
    GameState end = run_master(c);
    CHECK(i == renamed.size());
    REQUIRE(end.intervals().size() == s.state().intervals().size());
    for (std::size_t k = 0; k < end.intervals().size(); ++k) {
      CHECK(end.intervals()[k].lo == s.state().intervals()[k].lo);
      CHECK(end.intervals()[k].hi == s.state().intervals()[k].hi);
    }
    CHECK(equivalent(state_matrix(end), state_matrix(s.state())));
  }
}
