#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ivgame/adversaries.hpp"
#include "ivgame/strategies.hpp"
#include "ivgame/trace.hpp"
#include "ivgame/verifier.hpp"
#include "support.hpp"

using namespace ivgame;

namespace {

VerifyOptions from(const std::string& start, bool memo) {
  VerifyOptions o;
  o.start = start;
  o.memo = memo;
  return o;
}

}  // namespace

TEST_CASE("memoized and plain runs agree below abcad") {
  auto plain = verify_serial(from("abcad", false));
  auto memo = verify_serial(from("abcad", true));
  CHECK(plain.all_leaves_force_7);
  CHECK(memo.all_leaves_force_7);
  CHECK(plain.max_clique_seen == 4);
  CHECK(memo.max_clique_seen == plain.max_clique_seen);
  CHECK(plain.memo_hits == 0);
  CHECK(memo.total_leaves <= plain.total_leaves);
  CHECK(plain.total_leaves == 117);
  CHECK(plain.failures.empty());
}

TEST_CASE("ed has eight leaves") {
  auto rep = verify_serial(from("ed", false));
  CHECK(rep.all_leaves_force_7);
  CHECK(rep.total_leaves == 8);
  CHECK(rep.routine_entries.at("ed") == 1);
}

TEST_CASE("serial and parallel runs count the same") {
  for (const std::string start : {"abcad", "abcac", "bd"}) {
    CAPTURE(start);
    VerifyOptions o = from(start, false);
    o.split_depth = 2;
    auto serial = verify_serial(o);
    o.parallel = true;
    o.threads = 2;
    auto parallel = verify_parallel(o);
    CHECK(serial.same_counts(parallel));
    CHECK(parallel.all_leaves_force_7);
  }
}

TEST_CASE("memoized run over the whole game") {
  VerifyOptions o;
  o.memo = true;
  o.keep_leaf_traces = 20;
  auto rep = verify_forced_win(o);
  CHECK(rep.all_leaves_force_7);
  CHECK(rep.failures.empty());
  CHECK(rep.max_clique_seen <= 4);
  CHECK(rep.memo_hits > 0);
  CHECK(rep.routine_entries.at("opening") == 1);
  REQUIRE(rep.leaf_traces.size() == 20);
  for (const auto& t : rep.leaf_traces) {
    Trace back = import_trace(export_trace(t));
    CHECK(back == t);
    GameState s = replay(back);
    CHECK(state_matrix(s) == state_matrix(replay(t)));
    CHECK(s.used_colors().size() == 7);
  }

  o.parallel = true;
  o.split_depth = 4;
  auto par = verify_forced_win(o);
  CHECK(par.all_leaves_force_7);
  CHECK(par.max_clique_seen <= 4);
}

TEST_CASE("report json") {
  auto rep = verify_serial(from("ed", false));
  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j.at("all_leaves_force_7") == true);
  CHECK(j.at("total_leaves") == 8);
  CHECK(j.at("failures").empty());
  CHECK(rep.summary().rfind("PASS", 0) == 0);
}

TEST_CASE("tampered traces fail at the tampered move") {
  FirstFitAdversary ff;
  Session s(ff);
  run_master(s);
  Trace t = s.trace();
  CHECK(replay(t) == s.state());

  Trace wrong_color = t;
  wrong_color.moves[1].color = wrong_color.moves[0].color;
  try {
    replay(wrong_color);
    FAIL("expected a replay error");
  } catch (const ReplayError& e) {
    CHECK(e.move_index() == 1);
  }

  Trace nested = t;
  nested.moves[3].lo = nested.moves[2].lo;
  try {
    replay(nested);
    FAIL("expected a replay error");
  } catch (const ReplayError& e) {
    CHECK(e.move_index() == 3);
  }

  Trace empty;
  CHECK(replay(empty).intervals().empty());
  CHECK(import_trace(export_trace(empty)) == empty);
}

TEST_CASE("trace import rejects malformed input") {
  CHECK_THROWS_AS(import_trace("{"), GameError);
  CHECK_THROWS_AS(import_trace(R"({"format":"other","version":1,"omega":4,"moves":[]})"), GameError);
  CHECK_THROWS_AS(
      import_trace(R"({"format":"ivgame-trace","version":1,"omega":4,"moves":[{"lo":"1/2^1","hi":"x","color":"a"}]})"),
      GameError);
  CHECK_THROWS_AS(
      import_trace(R"({"format":"ivgame-trace","version":1,"omega":4,"moves":[{"lo":"1/2^2","hi":"1/2^1","color":"q"}]})"),
      GameError);
  Trace ok = import_trace(
      R"({"format":"ivgame-trace","version":1,"omega":4,"moves":[{"lo":"1/2^2","hi":"1/2^1","color":"c"}]})");
  REQUIRE(ok.moves.size() == 1);
  CHECK(ok.moves[0].color == Color::c);
}

TEST_CASE("omega 3 failures come with traces that reproduce them") {
  VerifyOptions o;
  o.omega = 3;
  o.max_failures = 4;
  auto rep = verify_serial(o);
  CHECK_FALSE(rep.all_leaves_force_7);
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures.size() <= 4);
  for (const auto& f : rep.failures) {
    CAPTURE(f.message);
    GameState s = replay(f.trace);
    CHECK(clique_size(s) <= 3);
    // Playing the same answers again hits the same failure.
    ScriptedAdversary again = ScriptedAdversary::from_trace(f.trace);
    Trace start;
    start.omega = 3;
    Session session(again, start);
    CHECK_THROWS_AS(run_master(session), GameError);
    CHECK(session.trace() == f.trace);
  }
}

TEST_CASE("first-fit fuzz stays within 2 omega - 1") {
  for (int omega = 1; omega <= 5; ++omega) {
    CAPTURE(omega);
    FuzzStats serial, parallel;
    CHECK(fuzz_first_fit_bound_serial(omega, 60, 11, &serial));
    CHECK(fuzz_first_fit_bound(omega, 60, 11, &parallel));
    CHECK(serial.max_colors == parallel.max_colors);
    CHECK(serial.intervals == parallel.intervals);
    CHECK(serial.max_colors <= 2 * omega - 1);
  }
  CHECK(first_fit_trial(1, 30, 5) == 1);
  CHECK(first_fit_trial(3, 30, 5) == first_fit_trial(3, 30, 5));
}
