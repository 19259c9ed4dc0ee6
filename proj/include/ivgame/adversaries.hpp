#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ivgame/session.hpp"

namespace ivgame {

// Alphabetically smallest legal color.
Color first_fit(const PendingMove& pending);

// Legal colors already in use, then the first unused color if any is legal.
// Every unused color leads to a position equal up to renaming colors, so one
// representative covers them all.
std::vector<Color> canonical_moves(const PendingMove& pending);

class FirstFitAdversary : public Adversary {
 public:
  Color choose(const PendingMove& pending) override { return first_fit(pending); }
  std::string name() const override { return "first-fit"; }
};

class RandomAdversary : public Adversary {
 public:
  explicit RandomAdversary(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  Color choose(const PendingMove& pending) override;
  std::string name() const override { return "random"; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

// Answers with a fixed color sequence. Running out or an illegal color
// raises ReplayError at that move.
class ScriptedAdversary : public Adversary {
 public:
  explicit ScriptedAdversary(std::vector<Color> colors) : colors_(std::move(colors)) {}
  static ScriptedAdversary from_trace(const Trace& trace);
  Color choose(const PendingMove& pending) override;
  std::string name() const override { return "scripted"; }

 private:
  std::vector<Color> colors_;
  std::size_t next_ = 0;
};

// Replays recorded answers, then stops the game at the first unanswered
// move by throwing AwaitColor. The service drives remote players with it.
struct AwaitColor {
  PendingMove pending;
};

class InteractiveAdversary : public Adversary {
 public:
  explicit InteractiveAdversary(std::vector<Color> answers) : answers_(std::move(answers)) {}
  Color choose(const PendingMove& pending) override;
  std::string name() const override { return "interactive"; }

 private:
  std::vector<Color> answers_;
  std::size_t next_ = 0;
};

// Chooser that follows a path of indices into canonical_moves and extends it
// with index 0 past its end, recording each branching factor.
class CanonicalPathAdversary : public Adversary {
 public:
  struct Step {
    int choice;
    int branches;
  };
  // Thrown when the path reaches `limit` answers, for frontier enumeration.
  struct Truncated {};

  CanonicalPathAdversary(std::vector<Step>& path, int limit = -1)
      : path_(&path), limit_(limit) {}
  Color choose(const PendingMove& pending) override;
  std::string name() const override { return "canonical"; }
  std::size_t depth() const { return depth_; }

 private:
  std::vector<Step>* path_;
  std::size_t depth_ = 0;
  int limit_;
};

// Builds first-fit, random (needs seed) or scripted (needs trace).
std::unique_ptr<Adversary> make_adversary(const std::string& name, std::uint64_t seed,
                                          const Trace* trace);

}  // namespace ivgame
