#include "ivgame/adversaries.hpp"

namespace ivgame {

Color first_fit(const PendingMove& pending) {
  auto c = legal_colors(pending).first();
  if (!c) throw GameError(ErrorKind::color_conflict, "no legal color left");
  return *c;
}

std::vector<Color> canonical_moves(const PendingMove& pending) {
  ColorSet legal = legal_colors(pending);
  ColorSet used = pending.base().used_colors();
  std::vector<Color> out = (legal & used).to_vector();
  if (auto fresh = (legal & used.complement()).first()) out.push_back(*fresh);
  return out;
}

Color RandomAdversary::choose(const PendingMove& pending) {
  auto legal = legal_colors(pending).to_vector();
  if (legal.empty()) throw GameError(ErrorKind::color_conflict, "no legal color left");
  std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
  return legal[pick(rng_)];
}

ScriptedAdversary ScriptedAdversary::from_trace(const Trace& trace) {
  std::vector<Color> colors;
  for (const auto& m : trace.moves) colors.push_back(m.color);
  return ScriptedAdversary(std::move(colors));
}

Color ScriptedAdversary::choose(const PendingMove& pending) {
  int index = static_cast<int>(next_);
  if (next_ >= colors_.size())
    throw ReplayError(index, "script has no color for move " + std::to_string(index));
  Color c = colors_[next_++];
  if (!legal_colors(pending).contains(c))
    throw ReplayError(index, std::string("scripted color ") + to_char(c) + " is illegal at move " +
                                 std::to_string(index));
  return c;
}

Color InteractiveAdversary::choose(const PendingMove& pending) {
  if (next_ >= answers_.size()) throw AwaitColor{pending};
  Color c = answers_[next_++];
  if (!legal_colors(pending).contains(c))
    throw GameError(ErrorKind::color_conflict, std::string("color ") + to_char(c) + " is illegal");
  return c;
}

Color CanonicalPathAdversary::choose(const PendingMove& pending) {
  if (limit_ >= 0 && depth_ == static_cast<std::size_t>(limit_)) throw Truncated{};
  auto moves = canonical_moves(pending);
  if (moves.empty()) throw GameError(ErrorKind::color_conflict, "no legal color left");
  auto& path = *path_;
  if (depth_ == path.size()) path.push_back({0, static_cast<int>(moves.size())});
  const Step& step = path[depth_++];
  if (step.branches != static_cast<int>(moves.size()))
    throw GameError(ErrorKind::strategy_inconsistency, "replayed branch changed shape");
  return moves[step.choice];
}

std::unique_ptr<Adversary> make_adversary(const std::string& name, std::uint64_t seed,
                                          const Trace* trace) {
  if (name == "first-fit") return std::make_unique<FirstFitAdversary>();
  if (name == "random") return std::make_unique<RandomAdversary>(seed);
  if (name == "scripted") {
    if (!trace) throw GameError(ErrorKind::parse, "scripted adversary needs a trace");
    return std::make_unique<ScriptedAdversary>(ScriptedAdversary::from_trace(*trace));
  }
  throw GameError(ErrorKind::parse, "unknown adversary '" + name + "'");
}

}  // namespace ivgame
