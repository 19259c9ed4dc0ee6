#include "ivgame/strategies.hpp"

#include <algorithm>

namespace ivgame {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw GameError(ErrorKind::strategy_inconsistency, what);
}

const Pattern& pattern(const std::string& name) { return PatternLibrary::builtin().get(name); }

// The wall-restricted view at one moment; gap p lies before column p.
struct Window {
  std::vector<ViewEndpoint> cols;
  Coord wl, wr;

  explicit Window(const Session& s)
      : cols(s.view()), wl(s.view_wall_left()), wr(s.view_wall_right()) {}
  int size() const { return static_cast<int>(cols.size()); }
  Gap gap(int p) const {
    if (p < 0 || p > size()) inconsistent("gap " + std::to_string(p) + " outside the window");
    return {p == 0 ? wl : cols[p - 1].at, p == size() ? wr : cols[p].at};
  }
  // Candidate with its left end in gap p and its right end in gap q.
  std::pair<Coord, Coord> candidate(int p, int q) const {
    Gap gp = gap(p), gq = gap(q);
    if (p < q) return {midpoint(gp.lo, gp.hi), midpoint(gq.lo, gq.hi)};
    Coord m = midpoint(gp.lo, gp.hi);
    return {midpoint(gp.lo, m), midpoint(m, gp.hi)};
  }
};

Color present_checked(Session& s, const Coord& lo, const Coord& hi) {
  if (!s.probe(lo, hi))
    inconsistent("illegal placement [" + lo.to_string() + "," + hi.to_string() + "] in view");
  return s.present(lo, hi);
}

Color place(Session& s, int p, int q) {
  auto [lo, hi] = Window(s).candidate(p, q);
  return present_checked(s, lo, hi);
}

SeparationResult separate_at(Session& s, int k, ColorSet y, int p, int q) {
  Window w(s);
  Gap gp = w.gap(p), gq = w.gap(q);
  if (p == q) {
    Coord m = midpoint(gp.lo, gp.hi);
    return separate(s, k, y, {gp.lo, m}, {m, gp.hi});
  }
  return separate(s, k, y, gp, gq);
}

// A placement meeting every window color, if one exists.
std::optional<std::pair<Coord, Coord>> closing_move(const Session& s) {
  Window w(s);
  ColorSet used;
  for (const auto& e : w.cols) used.insert(e.color);
  if (used.size() != kColorCount - 1) return std::nullopt;
  for (int p = 0; p <= w.size(); ++p) {
    for (int q = p; q <= w.size(); ++q) {
      auto [lo, hi] = w.candidate(p, q);
      auto pending = s.probe(lo, hi);
      if (pending && (*pending & used) == used) return std::make_pair(lo, hi);
    }
  }
  return std::nullopt;
}

[[noreturn]] void force_last(Session& s) {
  auto move = closing_move(s);
  if (!move) inconsistent("no placement forces the seventh color");
  present_checked(s, move->first, move->second);
  inconsistent("the seventh color was not forced");
}

// Tightens the walls around the matched window, then announces the routine.
void enter(Session& s, const MatchBinding& b, std::string_view routine) {
  auto v = s.view();
  if (b.length == 0 || b.anchor_coords.size() != b.length)
    inconsistent(std::string(routine) + ": empty binding");
  auto first = std::find_if(v.begin(), v.end(),
                            [&](const ViewEndpoint& e) { return e.at == b.anchor_coords.front(); });
  if (first == v.end()) inconsistent(std::string(routine) + ": binding not visible");
  std::size_t i = static_cast<std::size_t>(first - v.begin());
  std::size_t j = i + b.length - 1;
  Coord l = i == 0 ? s.view_wall_left() : midpoint(v[i - 1].at, v[i].at);
  Coord r = j + 1 == v.size() ? s.view_wall_right() : midpoint(v[j].at, v[j + 1].at);
  if (!(l == s.view_wall_left() && r == s.view_wall_right())) s.set_view_walls(l, r);
  s.enter_routine(routine);
}

Transition first_match(const Session& s, std::initializer_list<const char*> names,
                       const char* from) {
  for (const char* name : names)
    if (auto b = s.match(pattern(name))) return {name, b};
  inconsistent(std::string(from) + ": no expected pattern after its moves");
}

ColorSet colors_of(const MatchBinding& b, std::string_view vars) {
  ColorSet out;
  for (char v : vars) out.insert(b.color_of(v));
  return out;
}

}  // namespace

SeparationResult separate(Session& session, int k, ColorSet y, const Gap& left_gap,
                          const Gap& right_gap) {
  if (k < 1) inconsistent("separation needs k >= 1");
  if (!(left_gap.lo < left_gap.hi && left_gap.hi <= right_gap.lo && right_gap.lo < right_gap.hi))
    inconsistent("separation gaps out of order");
  SeparationResult res;
  auto& placed = res.placed;
  int& j = res.threshold_j;
  for (int step = 0; step < k; ++step) {
    Coord lo, hi;
    std::size_t pos;
    std::size_t m = placed.size();
    if (m == 0) {
      lo = midpoint(left_gap.lo, left_gap.hi);
      hi = midpoint(right_gap.lo, right_gap.hi);
      pos = 0;
    } else if (j == 0) {
      lo = midpoint(left_gap.lo, placed.front().lo);
      hi = midpoint(right_gap.lo, placed.front().hi);
      pos = 0;
    } else if (static_cast<std::size_t>(j) == m) {
      lo = midpoint(placed.back().lo, left_gap.hi);
      hi = midpoint(placed.back().hi, right_gap.hi);
      pos = m;
    } else {
      lo = midpoint(placed[j - 1].lo, placed[j].lo);
      hi = midpoint(placed[j - 1].hi, placed[j].hi);
      pos = static_cast<std::size_t>(j);
    }
    PlacedInterval iv{lo, hi, Color::a, session.state().move_count() + 1};
    iv.color = present_checked(session, lo, hi);
    placed.insert(placed.begin() + static_cast<std::ptrdiff_t>(pos), iv);
    if (y.contains(iv.color)) ++j;
  }
  for (int i = 0; i < k; ++i)
    if (y.contains(placed[i].color) != (i < j)) inconsistent("separation threshold broken");
  return res;
}

Transition strategy_opening(Session& s) {
  if (s.state().move_count() != 0) inconsistent("opening needs the empty state");
  s.enter_routine("opening");
  Color first = place(s, 0, 0);
  Color second = place(s, 0, 1);
  // Intervals 3, 4, 5 start just right of interval 1 and stack leftward.
  const int gaps[3][2] = {{4, 4}, {4, 5}, {4, 6}};
  for (const auto& g : gaps) {
    Color c = place(s, g[0], g[1]);
    if (c == first || c == second) {
      const char* name = c == first ? "aab" : "bab";
      auto b = match_pattern(s.state(), pattern(name), MatchMode::dual_only);
      if (!b) inconsistent(std::string("opening: no dual ") + name);
      return {c == first ? "aab_dual" : "bab_dual", b};
    }
  }
  return {"abcde", s.match(pattern("abcde"))};
}

Transition strategy_aab_to_abcax(Session& s, const MatchBinding& b) {
  enter(s, b, "aab");
  place(s, 0, 1);
  place(s, 2, 4);
  return first_match(s, {"abcab", "abcac", "abcad"}, "aab");
}

Transition strategy_bab_to_abcax(Session& s, const MatchBinding& b) {
  enter(s, b, "bab");
  place(s, 0, 2);
  place(s, 6, 7);
  return first_match(s, {"abcab", "abcac", "abcad"}, "bab");
}

Transition strategy_abcab_to_bd(Session& s, const MatchBinding& b) {
  enter(s, b, "abcab");
  separate_at(s, 2, colors_of(b, "c").complement(), 7, 9);
  return first_match(s, {"bd"}, "abcab");
}

Transition strategy_abcac_to_bd_or_ed(Session& s, const MatchBinding& b) {
  enter(s, b, "abcac");
  separate_at(s, 2, colors_of(b, "b"), 6, 8);
  return first_match(s, {"bd", "ed"}, "abcac");
}

Transition strategy_bd_to_game(Session& s, const MatchBinding& b) {
  enter(s, b, "bd");
  auto sep = separate_at(s, 2, colors_of(b, "d"), 0, 3);
  if (sep.placed[0].color == b.color_of('d')) place(s, 5, 10);
  force_last(s);
}

Transition strategy_ed_to_game(Session& s, const MatchBinding& b) {
  enter(s, b, "ed");
  auto sep = separate_at(s, 2, colors_of(b, "e"), 0, 3);
  if (sep.placed[1].color == b.color_of('d')) place(s, 6, 11);
  force_last(s);
}

Transition strategy_abcad_to_game(Session& s, const MatchBinding& b) {
  enter(s, b, "abcad");
  Color x = place(s, 7, 9);
  if (x == b.color_of('c')) {
    // Auxiliary interval between the d interval and the x interval.
    place(s, 6, 9);
    return first_match(s, {"bd", "ed"}, "abcad");
  }
  if (x != b.color_of('b')) return first_match(s, {"ed"}, "abcad");

  auto sep_y = separate_at(s, 2, colors_of(b, "a").complement(), 9, 11);
  Color y = sep_y.placed[0].color;
  if (y == b.color_of('c')) {
    place(s, 6, 10);
    return first_match(s, {"ed"}, "abcad");
  }
  auto sep_z = separate_at(s, 2, colors_of(b, "d"), 0, 3);
  Color z = sep_z.placed[1].color;
  if (z == y) {
    place(s, 6, 11);
  } else {
    place(s, 7, 11);  // w
  }
  force_last(s);
}

Transition strategy_abcde_to_game(Session& s, const MatchBinding& b) {
  enter(s, b, "abcde");
  ColorSet fresh = colors_of(b, "abcde").complement();
  separate_at(s, 4, colors_of(b, "be") | fresh, 0, 0);
  if (auto aab = s.match(pattern("aab"))) return {"aab", aab};
  separate_at(s, 2, (colors_of(b, "e") | fresh).complement(), 6, 10);
  if (!closing_move(s)) place(s, 13, 18);
  force_last(s);
}

namespace {

Transition dispatch(Session& s, Transition t) {
  if (t.next == "aab_dual" || t.next == "bab_dual") {
    s.flip_orientation();
    t.next = t.next.substr(0, 3);
    t.binding.reset();
  }
  if (!t.binding) t.binding = s.match(pattern(t.next));
  if (!t.binding) inconsistent("position does not match " + t.next);
  const MatchBinding& b = *t.binding;
  if (t.next == "aab") return strategy_aab_to_abcax(s, b);
  if (t.next == "bab") return strategy_bab_to_abcax(s, b);
  if (t.next == "abcab") return strategy_abcab_to_bd(s, b);
  if (t.next == "abcac") return strategy_abcac_to_bd_or_ed(s, b);
  if (t.next == "abcad") return strategy_abcad_to_game(s, b);
  if (t.next == "bd") return strategy_bd_to_game(s, b);
  if (t.next == "ed") return strategy_ed_to_game(s, b);
  if (t.next == "abcde") return strategy_abcde_to_game(s, b);
  inconsistent("unknown routine " + t.next);
}

}  // namespace

GameState run_from(Session& s, const std::string& routine) {
  try {
    Transition t = routine == "opening" ? strategy_opening(s) : Transition{routine, std::nullopt};
    for (int guard = 0; guard < 32; ++guard) t = dispatch(s, t);
    inconsistent("strategy did not terminate");
  } catch (const GameFinished&) {
  }
  return s.state();
}

GameState run_master(Session& s) { return run_from(s, "opening"); }

const std::vector<std::string>& routine_names() {
  static const std::vector<std::string> names = {"opening", "aab",   "bab", "abcab", "abcac",
                                                 "abcad",   "bd",    "ed",  "abcde"};
  return names;
}

Trace fixture(const std::string& routine) {
  Trace t;
  if (routine == "opening") return t;
  const Pattern& p = pattern(routine);
  if (p.all_colors) inconsistent("no fixture for " + routine);
  StateMatrix m = p.as_matrix();
  auto pairs = pair_columns(m);
  if (!pairs) inconsistent("pattern " + routine + " is not realizable");
  // Window columns sit in (1/4, 3/4); ends outside the window go beyond the walls.
  const unsigned e = 10;
  auto at = [&](std::uint64_t units) { return Coord::from_parts(units, e); };
  int outside_left = 0, outside_right = 0;
  std::vector<TraceMove> moves;
  for (const auto& pr : *pairs) {
    Coord lo = pr.left >= 0 ? at(256 + 16 * (pr.left + 1)) : at(16 * (++outside_left));
    Coord hi = pr.right >= 0 ? at(256 + 16 * (pr.right + 1)) : at(768 + 16 * (++outside_right));
    moves.push_back({lo, hi, pr.color, std::nullopt});
  }
  std::sort(moves.begin(), moves.end(),
            [](const TraceMove& x, const TraceMove& y) { return x.lo < y.lo; });
  t.moves = moves;
  t.final_walls = Walls{at(256), at(768)};
  replay(t);
  return t;
}

}  // namespace ivgame
