#include "ivgame/state_algebra.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "patterns_json.hpp"

namespace ivgame {

std::string StateMatrix::sides_string() const {
  std::string s;
  for (const auto& c : columns) s.push_back(c.side == Side::left ? '0' : '1');
  return s;
}

std::string StateMatrix::colors_string() const {
  std::string s;
  for (const auto& c : columns) s.push_back(to_char(c.color));
  return s;
}

StateMatrix StateMatrix::parse(std::string_view sides, std::string_view colors) {
  if (sides.size() != colors.size())
    throw GameError(ErrorKind::parse, "side and color rows differ in length");
  StateMatrix m;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    auto color = parse_color(colors.substr(i, 1));
    if ((sides[i] != '0' && sides[i] != '1') || !color)
      throw GameError(ErrorKind::parse, "bad matrix column " + std::to_string(i));
    m.columns.push_back({sides[i] == '0' ? Side::left : Side::right, *color});
  }
  return m;
}

std::vector<Endpoint> visible_endpoints(const GameState& state) {
  std::vector<Endpoint> out;
  const auto& ivs = state.intervals();
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const auto& iv = ivs[i];
    int idx = static_cast<int>(i);
    if (state.wall_left() < iv.lo && iv.lo < state.wall_right())
      out.push_back({iv.lo, Side::left, iv.color, idx});
    if (state.wall_left() < iv.hi && iv.hi < state.wall_right())
      out.push_back({iv.hi, Side::right, iv.color, idx});
  }
  std::sort(out.begin(), out.end(),
            [](const Endpoint& x, const Endpoint& y) { return x.at < y.at; });
  return out;
}

StateMatrix state_matrix(const GameState& state) {
  StateMatrix m;
  for (const auto& e : visible_endpoints(state)) m.columns.push_back({e.side, e.color});
  return m;
}

StateMatrix dual(const StateMatrix& m) {
  StateMatrix out;
  for (auto it = m.columns.rbegin(); it != m.columns.rend(); ++it)
    out.columns.push_back({it->side == Side::left ? Side::right : Side::left, it->color});
  return out;
}

StateMatrix canonical_form(const StateMatrix& m) {
  std::array<int, kColorCount> relabel;
  relabel.fill(-1);
  int next = 0;
  StateMatrix out;
  for (const auto& c : m.columns) {
    int& r = relabel[static_cast<int>(c.color)];
    if (r < 0) r = next++;
    out.columns.push_back({c.side, color_at(r)});
  }
  return out;
}

bool equivalent(const StateMatrix& m1, const StateMatrix& m2) {
  return canonical_form(m1) == canonical_form(m2);
}

std::optional<std::vector<ColumnPair>> pair_columns(const StateMatrix& m) {
  std::vector<int> lefts, rights;
  for (std::size_t i = 0; i < m.size(); ++i)
    (m.columns[i].side == Side::left ? lefts : rights).push_back(static_cast<int>(i));
  const int n = static_cast<int>(m.size());
  for (std::size_t k = 0; k <= rights.size(); ++k) {
    std::size_t rest = rights.size() - k;
    if (rest > lefts.size()) continue;
    std::vector<ColumnPair> out;
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i)
      out.push_back({-1, rights[i], m.columns[rights[i]].color});
    for (std::size_t i = 0; i < rest && ok; ++i) {
      int l = lefts[i], r = rights[k + i];
      if (r < l || m.columns[l].color != m.columns[r].color) ok = false;
      out.push_back({l, r, m.columns[l].color});
    }
    if (!ok) continue;
    for (std::size_t i = rest; i < lefts.size(); ++i)
      out.push_back({lefts[i], -1, m.columns[lefts[i]].color});
    for (std::size_t x = 0; x < out.size() && ok; ++x) {
      for (std::size_t y = x + 1; y < out.size() && ok; ++y) {
        if (out[x].color != out[y].color) continue;
        int xl = out[x].left, xr = out[x].right < 0 ? n : out[x].right;
        int yl = out[y].left, yr = out[y].right < 0 ? n : out[y].right;
        if (!(xr < yl || yr < xl)) ok = false;
      }
    }
    if (ok) return out;
  }
  return std::nullopt;
}

bool is_well_formed(const StateMatrix& m) {
  if (m.size() % 2 != 0) return false;
  auto pairs = pair_columns(m);
  if (!pairs) return false;
  return std::all_of(pairs->begin(), pairs->end(),
                     [](const ColumnPair& p) { return p.left >= 0 && p.right >= 0; });
}

GameState mirror(const GameState& state) {
  const Coord zero = Coord::zero(), one = Coord::one();
  GameState out(state.omega());
  for (const auto& iv : state.intervals())
    out = assign(present(out, reflect(zero, one, iv.hi), reflect(zero, one, iv.lo)), iv.color);
  return set_walls(out, reflect(zero, one, state.wall_right()),
                   reflect(zero, one, state.wall_left()));
}

int Pattern::variable_count() const {
  int n = 0;
  for (int v : vars) n = std::max(n, v + 1);
  return n;
}

StateMatrix Pattern::as_matrix() const {
  StateMatrix m;
  for (std::size_t i = 0; i < sides.size(); ++i) m.columns.push_back({sides[i], color_at(vars[i])});
  return m;
}

Color MatchBinding::color_of(char variable) const {
  auto c = sigma.at(static_cast<std::size_t>(variable - 'a'));
  if (!c)
    throw GameError(ErrorKind::strategy_inconsistency,
                    std::string("pattern variable ") + variable + " is unbound in " + pattern);
  return *c;
}

std::optional<MatchBinding> match_matrix(const StateMatrix& m, const Pattern& p) {
  if (p.all_colors) {
    ColorSet used;
    for (const auto& c : m.columns) used.insert(c.color);
    if (used.size() < kColorCount) return std::nullopt;
    MatchBinding b;
    b.pattern = p.name;
    b.length = m.size();
    for (int i = 0; i < kColorCount; ++i) b.sigma[i] = color_at(i);
    return b;
  }
  const std::size_t n = p.sides.size();
  for (std::size_t i = 0; i + n <= m.size(); ++i) {
    std::array<int, kColorCount> fwd, inv;
    fwd.fill(-1);
    inv.fill(-1);
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      const Column& c = m.columns[i + j];
      int var = p.vars[j];
      int col = static_cast<int>(c.color);
      if (c.side != p.sides[j]) {
        ok = false;
      } else if (fwd[var] >= 0) {
        ok = fwd[var] == col;
      } else if (inv[col] >= 0) {
        ok = false;
      } else {
        fwd[var] = col;
        inv[col] = var;
      }
    }
    if (!ok) continue;
    MatchBinding b;
    b.pattern = p.name;
    b.first = i;
    b.length = n;
    for (int v = 0; v < kColorCount; ++v)
      if (fwd[v] >= 0) b.sigma[v] = color_at(fwd[v]);
    return b;
  }
  return std::nullopt;
}

std::optional<MatchBinding> match_pattern(const GameState& state, const Pattern& p,
                                          MatchMode mode) {
  if (p.all_colors) {
    if (state.used_colors().size() < kColorCount) return std::nullopt;
    if (mode == MatchMode::dual_only) return std::nullopt;
    MatchBinding b;
    b.pattern = p.name;
    for (int i = 0; i < kColorCount; ++i) b.sigma[i] = color_at(i);
    auto ends = visible_endpoints(state);
    b.length = ends.size();
    for (const auto& e : ends) b.anchor_coords.push_back(e.at);
    return b;
  }
  auto ends = visible_endpoints(state);
  StateMatrix m;
  for (const auto& e : ends) m.columns.push_back({e.side, e.color});
  if (mode != MatchMode::dual_only) {
    if (auto b = match_matrix(m, p)) {
      for (std::size_t j = 0; j < b->length; ++j) b->anchor_coords.push_back(ends[b->first + j].at);
      return b;
    }
  }
  if (mode != MatchMode::normal_only) {
    if (auto b = match_matrix(dual(m), p)) {
      b->dual = true;
      for (std::size_t j = 0; j < b->length; ++j)
        b->anchor_coords.push_back(ends[ends.size() - 1 - (b->first + j)].at);
      return b;
    }
  }
  return std::nullopt;
}

PatternLibrary PatternLibrary::from_json(const std::string& text) {
  PatternLibrary lib;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GameError(ErrorKind::parse, std::string("pattern file: ") + e.what());
  }
  if (doc.value("format", "") != "ivgame-patterns" || doc.value("version", 0) != 1)
    throw GameError(ErrorKind::parse, "pattern file: unsupported format or version");
  for (const auto& entry : doc.at("patterns")) {
    Pattern p;
    p.name = entry.at("name").get<std::string>();
    p.all_colors = entry.value("all_colors", false);
    if (!p.all_colors) {
      StateMatrix m = StateMatrix::parse(entry.at("sides").get<std::string>(),
                                         entry.at("colors").get<std::string>());
      for (const auto& c : m.columns) {
        p.sides.push_back(c.side);
        p.vars.push_back(static_cast<int>(c.color));
      }
    }
    lib.patterns_.push_back(std::move(p));
  }
  return lib;
}

const PatternLibrary& PatternLibrary::builtin() {
  static const PatternLibrary lib = from_json(generated::kPatternJson);
  return lib;
}

const Pattern& PatternLibrary::get(const std::string& name) const {
  for (const auto& p : patterns_)
    if (p.name == name) return p;
  throw GameError(ErrorKind::parse, "unknown pattern '" + name + "'");
}

std::string render_matrix(const StateMatrix& m) {
  std::string sides = "side  ", colors = "color ", brackets = "      ";
  for (const auto& c : m.columns) {
    sides += c.side == Side::left ? "0 " : "1 ";
    colors += to_char(c.color);
    colors += ' ';
    brackets += c.side == Side::left ? "[ " : "] ";
  }
  return sides + "\n" + colors + "\n" + brackets + "\n";
}

}  // namespace ivgame
