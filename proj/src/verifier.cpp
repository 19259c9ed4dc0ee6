#include "ivgame/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ivgame/adversaries.hpp"
#include "ivgame/strategies.hpp"

namespace ivgame {

namespace {

using Path = std::vector<CanonicalPathAdversary::Step>;

// Subtree results for routine entries, shared between threads.
class MemoTable {
 public:
  bool lookup(const std::string& key, int& clique) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    clique = it->second;
    return true;
  }
  void insert(const std::string& key, int clique) {
    std::lock_guard<std::mutex> lock(mu_);
    table_.emplace(key, clique);
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, int> table_;
};

struct MemoCut {
  int clique;
};

struct Entry {
  std::string routine;
  std::string key;
  int depth;
};

struct RunResult {
  enum Kind { leaf, memo_hit, truncated, failure } kind = leaf;
  std::string message;
  std::vector<Entry> entries;
  int answers = 0;
  int clique = 0;
  int intervals = 0;
  unsigned max_exp = 0;
  Trace trace;
};

RunResult run_once(const VerifyOptions& opt, const Trace& start, Path& path, int limit,
                   int divergence, MemoTable* memo) {
  RunResult r;
  CanonicalPathAdversary adversary(path, limit);
  Session session(adversary, start);
  session.set_routine_hook([&](const Session& s, std::string_view routine) {
    Entry e{std::string(routine), {}, s.answers()};
    if (memo) {
      StateMatrix m = canonical_form(s.view_matrix());
      e.key = e.routine + ":" + m.sides_string() + ":" + m.colors_string();
    }
    r.entries.push_back(e);
    int clique = 0;
    if (memo && e.depth > divergence && memo->lookup(e.key, clique)) throw MemoCut{clique};
  });
  auto finish_stats = [&](const GameState& st) {
    r.answers = session.answers();
    r.intervals = st.move_count();
    r.clique = std::max(r.clique, clique_size(st));
    for (const auto& iv : st.intervals())
      r.max_exp = std::max({r.max_exp, iv.lo.log2_denominator(), iv.hi.log2_denominator()});
  };
  try {
    GameState final_state = run_from(session, opt.start);
    finish_stats(final_state);
    check_invariants(final_state);
    if (final_state.omega() != opt.omega || r.clique > opt.omega) {
      r.kind = RunResult::failure;
      r.message = "clique bound exceeded";
    } else if (!match_pattern(final_state, PatternLibrary::builtin().get("game"))) {
      r.kind = RunResult::failure;
      r.message = "leaf uses only " + std::to_string(final_state.used_colors().size()) + " colors";
    }
  } catch (const CanonicalPathAdversary::Truncated&) {
    finish_stats(session.state());
    r.kind = RunResult::truncated;
  } catch (const MemoCut& cut) {
    finish_stats(session.state());
    r.clique = std::max(r.clique, cut.clique);
    r.kind = RunResult::memo_hit;
  } catch (const GameError& e) {
    finish_stats(session.state());
    r.kind = RunResult::failure;
    r.message = std::string(error_kind_name(e.kind())) + ": " + e.what();
  }
  if (r.kind == RunResult::failure) r.trace = session.trace();
  if (r.kind == RunResult::leaf) r.trace = session.trace();
  return r;
}

Trace start_trace(const VerifyOptions& opt) {
  Trace t = fixture(opt.start);
  t.omega = opt.omega;
  return t;
}

struct OpenEntry {
  std::string key;
  int depth;
  std::size_t failures_at_open;
  int clique;
};

// Depth-first walk over every answer sequence extending `path`; choices
// below `floor` stay fixed.
VerificationReport explore(const VerifyOptions& opt, Path path, MemoTable* memo) {
  VerificationReport rep;
  const Trace start = start_trace(opt);
  const std::size_t floor = path.size();
  int divergence = static_cast<int>(floor) - 1;
  std::vector<OpenEntry> open;
  std::size_t failures_seen = 0;
  auto close_above = [&](int depth) {
    while (!open.empty() && open.back().depth > depth) {
      const OpenEntry& e = open.back();
      if (memo && failures_seen == e.failures_at_open) memo->insert(e.key, e.clique);
      int c = e.clique;
      open.pop_back();
      if (!open.empty()) open.back().clique = std::max(open.back().clique, c);
    }
  };
  for (;;) {
    RunResult r = run_once(opt, start, path, -1, divergence, memo);
    for (const auto& e : r.entries) {
      if (e.depth <= divergence) continue;
      ++rep.routine_entries[e.routine];
      if (memo && !(r.kind == RunResult::memo_hit && &e == &r.entries.back()))
        open.push_back({e.key, e.depth, failures_seen, 0});
    }
    ++rep.total_leaves;
    if (r.kind == RunResult::memo_hit) ++rep.memo_hits;
    rep.max_depth = std::max(rep.max_depth, r.answers);
    rep.max_intervals = std::max(rep.max_intervals, r.intervals);
    rep.max_clique_seen = std::max(rep.max_clique_seen, r.clique);
    rep.max_log2_denominator = std::max(rep.max_log2_denominator, r.max_exp);
    for (auto& e : open) e.clique = std::max(e.clique, r.clique);
    if (r.kind == RunResult::failure) {
      rep.all_leaves_force_7 = false;
      ++failures_seen;
      if (rep.failures.size() < opt.max_failures) rep.failures.push_back({r.message, r.trace});
      else break;
    } else if (r.kind == RunResult::leaf && rep.leaf_traces.size() < opt.keep_leaf_traces) {
      rep.leaf_traces.push_back(r.trace);
    }
    path.resize(static_cast<std::size_t>(r.answers));
    while (path.size() > floor && path.back().choice + 1 == path.back().branches) path.pop_back();
    if (path.size() == floor) break;
    ++path.back().choice;
    divergence = static_cast<int>(path.size()) - 1;
    close_above(divergence);
  }
  close_above(-1);
  return rep;
}

// Answer prefixes of length split_depth (or shorter complete games), in
// traversal order, plus the routine entries lying inside those prefixes.
std::vector<Path> frontier(const VerifyOptions& opt, VerificationReport& rep) {
  std::vector<Path> out;
  const Trace start = start_trace(opt);
  Path path;
  int divergence = -1;
  for (;;) {
    RunResult r = run_once(opt, start, path, opt.split_depth, divergence, nullptr);
    path.resize(static_cast<std::size_t>(r.answers));
    for (const auto& e : r.entries)
      if (e.depth > divergence && e.depth < r.answers) ++rep.routine_entries[e.routine];
    out.push_back(path);
    while (!path.empty() && path.back().choice + 1 == path.back().branches) path.pop_back();
    if (path.empty()) break;
    ++path.back().choice;
    divergence = static_cast<int>(path.size()) - 1;
  }
  return out;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

bool VerificationReport::same_counts(const VerificationReport& o) const {
  return total_leaves == o.total_leaves && max_depth == o.max_depth &&
         max_intervals == o.max_intervals && max_clique_seen == o.max_clique_seen &&
         all_leaves_force_7 == o.all_leaves_force_7 && routine_entries == o.routine_entries &&
         max_log2_denominator == o.max_log2_denominator && failures.size() == o.failures.size();
}

void merge_into(VerificationReport& a, const VerificationReport& b, const VerifyOptions& opt) {
  a.total_leaves += b.total_leaves;
  a.memo_hits += b.memo_hits;
  a.max_depth = std::max(a.max_depth, b.max_depth);
  a.max_intervals = std::max(a.max_intervals, b.max_intervals);
  a.max_clique_seen = std::max(a.max_clique_seen, b.max_clique_seen);
  a.max_log2_denominator = std::max(a.max_log2_denominator, b.max_log2_denominator);
  a.all_leaves_force_7 = a.all_leaves_force_7 && b.all_leaves_force_7;
  for (const auto& [k, v] : b.routine_entries) a.routine_entries[k] += v;
  for (const auto& f : b.failures)
    if (a.failures.size() < opt.max_failures) a.failures.push_back(f);
  for (const auto& t : b.leaf_traces)
    if (a.leaf_traces.size() < opt.keep_leaf_traces) a.leaf_traces.push_back(t);
}

VerificationReport verify_serial(const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  MemoTable memo;
  VerificationReport rep = explore(opt, {}, opt.memo ? &memo : nullptr);
  rep.seconds = elapsed(t0);
  return rep;
}

VerificationReport verify_parallel(const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  std::vector<Path> prefixes = frontier(opt, rep);
  std::vector<VerificationReport> parts(prefixes.size());
  MemoTable memo;
  MemoTable* shared = opt.memo ? &memo : nullptr;
#ifdef _OPENMP
  int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(prefixes.size()); ++i)
    parts[i] = explore(opt, prefixes[i], shared);
  for (const auto& p : parts) merge_into(rep, p, opt);
  rep.seconds = elapsed(t0);
  return rep;
}

VerificationReport verify_forced_win(const VerifyOptions& opt) {
  return opt.parallel ? verify_parallel(opt) : verify_serial(opt);
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["all_leaves_force_7"] = all_leaves_force_7;
  j["total_leaves"] = total_leaves;
  j["memo_hits"] = memo_hits;
  j["max_depth"] = max_depth;
  j["max_intervals"] = max_intervals;
  j["max_clique_seen"] = max_clique_seen;
  j["max_log2_denominator"] = max_log2_denominator;
  j["routine_entries"] = routine_entries;
  j["seconds"] = seconds;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const auto& f : failures) fails.push_back({{"message", f.message}, {"moves", f.trace.moves.size()}});
  j["failures"] = fails;
  return j.dump(2);
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (all_leaves_force_7 ? "PASS" : "FAIL") << ": every leaf "
     << (all_leaves_force_7 ? "uses" : "does not use") << " 7 colors\n";
  os << "leaves " << total_leaves << " (memo hits " << memo_hits << "), max depth " << max_depth
     << ", max intervals " << max_intervals << ", max clique " << max_clique_seen
     << ", max denominator 2^" << max_log2_denominator << "\n";
  os << "routine entries:";
  for (const auto& [k, v] : routine_entries) os << " " << k << "=" << v;
  os << "\n";
  for (const auto& f : failures) os << "failure: " << f.message << "\n";
  os << "time " << seconds << " s\n";
  return os.str();
}

// ---- First-Fit fuzzing ----

namespace {

struct FuzzInterval {
  Coord lo, hi;
  int color;
};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

int first_fit_trial(int omega, int n_intervals, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FuzzInterval> placed;
  const Coord zero = Coord::zero(), one = Coord::one();
  int colors = 0;
  for (int attempt = 0; attempt < n_intervals * 20 && static_cast<int>(placed.size()) < n_intervals;
       ++attempt) {
    std::vector<Coord> ends{zero, one};
    for (const auto& iv : placed) {
      ends.push_back(iv.lo);
      ends.push_back(iv.hi);
    }
    std::sort(ends.begin(), ends.end());
    std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 2);
    std::size_t p = pick(rng), q = pick(rng);
    if (p > q) std::swap(p, q);
    Coord lo, hi;
    try {
      if (p < q) {
        lo = midpoint(ends[p], ends[p + 1]);
        hi = midpoint(ends[q], ends[q + 1]);
      } else {
        Coord m = midpoint(ends[p], ends[p + 1]);
        lo = midpoint(ends[p], m);
        hi = midpoint(m, ends[p + 1]);
      }
    } catch (const GameError&) {
      continue;  // gap too fine for 64-bit numerators
    }
    if (candidate_violation(placed, lo, hi, zero, one, omega)) continue;
    std::vector<bool> taken;
    for (const auto& iv : placed) {
      if (!intersects(iv.lo, iv.hi, lo, hi)) continue;
      if (iv.color >= static_cast<int>(taken.size())) taken.resize(iv.color + 1);
      taken[iv.color] = true;
    }
    int c = 0;
    while (c < static_cast<int>(taken.size()) && taken[c]) ++c;
    placed.push_back({lo, hi, c});
    colors = std::max(colors, c + 1);
  }
  return colors;
}

bool fuzz_first_fit_bound_serial(int omega, int n_trials, std::uint64_t seed, FuzzStats* stats) {
  FuzzStats st;
  for (int t = 0; t < n_trials; ++t) {
    int n = 8 + static_cast<int>(mix(seed ^ (2 * t + 1)) % 40);
    int c = first_fit_trial(omega, n, mix(seed + t));
    ++st.trials;
    st.intervals += n;
    st.max_colors = std::max(st.max_colors, c);
    if (c > 2 * omega - 1) ++st.violations;
  }
  if (stats) *stats = st;
  return st.violations == 0;
}

bool fuzz_first_fit_bound(int omega, int n_trials, std::uint64_t seed, FuzzStats* stats) {
  std::vector<int> used(static_cast<std::size_t>(n_trials));
  std::vector<int> sizes(static_cast<std::size_t>(n_trials));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (int t = 0; t < n_trials; ++t) {
    sizes[t] = 8 + static_cast<int>(mix(seed ^ (2 * t + 1)) % 40);
    used[t] = first_fit_trial(omega, sizes[t], mix(seed + t));
  }
  FuzzStats st;
  for (int t = 0; t < n_trials; ++t) {
    ++st.trials;
    st.intervals += sizes[t];
    st.max_colors = std::max(st.max_colors, used[t]);
    if (used[t] > 2 * omega - 1) ++st.violations;
  }
  if (stats) *stats = st;
  return st.violations == 0;
}

}  // namespace ivgame
