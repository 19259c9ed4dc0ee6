#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ivgame/trace.hpp"

namespace ivgame {

struct VerifyOptions {
  int omega = 4;
  bool memo = false;
  bool parallel = false;
  int threads = 0;      // 0 lets OpenMP decide
  int split_depth = 6;  // answers fixed per parallel task
  std::string start = "opening";  // any routine name; others start from fixture()
  std::size_t max_failures = 16;
  std::size_t keep_leaf_traces = 0;  // first N leaves in traversal order
};

struct VerificationFailure {
  std::string message;
  Trace trace;
};

struct VerificationReport {
  std::int64_t total_leaves = 0;
  std::int64_t memo_hits = 0;
  int max_depth = 0;
  int max_intervals = 0;
  int max_clique_seen = 0;
  unsigned max_log2_denominator = 0;
  bool all_leaves_force_7 = true;
  std::map<std::string, std::int64_t> routine_entries;
  double seconds = 0.0;
  std::vector<VerificationFailure> failures;
  std::vector<Trace> leaf_traces;

  // Counters only; used to compare serial and parallel runs.
  bool same_counts(const VerificationReport& other) const;
  std::string to_json() const;
  std::string summary() const;
};

// Appends b's subtree results to a (traversal order a then b).
void merge_into(VerificationReport& a, const VerificationReport& b, const VerifyOptions& opt);

VerificationReport verify_serial(const VerifyOptions& opt);
VerificationReport verify_parallel(const VerifyOptions& opt);
VerificationReport verify_forced_win(const VerifyOptions& opt);

struct FuzzStats {
  int trials = 0;
  int max_colors = 0;
  int intervals = 0;
  int violations = 0;
};

// Random legal presentations colored by First-Fit; true when every trial
// stays within 2*omega-1 colors.
bool fuzz_first_fit_bound_serial(int omega, int n_trials, std::uint64_t seed,
                                 FuzzStats* stats = nullptr);
bool fuzz_first_fit_bound(int omega, int n_trials, std::uint64_t seed,
                          FuzzStats* stats = nullptr);

// One random trial; returns the number of colors First-Fit used.
int first_fit_trial(int omega, int n_intervals, std::uint64_t seed);

}  // namespace ivgame
