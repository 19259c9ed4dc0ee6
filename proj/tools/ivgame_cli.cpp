#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "ivgame/adversaries.hpp"
#include "ivgame/render.hpp"
#include "ivgame/service.hpp"
#include "ivgame/strategies.hpp"
#include "ivgame/verifier.hpp"

using namespace ivgame;

namespace {

// Echoes every move of the wrapped adversary as a diagram.
class RenderingAdversary : public Adversary {
 public:
  explicit RenderingAdversary(Adversary& inner) : inner_(inner) {}
  Color choose(const PendingMove& pending) override {
    Color c = inner_.choose(pending);
    GameState next = assign(pending, c);
    std::cout << "move " << next.move_count() << ": [" << pending.lo().to_string() << ", "
              << pending.hi().to_string() << "] -> " << to_char(c) << "\n"
              << render_state(next) << "\n";
    return c;
  }
  std::string name() const override { return inner_.name(); }

 private:
  Adversary& inner_;
};

int cmd_play(const std::string& adversary_name, std::uint64_t seed, const std::string& script,
             const std::string& routine, bool render, const std::string& out) {
  std::optional<Trace> scripted;
  if (!script.empty()) scripted = read_trace_file(script);
  auto adversary = make_adversary(adversary_name, seed, scripted ? &*scripted : nullptr);
  RenderingAdversary echo(*adversary);
  Adversary& player = render ? static_cast<Adversary&>(echo) : *adversary;
  Session session(player, fixture(routine));
  GameState final_state = run_from(session, routine);
  if (!out.empty()) write_trace_file(out, session.trace());
  int colors = final_state.used_colors().size();
  std::cout << "adversary " << adversary->name() << ": " << final_state.move_count()
            << " intervals, " << colors << " colors (" << final_state.used_colors().to_string()
            << "), clique " << clique_size(final_state) << "\n";
  return colors == kColorCount ? 0 : 1;
}

int cmd_verify(const VerifyOptions& opt, const std::string& failures_dir,
               const std::string& json_out) {
  VerificationReport rep = verify_forced_win(opt);
  std::cout << rep.summary();
  if (!json_out.empty()) std::ofstream(json_out) << rep.to_json() << "\n";
  if (!failures_dir.empty()) {
    std::filesystem::create_directories(failures_dir);
    for (std::size_t i = 0; i < rep.failures.size(); ++i)
      write_trace_file(failures_dir + "/failure_" + std::to_string(i) + ".json", rep.failures[i].trace);
  }
  return rep.all_leaves_force_7 ? 0 : 1;
}

int cmd_render(const std::string& path, bool matrix) {
  GameState state = replay(read_trace_file(path));
  std::cout << render_state(state);
  if (matrix) std::cout << "\n" << render_matrix(state_matrix(state));
  return 0;
}

int cmd_patterns() {
  for (const auto& p : PatternLibrary::builtin().all()) {
    std::cout << p.name << "\n";
    if (p.all_colors) std::cout << "  all seven colors\n";
    else std::cout << render_matrix(p.as_matrix());
    std::cout << "\n";
  }
  return 0;
}

int cmd_fuzz(int omega, int trials, std::uint64_t seed) {
  FuzzStats st;
  bool ok = fuzz_first_fit_bound(omega, trials, seed, &st);
  std::cout << (ok ? "PASS" : "FAIL") << ": omega " << omega << ", " << st.trials
            << " trials, First-Fit used at most " << st.max_colors << " colors (bound "
            << 2 * omega - 1 << ")\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"On-line proper interval coloring game: Builder strategy forcing 7 colors at clique 4"};
  app.require_subcommand(1);

  std::string adversary = "first-fit", script, routine = "opening", out;
  std::uint64_t seed = 1;
  bool render = false;
  auto* play = app.add_subcommand("play", "Run the Builder strategy against an adversary");
  play->add_option("--adversary", adversary, "first-fit | random | scripted")
      ->check(CLI::IsMember({"first-fit", "random", "scripted"}));
  play->add_option("--seed", seed, "Seed for the random adversary");
  play->add_option("--trace", script, "Trace whose colors the scripted adversary replays")
      ->check(CLI::ExistingFile);
  play->add_option("--routine", routine, "Start routine; non-opening routines start from a fixture")
      ->check(CLI::IsMember(routine_names()));
  play->add_flag("--render", render, "Print the board after every move");
  play->add_option("--out", out, "Write the trace JSON here");

  VerifyOptions vopt;
  int parallel = 0;
  std::string failures_dir, json_out;
  auto* verify = app.add_subcommand("verify", "Exhaustively check the strategy against all canonical adversaries");
  verify->add_option("--omega", vopt.omega, "Clique bound")->check(CLI::PositiveNumber);
  verify->add_flag("--memo", vopt.memo, "Reuse results of equivalent routine entries");
  verify->add_option("--parallel", parallel, "OpenMP threads (0 = serial)");
  verify->add_option("--split-depth", vopt.split_depth, "Answers fixed per parallel task");
  verify->add_option("--start", vopt.start, "Routine to verify from its fixture")
      ->check(CLI::IsMember(routine_names()));
  verify->add_option("--export-failures", failures_dir, "Directory for failing traces");
  verify->add_option("--json", json_out, "Write the report as JSON");

  std::string trace_path;
  bool matrix = false;
  auto* rend = app.add_subcommand("render", "Draw a trace's final position");
  rend->add_option("trace", trace_path, "Trace JSON")->required()->check(CLI::ExistingFile);
  rend->add_flag("--matrix", matrix, "Also print the wall-restricted state matrix");

  auto* pats = app.add_subcommand("patterns", "Print the named state patterns");

  int fuzz_omega = 4, trials = 1000;
  std::uint64_t fuzz_seed = 1;
  auto* fuzz = app.add_subcommand("fuzz", "First-Fit color bound fuzzing");
  fuzz->add_option("--omega", fuzz_omega)->check(CLI::PositiveNumber);
  fuzz->add_option("--trials", trials)->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", fuzz_seed);

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* srv = app.add_subcommand("serve", "Serve the /v1 HTTP API");
  srv->add_option("--host", host);
  srv->add_option("--port", port);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*play) {
      if (adversary == "scripted" && script.empty()) {
        std::cerr << "play: --adversary scripted needs --trace\n";
        return 2;
      }
      return cmd_play(adversary, seed, script, routine, render, out);
    }
    if (*verify) {
      vopt.parallel = parallel > 0;
      vopt.threads = parallel;
      return cmd_verify(vopt, failures_dir, json_out);
    }
    if (*rend) return cmd_render(trace_path, matrix);
    if (*pats) return cmd_patterns();
    if (*fuzz) return cmd_fuzz(fuzz_omega, trials, fuzz_seed);
    if (*srv) {
      std::cout << "serving /v1 on http://" << host << ":" << port << "\n" << std::flush;
      return serve(host, port);
    }
  } catch (const ReplayError& e) {
    std::cerr << "replay error at move " << e.move_index() << ": " << e.what() << "\n";
    return 3;
  } catch (const GameError& e) {
    std::cerr << error_kind_name(e.kind()) << " error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
