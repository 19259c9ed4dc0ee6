#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ivgame/interval_core.hpp"
#include "ivgame/trace.hpp"

namespace httplib {
class Server;
}

namespace ivgame {

// Builder is the master strategy; the remote client plays Algorithm. Each
// record keeps only the client's answers and recomputes the position by
// replaying the strategy, so the engine stays the single source of truth.
class GameService {
 public:
  struct Response {
    int status;
    nlohmann::json body;
  };

  Response create_session(const nlohmann::json& params);
  Response get_state(const std::string& id);
  Response post_color(const std::string& id, const nlohmann::json& body);
  Response get_legal(const std::string& id);
  Response get_trace(const std::string& id);
  Response get_hint(const std::string& id);
  Response list_routines() const;

 private:
  struct Record {
    std::mutex mu;
    std::string id;
    std::string routine;
    std::vector<Color> answers;
    GameState state{4};
    Trace trace;
    std::optional<PendingMove> pending;
    std::string error;
    std::chrono::system_clock::time_point created, updated;
  };

  std::shared_ptr<Record> find(const std::string& id);
  static void advance(Record& r);
  static nlohmann::json describe(const Record& r);

  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Record>> sessions_;
  std::uint64_t counter_ = 0;
};

void register_routes(httplib::Server& server, GameService& service);
// Blocks serving /v1 until the process is stopped.
int serve(const std::string& host, int port);

}  // namespace ivgame
