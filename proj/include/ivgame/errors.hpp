#pragma once

#include <stdexcept>
#include <string>

namespace ivgame {

enum class ErrorKind {
  invalid_order,
  containment,
  clique,
  wall,
  duplicate_endpoint,
  color_conflict,
  wall_order,
  strategy_inconsistency,
  replay,
  parse,
  overflow,
};

const char* error_kind_name(ErrorKind kind);

class GameError : public std::runtime_error {
 public:
  GameError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Replay failures carry the index of the offending move.
class ReplayError : public GameError {
 public:
  ReplayError(int move_index, const std::string& what)
      : GameError(ErrorKind::replay, what), move_index_(move_index) {}
  int move_index() const { return move_index_; }

 private:
  int move_index_;
};

}  // namespace ivgame
