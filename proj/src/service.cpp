#include "ivgame/service.hpp"

#include <httplib.h>

#include <random>
#include <sstream>

#include "ivgame/adversaries.hpp"
#include "ivgame/strategies.hpp"

namespace ivgame {

using nlohmann::json;

namespace {

GameService::Response error(int status, const std::string& message, json extra = json::object()) {
  extra["error"] = message;
  return {status, extra};
}

std::int64_t millis(std::chrono::system_clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
}

json walls_json(const Coord& l, const Coord& r) {
  return {{"left", l.to_string()}, {"right", r.to_string()}};
}

}  // namespace

void GameService::advance(Record& r) {
  InteractiveAdversary adversary(r.answers);
  Session session(adversary, fixture(r.routine));
  r.pending.reset();
  try {
    run_from(session, r.routine);
    r.state = session.state();
    r.trace = session.trace();
  } catch (const AwaitColor& wait) {
    r.state = session.state();
    r.trace = session.trace();
    r.pending = wait.pending;
  } catch (const GameError& e) {
    r.state = session.state();
    r.trace = session.trace();
    r.error = e.what();
  }
}

json GameService::describe(const Record& r) {
  json intervals = json::array();
  for (const auto& iv : r.state.intervals())
    intervals.push_back({{"move", iv.move_index},
                         {"lo", iv.lo.to_string()},
                         {"hi", iv.hi.to_string()},
                         {"color", std::string(1, to_char(iv.color))}});
  StateMatrix m = state_matrix(r.state);
  json body = {{"session_id", r.id},
               {"routine", r.routine},
               {"status", r.pending ? "awaiting-color" : "finished"},
               {"omega", r.state.omega()},
               {"walls", walls_json(r.state.wall_left(), r.state.wall_right())},
               {"intervals", intervals},
               {"matrix", {{"sides", m.sides_string()}, {"colors", m.colors_string()}}},
               {"used_colors", r.state.used_colors().to_string()},
               {"created_ms", millis(r.created)},
               {"updated_ms", millis(r.updated)}};
  if (r.pending) {
    body["pending"] = {{"move", r.state.move_count() + 1},
                       {"lo", r.pending->lo().to_string()},
                       {"hi", r.pending->hi().to_string()},
                       {"legal", legal_colors(*r.pending).to_string()}};
  } else {
    body["pending"] = nullptr;
  }
  if (!r.error.empty()) body["error"] = r.error;
  return body;
}

std::shared_ptr<GameService::Record> GameService::find(const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

GameService::Response GameService::create_session(const json& params) {
  std::string routine = params.is_object() ? params.value("routine", "opening") : "opening";
  const auto& names = routine_names();
  if (std::find(names.begin(), names.end(), routine) == names.end())
    return error(400, "unknown routine '" + routine + "'");
  auto rec = std::make_shared<Record>();
  rec->routine = routine;
  rec->created = rec->updated = std::chrono::system_clock::now();
  {
    std::lock_guard<std::mutex> lock(mu_);
    static thread_local std::mt19937_64 rng(std::random_device{}());
    std::ostringstream id;
    id << std::hex << rng() << "-" << ++counter_;
    rec->id = id.str();
    sessions_[rec->id] = rec;
  }
  std::lock_guard<std::mutex> lock(rec->mu);
  advance(*rec);
  return {201, describe(*rec)};
}

GameService::Response GameService::get_state(const std::string& id) {
  auto rec = find(id);
  if (!rec) return error(404, "unknown session");
  std::lock_guard<std::mutex> lock(rec->mu);
  return {200, describe(*rec)};
}

GameService::Response GameService::post_color(const std::string& id, const json& body) {
  auto rec = find(id);
  if (!rec) return error(404, "unknown session");
  std::unique_lock<std::mutex> lock(rec->mu, std::try_to_lock);
  if (!lock.owns_lock()) return error(409, "another move is being processed");
  if (!rec->pending) return error(409, "game is finished");
  if (!body.is_object() || !body.contains("color") || !body["color"].is_string())
    return error(400, "body must be {\"color\": \"a\"..\"g\"}");
  int expected = rec->state.move_count() + 1;
  if (body.contains("move") && (!body["move"].is_number_integer() || body["move"].get<int>() != expected))
    return error(409, "stale move", {{"expected_move", expected}});
  auto color = parse_color(body["color"].get<std::string>());
  ColorSet legal = legal_colors(*rec->pending);
  if (!color || !legal.contains(*color))
    return error(422, "illegal color", {{"legal", legal.to_string()}});
  rec->answers.push_back(*color);
  rec->updated = std::chrono::system_clock::now();
  advance(*rec);
  return {200, describe(*rec)};
}

GameService::Response GameService::get_legal(const std::string& id) {
  auto rec = find(id);
  if (!rec) return error(404, "unknown session");
  std::lock_guard<std::mutex> lock(rec->mu);
  if (!rec->pending) return error(409, "game is finished");
  return {200, {{"move", rec->state.move_count() + 1}, {"legal", legal_colors(*rec->pending).to_string()}}};
}

GameService::Response GameService::get_trace(const std::string& id) {
  auto rec = find(id);
  if (!rec) return error(404, "unknown session");
  std::lock_guard<std::mutex> lock(rec->mu);
  return {200, json::parse(export_trace(rec->trace))};
}

GameService::Response GameService::get_hint(const std::string& id) {
  auto rec = find(id);
  if (!rec) return error(404, "unknown session");
  std::lock_guard<std::mutex> lock(rec->mu);
  json matches = json::array();
  for (const auto& p : PatternLibrary::builtin().all())
    if (auto b = match_pattern(rec->state, p))
      matches.push_back({{"pattern", p.name}, {"dual", b->dual}, {"first", b->first}, {"length", b->length}});
  return {200, {{"matches", matches}}};
}

GameService::Response GameService::list_routines() const {
  return {200, {{"routines", routine_names()}}};
}

void register_routes(httplib::Server& server, GameService& service) {
  auto reply = [](httplib::Response& res, const GameService::Response& r) {
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body.dump(), "application/json");
  };
  auto parse_body = [](const httplib::Request& req, json& out) {
    if (req.body.empty()) {
      out = json::object();
      return true;
    }
    try {
      out = json::parse(req.body);
      return true;
    } catch (const json::exception&) {
      return false;
    }
  };
  const std::string id = "/v1/sessions/([A-Za-z0-9-]+)";
  server.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  server.Get("/v1/routines", [&service, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, service.list_routines());
  });
  server.Post("/v1/sessions", [&service, reply, parse_body](const httplib::Request& req,
                                                             httplib::Response& res) {
    json body;
    if (!parse_body(req, body)) return reply(res, error(400, "malformed JSON"));
    reply(res, service.create_session(body));
  });
  server.Get(id, [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get_state(req.matches[1]));
  });
  server.Post(id + "/color", [&service, reply, parse_body](const httplib::Request& req,
                                                            httplib::Response& res) {
    json body;
    if (!parse_body(req, body)) return reply(res, error(400, "malformed JSON"));
    reply(res, service.post_color(req.matches[1], body));
  });
  server.Get(id + "/legal", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get_legal(req.matches[1]));
  });
  server.Get(id + "/trace", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get_trace(req.matches[1]));
  });
  server.Get(id + "/hint", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get_hint(req.matches[1]));
  });
}

int serve(const std::string& host, int port) {
  GameService service;
  httplib::Server server;
  register_routes(server, service);
  if (!server.listen(host, port)) return 1;
  return 0;
}

}  // namespace ivgame
