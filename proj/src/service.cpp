#include "crossout/service.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "crossout/errors.hpp"
#include "crossout/json_io.hpp"

namespace crossout {

namespace {

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

ServiceResponse reply(int status, const json& body) { return {status, body.dump(), "application/json"}; }
ServiceResponse error(int status, const std::string& message) {
  return reply(status, json{{"error", message}});
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path) {
    if (c == '/') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

json parse_body(const ServiceRequest& req) {
  if (req.body.empty()) return json::object();
  json j = json::parse(req.body, nullptr, false);
  if (j.is_discarded()) throw ValidationError("request body is not valid JSON");
  return j;
}

std::optional<Player> role_from_json(const json& body) {
  if (!body.contains("human_role") || body.at("human_role").is_null()) return std::nullopt;
  if (!body.at("human_role").is_string()) throw ValidationError("human_role must be a string");
  const std::string s = body.at("human_role").get<std::string>();
  if (s.empty() || s == "none") return std::nullopt;
  return player_from_string(s);
}

bool bool_field(const json& body, const char* key, bool fallback) {
  if (!body.contains(key)) return fallback;
  if (!body.at(key).is_boolean()) throw ValidationError(std::string(key) + " must be a boolean");
  return body.at(key).get<bool>();
}

json state_to_json(const GameState& s) {
  json j;
  j["w"] = to_json(s.w());
  j["size"] = s.w().size();
  j["remaining"] = s.remaining();
  j["over"] = s.over();
  j["turn"] = s.over() ? json(nullptr) : json(std::string(1, to_char(s.turn())));
  j["human_role"] = s.human_role() ? json(std::string(1, to_char(*s.human_role()))) : json(nullptr);
  j["engine_to_move"] = s.is_engine_turn();
  j["history"] = to_json(s.history());

  // Down steps contributed so far: Alice's eaten values, Bob's positions + 1.
  std::vector<int> pa_down;
  std::vector<int> pb_down;
  for (const MoveRecord& m : s.history()) {
    if (m.player == Player::Alice)
      pa_down.push_back(m.value);
    else
      pb_down.push_back(m.position + 1);
  }
  std::sort(pa_down.begin(), pa_down.end());
  std::sort(pb_down.begin(), pb_down.end());
  j["partial_paths"] = {{"pa_down", pa_down}, {"pb_down", pb_down}};

  if (s.over()) {
    const Marking alloc = allocation(s);
    json fin;
    fin["allocation"] = alloc.marks.empty() ? "" : alloc.to_string();
    fin["optimal"] = alloc.marks == crossout_mark(s.w()).marks;
    fin["no_trade"] = no_trade_check(s);
    fin["tuple"] = to_json(encode(s.w()));
    json stats = to_json(stat_bundle(s.w()));
    if (s.w().size() % 2 != 0) stats.erase("z");
    fin["stats"] = stats;
    j["final"] = fin;
  }
  return j;
}

json analysis_to_json(const GameState& s) {
  const std::map<int, Player> predicted = analysis(s);
  json items = json::array();
  std::string marks;
  for (const auto& [pos, player] : predicted) {
    items.push_back({{"position", pos},
                     {"value", s.w().at(pos)},
                     {"player", std::string(1, to_char(player))}});
    marks += to_char(player);
  }
  return json{{"allocation", items}, {"marks", marks}};
}

void engine_replies(GameState& s) {
  while (s.human_role() && s.is_engine_turn()) s = s.apply_move(engine_move(s));
}

}  // namespace

GameService::GameService(const std::string& log_path) {
  log_.emplace(log_path, std::ios::app);
  if (!*log_) throw std::runtime_error("cannot open request log " + log_path);
}

void GameService::log(const ServiceRequest& req) {
  if (!log_) return;
  std::lock_guard lock(log_mutex_);
  *log_ << request_to_log_line(req) << '\n';
  log_->flush();
}

std::shared_ptr<SessionRecord> GameService::find(const std::string& id) {
  std::shared_lock lock(sessions_mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

ServiceResponse GameService::handle(const ServiceRequest& req) {
  const std::vector<std::string> parts = split_path(req.path);
  try {
    if (req.method == "POST" && parts == std::vector<std::string>{"games"})
      return create_game(req);  // logs under the session lock
    log(req);
    if (parts.size() >= 2 && parts[0] == "games") {
      const std::shared_ptr<SessionRecord> s = find(parts[1]);
      if (!s) return error(404, "unknown session");
      std::lock_guard lock(s->mutex);
      if (parts.size() == 2 && req.method == "GET") return get_game(*s);
      if (parts.size() == 3 && parts[2] == "moves" && req.method == "POST")
        return post_move(*s, req);
      if (parts.size() == 3 && parts[2] == "analysis" && req.method == "GET")
        return get_analysis(*s);
      return error(404, "no such endpoint");
    }
    if (parts == std::vector<std::string>{"encode"} && req.method == "POST") {
      const json body = parse_body(req);
      if (!body.contains("w")) throw ValidationError("body must contain \"w\"");
      return reply(200, to_json(encode(permutation_from_json(body.at("w")))));
    }
    if (parts == std::vector<std::string>{"decode"} && req.method == "POST") {
      const json body = parse_body(req);
      const json& t = body.contains("tuple") ? body.at("tuple") : body;
      const Permutation w = decode(tuple_from_json(t));
      return reply(200, json{{"w", to_json(w)}});
    }
    if (parts == std::vector<std::string>{"identities"} && req.method == "GET") {
      const auto suite_it = req.query.find("suite");
      const auto n_it = req.query.find("n");
      if (suite_it == req.query.end() || n_it == req.query.end())
        throw ValidationError("query must contain suite and n");
      int n = 0;
      try {
        n = std::stoi(n_it->second);
      } catch (const std::exception&) {
        throw ValidationError("n must be an integer");
      }
      const auto force_it = req.query.find("force");
      SweepOptions opts{force_it != req.query.end() &&
                        (force_it->second == "1" || force_it->second == "true")};
      std::vector<std::string> suites;
      std::stringstream ss(suite_it->second);
      for (std::string name; std::getline(ss, name, ',');)
        if (!name.empty()) suites.push_back(canonical_suite(name));
      std::string out;
      for (const std::string& suite : suites)
        for (int k = 1; k <= n; ++k)
          run_suite(suite, k, opts, [&](const IdentityReport& r) {
            json j = to_json(r);
            j.erase("elapsed_ms");
            out += j.dump() + "\n";
          });
      return {200, out, "application/x-ndjson"};
    }
    return error(404, "no such endpoint");
  } catch (const MoveError& e) {
    return error(409, e.what());
  } catch (const StateError& e) {
    return error(409, e.what());
  } catch (const ConstraintViolation& e) {
    return reply(422, json{{"error", e.what()}, {"index", e.index()}});
  } catch (const ValidationError& e) {
    return error(422, e.what());
  } catch (const GuardLimitError& e) {
    return error(422, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

ServiceResponse GameService::create_game(const ServiceRequest& req) {
  json body;
  std::optional<GameState> state;
  std::uint64_t seed = 0;
  bool auto_reply = true;
  std::unique_lock lock(sessions_mutex_);
  log(req);
  try {
    body = parse_body(req);
    if (!body.is_object()) throw ValidationError("body must be an object");
    const std::optional<Player> role = role_from_json(body);
    if (body.contains("seed")) {
      if (!body.at("seed").is_number_unsigned() && !body.at("seed").is_number_integer())
        throw ValidationError("seed must be a non-negative integer");
      seed = body.at("seed").get<std::uint64_t>();
    }
    auto_reply = bool_field(body, "auto", true);
    if (body.contains("w")) {
      state.emplace(permutation_from_json(body.at("w")), role);
    } else if (body.contains("n") || body.contains("size")) {
      const bool half = body.contains("n");
      const json& v = half ? body.at("n") : body.at("size");
      if (!v.is_number_integer()) throw ValidationError("n/size must be an integer");
      const int size = half ? 2 * v.get<int>() : v.get<int>();
      if (size < 1) throw ValidationError("game size must be at least 1");
      state.emplace(random_permutation(size, seed), role);
    } else {
      throw ValidationError("body must contain w, n or size");
    }
  } catch (const ValidationError& e) {
    return error(422, e.what());
  }
  if (auto_reply) engine_replies(*state);
  auto rec = std::make_shared<SessionRecord>("g" + std::to_string(next_id_++), *state);
  rec->seed = seed;
  rec->auto_reply = auto_reply;
  rec->created_unix_ms = rec->updated_unix_ms = now_ms();
  sessions_.emplace(rec->id, rec);
  return reply(201, json{{"session", rec->id}, {"state", state_to_json(rec->state)}});
}

ServiceResponse GameService::get_game(SessionRecord& s) {
  json j = state_to_json(s.state);
  return reply(200, json{{"session", s.id}, {"state", j}});
}

ServiceResponse GameService::post_move(SessionRecord& s, const ServiceRequest& req) {
  const json body = parse_body(req);
  if (!body.is_object()) throw ValidationError("body must be an object");
  const bool auto_reply = bool_field(body, "auto", s.auto_reply);
  if (s.state.over()) return error(409, "game is over");
  GameState next = s.state;
  if (body.contains("position") && !body.at("position").is_null()) {
    if (!body.at("position").is_number_integer())
      throw ValidationError("position must be an integer");
    if (next.human_role() && next.is_engine_turn()) return error(409, "not the human's turn");
    next = next.apply_move(body.at("position").get<int>());
  } else {
    if (next.human_role() && !next.is_engine_turn()) return error(409, "human to move");
    next = next.apply_move(optimal_move(next));
  }
  if (auto_reply) engine_replies(next);
  s.state = std::move(next);
  s.updated_unix_ms = now_ms();
  return reply(200, json{{"session", s.id}, {"state", state_to_json(s.state)}});
}

ServiceResponse GameService::get_analysis(SessionRecord& s) {
  json j = analysis_to_json(s.state);
  j["session"] = s.id;
  return reply(200, j);
}

std::string request_to_log_line(const ServiceRequest& req) {
  return json{{"method", req.method}, {"path", req.path}, {"query", req.query}, {"body", req.body}}
      .dump();
}

ServiceRequest request_from_log_line(const std::string& line) {
  const json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ValidationError("malformed request log line");
  ServiceRequest req;
  req.method = j.value("method", "");
  req.path = j.value("path", "");
  req.body = j.value("body", "");
  if (j.contains("query"))
    for (const auto& [k, v] : j.at("query").items()) req.query[k] = v.get<std::string>();
  return req;
}

std::vector<ServiceResponse> replay(const std::string& log_path) {
  std::ifstream in(log_path);
  if (!in) throw std::runtime_error("cannot open request log " + log_path);
  GameService service;
  std::vector<ServiceResponse> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(service.handle(request_from_log_line(line)));
  return out;
}

}  // namespace crossout
