#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "crossout/game.hpp"

namespace crossout {

struct ServiceRequest {
  std::string method;  // "GET" or "POST"
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct ServiceResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";

  friend bool operator==(const ServiceResponse&, const ServiceResponse&) = default;
};

struct SessionRecord {
  SessionRecord(std::string id, GameState state) : id(std::move(id)), state(std::move(state)) {}

  std::string id;
  GameState state;
  std::uint64_t seed = 0;
  bool auto_reply = true;
  std::int64_t created_unix_ms = 0;
  std::int64_t updated_unix_ms = 0;
  std::mutex mutex;
};

/// Game sessions plus the stateless encode/decode/identity endpoints.
/// Responses depend only on the session state and the request, so replaying
/// a request log into a fresh service reproduces every response.
///
///   POST /games                 {w | n | size, human_role, seed, auto}
///   GET  /games/{id}
///   POST /games/{id}/moves      {position?, auto?}
///   GET  /games/{id}/analysis
///   POST /encode                {w}
///   POST /decode                {tuple} or the tuple itself
///   GET  /identities?suite=..&n=..[&force=1]   (JSON lines)
class GameService {
 public:
  GameService() = default;
  /// Appends every request as one JSON line to `log_path`.
  explicit GameService(const std::string& log_path);

  ServiceResponse handle(const ServiceRequest& req);

 private:
  ServiceResponse create_game(const ServiceRequest& req);
  ServiceResponse get_game(SessionRecord& s);
  ServiceResponse post_move(SessionRecord& s, const ServiceRequest& req);
  ServiceResponse get_analysis(SessionRecord& s);
  std::shared_ptr<SessionRecord> find(const std::string& id);
  void log(const ServiceRequest& req);

  std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<SessionRecord>> sessions_;
  std::uint64_t next_id_ = 1;
  std::mutex log_mutex_;
  std::optional<std::ofstream> log_;
};

/// Request log line <-> request.
std::string request_to_log_line(const ServiceRequest& req);
ServiceRequest request_from_log_line(const std::string& line);

/// Feeds every logged request to a fresh service, in order.
std::vector<ServiceResponse> replay(const std::string& log_path);

/// HTTP front end for a GameService (loopback by default).
class HttpFrontend {
 public:
  explicit HttpFrontend(GameService& service);
  ~HttpFrontend();
  HttpFrontend(const HttpFrontend&) = delete;
  HttpFrontend& operator=(const HttpFrontend&) = delete;

  /// Binds host:port; port 0 picks a free port. Returns the bound port or
  /// -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace crossout
