#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "gdep/program.hpp"

namespace gdep {

struct ServiceRequest {
  std::string method;  // GET, POST, PUT, OPTIONS
  std::string path;    // e.g. /session/s1/scene
  std::map<std::string, std::string> query;
  std::string body;
};

struct ServiceResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Session-oriented editing API behind the 3D editor. Transport agnostic:
/// `handle` maps one request to one response and is safe to call from many
/// threads. Mutations of one session are serialized and atomic; a failed
/// mutation leaves the session untouched.
class EditorService {
 public:
  static constexpr std::size_t kHistoryCap = 256;

  EditorService();
  ~EditorService();
  EditorService(const EditorService&) = delete;
  EditorService& operator=(const EditorService&) = delete;

  ServiceResponse handle(const ServiceRequest& request);

  /// Registers a session directly (used by `serve` to preload documents).
  std::string create_session(LanguageDef language, Program program);

 private:
  struct Session;
  std::shared_ptr<Session> find(const std::string& id) const;

  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_session_ = 1;
};

/// HTTP/1.1 front end for an EditorService with CORS enabled.
class HttpServer {
 public:
  explicit HttpServer(EditorService& service);
  ~HttpServer();

  /// Binds the port (0 picks a free one) and returns the bound port.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace gdep
