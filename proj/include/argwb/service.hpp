#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "argwb/document.hpp"
#include "argwb/error.hpp"
#include "argwb/json_io.hpp"
#include "argwb/whatif.hpp"

namespace argwb {

struct LogEntry {
  Edit edit;
  std::string timestamp;  // UTC, ISO 8601
};

struct SessionSnapshot {
  std::string id;
  Document initial;
  Document current;
  std::uint64_t revision = 0;
  std::vector<LogEntry> log;
};

struct EditOutcome {
  std::uint64_t revision = 0;
  WhatIfDelta delta;
};

// In-memory sessions. Edits within a session are serialized; reads take a
// shared lock and see one consistent revision. With a journal directory each
// session appends to <dir>/<id>.jsonl and is restored from it on startup.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> journal_dir = std::nullopt);

  std::string create(Document initial);
  SessionSnapshot snapshot(const std::string& id) const;
  // Throws UnknownSession, RevisionConflict, EditConflict, KindMismatch.
  EditOutcome apply(const std::string& id, std::uint64_t expected_revision, const Edit& edit,
                    const EvaluationConfig& config);
  std::vector<std::string> ids() const;

 private:
  struct Session {
    mutable std::shared_mutex mutex;
    SessionSnapshot state;
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  void journal_append(const std::string& id, const Json& line) const;
  void recover();

  std::optional<std::filesystem::path> journal_dir_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

// Replays a log from the initial document.
Document replay(const Document& initial, const std::vector<LogEntry>& log);

struct HttpResponse {
  int status = 200;
  Json body;
};

// Route dispatch without a socket; the HTTP server and the tests share it.
class Service {
 public:
  explicit Service(std::optional<std::filesystem::path> journal_dir = std::nullopt);

  HttpResponse handle(const std::string& method, const std::string& path, const std::string& body,
                      const std::map<std::string, std::string>& query = {});
  SessionStore& store() { return store_; }

 private:
  HttpResponse create_session(const std::string& body);
  HttpResponse get_session(const std::string& id);
  HttpResponse post_edit(const std::string& id, const std::string& body);
  HttpResponse solve(const std::string& id, const std::string& body);
  HttpResponse explain(const std::string& id, const std::string& arg,
                       const std::map<std::string, std::string>& query);
  HttpResponse whatif(const std::string& id, const std::string& body);

  SessionStore store_;
};

int http_status(ErrorCode code);
Json error_body(ErrorCode code, const std::string& message);

// httplib front end for a Service.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws IoError.
  int bind(const std::string& host, int port);
  void run();  // blocks until stop()
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace argwb
