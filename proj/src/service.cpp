#include "argwb/service.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

#include "argwb/error.hpp"
#include "argwb/task.hpp"

namespace argwb {

namespace {

std::string now_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[48];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

std::string new_session_id() {
  static std::mutex m;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(m);
  std::ostringstream out;
  out << std::hex;
  for (int i = 0; i < 2; ++i) {
    out.width(16);
    out.fill('0');
    out << rng();
  }
  return out.str();
}

Json parse_body(const std::string& body) {
  if (body.empty()) return Json::object();
  try {
    return Json::parse(body);
  } catch (const Json::parse_error&) {
    throw Error(ErrorCode::SchemaError, "$: malformed JSON");
  }
}

std::optional<AudienceOrder> audience_from(const Json& j) {
  if (!j.contains("audience") || j["audience"].is_null()) return std::nullopt;
  if (!j["audience"].is_array()) throw Error(ErrorCode::SchemaError, "$.audience: expected an array of values");
  std::vector<std::string> values;
  for (const auto& v : j["audience"]) {
    if (!v.is_string()) throw Error(ErrorCode::SchemaError, "$.audience: expected strings");
    values.push_back(v.get<std::string>());
  }
  return AudienceOrder(std::move(values));
}

Semantics semantics_from(const Json& j, const char* key = "semantics") {
  if (!j.contains(key) || j[key].is_null()) return Semantics::Grounded;
  if (!j[key].is_string()) throw Error(ErrorCode::SchemaError, std::string("$.") + key + ": expected a string");
  const auto s = parse_semantics(j[key].get<std::string>());
  if (!s) throw Error(ErrorCode::SchemaError, std::string("$.") + key + ": unknown semantics");
  return *s;
}

Json log_json(const std::vector<LogEntry>& log) {
  Json out = Json::array();
  for (std::size_t i = 0; i < log.size(); ++i) {
    Json e = Json::object();
    e["revision"] = i + 1;
    e["timestamp"] = log[i].timestamp;
    e["edit"] = edit_to_json(log[i].edit);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    auto end = path.find('/', start);
    if (end == std::string::npos) end = path.size();
    if (end > start) parts.push_back(path.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

}  // namespace

Document replay(const Document& initial, const std::vector<LogEntry>& log) {
  Document d = initial;
  for (const auto& e : log) d = apply_edit(d, e.edit);
  return d;
}

SessionStore::SessionStore(std::optional<std::filesystem::path> journal_dir) : journal_dir_(std::move(journal_dir)) {
  if (journal_dir_) {
    std::error_code ec;
    std::filesystem::create_directories(*journal_dir_, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create journal directory " + journal_dir_->string());
    recover();
  }
}

void SessionStore::recover() {
  for (const auto& entry : std::filesystem::directory_iterator(*journal_dir_)) {
    if (entry.path().extension() != ".jsonl") continue;
    std::ifstream in(entry.path());
    std::string line;
    auto session = std::make_shared<Session>();
    bool header = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Json j;
      try {
        j = Json::parse(line);
      } catch (const Json::parse_error&) {
        break;  // torn final write
      }
      if (header) {
        session->state.id = j.at("id").get<std::string>();
        session->state.initial = document_from_json(j.at("initial"));
        session->state.current = session->state.initial;
        header = false;
        continue;
      }
      LogEntry e{edit_from_json(j.at("edit")), j.at("timestamp").get<std::string>()};
      session->state.current = apply_edit(session->state.current, e.edit);
      session->state.log.push_back(std::move(e));
    }
    if (header) continue;
    session->state.revision = session->state.log.size();
    sessions_[session->state.id] = session;
  }
}

void SessionStore::journal_append(const std::string& id, const Json& line) const {
  if (!journal_dir_) return;
  std::ofstream out(*journal_dir_ / (id + ".jsonl"), std::ios::app);
  out << line.dump() << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "journal write failed for session " + id);
}

std::string SessionStore::create(Document initial) {
  validate(initial);
  auto session = std::make_shared<Session>();
  session->state.initial = initial;
  session->state.current = std::move(initial);
  std::unique_lock lock(mutex_);
  std::string id;
  do id = new_session_id();
  while (sessions_.count(id));
  session->state.id = id;
  if (journal_dir_) {
    Json header = Json::object();
    header["id"] = id;
    header["initial"] = document_to_json(session->state.initial);
    journal_append(id, header);
  }
  sessions_[id] = std::move(session);
  return id;
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::UnknownSession, "unknown session '" + id + "'");
  return it->second;
}

SessionSnapshot SessionStore::snapshot(const std::string& id) const {
  auto s = find(id);
  std::shared_lock lock(s->mutex);
  return s->state;
}

EditOutcome SessionStore::apply(const std::string& id, std::uint64_t expected_revision, const Edit& edit,
                                const EvaluationConfig& config) {
  auto s = find(id);
  std::unique_lock lock(s->mutex);
  if (expected_revision != s->state.revision)
    throw Error(ErrorCode::RevisionConflict, "expected revision " + std::to_string(expected_revision) +
                                                 " but session is at " + std::to_string(s->state.revision));
  EditOutcome out;
  out.delta = what_if(s->state.current, {edit}, config);
  Document next = apply_edit(s->state.current, edit);
  LogEntry entry{edit, now_utc()};
  if (journal_dir_) {
    Json line = Json::object();
    line["revision"] = s->state.revision + 1;
    line["timestamp"] = entry.timestamp;
    line["edit"] = edit_to_json(edit);
    journal_append(id, line);
  }
  s->state.current = std::move(next);
  s->state.log.push_back(std::move(entry));
  out.revision = ++s->state.revision;
  return out;
}

std::vector<std::string> SessionStore::ids() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [id, _] : sessions_) out.push_back(id);
  return out;
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSession: return 404;
    case ErrorCode::RevisionConflict: return 409;
    case ErrorCode::IoError: return 500;
    default: return 422;
  }
}

Json error_body(ErrorCode code, const std::string& message) {
  Json err = Json::object();
  err["code"] = to_string(code);
  err["message"] = message;
  Json j = Json::object();
  j["error"] = std::move(err);
  return j;
}

Service::Service(std::optional<std::filesystem::path> journal_dir) : store_(std::move(journal_dir)) {}

HttpResponse Service::handle(const std::string& method, const std::string& path, const std::string& body,
                             const std::map<std::string, std::string>& query) {
  try {
    const auto parts = split_path(path);
    if (parts.empty() || parts[0] != "sessions") throw std::out_of_range("route");
    if (method == "POST" && parts.size() == 1) return create_session(body);
    if (parts.size() < 2) throw std::out_of_range("route");
    const std::string& id = parts[1];
    if (method == "GET" && parts.size() == 2) return get_session(id);
    if (method == "POST" && parts.size() == 3 && parts[2] == "edits") return post_edit(id, body);
    if (method == "POST" && parts.size() == 3 && parts[2] == "solve") return solve(id, body);
    if (method == "POST" && parts.size() == 3 && parts[2] == "whatif") return whatif(id, body);
    if (method == "GET" && parts.size() == 4 && parts[2] == "explain") return explain(id, parts[3], query);
    throw std::out_of_range("route");
  } catch (const Error& e) {
    return {http_status(e.code()), error_body(e.code(), e.what())};
  } catch (const std::out_of_range&) {
    Json err = Json::object();
    err["error"] = {{"code", "NotFound"}, {"message", "no route for " + method + " " + path}};
    return {404, err};
  } catch (const Json::exception& e) {
    return {422, error_body(ErrorCode::SchemaError, std::string("$: ") + e.what())};
  }
}

HttpResponse Service::create_session(const std::string& body) {
  const std::string id = store_.create(parse_document(body));
  Json j = Json::object();
  j["id"] = id;
  j["revision"] = 0;
  return {201, j};
}

HttpResponse Service::get_session(const std::string& id) {
  const SessionSnapshot s = store_.snapshot(id);
  Json j = Json::object();
  j["id"] = s.id;
  j["revision"] = s.revision;
  j["document"] = document_to_json(s.current);
  j["log"] = log_json(s.log);
  return {200, j};
}

HttpResponse Service::post_edit(const std::string& id, const std::string& body) {
  const Json j = parse_body(body);
  if (!j.contains("expected_revision") || !j["expected_revision"].is_number_unsigned())
    throw Error(ErrorCode::SchemaError, "$.expected_revision: expected a non-negative integer");
  if (!j.contains("edit")) throw Error(ErrorCode::SchemaError, "$.edit: missing");
  const Edit edit = edit_from_json(j["edit"]);
  const EvaluationConfig config{semantics_from(j), audience_from(j)};
  const EditOutcome out = store_.apply(id, j["expected_revision"].get<std::uint64_t>(), edit, config);
  Json r = Json::object();
  r["revision"] = out.revision;
  r["delta"] = to_json(out.delta);
  return {200, r};
}

HttpResponse Service::solve(const std::string& id, const std::string& body) {
  const Json j = parse_body(body);
  const SessionSnapshot s = store_.snapshot(id);
  if (!j.contains("task") || !j["task"].is_string()) throw Error(ErrorCode::SchemaError, "$.task: expected a string");
  const auto kind = parse_task_kind(j["task"].get<std::string>());
  if (!kind) throw Error(ErrorCode::SchemaError, "$.task: unknown task");
  std::optional<ArgId> query;
  if (j.contains("argument") && !j["argument"].is_null()) query = j["argument"].get<std::string>();
  RunOptions options;
  options.audience = audience_from(j);
  if (j.contains("oracle")) options.oracle = j["oracle"].get<bool>();
  const TaskOutput out = run_task(s.current, make_task(*kind, semantics_from(j), query), options);
  Json r = Json::object();
  r["revision"] = s.revision;
  r["output"] = out.text;
  r["result"] = out.result;
  return {200, r};
}

HttpResponse Service::explain(const std::string& id, const std::string& arg,
                              const std::map<std::string, std::string>& query) {
  const SessionSnapshot s = store_.snapshot(id);
  Semantics sem = Semantics::Grounded;
  if (auto it = query.find("semantics"); it != query.end()) {
    auto parsed = parse_semantics(it->second);
    if (!parsed) throw Error(ErrorCode::SchemaError, "semantics: unknown semantics");
    sem = *parsed;
  }
  Verbosity verbosity = Verbosity::Detailed;
  if (auto it = query.find("verbosity"); it != query.end()) {
    auto parsed = parse_verbosity(it->second);
    if (!parsed) throw Error(ErrorCode::SchemaError, "verbosity: unknown verbosity");
    verbosity = *parsed;
  }
  std::optional<AudienceOrder> audience;
  if (auto it = query.find("audience"); it != query.end()) {
    std::vector<std::string> values;
    std::stringstream in(it->second);
    for (std::string v; std::getline(in, v, ',');) values.push_back(v);
    audience = AudienceOrder(std::move(values));
  }
  Json r = Json::object();
  r["revision"] = s.revision;
  r["explanation"] = explain_payload(s.current, sem, arg, audience);
  r["text"] = explain_text(s.current, sem, arg, audience, verbosity);
  return {200, r};
}

HttpResponse Service::whatif(const std::string& id, const std::string& body) {
  const Json j = parse_body(body);
  const SessionSnapshot s = store_.snapshot(id);
  if (!j.contains("edits")) throw Error(ErrorCode::SchemaError, "$.edits: missing");
  const auto edits = edits_from_json(j["edits"]);
  const EvaluationConfig config{semantics_from(j), audience_from(j)};
  Json r = Json::object();
  r["revision"] = s.revision;
  r["delta"] = to_json(what_if(s.current, edits, config));
  return {200, r};
}

}  // namespace argwb
