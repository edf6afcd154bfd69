#include "argwb/task.hpp"

#include <algorithm>

#include "argwb/adf.hpp"
#include "argwb/error.hpp"
#include "argwb/formats.hpp"

namespace argwb {

std::string_view to_string(TaskKind kind) {
  switch (kind) {
    case TaskKind::SE: return "SE";
    case TaskKind::EE: return "EE";
    case TaskKind::DC: return "DC";
    case TaskKind::DS: return "DS";
    case TaskKind::Models: return "MODELS";
  }
  return "?";
}

std::optional<TaskKind> parse_task_kind(std::string_view text) {
  for (auto k : {TaskKind::SE, TaskKind::EE, TaskKind::DC, TaskKind::DS, TaskKind::Models})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

ProblemTask make_task(TaskKind kind, Semantics semantics, std::optional<ArgId> query) {
  const bool decision = kind == TaskKind::DC || kind == TaskKind::DS;
  if (decision && !query)
    throw Error(ErrorCode::IncompatibleTask, std::string(to_string(kind)) + " requires a query argument");
  if (!decision && query)
    throw Error(ErrorCode::IncompatibleTask, std::string(to_string(kind)) + " takes no query argument");
  return ProblemTask{kind, semantics, std::move(query)};
}

std::optional<ProblemTask> parse_problem(std::string_view text, std::optional<ArgId> query) {
  if (text == "MODELS") return make_task(TaskKind::Models, Semantics::Grounded, std::move(query));
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  auto kind = parse_task_kind(text.substr(0, dash));
  auto sem = parse_semantics(text.substr(dash + 1));
  if (!kind || !sem || *kind == TaskKind::Models) return std::nullopt;
  return make_task(*kind, *sem, std::move(query));
}

namespace {

std::string model_line(const TwoValuedModel& m) {
  std::string out;
  for (const auto& [id, v] : m) out += (out.empty() ? "" : ",") + id + "=" + (v ? "T" : "F");
  return out;
}

TaskOutput run_adf(const Document& doc, const ProblemTask& task, const RunOptions& options) {
  if (task.kind != TaskKind::Models && task.semantics != Semantics::Grounded)
    throw Error(ErrorCode::IncompatibleTask, "adf documents support grounded semantics and MODELS only");
  const DialecticalFramework d = to_adf(doc);
  if (options.oracle) oracle_check(doc, Semantics::Grounded, options);

  TaskOutput out;
  out.result = Json::object();
  out.result["task"] = to_string(task.kind);
  if (task.kind == TaskKind::Models) {
    Json models = Json::array();
    for (const auto& m : adf_two_valued_models(d, options.oracle_options.max_arguments)) {
      out.text += model_line(m) + "\n";
      Json jm = Json::object();
      for (const auto& [id, v] : m) jm[id] = v ? "T" : "F";
      models.push_back(std::move(jm));
    }
    out.result["models"] = std::move(models);
    return out;
  }

  out.result["semantics"] = to_string(task.semantics);
  const TriAssignment v = adf_grounded(d);
  if (task.query) {
    if (!d.contains(*task.query)) throw Error(ErrorCode::UnknownArgument, "unknown argument '" + *task.query + "'");
    const bool yes = v.at(*task.query) == TriValue::T;
    out.text = yes ? "YES\n" : "NO\n";
    out.result["query"] = *task.query;
    out.result["answer"] = yes ? "YES" : "NO";
    return out;
  }
  Json statuses = Json::object();
  for (const auto& [id, value] : v) {
    out.text += id + "=" + std::string(to_string(value)) + "\n";
    statuses[id] = to_string(value);
  }
  out.result["statuses"] = std::move(statuses);
  return out;
}

}  // namespace

void oracle_check(const Document& doc, Semantics semantics, const RunOptions& options) {
  if (doc.kind == DocumentKind::Adf) {
    const DialecticalFramework d = to_adf(doc);
    const TriAssignment grounded = adf_grounded(d);
    const auto& args = d.arguments();
    std::vector<ArgId> schedule;
    for (auto it = args.rbegin(); it != args.rend(); ++it) schedule.push_back(it->id);
    if (adf_grounded(d, schedule) != grounded)
      throw Error(ErrorCode::OracleMismatch, "adf grounded fixpoint depends on evaluation order");
    for (const auto& m : adf_two_valued_models(d, options.oracle_options.max_arguments)) {
      for (const auto& [id, v] : grounded) {
        if ((v == TriValue::T && !m.at(id)) || (v == TriValue::F && m.at(id)))
          throw Error(ErrorCode::OracleMismatch, "two-valued model disagrees with grounded value of '" + id + "'");
      }
    }
    return;
  }
  const ArgumentationFramework f = reduce_to_aaf(doc, options.audience);
  const auto solved = enumerate_extensions(f, semantics);
  const auto oracle = brute_force_oracle(f, semantics, options.oracle_options);
  if (solved != oracle) {
    std::string detail;
    for (const auto& e : solved) detail += " " + format_extension(e);
    detail += " vs oracle";
    for (const auto& e : oracle) detail += " " + format_extension(e);
    throw Error(ErrorCode::OracleMismatch,
                "solver and brute-force oracle disagree on " + std::string(to_string(semantics)) + ":" + detail);
  }
}

TaskOutput run_task(const Document& doc, const ProblemTask& task, const RunOptions& options) {
  if (doc.kind == DocumentKind::Adf) return run_adf(doc, task, options);
  if (task.kind == TaskKind::Models)
    throw Error(ErrorCode::IncompatibleTask, "MODELS is only defined for adf documents");

  const ArgumentationFramework f = reduce_to_aaf(doc, options.audience);
  if (task.query) f.index_of(*task.query);
  if (options.oracle) oracle_check(doc, task.semantics, options);

  const auto extensions = enumerate_extensions(f, task.semantics);
  TaskOutput out;
  out.result = Json::object();
  out.result["task"] = to_string(task.kind);
  out.result["semantics"] = to_string(task.semantics);
  switch (task.kind) {
    case TaskKind::SE:
      if (extensions.empty()) {
        out.text = "NO\n";
        out.result["extension"] = nullptr;
      } else {
        out.text = format_extension(extensions.front()) + "\n";
        out.result["extension"] = to_json(extensions.front());
      }
      break;
    case TaskKind::EE: {
      Json all = Json::array();
      for (const auto& e : extensions) {
        out.text += format_extension(e) + "\n";
        all.push_back(to_json(e));
      }
      out.result["extensions"] = std::move(all);
      break;
    }
    case TaskKind::DC:
    case TaskKind::DS: {
      auto member = [&](const Extension& e) { return e.members.count(*task.query) != 0; };
      const bool yes = task.kind == TaskKind::DC ? std::any_of(extensions.begin(), extensions.end(), member)
                                                 : std::all_of(extensions.begin(), extensions.end(), member);
      out.text = yes ? "YES\n" : "NO\n";
      out.result["query"] = *task.query;
      out.result["answer"] = yes ? "YES" : "NO";
      break;
    }
    case TaskKind::Models: break;
  }
  return out;
}

Json explain_payload(const Document& doc, Semantics semantics, const std::optional<ArgId>& argument,
                     const std::optional<AudienceOrder>& audience) {
  Json j = Json::object();
  j["kind"] = to_string(doc.kind);
  if (doc.kind == DocumentKind::Adf) {
    if (semantics != Semantics::Grounded)
      throw Error(ErrorCode::IncompatibleTask, "adf documents support grounded semantics only");
    const DialecticalFramework d = to_adf(doc);
    if (argument && !d.contains(*argument))
      throw Error(ErrorCode::UnknownArgument, "unknown argument '" + *argument + "'");
    j["report"] = to_json(status_report(d));
    Json trace = Json::array();
    for (const auto& step : adf_grounded_trace(d)) {
      Json s = Json::object();
      s["id"] = step.id;
      s["value"] = to_string(step.value);
      s["round"] = step.round;
      trace.push_back(std::move(s));
    }
    j["trace"] = std::move(trace);
    if (argument) j["argument"] = *argument;
    return j;
  }
  const ArgumentationFramework f = reduce_to_aaf(doc, audience);
  if (argument) f.index_of(*argument);
  j["report"] = to_json(status_report(f, semantics));
  if (argument) {
    j["argument"] = *argument;
    j["dispute_tree"] = to_json(dispute_tree(f, *argument));
  }
  return j;
}

std::string explain_text(const Document& doc, Semantics semantics, const std::optional<ArgId>& argument,
                         const std::optional<AudienceOrder>& audience, Verbosity verbosity) {
  if (doc.kind == DocumentKind::Adf) {
    if (semantics != Semantics::Grounded)
      throw Error(ErrorCode::IncompatibleTask, "adf documents support grounded semantics only");
    const DialecticalFramework d = to_adf(doc);
    std::string text = render_text(status_report(d), verbosity);
    if (verbosity == Verbosity::Full) {
      text += "evaluation order:\n";
      for (const auto& step : adf_grounded_trace(d))
        text += "  round " + std::to_string(step.round) + ": " + step.id + " = " +
                std::string(to_string(step.value)) + (step.round == 0 ? " (external)" : "") + "\n";
    }
    return text;
  }
  const ArgumentationFramework f = reduce_to_aaf(doc, audience);
  std::string text = render_text(status_report(f, semantics), verbosity);
  if (argument) text += "dispute tree for " + *argument + ":\n" + render_text(dispute_tree(f, *argument));
  return text;
}

}  // namespace argwb
