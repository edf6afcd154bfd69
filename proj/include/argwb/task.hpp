#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "argwb/document.hpp"
#include "argwb/explain.hpp"
#include "argwb/json_io.hpp"
#include "argwb/oracle.hpp"
#include "argwb/semantics.hpp"

namespace argwb {

enum class TaskKind { SE, EE, DC, DS, Models };
std::string_view to_string(TaskKind kind);
std::optional<TaskKind> parse_task_kind(std::string_view text);

struct ProblemTask {
  TaskKind kind = TaskKind::EE;
  Semantics semantics = Semantics::Grounded;
  std::optional<ArgId> query;
};

// DC/DS require a query argument; SE/EE/MODELS forbid one (IncompatibleTask).
ProblemTask make_task(TaskKind kind, Semantics semantics, std::optional<ArgId> query = std::nullopt);
// "DS-PR" style names.
std::optional<ProblemTask> parse_problem(std::string_view text, std::optional<ArgId> query = std::nullopt);

struct RunOptions {
  std::optional<AudienceOrder> audience;
  bool oracle = false;  // cross-check against the brute-force oracle
  OracleOptions oracle_options;
};

struct TaskOutput {
  std::string text;  // exactly what the CLI prints, newline-terminated lines
  Json result;       // structured form of the same answer
};

// BAF, VAF and case-file documents are reduced to their defeat graph first.
// ADF documents accept grounded SE/EE/DC/DS and MODELS. Throws
// IncompatibleTask, UnknownArgument, OracleMismatch and validation errors.
TaskOutput run_task(const Document& doc, const ProblemTask& task, const RunOptions& options = {});

// Throws OracleMismatch when the solver disagrees with the oracle.
void oracle_check(const Document& doc, Semantics semantics, const RunOptions& options = {});

// Status report plus, for a queried argument of a non-ADF document, its
// dispute tree.
Json explain_payload(const Document& doc, Semantics semantics, const std::optional<ArgId>& argument,
                     const std::optional<AudienceOrder>& audience = std::nullopt);
std::string explain_text(const Document& doc, Semantics semantics, const std::optional<ArgId>& argument,
                         const std::optional<AudienceOrder>& audience, Verbosity verbosity);

}  // namespace argwb
