#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argwb/document.hpp"
#include "argwb/semantics.hpp"

namespace argwb {

enum class EditOp {
  AddArgument,
  RemoveArgument,
  AddAttack,
  RemoveAttack,
  AddSupport,
  RemoveSupport,
  SetValueOrder,
  SetExternal,
};
std::string_view to_string(EditOp op);  // "add_argument", ...
std::optional<EditOp> parse_edit_op(std::string_view text);

struct Edit {
  EditOp op = EditOp::AddArgument;
  ArgumentRecord argument;                // add_argument
  ArgId id;                               // remove_argument, set_external
  IdPair pair;                            // attack/support edits
  std::vector<std::string> order;         // set_value_order
  std::optional<bool> external;           // set_external; nullopt clears it

  friend bool operator==(const Edit&, const Edit&) = default;
};

// Applies one edit to a copy of `doc` and validates the result. Attack edits
// on a case file rewrite the target's rebuttals. Throws EditConflict (absent
// or duplicate elements, or an edit that leaves the document invalid) and
// KindMismatch (edit not meaningful for the document kind).
Document apply_edit(const Document& doc, const Edit& edit);
Document apply_edits(const Document& doc, const std::vector<Edit>& edits);

// Edits that undo `edits` when applied to apply_edits(doc, edits).
std::vector<Edit> inverse_edits(const Document& doc, const std::vector<Edit>& edits);

struct ArgStatus {
  Label label = Label::Undec;  // grounded labelling (ADF truth as IN/OUT/UNDEC)
  bool credulous = false;
  bool skeptical = false;

  friend bool operator==(const ArgStatus&, const ArgStatus&) = default;
};

struct EvaluationConfig {
  Semantics semantics = Semantics::Grounded;
  std::optional<AudienceOrder> audience;  // overrides the document order
};

// ADF documents support grounded only (IncompatibleTask otherwise).
std::map<ArgId, ArgStatus> evaluate_statuses(const Document& doc, const EvaluationConfig& config);
// Attack relation of the reduced framework; empty for ADF documents.
std::vector<IdPair> effective_attacks(const Document& doc, const EvaluationConfig& config);

struct WhatIfDelta {
  std::vector<Edit> edits;
  Semantics semantics = Semantics::Grounded;
  std::map<ArgId, ArgStatus> before;
  std::map<ArgId, ArgStatus> after;
  IdSet changed;  // status differs, or the argument exists on one side only
  std::vector<IdPair> relation_before;
  std::vector<IdPair> relation_after;
};

// Re-solves a copy with the edits applied; `doc` is never modified.
WhatIfDelta what_if(const Document& doc, const std::vector<Edit>& edits, const EvaluationConfig& config);

}  // namespace argwb
