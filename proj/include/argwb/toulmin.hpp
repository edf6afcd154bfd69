#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argwb/framework.hpp"

namespace argwb {

struct ToulminArgument {
  ArgId id;
  std::string claim;
  std::string qualifier = "certainly";  // display only, never a weight
  std::vector<std::string> premises;
  std::string warrant;
  std::optional<std::string> backing;
  // Ids of the arguments that rebut this one; each becomes an attack (r, id).
  std::vector<ArgId> rebuttals;

  friend bool operator==(const ToulminArgument&, const ToulminArgument&) = default;
};

struct CaseFile {
  std::vector<ToulminArgument> arguments;
  std::map<ArgId, std::string> party_of;

  friend bool operator==(const CaseFile&, const CaseFile&) = default;
};

enum class ViolationKind { MissingWarrant, EmptyPremises, MissingBacking, DanglingRebuttal, DuplicateId };
std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  ArgId id;        // offending argument
  ArgId referent;  // the unresolved id, for DanglingRebuttal

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate_toulmin(const CaseFile& c, bool require_backing);

struct FlattenResult {
  ArgumentationFramework framework;
  // Per-argument violations that caused exclusion.
  std::vector<Violation> excluded;
};

// One abstract argument per valid Toulmin argument; attack (r, a) for every
// rebuttal r of a where both ends are included. Arguments with a missing
// warrant, empty premises, or (when required) a missing backing are excluded.
// Throws InvalidCase on dangling rebuttals or duplicate ids.
FlattenResult flatten_toulmin(const CaseFile& c, bool require_backing);

// One Toulmin argument per node with rebuttals = attackers.
CaseFile case_from_framework(const ArgumentationFramework& f);

}  // namespace argwb
