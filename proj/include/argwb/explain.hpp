#pragma once

#include <optional>
#include <string>
#include <vector>

#include "argwb/adf.hpp"
#include "argwb/framework.hpp"
#include "argwb/semantics.hpp"

namespace argwb {

struct StatusEntry {
  ArgId id;
  std::optional<std::string> label;
  Label status = Label::Undec;  // grounded labelling (ADF: T/F/U as IN/OUT/UNDEC)
  bool credulous = false;
  bool skeptical = false;
  // IN attackers. For ADF: accepted arguments occurring negatively in the condition.
  std::vector<ArgId> defeaters;
  // IN arguments attacking some attacker. For ADF: accepted positive parents.
  std::vector<ArgId> defenders;
  std::optional<std::string> condition;  // ADF, canonical text
  std::optional<bool> external;          // ADF, declared evidence
  std::optional<TriValue> truth;         // ADF
  std::vector<ArgId> parents;            // ADF, ids referenced by the condition
};

struct StatusReport {
  Semantics semantics = Semantics::Grounded;
  std::vector<StatusEntry> entries;  // sorted by id
  std::vector<Extension> extensions;
  bool no_stable_extension = false;
  bool adf = false;
};

StatusReport status_report(const ArgumentationFramework& f, Semantics sem);
// Grounded ADF statuses.
StatusReport status_report(const DialecticalFramework& d);

enum class Role { Proponent, Opponent };

struct DisputeNode {
  ArgId argument;
  Role role = Role::Proponent;
  // Proponent node: every opponent child is answered. Opponent node: the
  // attack stands (no proponent answer).
  bool won = false;
  std::vector<DisputeNode> children;
};

struct DisputeTree {
  DisputeNode root;
  bool proponent_wins = false;
  // Opponent arguments left without a proponent answer anywhere in the tree.
  std::vector<ArgId> unanswered;
};

// Grounded game: opponents are all attackers; each is answered by the
// earliest-round grounded defender not already used by the proponent on the
// branch. The proponent wins iff the root is in the grounded extension.
DisputeTree dispute_tree(const ArgumentationFramework& f, const ArgId& root);

enum class Verbosity { Summary, Detailed, Full };
std::optional<Verbosity> parse_verbosity(const std::string& text);

std::string render_text(const StatusReport& report, Verbosity verbosity);
std::string render_text(const DisputeTree& tree);

}  // namespace argwb
