#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "argwb/framework.hpp"

namespace argwb {

enum class Semantics { Grounded, Complete, Preferred, Stable };
enum class Label { In, Out, Undec };
enum class Mode { Credulous, Skeptical };

std::string_view to_string(Semantics sem);  // "GR", "CO", "PR", "ST"
std::string_view to_string(Label label);    // "IN", "OUT", "UNDEC"
// Accepts the two-letter codes and the full lowercase names.
std::optional<Semantics> parse_semantics(std::string_view text);

struct Extension {
  IdSet members;
  Semantics semantics = Semantics::Grounded;

  friend bool operator==(const Extension&, const Extension&) = default;
};

using Labelling = std::map<ArgId, Label>;

// Size descending, then lexicographic member list.
bool extension_order(const Extension& a, const Extension& b);
void sort_extensions(std::vector<Extension>& extensions);

bool is_conflict_free(const ArgumentationFramework& f, const IdSet& s);
// All arguments defended by s (every attacker is attacked by some member of s).
IdSet characteristic_function(const ArgumentationFramework& f, const IdSet& s);
bool is_admissible(const ArgumentationFramework& f, const IdSet& s);
bool is_complete(const ArgumentationFramework& f, const IdSet& s);
bool is_stable(const ArgumentationFramework& f, const IdSet& s);

Extension grounded_extension(const ArgumentationFramework& f);

// For every argument in the grounded extension, the round of the
// characteristic-function iteration in which it first appears (1 for
// unattacked arguments); 0 for arguments outside the grounded extension.
std::vector<int> grounded_rounds(const ArgumentationFramework& f);

std::vector<Extension> enumerate_extensions(const ArgumentationFramework& f, Semantics sem);

// Skeptical acceptance is vacuously true when the semantics yields no extension.
bool acceptance_status(const ArgumentationFramework& f, const ArgId& a, Semantics sem, Mode mode);

// IN = members, OUT = attacked by a member, UNDEC otherwise.
Labelling to_labelling(const ArgumentationFramework& f, const IdSet& in);
Labelling grounded_labelling(const ArgumentationFramework& f);
// Checks the complete-labelling laws: IN iff all attackers OUT, OUT iff some attacker IN.
bool is_legal_labelling(const ArgumentationFramework& f, const Labelling& labelling);

}  // namespace argwb
