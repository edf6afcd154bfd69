#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "argwb/condition.hpp"
#include "argwb/framework.hpp"

namespace argwb {

// Every argument carries an acceptance condition over the declared ids,
// except externally established arguments, which carry a declared truth and
// either no condition or a constant one that agrees with the declaration.
class DialecticalFramework {
 public:
  DialecticalFramework() = default;
  // Throws DuplicateArgumentId, InvalidArgumentId, UnknownArgument,
  // UndeclaredArgument, MissingCondition, ConflictingExternal.
  DialecticalFramework(std::vector<Argument> arguments, std::map<ArgId, Condition> conditions,
                       std::map<ArgId, bool> externals);

  std::size_t size() const { return arguments_.size(); }
  const std::vector<Argument>& arguments() const { return arguments_; }
  IdSet ids() const;
  bool contains(const ArgId& id) const;
  // nullptr for an external argument declared without a condition.
  const Condition* condition(const ArgId& id) const;
  std::optional<bool> external(const ArgId& id) const;
  const std::map<ArgId, Condition>& conditions() const { return conditions_; }
  const std::map<ArgId, bool>& externals() const { return externals_; }

 private:
  std::vector<Argument> arguments_;
  std::map<ArgId, Condition> conditions_;
  std::map<ArgId, bool> externals_;
};

using TriAssignment = std::map<ArgId, TriValue>;
using TwoValuedModel = std::map<ArgId, bool>;

// One committed value during the grounded fixpoint computation.
struct AdfStep {
  ArgId id;
  TriValue value = TriValue::U;
  int round = 0;  // 0 for externals
};

// Least fixpoint under strong Kleene evaluation, starting from the declared
// externals with every other argument undecided.
TriAssignment adf_grounded(const DialecticalFramework& d);
// Same fixpoint, re-evaluating arguments one at a time in `schedule` order
// and committing immediately.
TriAssignment adf_grounded(const DialecticalFramework& d, const std::vector<ArgId>& schedule);
// Commit order of the default (round-based) computation.
std::vector<AdfStep> adf_grounded_trace(const DialecticalFramework& d);

// All total assignments where each non-external argument's truth equals its
// condition's classical value and externals match their declaration.
// Throws TooLarge when the framework has more than max_arguments arguments.
std::vector<TwoValuedModel> adf_two_valued_models(const DialecticalFramework& d,
                                                  std::size_t max_arguments = 16);

// Condition of each argument = conjunction of its negated attackers.
DialecticalFramework aaf_as_adf(const ArgumentationFramework& f);

}  // namespace argwb
