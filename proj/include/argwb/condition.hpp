#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "argwb/framework.hpp"

namespace argwb {

enum class TriValue { T, F, U };
std::string_view to_string(TriValue v);

// Immutable propositional formula over argument ids.
class Condition {
 public:
  enum class Kind { Constant, Ref, Not, And, Or };

  static Condition constant(bool value);
  static Condition ref(ArgId id);
  static Condition negate(Condition operand);
  static Condition conj(Condition lhs, Condition rhs);
  static Condition disj(Condition lhs, Condition rhs);

  Kind kind() const { return node_->kind; }
  bool constant_value() const { return node_->value; }
  const ArgId& name() const { return node_->name; }
  const Condition& operand() const { return *node_->lhs; }
  const Condition& lhs() const { return *node_->lhs; }
  const Condition& rhs() const { return *node_->rhs; }

  bool is_constant() const { return kind() == Kind::Constant; }
  IdSet references() const;
  // Ids occurring under an even / odd number of negations.
  void polarity(IdSet& positive, IdSet& negative) const;

  friend bool operator==(const Condition& a, const Condition& b);

 private:
  struct Node {
    Kind kind = Kind::Constant;
    bool value = false;
    ArgId name;
    std::shared_ptr<const Condition> lhs;
    std::shared_ptr<const Condition> rhs;
  };
  explicit Condition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Grammar (precedence not > and > or, binary operators left-associative):
//   or   := and (('|' | '∨' | "or") and)*
//   and  := not (('&' | '∧' | "and") not)*
//   not  := ('!' | '¬' | "not") not | atom
//   atom := '(' or ')' | "true" | "false" | identifier
// Throws SyntaxError (byte offset) and UndeclaredArgument.
Condition parse_condition(std::string_view text, const IdSet& declared);

// Canonical ASCII form with minimal parentheses; reparses to the same tree.
std::string serialize(const Condition& c);

// Strong Kleene evaluation. Throws MissingAssignment.
TriValue evaluate_condition(const Condition& c, const std::map<ArgId, TriValue>& assignment);
bool evaluate_classical(const Condition& c, const std::map<ArgId, bool>& assignment);

}  // namespace argwb
