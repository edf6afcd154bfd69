#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "argwb/framework.hpp"

namespace argwb {

// ---------------------------------------------------------------------------
// Bipolar frameworks
// ---------------------------------------------------------------------------

enum class AttackKind { Direct, Supported, Secondary };
std::string_view to_string(AttackKind kind);

struct DerivedAttack {
  ArgId attacker;
  ArgId target;
  AttackKind kind = AttackKind::Direct;
  // Sequence of ids from attacker to target along declared supports/attacks.
  std::vector<ArgId> witness;

  friend bool operator==(const DerivedAttack&, const DerivedAttack&) = default;
  friend auto operator<=>(const DerivedAttack&, const DerivedAttack&) = default;
};

class BipolarFramework {
 public:
  // Throws UnknownArgument (support endpoint), SupportAttackOverlap, CyclicSupport.
  BipolarFramework(ArgumentationFramework base, std::vector<IdPair> supports);

  const ArgumentationFramework& base() const { return base_; }
  // Sorted, duplicate-free.
  const std::vector<IdPair>& supports() const { return supports_; }

 private:
  ArgumentationFramework base_;
  std::vector<IdPair> supports_;
};

// Direct attacks, supported attacks (a =>+ c, c -> t gives a -> t) and
// secondary attacks (a -> c, c =>+ t gives a -> t). Each derived pair is
// reported once per kind with a shortest witness; sorted.
std::vector<DerivedAttack> derived_attacks(const BipolarFramework& b);

// Attack relation = projection of derived_attacks onto pairs.
ArgumentationFramework baf_to_aaf(const BipolarFramework& b);

// ---------------------------------------------------------------------------
// Value-based frameworks
// ---------------------------------------------------------------------------

// Value names, most preferred first.
class AudienceOrder {
 public:
  AudienceOrder() = default;
  // Throws InvalidAudience on duplicates or empty names.
  explicit AudienceOrder(std::vector<std::string> values);

  const std::vector<std::string>& values() const { return values_; }
  bool ranks(const std::string& value) const { return rank_.count(value) != 0; }
  // 0 is most preferred. Throws UnrankedValue.
  std::size_t rank(const std::string& value) const;
  bool prefers(const std::string& a, const std::string& b) const { return rank(a) < rank(b); }
  AudienceOrder reversed() const;

 private:
  std::vector<std::string> values_;
  std::map<std::string, std::size_t> rank_;
};

class ValuedFramework {
 public:
  // Throws UnknownArgument when the mapping is not total and exact.
  ValuedFramework(ArgumentationFramework base, std::map<ArgId, std::string> value_of);

  const ArgumentationFramework& base() const { return base_; }
  const std::map<ArgId, std::string>& value_of() const { return value_of_; }
  const std::string& value(const ArgId& id) const;
  std::vector<std::string> used_values() const;  // sorted, unique

 private:
  ArgumentationFramework base_;
  std::map<ArgId, std::string> value_of_;
};

// Attacks that succeed as defeats: (a,b) survives unless b's value is
// strictly preferred to a's. Throws UnrankedValue.
std::vector<IdPair> vaf_defeats(const ValuedFramework& v, const AudienceOrder& audience);
ArgumentationFramework vaf_to_aaf(const ValuedFramework& v, const AudienceOrder& audience);

}  // namespace argwb
