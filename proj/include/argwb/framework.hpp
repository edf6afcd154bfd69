#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace argwb {

using ArgId = std::string;
using IdSet = std::set<ArgId>;
using IdPair = std::pair<ArgId, ArgId>;

struct Argument {
  ArgId id;
  std::optional<std::string> label;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const Argument&, const Argument&) = default;
};

// Ids must be non-empty, free of whitespace, commas and parentheses, and
// must not start with '#' or '%' (the TGF separator and APX comment marker).
bool is_valid_id(const std::string& id);

// Immutable after construction. Arguments are kept sorted by id; internally
// every argument has a dense index equal to its position in that order.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;
  ArgumentationFramework(std::vector<Argument> arguments, std::vector<IdPair> attacks);

  std::size_t size() const { return arguments_.size(); }
  bool empty() const { return arguments_.empty(); }

  const std::vector<Argument>& arguments() const { return arguments_; }
  // Sorted, duplicate-free.
  const std::vector<IdPair>& attacks() const { return attacks_; }

  bool contains(const ArgId& id) const { return index_.count(id) != 0; }
  // Throws UnknownArgument.
  std::size_t index_of(const ArgId& id) const;
  const ArgId& id_at(std::size_t index) const { return arguments_[index].id; }
  const Argument& argument(const ArgId& id) const { return arguments_[index_of(id)]; }
  IdSet ids() const;

  const std::vector<std::size_t>& attackers_of(std::size_t index) const { return attackers_[index]; }
  const std::vector<std::size_t>& targets_of(std::size_t index) const { return targets_[index]; }
  bool attacks(std::size_t from, std::size_t to) const;
  bool attacks(const ArgId& from, const ArgId& to) const;

  // Index set for the given ids; throws UnknownArgument.
  std::vector<std::size_t> indices(const IdSet& ids) const;
  IdSet to_ids(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
    return a.arguments_ == b.arguments_ && a.attacks_ == b.attacks_;
  }

 private:
  std::vector<Argument> arguments_;
  std::vector<IdPair> attacks_;
  std::map<ArgId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> attackers_;
  std::vector<std::vector<std::size_t>> targets_;
  std::set<std::pair<std::size_t, std::size_t>> edge_set_;
};

// Validating constructor. Duplicate attack pairs collapse; duplicate ids throw.
ArgumentationFramework new_framework(std::vector<Argument> arguments, std::vector<IdPair> attacks);
ArgumentationFramework new_framework(const IdSet& ids, std::vector<IdPair> attacks);

}  // namespace argwb
