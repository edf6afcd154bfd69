#include "argwb/framework.hpp"

#include <algorithm>
#include <cctype>

#include "argwb/error.hpp"

namespace argwb {

bool is_valid_id(const std::string& id) {
  if (id.empty() || id.front() == '#' || id.front() == '%') return false;
  return std::none_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isspace(c) || c == ',' || c == '(' || c == ')';
  });
}

ArgumentationFramework::ArgumentationFramework(std::vector<Argument> arguments,
                                               std::vector<IdPair> attacks) {
  std::sort(arguments.begin(), arguments.end(),
            [](const Argument& a, const Argument& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < arguments.size(); ++i) {
    if (!is_valid_id(arguments[i].id))
      throw Error(ErrorCode::InvalidArgumentId, "invalid argument id '" + arguments[i].id + "'");
    if (i > 0 && arguments[i].id == arguments[i - 1].id)
      throw Error(ErrorCode::DuplicateArgumentId, "duplicate argument id '" + arguments[i].id + "'");
    index_.emplace(arguments[i].id, i);
  }
  arguments_ = std::move(arguments);

  std::sort(attacks.begin(), attacks.end());
  attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
  attackers_.resize(arguments_.size());
  targets_.resize(arguments_.size());
  for (const auto& [from, to] : attacks) {
    auto f = index_.find(from);
    auto t = index_.find(to);
    if (f == index_.end() || t == index_.end())
      throw Error(ErrorCode::UnknownArgumentInAttack,
                  "attack (" + from + "," + to + ") references an undeclared argument");
    attackers_[t->second].push_back(f->second);
    targets_[f->second].push_back(t->second);
    edge_set_.emplace(f->second, t->second);
  }
  for (auto& v : attackers_) std::sort(v.begin(), v.end());
  for (auto& v : targets_) std::sort(v.begin(), v.end());
  attacks_ = std::move(attacks);
}

std::size_t ArgumentationFramework::index_of(const ArgId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownArgument, "unknown argument '" + id + "'");
  return it->second;
}

IdSet ArgumentationFramework::ids() const {
  IdSet out;
  for (const auto& a : arguments_) out.insert(out.end(), a.id);
  return out;
}

bool ArgumentationFramework::attacks(std::size_t from, std::size_t to) const {
  return edge_set_.count({from, to}) != 0;
}

bool ArgumentationFramework::attacks(const ArgId& from, const ArgId& to) const {
  return attacks(index_of(from), index_of(to));
}

std::vector<std::size_t> ArgumentationFramework::indices(const IdSet& ids) const {
  std::vector<std::size_t> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(index_of(id));
  return out;
}

IdSet ArgumentationFramework::to_ids(const std::vector<std::size_t>& indices) const {
  IdSet out;
  for (auto i : indices) out.insert(arguments_[i].id);
  return out;
}

ArgumentationFramework new_framework(std::vector<Argument> arguments, std::vector<IdPair> attacks) {
  return ArgumentationFramework(std::move(arguments), std::move(attacks));
}

ArgumentationFramework new_framework(const IdSet& ids, std::vector<IdPair> attacks) {
  std::vector<Argument> args;
  args.reserve(ids.size());
  for (const auto& id : ids) args.push_back(Argument{id, std::nullopt, {}});
  return ArgumentationFramework(std::move(args), std::move(attacks));
}

}  // namespace argwb
