#include "argwb/variants.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "argwb/error.hpp"

namespace argwb {

std::string_view to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::Direct: return "direct";
    case AttackKind::Supported: return "supported";
    case AttackKind::Secondary: return "secondary";
  }
  return "?";
}

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency support_graph(const ArgumentationFramework& f, const std::vector<IdPair>& supports) {
  Adjacency out(f.size());
  for (const auto& [from, to] : supports) out[f.index_of(from)].push_back(f.index_of(to));
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

// Returns a support cycle (closed, first == last) if one exists.
std::vector<std::size_t> find_cycle(const Adjacency& g) {
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(g.size(), kWhite);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> cycle;

  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    colour[u] = kGrey;
    stack.push_back(u);
    for (auto v : g[u]) {
      if (colour[v] == kGrey) {
        auto start = std::find(stack.begin(), stack.end(), v);
        cycle.assign(start, stack.end());
        cycle.push_back(v);
        return true;
      }
      if (colour[v] == kWhite && self(self, v)) return true;
    }
    stack.pop_back();
    colour[u] = kBlack;
    return false;
  };
  for (std::size_t u = 0; u < g.size(); ++u)
    if (colour[u] == kWhite && dfs(dfs, u)) return cycle;
  return {};
}

// Shortest support chains from `source` (length >= 1) as parent pointers.
std::vector<std::ptrdiff_t> support_reach(const Adjacency& g, std::size_t source) {
  std::vector<std::ptrdiff_t> parent(g.size(), -1);
  std::deque<std::size_t> queue;
  for (auto v : g[source]) {
    if (parent[v] == -1) {
      parent[v] = static_cast<std::ptrdiff_t>(source);
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : g[u]) {
      if (parent[v] == -1 && v != source) {
        parent[v] = static_cast<std::ptrdiff_t>(u);
        queue.push_back(v);
      }
    }
  }
  return parent;
}

std::vector<std::size_t> chain(const std::vector<std::ptrdiff_t>& parent, std::size_t source,
                               std::size_t end) {
  std::vector<std::size_t> path{end};
  while (path.back() != source) path.push_back(static_cast<std::size_t>(parent[path.back()]));
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

BipolarFramework::BipolarFramework(ArgumentationFramework base, std::vector<IdPair> supports)
    : base_(std::move(base)) {
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  for (const auto& [from, to] : supports) {
    if (!base_.contains(from) || !base_.contains(to))
      throw Error(ErrorCode::UnknownArgument,
                  "support (" + from + "," + to + ") references an undeclared argument");
    if (base_.attacks(from, to))
      throw Error(ErrorCode::SupportAttackOverlap,
                  "(" + from + "," + to + ") is declared both as attack and as support");
  }
  const auto cycle = find_cycle(support_graph(base_, supports));
  if (!cycle.empty()) {
    std::string path;
    for (auto i : cycle) path += (path.empty() ? "" : "=>") + base_.id_at(i);
    throw Error(ErrorCode::CyclicSupport, "support cycle " + path);
  }
  supports_ = std::move(supports);
}

std::vector<DerivedAttack> derived_attacks(const BipolarFramework& b) {
  const auto& f = b.base();
  const Adjacency sup = support_graph(f, b.supports());
  std::set<DerivedAttack> out;

  for (const auto& [from, to] : f.attacks())
    out.insert(DerivedAttack{from, to, AttackKind::Direct, {from, to}});

  for (std::size_t a = 0; a < f.size(); ++a) {
    const auto parent = support_reach(sup, a);
    for (std::size_t c = 0; c < f.size(); ++c) {
      if (parent[c] == -1) continue;
      const auto path = chain(parent, a, c);
      // Supported: a =>+ c -> t.
      for (auto t : f.targets_of(c)) {
        DerivedAttack d{f.id_at(a), f.id_at(t), AttackKind::Supported, {}};
        for (auto i : path) d.witness.push_back(f.id_at(i));
        d.witness.push_back(f.id_at(t));
        out.insert(std::move(d));
      }
      // Secondary: x -> a =>+ c, reported as x -> c.
      for (auto x : f.attackers_of(a)) {
        DerivedAttack d{f.id_at(x), f.id_at(c), AttackKind::Secondary, {f.id_at(x)}};
        for (auto i : path) d.witness.push_back(f.id_at(i));
        out.insert(std::move(d));
      }
    }
  }

  // One witness per (attacker, target, kind): keep the shortest, then smallest.
  std::vector<DerivedAttack> result;
  for (const auto& d : out) {
    if (!result.empty() && result.back().attacker == d.attacker && result.back().target == d.target &&
        result.back().kind == d.kind) {
      if (d.witness.size() < result.back().witness.size()) result.back() = d;
      continue;
    }
    result.push_back(d);
  }
  return result;
}

ArgumentationFramework baf_to_aaf(const BipolarFramework& b) {
  std::vector<IdPair> pairs;
  for (const auto& d : derived_attacks(b)) pairs.emplace_back(d.attacker, d.target);
  return ArgumentationFramework(b.base().arguments(), std::move(pairs));
}

AudienceOrder::AudienceOrder(std::vector<std::string> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].empty()) throw Error(ErrorCode::InvalidAudience, "empty value name in audience");
    if (!rank_.emplace(values_[i], i).second)
      throw Error(ErrorCode::InvalidAudience, "value '" + values_[i] + "' listed twice in audience");
  }
}

std::size_t AudienceOrder::rank(const std::string& value) const {
  auto it = rank_.find(value);
  if (it == rank_.end())
    throw Error(ErrorCode::UnrankedValue, "value '" + value + "' is not ranked by the audience");
  return it->second;
}

AudienceOrder AudienceOrder::reversed() const {
  return AudienceOrder(std::vector<std::string>(values_.rbegin(), values_.rend()));
}

ValuedFramework::ValuedFramework(ArgumentationFramework base, std::map<ArgId, std::string> value_of)
    : base_(std::move(base)), value_of_(std::move(value_of)) {
  for (const auto& [id, value] : value_of_) {
    if (!base_.contains(id))
      throw Error(ErrorCode::UnknownArgument, "value assigned to undeclared argument '" + id + "'");
    if (value.empty()) throw Error(ErrorCode::SchemaError, "argument '" + id + "' has an empty value");
  }
  for (const auto& a : base_.arguments())
    if (!value_of_.count(a.id))
      throw Error(ErrorCode::UnrankedValue, "argument '" + a.id + "' promotes no value");
}

const std::string& ValuedFramework::value(const ArgId& id) const {
  auto it = value_of_.find(id);
  if (it == value_of_.end()) throw Error(ErrorCode::UnknownArgument, "unknown argument '" + id + "'");
  return it->second;
}

std::vector<std::string> ValuedFramework::used_values() const {
  std::set<std::string> values;
  for (const auto& [id, v] : value_of_) values.insert(v);
  return {values.begin(), values.end()};
}

std::vector<IdPair> vaf_defeats(const ValuedFramework& v, const AudienceOrder& audience) {
  for (const auto& value : v.used_values()) audience.rank(value);
  std::vector<IdPair> out;
  for (const auto& [a, b] : v.base().attacks())
    if (!audience.prefers(v.value(b), v.value(a))) out.emplace_back(a, b);
  return out;
}

ArgumentationFramework vaf_to_aaf(const ValuedFramework& v, const AudienceOrder& audience) {
  return ArgumentationFramework(v.base().arguments(), vaf_defeats(v, audience));
}

}  // namespace argwb
