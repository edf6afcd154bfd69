#include "argwb/adf.hpp"

#include <algorithm>
#include <cstdint>

#include "argwb/error.hpp"

namespace argwb {

DialecticalFramework::DialecticalFramework(std::vector<Argument> arguments,
                                           std::map<ArgId, Condition> conditions,
                                           std::map<ArgId, bool> externals)
    : conditions_(std::move(conditions)), externals_(std::move(externals)) {
  // Reuse the AAF constructor for id validation and ordering.
  arguments_ = ArgumentationFramework(std::move(arguments), {}).arguments();
  const IdSet declared = ids();

  for (const auto& [id, c] : conditions_) {
    if (!declared.count(id))
      throw Error(ErrorCode::UnknownArgument, "condition given for undeclared argument '" + id + "'");
    for (const auto& ref : c.references())
      if (!declared.count(ref))
        throw Error(ErrorCode::UndeclaredArgument,
                    "condition of '" + id + "' references undeclared argument '" + ref + "'");
  }
  for (const auto& [id, truth] : externals_) {
    if (!declared.count(id))
      throw Error(ErrorCode::UnknownArgument, "external truth given for undeclared argument '" + id + "'");
    auto it = conditions_.find(id);
    if (it == conditions_.end()) continue;
    if (!it->second.is_constant() || it->second.constant_value() != truth)
      throw Error(ErrorCode::ConflictingExternal,
                  "external argument '" + id + "' also has condition '" + serialize(it->second) + "'");
  }
  for (const auto& id : declared)
    if (!conditions_.count(id) && !externals_.count(id))
      throw Error(ErrorCode::MissingCondition, "argument '" + id + "' has no acceptance condition");
}

IdSet DialecticalFramework::ids() const {
  IdSet out;
  for (const auto& a : arguments_) out.insert(out.end(), a.id);
  return out;
}

bool DialecticalFramework::contains(const ArgId& id) const {
  return std::any_of(arguments_.begin(), arguments_.end(), [&](const Argument& a) { return a.id == id; });
}

const Condition* DialecticalFramework::condition(const ArgId& id) const {
  auto it = conditions_.find(id);
  return it == conditions_.end() ? nullptr : &it->second;
}

std::optional<bool> DialecticalFramework::external(const ArgId& id) const {
  auto it = externals_.find(id);
  if (it == externals_.end()) return std::nullopt;
  return it->second;
}

namespace {

TriAssignment initial_assignment(const DialecticalFramework& d) {
  TriAssignment v;
  for (const auto& a : d.arguments()) {
    auto ext = d.external(a.id);
    v.emplace(a.id, ext ? (*ext ? TriValue::T : TriValue::F) : TriValue::U);
  }
  return v;
}

}  // namespace

std::vector<AdfStep> adf_grounded_trace(const DialecticalFramework& d) {
  TriAssignment v = initial_assignment(d);
  std::vector<AdfStep> steps;
  for (const auto& [id, value] : v)
    if (value != TriValue::U) steps.push_back(AdfStep{id, value, 0});

  for (int round = 1;; ++round) {
    // Evaluate every open argument against the previous round's assignment.
    std::vector<std::pair<ArgId, TriValue>> commits;
    for (const auto& [id, value] : v) {
      if (value != TriValue::U) continue;
      const TriValue next = evaluate_condition(*d.condition(id), v);
      if (next != TriValue::U) commits.emplace_back(id, next);
    }
    if (commits.empty()) break;
    for (const auto& [id, value] : commits) {
      v[id] = value;
      steps.push_back(AdfStep{id, value, round});
    }
  }
  return steps;
}

TriAssignment adf_grounded(const DialecticalFramework& d) {
  TriAssignment v = initial_assignment(d);
  for (const auto& step : adf_grounded_trace(d)) v[step.id] = step.value;
  return v;
}

TriAssignment adf_grounded(const DialecticalFramework& d, const std::vector<ArgId>& schedule) {
  TriAssignment v = initial_assignment(d);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& id : schedule) {
      if (v.at(id) != TriValue::U || d.external(id)) continue;
      const TriValue next = evaluate_condition(*d.condition(id), v);
      if (next != TriValue::U) {
        v[id] = next;
        changed = true;
      }
    }
  }
  return v;
}

std::vector<TwoValuedModel> adf_two_valued_models(const DialecticalFramework& d,
                                                  std::size_t max_arguments) {
  if (d.size() > max_arguments || d.size() > 30)
    throw Error(ErrorCode::TooLarge, "two-valued model enumeration bound is " +
                                         std::to_string(std::min<std::size_t>(max_arguments, 30)) +
                                         " arguments; framework has " + std::to_string(d.size()));
  TwoValuedModel base;
  std::vector<ArgId> open;
  for (const auto& a : d.arguments()) {
    if (auto ext = d.external(a.id)) base.emplace(a.id, *ext);
    else open.push_back(a.id);
  }

  std::vector<TwoValuedModel> models;
  const std::uint64_t count = std::uint64_t{1} << open.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    TwoValuedModel m = base;
    for (std::size_t i = 0; i < open.size(); ++i) m[open[i]] = (bits >> i) & 1u;
    const bool fixed = std::all_of(open.begin(), open.end(), [&](const ArgId& id) {
      return evaluate_classical(*d.condition(id), m) == m.at(id);
    });
    if (fixed) models.push_back(std::move(m));
  }
  std::sort(models.begin(), models.end());
  return models;
}

DialecticalFramework aaf_as_adf(const ArgumentationFramework& f) {
  std::map<ArgId, Condition> conditions;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::optional<Condition> c;
    for (auto b : f.attackers_of(i)) {
      Condition lit = Condition::negate(Condition::ref(f.id_at(b)));
      c = c ? Condition::conj(std::move(*c), std::move(lit)) : std::move(lit);
    }
    conditions.emplace(f.id_at(i), c ? std::move(*c) : Condition::constant(true));
  }
  return DialecticalFramework(f.arguments(), std::move(conditions), {});
}

}  // namespace argwb
