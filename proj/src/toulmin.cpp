#include "argwb/toulmin.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "argwb/error.hpp"

namespace argwb {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MissingWarrant: return "MissingWarrant";
    case ViolationKind::EmptyPremises: return "EmptyPremises";
    case ViolationKind::MissingBacking: return "MissingBacking";
    case ViolationKind::DanglingRebuttal: return "DanglingRebuttal";
    case ViolationKind::DuplicateId: return "DuplicateId";
  }
  return "?";
}

namespace {

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); });
}

bool structural(ViolationKind k) {
  return k == ViolationKind::DanglingRebuttal || k == ViolationKind::DuplicateId;
}

}  // namespace

std::vector<Violation> validate_toulmin(const CaseFile& c, bool require_backing) {
  std::vector<Violation> out;
  std::set<ArgId> ids;
  for (const auto& a : c.arguments)
    if (!ids.insert(a.id).second) out.push_back({ViolationKind::DuplicateId, a.id, {}});

  for (const auto& a : c.arguments) {
    if (blank(a.warrant)) out.push_back({ViolationKind::MissingWarrant, a.id, {}});
    const bool no_premises =
        std::all_of(a.premises.begin(), a.premises.end(), [](const std::string& p) { return blank(p); });
    if (no_premises) out.push_back({ViolationKind::EmptyPremises, a.id, {}});
    if (require_backing && (!a.backing || blank(*a.backing)))
      out.push_back({ViolationKind::MissingBacking, a.id, {}});
    for (const auto& r : a.rebuttals)
      if (!ids.count(r)) out.push_back({ViolationKind::DanglingRebuttal, a.id, r});
  }
  return out;
}

FlattenResult flatten_toulmin(const CaseFile& c, bool require_backing) {
  const auto violations = validate_toulmin(c, require_backing);
  std::string structural_errors;
  std::set<ArgId> rejected;
  FlattenResult result;
  for (const auto& v : violations) {
    if (structural(v.kind)) {
      structural_errors += std::string(structural_errors.empty() ? "" : "; ") +
                           std::string(to_string(v.kind)) + "(" + v.id +
                           (v.referent.empty() ? "" : " -> " + v.referent) + ")";
    } else {
      rejected.insert(v.id);
      result.excluded.push_back(v);
    }
  }
  if (!structural_errors.empty()) throw Error(ErrorCode::InvalidCase, "invalid case: " + structural_errors);

  std::vector<Argument> args;
  std::vector<IdPair> attacks;
  for (const auto& a : c.arguments) {
    if (rejected.count(a.id)) continue;
    Argument arg{a.id, a.claim, {}};
    if (auto it = c.party_of.find(a.id); it != c.party_of.end()) arg.metadata["party"] = it->second;
    args.push_back(std::move(arg));
    for (const auto& r : a.rebuttals)
      if (!rejected.count(r)) attacks.emplace_back(r, a.id);
  }
  result.framework = ArgumentationFramework(std::move(args), std::move(attacks));
  return result;
}

CaseFile case_from_framework(const ArgumentationFramework& f) {
  CaseFile c;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& a = f.arguments()[i];
    ToulminArgument t;
    t.id = a.id;
    t.claim = a.label.value_or(a.id);
    t.premises = {"premise of " + a.id};
    t.warrant = "warrant of " + a.id;
    for (auto b : f.attackers_of(i)) t.rebuttals.push_back(f.id_at(b));
    c.arguments.push_back(std::move(t));
  }
  return c;
}

}  // namespace argwb
