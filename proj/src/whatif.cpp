#include "argwb/whatif.hpp"

#include <algorithm>

#include "argwb/adf.hpp"
#include "argwb/error.hpp"

namespace argwb {

std::string_view to_string(EditOp op) {
  switch (op) {
    case EditOp::AddArgument: return "add_argument";
    case EditOp::RemoveArgument: return "remove_argument";
    case EditOp::AddAttack: return "add_attack";
    case EditOp::RemoveAttack: return "remove_attack";
    case EditOp::AddSupport: return "add_support";
    case EditOp::RemoveSupport: return "remove_support";
    case EditOp::SetValueOrder: return "set_value_order";
    case EditOp::SetExternal: return "set_external";
  }
  return "?";
}

std::optional<EditOp> parse_edit_op(std::string_view text) {
  for (auto op : {EditOp::AddArgument, EditOp::RemoveArgument, EditOp::AddAttack, EditOp::RemoveAttack,
                  EditOp::AddSupport, EditOp::RemoveSupport, EditOp::SetValueOrder, EditOp::SetExternal})
    if (to_string(op) == text) return op;
  return std::nullopt;
}

namespace {

[[noreturn]] void conflict(const std::string& what) { throw Error(ErrorCode::EditConflict, what); }

[[noreturn]] void mismatch(EditOp op, DocumentKind kind) {
  throw Error(ErrorCode::KindMismatch, std::string(to_string(op)) + " is not applicable to a " +
                                           std::string(to_string(kind)) + " document");
}

std::string pair_text(const IdPair& p) { return "(" + p.first + "," + p.second + ")"; }

void require_argument(const Document& doc, const ArgId& id) {
  if (!doc.find(id)) conflict("argument '" + id + "' does not exist");
}

void add_pair(std::vector<IdPair>& pairs, const IdPair& p, const char* what) {
  if (std::find(pairs.begin(), pairs.end(), p) != pairs.end())
    conflict(std::string(what) + " " + pair_text(p) + " already exists");
  pairs.push_back(p);
}

void remove_pair(std::vector<IdPair>& pairs, const IdPair& p, const char* what) {
  auto it = std::find(pairs.begin(), pairs.end(), p);
  if (it == pairs.end()) conflict(std::string(what) + " " + pair_text(p) + " does not exist");
  pairs.erase(it);
}

std::vector<ArgId>& rebuttals_of(Document& doc, const ArgId& target) {
  ArgumentRecord* r = doc.find(target);
  if (!r || !r->toulmin) conflict("argument '" + target + "' does not exist");
  return r->toulmin->rebuttals;
}

Document mutate(const Document& doc, const Edit& e) {
  Document out = doc;
  const DocumentKind kind = doc.kind;
  switch (e.op) {
    case EditOp::AddArgument: {
      if (doc.find(e.argument.id)) conflict("argument '" + e.argument.id + "' already exists");
      ArgumentRecord r = e.argument;
      if (r.toulmin) r.toulmin->id = r.id;
      out.arguments.push_back(std::move(r));
      break;
    }
    case EditOp::RemoveArgument: {
      require_argument(doc, e.id);
      if (kind == DocumentKind::Adf) {
        const IdSet declared = doc.ids();
        for (const auto& a : doc.arguments) {
          if (a.id == e.id || !a.condition) continue;
          if (parse_condition(*a.condition, declared).references().count(e.id))
            conflict("argument '" + e.id + "' is referenced by the condition of '" + a.id + "'");
        }
      }
      std::erase_if(out.arguments, [&](const ArgumentRecord& a) { return a.id == e.id; });
      auto touches = [&](const IdPair& p) { return p.first == e.id || p.second == e.id; };
      std::erase_if(out.attacks, touches);
      std::erase_if(out.supports, touches);
      for (auto& a : out.arguments)
        if (a.toulmin) std::erase(a.toulmin->rebuttals, e.id);
      break;
    }
    case EditOp::AddAttack:
    case EditOp::RemoveAttack: {
      if (kind == DocumentKind::Adf) mismatch(e.op, kind);
      require_argument(doc, e.pair.first);
      require_argument(doc, e.pair.second);
      const bool add = e.op == EditOp::AddAttack;
      if (kind == DocumentKind::CaseFile) {
        auto& reb = rebuttals_of(out, e.pair.second);
        const bool present = std::find(reb.begin(), reb.end(), e.pair.first) != reb.end();
        if (add && present) conflict("attack " + pair_text(e.pair) + " already exists");
        if (!add && !present) conflict("attack " + pair_text(e.pair) + " does not exist");
        if (add) reb.push_back(e.pair.first);
        else std::erase(reb, e.pair.first);
      } else if (add) {
        add_pair(out.attacks, e.pair, "attack");
      } else {
        remove_pair(out.attacks, e.pair, "attack");
      }
      break;
    }
    case EditOp::AddSupport:
    case EditOp::RemoveSupport: {
      if (kind != DocumentKind::Baf) mismatch(e.op, kind);
      require_argument(doc, e.pair.first);
      require_argument(doc, e.pair.second);
      if (e.op == EditOp::AddSupport) add_pair(out.supports, e.pair, "support");
      else remove_pair(out.supports, e.pair, "support");
      break;
    }
    case EditOp::SetValueOrder:
      if (kind != DocumentKind::Vaf) mismatch(e.op, kind);
      out.value_order = e.order;
      break;
    case EditOp::SetExternal: {
      if (kind != DocumentKind::Adf) mismatch(e.op, kind);
      require_argument(doc, e.id);
      out.find(e.id)->external = e.external;
      break;
    }
  }
  return out;
}

ArgStatus status_from(TriValue v) {
  const bool t = v == TriValue::T;
  return ArgStatus{t ? Label::In : v == TriValue::F ? Label::Out : Label::Undec, t, t};
}

}  // namespace

Document apply_edit(const Document& doc, const Edit& edit) {
  Document out = mutate(doc, edit);
  try {
    out = canonicalize(std::move(out));
    validate(out);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::KindMismatch || err.code() == ErrorCode::EditConflict) throw;
    conflict(std::string(to_string(edit.op)) + " leaves the document invalid: " + err.what());
  }
  return out;
}

Document apply_edits(const Document& doc, const std::vector<Edit>& edits) {
  Document cur = doc;
  for (const auto& e : edits) cur = apply_edit(cur, e);
  return cur;
}

std::vector<Edit> inverse_edits(const Document& doc, const std::vector<Edit>& edits) {
  std::vector<std::vector<Edit>> steps;
  Document cur = doc;
  for (const auto& e : edits) {
    std::vector<Edit> inv;
    switch (e.op) {
      case EditOp::AddArgument:
        inv.push_back(Edit{.op = EditOp::RemoveArgument, .id = e.argument.id});
        break;
      case EditOp::RemoveArgument: {
        ArgumentRecord rec = *cur.find(e.id);
        // Self-rebuttals and self-attacks are restored with the record or below.
        inv.push_back(Edit{.op = EditOp::AddArgument, .argument = rec});
        for (const auto& p : cur.attacks)
          if (p.first == e.id || p.second == e.id) inv.push_back(Edit{.op = EditOp::AddAttack, .pair = p});
        for (const auto& p : cur.supports)
          if (p.first == e.id || p.second == e.id) inv.push_back(Edit{.op = EditOp::AddSupport, .pair = p});
        for (const auto& a : cur.arguments) {
          if (a.id == e.id || !a.toulmin) continue;
          const auto& r = a.toulmin->rebuttals;
          if (std::find(r.begin(), r.end(), e.id) != r.end())
            inv.push_back(Edit{.op = EditOp::AddAttack, .pair = {e.id, a.id}});
        }
        break;
      }
      case EditOp::AddAttack: inv.push_back(Edit{.op = EditOp::RemoveAttack, .pair = e.pair}); break;
      case EditOp::RemoveAttack: inv.push_back(Edit{.op = EditOp::AddAttack, .pair = e.pair}); break;
      case EditOp::AddSupport: inv.push_back(Edit{.op = EditOp::RemoveSupport, .pair = e.pair}); break;
      case EditOp::RemoveSupport: inv.push_back(Edit{.op = EditOp::AddSupport, .pair = e.pair}); break;
      case EditOp::SetValueOrder:
        inv.push_back(Edit{.op = EditOp::SetValueOrder, .order = cur.value_order});
        break;
      case EditOp::SetExternal: {
        const ArgumentRecord* r = cur.find(e.id);
        inv.push_back(Edit{.op = EditOp::SetExternal, .id = e.id, .external = r ? r->external : std::nullopt});
        break;
      }
    }
    cur = apply_edit(cur, e);
    steps.push_back(std::move(inv));
  }
  std::vector<Edit> out;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

std::map<ArgId, ArgStatus> evaluate_statuses(const Document& doc, const EvaluationConfig& config) {
  std::map<ArgId, ArgStatus> out;
  if (doc.kind == DocumentKind::Adf) {
    if (config.semantics != Semantics::Grounded)
      throw Error(ErrorCode::IncompatibleTask, "adf documents support grounded semantics only");
    for (const auto& [id, v] : adf_grounded(to_adf(doc))) out.emplace(id, status_from(v));
    return out;
  }
  const ArgumentationFramework f = reduce_to_aaf(doc, config.audience);
  const Labelling grounded = grounded_labelling(f);
  const auto extensions = enumerate_extensions(f, config.semantics);
  for (const auto& [id, label] : grounded) {
    auto member = [&](const Extension& x) { return x.members.count(id) != 0; };
    out.emplace(id, ArgStatus{label, std::any_of(extensions.begin(), extensions.end(), member),
                              std::all_of(extensions.begin(), extensions.end(), member)});
  }
  return out;
}

std::vector<IdPair> effective_attacks(const Document& doc, const EvaluationConfig& config) {
  if (doc.kind == DocumentKind::Adf) return {};
  return reduce_to_aaf(doc, config.audience).attacks();
}

WhatIfDelta what_if(const Document& doc, const std::vector<Edit>& edits, const EvaluationConfig& config) {
  WhatIfDelta d;
  d.edits = edits;
  d.semantics = config.semantics;
  const Document edited = apply_edits(doc, edits);
  d.before = evaluate_statuses(doc, config);
  d.after = evaluate_statuses(edited, config);
  d.relation_before = effective_attacks(doc, config);
  d.relation_after = effective_attacks(edited, config);
  for (const auto& [id, s] : d.before) {
    auto it = d.after.find(id);
    if (it == d.after.end() || !(it->second == s)) d.changed.insert(id);
  }
  for (const auto& [id, s] : d.after)
    if (!d.before.count(id)) d.changed.insert(id);
  return d;
}

}  // namespace argwb
