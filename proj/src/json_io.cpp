#include "argwb/json_io.hpp"

#include <set>
#include <sstream>

#include "argwb/error.hpp"

namespace argwb {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& reason) {
  throw Error(ErrorCode::SchemaError, path + ": " + reason);
}

void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) schema(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) schema(path + "." + key, "unknown key");
  }
}

std::string get_string(const Json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) schema(path + "." + key, "missing");
  if (!it->is_string()) schema(path + "." + key, "expected a string");
  return it->get<std::string>();
}

std::optional<std::string> opt_string(const Json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) return std::nullopt;
  return get_string(j, key, path);
}

std::vector<std::string> string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) schema(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

IdPair pair_from(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    schema(path, "expected a [source, target] pair of strings");
  return {j[0].get<std::string>(), j[1].get<std::string>()};
}

std::vector<IdPair> pair_list(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of pairs");
  std::vector<IdPair> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(pair_from(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Json pair_json(const IdPair& p) { return Json::array({p.first, p.second}); }

Json pairs_json(const std::vector<IdPair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back(pair_json(p));
  return out;
}

Json ids_json(const std::vector<ArgId>& ids) { return Json(ids); }
Json ids_json(const IdSet& ids) { return Json(std::vector<ArgId>(ids.begin(), ids.end())); }

ToulminArgument toulmin_from(const Json& j, const std::string& path, std::optional<std::string>& party) {
  only_keys(j, path, {"claim", "qualifier", "premises", "warrant", "backing", "rebuttals", "party"});
  ToulminArgument t;
  t.claim = get_string(j, "claim", path);
  if (auto q = opt_string(j, "qualifier", path)) t.qualifier = *q;
  if (!j.contains("premises")) schema(path + ".premises", "missing");
  t.premises = string_list(j["premises"], path + ".premises");
  t.warrant = j.contains("warrant") ? get_string(j, "warrant", path) : std::string();
  t.backing = opt_string(j, "backing", path);
  if (j.contains("rebuttals")) t.rebuttals = string_list(j["rebuttals"], path + ".rebuttals");
  party = opt_string(j, "party", path);
  return t;
}

Json toulmin_json(const ToulminArgument& t, const std::optional<std::string>& party) {
  Json j = Json::object();
  j["claim"] = t.claim;
  j["qualifier"] = t.qualifier;
  j["premises"] = t.premises;
  j["warrant"] = t.warrant;
  if (t.backing) j["backing"] = *t.backing;
  j["rebuttals"] = t.rebuttals;
  if (party) j["party"] = *party;
  return j;
}

ArgumentRecord record_from(const Json& j, const std::string& path) {
  only_keys(j, path, {"id", "label", "value", "condition", "external", "toulmin"});
  ArgumentRecord r;
  r.id = get_string(j, "id", path);
  r.label = opt_string(j, "label", path);
  r.value = opt_string(j, "value", path);
  r.condition = opt_string(j, "condition", path);
  if (j.contains("external")) {
    if (!j["external"].is_boolean()) schema(path + ".external", "expected a boolean");
    r.external = j["external"].get<bool>();
  }
  if (j.contains("toulmin")) {
    r.toulmin = toulmin_from(j["toulmin"], path + ".toulmin", r.party);
    r.toulmin->id = r.id;
  }
  return r;
}

Json record_json(const ArgumentRecord& r) {
  Json j = Json::object();
  j["id"] = r.id;
  if (r.label) j["label"] = *r.label;
  if (r.value) j["value"] = *r.value;
  if (r.condition) j["condition"] = *r.condition;
  if (r.external) j["external"] = *r.external;
  if (r.toulmin) j["toulmin"] = toulmin_json(*r.toulmin, r.party);
  return j;
}

// One element per line inside an indented array.
void write_array(std::ostringstream& out, const char* key, const std::vector<Json>& items, bool last) {
  out << "  \"" << key << "\": ";
  if (items.empty()) {
    out << "[]";
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < items.size(); ++i)
      out << "    " << items[i].dump() << (i + 1 < items.size() ? ",\n" : "\n");
    out << "  ]";
  }
  out << (last ? "\n" : ",\n");
}

const char* role_name(Role r) { return r == Role::Proponent ? "proponent" : "opponent"; }

Json node_json(const DisputeNode& n) {
  Json j = Json::object();
  j["argument"] = n.argument;
  j["role"] = role_name(n.role);
  j["won"] = n.won;
  Json children = Json::array();
  for (const auto& c : n.children) children.push_back(node_json(c));
  j["children"] = std::move(children);
  return j;
}

Json status_json(const ArgStatus& s) {
  Json j = Json::object();
  j["label"] = to_string(s.label);
  j["credulous"] = s.credulous;
  j["skeptical"] = s.skeptical;
  return j;
}

}  // namespace

Document document_from_json(const Json& j) {
  only_keys(j, "$", {"kind", "arguments", "attacks", "supports", "value_order"});
  Document doc;
  const std::string kind = get_string(j, "kind", "$");
  auto k = parse_kind(kind);
  if (!k) schema("$.kind", "unknown kind '" + kind + "'");
  doc.kind = *k;

  if (!j.contains("arguments")) schema("$.arguments", "missing");
  const Json& args = j["arguments"];
  if (!args.is_array()) schema("$.arguments", "expected an array");
  for (std::size_t i = 0; i < args.size(); ++i)
    doc.arguments.push_back(record_from(args[i], "$.arguments[" + std::to_string(i) + "]"));
  if (j.contains("attacks")) doc.attacks = pair_list(j["attacks"], "$.attacks");
  if (j.contains("supports")) doc.supports = pair_list(j["supports"], "$.supports");
  if (j.contains("value_order")) doc.value_order = string_list(j["value_order"], "$.value_order");

  doc = canonicalize(std::move(doc));
  validate(doc);
  return doc;
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema("$", std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

Json document_to_json(const Document& in) {
  const Document doc = canonicalize(in);
  Json j = Json::object();
  j["kind"] = to_string(doc.kind);
  Json args = Json::array();
  for (const auto& a : doc.arguments) args.push_back(record_json(a));
  j["arguments"] = std::move(args);
  j["attacks"] = pairs_json(doc.attacks);
  if (doc.kind == DocumentKind::Baf) j["supports"] = pairs_json(doc.supports);
  if (doc.kind == DocumentKind::Vaf) j["value_order"] = doc.value_order;
  return j;
}

std::string serialize_document(const Document& in) {
  const Json j = document_to_json(in);
  std::ostringstream out;
  out << "{\n  \"kind\": " << j["kind"].dump() << ",\n";
  const bool baf = j.contains("supports");
  const bool vaf = j.contains("value_order");
  write_array(out, "arguments", std::vector<Json>(j["arguments"].begin(), j["arguments"].end()), false);
  write_array(out, "attacks", std::vector<Json>(j["attacks"].begin(), j["attacks"].end()), !baf && !vaf);
  if (baf) write_array(out, "supports", std::vector<Json>(j["supports"].begin(), j["supports"].end()), true);
  if (vaf) out << "  \"value_order\": " << j["value_order"].dump() << "\n";
  out << "}\n";
  return out.str();
}

Json edit_to_json(const Edit& e) {
  Json j = Json::object();
  j["op"] = to_string(e.op);
  switch (e.op) {
    case EditOp::AddArgument: j["argument"] = record_json(e.argument); break;
    case EditOp::RemoveArgument: j["id"] = e.id; break;
    case EditOp::AddAttack:
    case EditOp::RemoveAttack:
    case EditOp::AddSupport:
    case EditOp::RemoveSupport:
      j["source"] = e.pair.first;
      j["target"] = e.pair.second;
      break;
    case EditOp::SetValueOrder: j["order"] = e.order; break;
    case EditOp::SetExternal:
      j["id"] = e.id;
      j["value"] = e.external ? Json(*e.external) : Json(nullptr);
      break;
  }
  return j;
}

Edit edit_from_json(const Json& j) {
  if (!j.is_object()) schema("$", "expected an edit object");
  const std::string op_name = get_string(j, "op", "$");
  auto op = parse_edit_op(op_name);
  if (!op) schema("$.op", "unknown edit '" + op_name + "'");
  Edit e;
  e.op = *op;
  switch (e.op) {
    case EditOp::AddArgument:
      only_keys(j, "$", {"op", "argument"});
      if (!j.contains("argument")) schema("$.argument", "missing");
      e.argument = record_from(j["argument"], "$.argument");
      break;
    case EditOp::RemoveArgument:
      only_keys(j, "$", {"op", "id"});
      e.id = get_string(j, "id", "$");
      break;
    case EditOp::AddAttack:
    case EditOp::RemoveAttack:
    case EditOp::AddSupport:
    case EditOp::RemoveSupport:
      only_keys(j, "$", {"op", "source", "target"});
      e.pair = {get_string(j, "source", "$"), get_string(j, "target", "$")};
      break;
    case EditOp::SetValueOrder:
      only_keys(j, "$", {"op", "order"});
      if (!j.contains("order")) schema("$.order", "missing");
      e.order = string_list(j["order"], "$.order");
      break;
    case EditOp::SetExternal:
      only_keys(j, "$", {"op", "id", "value"});
      e.id = get_string(j, "id", "$");
      if (!j.contains("value")) schema("$.value", "missing (use null to clear)");
      if (j["value"].is_boolean()) e.external = j["value"].get<bool>();
      else if (!j["value"].is_null()) schema("$.value", "expected a boolean or null");
      break;
  }
  return e;
}

std::vector<Edit> edits_from_json(const Json& j) {
  if (!j.is_array()) schema("$", "expected an array of edits");
  std::vector<Edit> out;
  for (const auto& e : j) out.push_back(edit_from_json(e));
  return out;
}

Json to_json(const Extension& e) { return ids_json(e.members); }

Json to_json(const StatusReport& report) {
  Json j = Json::object();
  j["semantics"] = to_string(report.semantics);
  j["kind"] = report.adf ? "adf" : "aaf";
  Json exts = Json::array();
  for (const auto& e : report.extensions) exts.push_back(to_json(e));
  j["extensions"] = std::move(exts);
  j["no_stable_extension"] = report.no_stable_extension;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json a = Json::object();
    a["id"] = e.id;
    if (e.label) a["label"] = *e.label;
    a["status"] = to_string(e.status);
    a["credulous"] = e.credulous;
    a["skeptical"] = e.skeptical;
    a["defeaters"] = ids_json(e.defeaters);
    a["defenders"] = ids_json(e.defenders);
    if (e.truth) a["truth"] = to_string(*e.truth);
    if (e.condition) a["condition"] = *e.condition;
    if (e.external) a["external"] = *e.external;
    if (report.adf) a["parents"] = ids_json(e.parents);
    entries.push_back(std::move(a));
  }
  j["arguments"] = std::move(entries);
  return j;
}

Json to_json(const DisputeTree& tree) {
  Json j = Json::object();
  j["root"] = node_json(tree.root);
  j["proponent_wins"] = tree.proponent_wins;
  j["unanswered"] = ids_json(tree.unanswered);
  return j;
}

Json to_json(const std::map<ArgId, ArgStatus>& statuses) {
  Json j = Json::object();
  for (const auto& [id, s] : statuses) j[id] = status_json(s);
  return j;
}

Json to_json(const WhatIfDelta& delta) {
  Json j = Json::object();
  j["semantics"] = to_string(delta.semantics);
  Json edits = Json::array();
  for (const auto& e : delta.edits) edits.push_back(edit_to_json(e));
  j["edits"] = std::move(edits);
  j["changed"] = ids_json(delta.changed);
  j["before"] = to_json(delta.before);
  j["after"] = to_json(delta.after);
  j["relation_before"] = pairs_json(delta.relation_before);
  j["relation_after"] = pairs_json(delta.relation_after);
  return j;
}

}  // namespace argwb
