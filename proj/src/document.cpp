#include "argwb/document.hpp"

#include <algorithm>
#include <set>

#include "argwb/error.hpp"

namespace argwb {

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Aaf: return "aaf";
    case DocumentKind::Baf: return "baf";
    case DocumentKind::Vaf: return "vaf";
    case DocumentKind::Adf: return "adf";
    case DocumentKind::CaseFile: return "casefile";
  }
  return "?";
}

std::optional<DocumentKind> parse_kind(std::string_view text) {
  if (text == "aaf") return DocumentKind::Aaf;
  if (text == "baf") return DocumentKind::Baf;
  if (text == "vaf") return DocumentKind::Vaf;
  if (text == "adf") return DocumentKind::Adf;
  if (text == "casefile") return DocumentKind::CaseFile;
  return std::nullopt;
}

const ArgumentRecord* Document::find(const ArgId& id) const {
  for (const auto& a : arguments)
    if (a.id == id) return &a;
  return nullptr;
}

ArgumentRecord* Document::find(const ArgId& id) {
  for (auto& a : arguments)
    if (a.id == id) return &a;
  return nullptr;
}

IdSet Document::ids() const {
  IdSet out;
  for (const auto& a : arguments) out.insert(a.id);
  return out;
}

namespace {

void sort_unique(std::vector<IdPair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

[[noreturn]] void schema(const std::string& path, const std::string& reason) {
  throw Error(ErrorCode::SchemaError, path + ": " + reason);
}

std::vector<Argument> plain_arguments(const Document& doc) {
  std::vector<Argument> out;
  out.reserve(doc.arguments.size());
  for (const auto& a : doc.arguments) out.push_back(Argument{a.id, a.label, {}});
  return out;
}

void check_fields(const Document& doc) {
  const DocumentKind k = doc.kind;
  const std::string kind(to_string(k));
  for (std::size_t i = 0; i < doc.arguments.size(); ++i) {
    const auto& a = doc.arguments[i];
    const std::string path = "$.arguments[" + std::to_string(i) + "]";
    if (a.value && k != DocumentKind::Vaf) schema(path + ".value", "not allowed in a " + kind + " document");
    if (!a.value && k == DocumentKind::Vaf) schema(path + ".value", "required in a vaf document");
    if ((a.condition || a.external) && k != DocumentKind::Adf)
      schema(path, "condition/external only allowed in an adf document");
    if ((a.toulmin || a.party) && k != DocumentKind::CaseFile)
      schema(path, "toulmin only allowed in a casefile document");
    if (!a.toulmin && k == DocumentKind::CaseFile) schema(path + ".toulmin", "required in a casefile document");
  }
  if (!doc.supports.empty() && k != DocumentKind::Baf)
    schema("$.supports", "only allowed in a baf document");
  if (!doc.value_order.empty() && k != DocumentKind::Vaf)
    schema("$.value_order", "only allowed in a vaf document");
  if (!doc.attacks.empty() && (k == DocumentKind::Adf || k == DocumentKind::CaseFile))
    schema("$.attacks", std::string("must be empty in a ") + kind +
                            " document (relations live in " +
                            (k == DocumentKind::Adf ? "conditions" : "rebuttals") + ")");
}

}  // namespace

Document canonicalize(Document doc) {
  std::sort(doc.arguments.begin(), doc.arguments.end(),
            [](const ArgumentRecord& a, const ArgumentRecord& b) { return a.id < b.id; });
  sort_unique(doc.attacks);
  sort_unique(doc.supports);
  const IdSet declared = doc.ids();
  for (auto& a : doc.arguments) {
    if (a.condition) a.condition = serialize(parse_condition(*a.condition, declared));
    if (a.toulmin) {
      a.toulmin->id = a.id;
      auto& r = a.toulmin->rebuttals;
      std::sort(r.begin(), r.end());
      r.erase(std::unique(r.begin(), r.end()), r.end());
    }
  }
  return doc;
}

void validate(const Document& doc) {
  check_fields(doc);
  switch (doc.kind) {
    case DocumentKind::Aaf: to_aaf(doc); break;
    case DocumentKind::Baf: to_baf(doc); break;
    case DocumentKind::Vaf: {
      const ValuedFramework v = to_vaf(doc);
      if (!doc.value_order.empty()) {
        const AudienceOrder order(doc.value_order);
        for (const auto& value : v.used_values()) order.rank(value);
      }
      break;
    }
    case DocumentKind::Adf: to_adf(doc); break;
    case DocumentKind::CaseFile: flatten_toulmin(to_case(doc), false); break;
  }
}

ArgumentationFramework to_aaf(const Document& doc) {
  return ArgumentationFramework(plain_arguments(doc), doc.attacks);
}

BipolarFramework to_baf(const Document& doc) {
  return BipolarFramework(ArgumentationFramework(plain_arguments(doc), doc.attacks), doc.supports);
}

ValuedFramework to_vaf(const Document& doc) {
  std::map<ArgId, std::string> values;
  for (const auto& a : doc.arguments)
    if (a.value) values[a.id] = *a.value;
  return ValuedFramework(ArgumentationFramework(plain_arguments(doc), doc.attacks), std::move(values));
}

DialecticalFramework to_adf(const Document& doc) {
  const IdSet declared = doc.ids();
  std::map<ArgId, Condition> conditions;
  std::map<ArgId, bool> externals;
  for (const auto& a : doc.arguments) {
    if (a.condition) conditions.emplace(a.id, parse_condition(*a.condition, declared));
    if (a.external) externals.emplace(a.id, *a.external);
  }
  return DialecticalFramework(plain_arguments(doc), std::move(conditions), std::move(externals));
}

CaseFile to_case(const Document& doc) {
  CaseFile c;
  for (const auto& a : doc.arguments) {
    if (!a.toulmin) schema("$.arguments", "argument '" + a.id + "' has no toulmin structure");
    ToulminArgument t = *a.toulmin;
    t.id = a.id;
    c.arguments.push_back(std::move(t));
    if (a.party) c.party_of[a.id] = *a.party;
  }
  return c;
}

AudienceOrder audience_of(const Document& doc, const std::optional<AudienceOrder>& override_order) {
  if (override_order) return *override_order;
  return AudienceOrder(doc.value_order);
}

ArgumentationFramework reduce_to_aaf(const Document& doc, const std::optional<AudienceOrder>& override_order) {
  check_fields(doc);
  switch (doc.kind) {
    case DocumentKind::Aaf: return to_aaf(doc);
    case DocumentKind::Baf: return baf_to_aaf(to_baf(doc));
    case DocumentKind::Vaf: return vaf_to_aaf(to_vaf(doc), audience_of(doc, override_order));
    case DocumentKind::CaseFile: return flatten_toulmin(to_case(doc), false).framework;
    case DocumentKind::Adf:
      throw Error(ErrorCode::KindMismatch, "adf documents have no abstract attack graph");
  }
  return {};
}

Document document_from(const ArgumentationFramework& f) {
  Document doc;
  doc.kind = DocumentKind::Aaf;
  for (const auto& a : f.arguments()) doc.arguments.push_back(ArgumentRecord{.id = a.id, .label = a.label});
  doc.attacks = f.attacks();
  return doc;
}

Document document_from(const BipolarFramework& b) {
  Document doc = document_from(b.base());
  doc.kind = DocumentKind::Baf;
  doc.supports = b.supports();
  return doc;
}

Document document_from(const ValuedFramework& v, const AudienceOrder& order) {
  Document doc = document_from(v.base());
  doc.kind = DocumentKind::Vaf;
  for (auto& a : doc.arguments) a.value = v.value(a.id);
  doc.value_order = order.values();
  return doc;
}

Document document_from(const DialecticalFramework& d) {
  Document doc;
  doc.kind = DocumentKind::Adf;
  for (const auto& a : d.arguments()) {
    ArgumentRecord r{.id = a.id, .label = a.label};
    if (const Condition* c = d.condition(a.id)) r.condition = serialize(*c);
    r.external = d.external(a.id);
    doc.arguments.push_back(std::move(r));
  }
  return doc;
}

Document document_from(const CaseFile& c) {
  Document doc;
  doc.kind = DocumentKind::CaseFile;
  for (const auto& t : c.arguments) {
    ArgumentRecord r{.id = t.id};
    r.toulmin = t;
    if (auto it = c.party_of.find(t.id); it != c.party_of.end()) r.party = it->second;
    doc.arguments.push_back(std::move(r));
  }
  return canonicalize(std::move(doc));
}

}  // namespace argwb
