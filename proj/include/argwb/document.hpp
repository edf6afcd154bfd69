#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argwb/adf.hpp"
#include "argwb/framework.hpp"
#include "argwb/toulmin.hpp"
#include "argwb/variants.hpp"

namespace argwb {

enum class DocumentKind { Aaf, Baf, Vaf, Adf, CaseFile };
std::string_view to_string(DocumentKind kind);  // "aaf", "baf", ...
std::optional<DocumentKind> parse_kind(std::string_view text);

// Kind-independent argument record; which optional fields are allowed or
// required depends on the document kind.
struct ArgumentRecord {
  ArgId id;
  std::optional<std::string> label;
  std::optional<std::string> value;      // vaf: promoted value
  std::optional<std::string> condition;  // adf: acceptance condition text
  std::optional<bool> external;          // adf: declared truth of an external argument
  std::optional<ToulminArgument> toulmin;  // casefile (toulmin->id mirrors id)
  std::optional<std::string> party;      // casefile

  friend bool operator==(const ArgumentRecord&, const ArgumentRecord&) = default;
};

// Any framework kind in one editable, serialisable shape.
struct Document {
  DocumentKind kind = DocumentKind::Aaf;
  std::vector<ArgumentRecord> arguments;
  std::vector<IdPair> attacks;
  std::vector<IdPair> supports;         // baf only
  std::vector<std::string> value_order;  // vaf only, most preferred first

  const ArgumentRecord* find(const ArgId& id) const;
  ArgumentRecord* find(const ArgId& id);
  IdSet ids() const;

  friend bool operator==(const Document&, const Document&) = default;
};

// Sorts arguments and pairs, deduplicates pairs and rebuttals, and rewrites
// conditions in canonical ASCII form. Throws on unparsable conditions.
Document canonicalize(Document doc);

// Checks kind-specific field rules (SchemaError) and builds the typed
// framework to surface module validation errors.
void validate(const Document& doc);

ArgumentationFramework to_aaf(const Document& doc);  // aaf only
BipolarFramework to_baf(const Document& doc);
ValuedFramework to_vaf(const Document& doc);
DialecticalFramework to_adf(const Document& doc);
CaseFile to_case(const Document& doc);

// Document order unless overridden.
AudienceOrder audience_of(const Document& doc, const std::optional<AudienceOrder>& override_order);

// The plain framework on which Dung semantics are computed: the AAF itself,
// the BAF derived-attack reduction, the VAF defeat graph under the audience,
// or the flattened case file. Throws KindMismatch for ADF documents.
ArgumentationFramework reduce_to_aaf(const Document& doc,
                                     const std::optional<AudienceOrder>& override_order = std::nullopt);

Document document_from(const ArgumentationFramework& f);
Document document_from(const BipolarFramework& b);
Document document_from(const ValuedFramework& v, const AudienceOrder& order);
Document document_from(const DialecticalFramework& d);
Document document_from(const CaseFile& c);

}  // namespace argwb
