#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "argwb/document.hpp"
#include "argwb/explain.hpp"
#include "argwb/whatif.hpp"

namespace argwb {

using Json = nlohmann::ordered_json;

// Extended JSON document:
//   {"kind", "arguments":[{"id","label"?,"value"?,"condition"?,"external"?,"toulmin"?}],
//    "attacks":[[s,t]...], "supports":[[s,t]...]?, "value_order":[...]?}
// Throws SchemaError(path: reason) plus module validation errors.
Document parse_document(std::string_view text);
Document document_from_json(const Json& j);
// Canonical bytes: fixed key order, sorted arguments and pairs, one element
// per line, trailing newline. parse_document(serialize_document(d)) == d for
// canonical d, and serialize_document is a fixpoint on its own output.
std::string serialize_document(const Document& doc);
Json document_to_json(const Document& doc);

Json edit_to_json(const Edit& e);
Edit edit_from_json(const Json& j);
std::vector<Edit> edits_from_json(const Json& j);

Json to_json(const Extension& e);
Json to_json(const StatusReport& report);
Json to_json(const DisputeTree& tree);
Json to_json(const WhatIfDelta& delta);
Json to_json(const std::map<ArgId, ArgStatus>& statuses);

}  // namespace argwb
