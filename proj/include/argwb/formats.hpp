#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "argwb/document.hpp"
#include "argwb/framework.hpp"
#include "argwb/semantics.hpp"

namespace argwb {

enum class Format { Tgf, Apx, Json };
std::optional<Format> parse_format(std::string_view text);
// By file extension (.tgf, .apx, .json).
std::optional<Format> format_from_path(std::string_view path);

// Trivial graph format: node lines `id [label]`, a lone `#`, edge lines `src dst`.
// Throws MissingSeparator, BadLine (1-based line), UnknownArgumentInAttack.
ArgumentationFramework parse_tgf(std::string_view text);
std::string write_tgf(const ArgumentationFramework& f);

// `arg(x).` and `att(x,y).` facts in any order; `%` starts a comment.
// Throws SyntaxError (byte offset), UnknownArgumentInAttack.
ArgumentationFramework parse_apx(std::string_view text);
std::string write_apx(const ArgumentationFramework& f);

// `[a,b,c]`, members sorted, no spaces.
std::string format_extension(const IdSet& members);
std::string format_extension(const Extension& e);

// Reads any supported format into a Document (TGF/APX yield AAF documents).
Document read_document(std::string_view text, Format format);
// Canonical text; TGF/APX only for AAF documents (IncompatibleTask otherwise).
std::string write_document(const Document& doc, Format format);

}  // namespace argwb
