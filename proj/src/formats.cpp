#include "argwb/formats.hpp"

#include <cctype>
#include <sstream>

#include "argwb/error.hpp"
#include "argwb/json_io.hpp"

namespace argwb {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "tgf") return Format::Tgf;
  if (text == "apx") return Format::Apx;
  if (text == "json") return Format::Json;
  return std::nullopt;
}

std::optional<Format> format_from_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  return parse_format(path.substr(dot + 1));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::pair<std::string_view, std::string_view> split_first(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  return {line.substr(0, i), trim(line.substr(i))};
}

}  // namespace

ArgumentationFramework parse_tgf(std::string_view text) {
  std::vector<Argument> args;
  std::vector<IdPair> attacks;
  bool separator = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line == "#") {
      if (separator) throw Error(ErrorCode::BadLine, "line " + std::to_string(line_no) + ": second '#'", line_no);
      separator = true;
      continue;
    }
    auto [first, rest] = split_first(line);
    if (!separator) {
      if (!is_valid_id(std::string(first)))
        throw Error(ErrorCode::BadLine, "line " + std::to_string(line_no) + ": invalid node id", line_no);
      Argument a{std::string(first), std::nullopt, {}};
      if (!rest.empty()) a.label = std::string(rest);
      args.push_back(std::move(a));
    } else {
      auto [second, label] = split_first(rest);
      if (second.empty())
        throw Error(ErrorCode::BadLine, "line " + std::to_string(line_no) + ": edge needs two ids", line_no);
      attacks.emplace_back(std::string(first), std::string(second));
    }
  }
  if (!separator) throw Error(ErrorCode::MissingSeparator, "TGF input has no '#' separator line");
  return ArgumentationFramework(std::move(args), std::move(attacks));
}

std::string write_tgf(const ArgumentationFramework& f) {
  std::ostringstream out;
  for (const auto& a : f.arguments()) {
    out << a.id;
    if (a.label) out << ' ' << *a.label;
    out << '\n';
  }
  out << "#\n";
  for (const auto& [s, t] : f.attacks()) out << s << ' ' << t << '\n';
  return out.str();
}

namespace {

class ApxReader {
 public:
  explicit ApxReader(std::string_view text) : text_(text) {}

  ArgumentationFramework read() {
    std::vector<Argument> args;
    std::vector<IdPair> attacks;
    for (skip(); pos_ < text_.size(); skip()) {
      const std::size_t fact_pos = pos_;
      const std::string name = word();
      expect('(');
      const std::string first = word();
      if (name == "arg") {
        expect(')');
        expect('.');
        args.push_back(Argument{first, std::nullopt, {}});
      } else if (name == "att") {
        expect(',');
        const std::string second = word();
        expect(')');
        expect('.');
        attacks.emplace_back(first, second);
      } else {
        throw Error(ErrorCode::SyntaxError,
                    "unknown fact '" + name + "' at position " + std::to_string(fact_pos), fact_pos);
      }
    }
    return ArgumentationFramework(std::move(args), std::move(attacks));
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw Error(ErrorCode::SyntaxError,
                "expected " + expected + " at position " + std::to_string(pos_), pos_);
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' || c == '%') break;
      if (c == '.' && (pos_ + 1 >= text_.size() || std::isspace(static_cast<unsigned char>(text_[pos_ + 1])) ||
                       text_[pos_ + 1] == '%'))
        break;
      ++pos_;
    }
    if (pos_ == start) fail("identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ArgumentationFramework parse_apx(std::string_view text) { return ApxReader(text).read(); }

std::string write_apx(const ArgumentationFramework& f) {
  std::ostringstream out;
  for (const auto& a : f.arguments()) out << "arg(" << a.id << ").\n";
  for (const auto& [s, t] : f.attacks()) out << "att(" << s << ',' << t << ").\n";
  return out.str();
}

std::string format_extension(const IdSet& members) {
  std::string out = "[";
  for (const auto& id : members) out += (out.size() > 1 ? "," : "") + id;
  return out + "]";
}

std::string format_extension(const Extension& e) { return format_extension(e.members); }

Document read_document(std::string_view text, Format format) {
  switch (format) {
    case Format::Tgf: return document_from(parse_tgf(text));
    case Format::Apx: return document_from(parse_apx(text));
    case Format::Json: return parse_document(text);
  }
  return {};
}

std::string write_document(const Document& doc, Format format) {
  if (format == Format::Json) return serialize_document(doc);
  if (doc.kind != DocumentKind::Aaf)
    throw Error(ErrorCode::IncompatibleTask, "TGF and APX encode plain abstract frameworks only");
  const ArgumentationFramework f = to_aaf(doc);
  return format == Format::Tgf ? write_tgf(f) : write_apx(f);
}

}  // namespace argwb
