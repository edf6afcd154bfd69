#include "argwb/condition.hpp"

#include <cctype>

#include "argwb/error.hpp"

namespace argwb {

std::string_view to_string(TriValue v) {
  switch (v) {
    case TriValue::T: return "T";
    case TriValue::F: return "F";
    case TriValue::U: return "U";
  }
  return "?";
}

Condition Condition::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = value;
  return Condition(std::move(n));
}

Condition Condition::ref(ArgId id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ref;
  n->name = std::move(id);
  return Condition(std::move(n));
}

Condition Condition::negate(Condition operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->lhs = std::make_shared<const Condition>(std::move(operand));
  return Condition(std::move(n));
}

Condition Condition::conj(Condition lhs, Condition rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->lhs = std::make_shared<const Condition>(std::move(lhs));
  n->rhs = std::make_shared<const Condition>(std::move(rhs));
  return Condition(std::move(n));
}

Condition Condition::disj(Condition lhs, Condition rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->lhs = std::make_shared<const Condition>(std::move(lhs));
  n->rhs = std::make_shared<const Condition>(std::move(rhs));
  return Condition(std::move(n));
}

bool operator==(const Condition& a, const Condition& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Condition::Kind::Constant: return a.constant_value() == b.constant_value();
    case Condition::Kind::Ref: return a.name() == b.name();
    case Condition::Kind::Not: return a.operand() == b.operand();
    case Condition::Kind::And:
    case Condition::Kind::Or: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

IdSet Condition::references() const {
  IdSet pos, neg;
  polarity(pos, neg);
  pos.merge(neg);
  return pos;
}

void Condition::polarity(IdSet& positive, IdSet& negative) const {
  switch (kind()) {
    case Kind::Constant: return;
    case Kind::Ref: positive.insert(name()); return;
    case Kind::Not: operand().polarity(negative, positive); return;
    case Kind::And:
    case Kind::Or:
      lhs().polarity(positive, negative);
      rhs().polarity(positive, negative);
      return;
  }
}

namespace {

enum class Tok { Ident, True, False, Not, And, Or, LParen, RParen, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const IdSet& declared) : text_(text), declared_(declared) {
    advance();
  }

  Condition parse() {
    Condition c = parse_or();
    if (tok_.type != Tok::End) fail("operator or end of input");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw Error(ErrorCode::SyntaxError,
                "syntax error at position " + std::to_string(tok_.pos) + ": expected " + expected,
                tok_.pos);
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  bool at_operator_char() const {
    const char c = text_[pos_];
    return c == '(' || c == ')' || c == '!' || c == '&' || c == '|' || starts_with("¬") ||
           starts_with("∧") || starts_with("∨");
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_ = Token{Tok::End, {}, pos_};
    if (pos_ >= text_.size()) return;

    struct Sym {
      std::string_view spelling;
      Tok type;
    };
    static constexpr Sym kSymbols[] = {
        {"(", Tok::LParen},      {")", Tok::RParen},      {"!", Tok::Not},
        {"&", Tok::And},         {"|", Tok::Or},          {"¬", Tok::Not},
        {"∧", Tok::And},    {"∨", Tok::Or},
    };
    for (const auto& s : kSymbols) {
      if (starts_with(s.spelling)) {
        tok_.type = s.type;
        tok_.text = s.spelling;
        pos_ += s.spelling.size();
        return;
      }
    }

    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           !at_operator_char())
      ++pos_;
    tok_.text = std::string(text_.substr(start, pos_ - start));
    if (tok_.text == "true") tok_.type = Tok::True;
    else if (tok_.text == "false") tok_.type = Tok::False;
    else if (tok_.text == "not") tok_.type = Tok::Not;
    else if (tok_.text == "and") tok_.type = Tok::And;
    else if (tok_.text == "or") tok_.type = Tok::Or;
    else tok_.type = Tok::Ident;
  }

  Condition parse_or() {
    Condition lhs = parse_and();
    while (tok_.type == Tok::Or) {
      advance();
      lhs = Condition::disj(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Condition parse_and() {
    Condition lhs = parse_not();
    while (tok_.type == Tok::And) {
      advance();
      lhs = Condition::conj(std::move(lhs), parse_not());
    }
    return lhs;
  }

  Condition parse_not() {
    if (tok_.type == Tok::Not) {
      advance();
      return Condition::negate(parse_not());
    }
    return parse_atom();
  }

  Condition parse_atom() {
    switch (tok_.type) {
      case Tok::LParen: {
        advance();
        Condition inner = parse_or();
        if (tok_.type != Tok::RParen) fail("')'");
        advance();
        return inner;
      }
      case Tok::True: advance(); return Condition::constant(true);
      case Tok::False: advance(); return Condition::constant(false);
      case Tok::Ident: {
        if (!declared_.count(tok_.text))
          throw Error(ErrorCode::UndeclaredArgument,
                      "condition references undeclared argument '" + tok_.text + "'", tok_.pos);
        Condition c = Condition::ref(tok_.text);
        advance();
        return c;
      }
      default: fail("identifier, constant, negation or '('");
    }
  }

  std::string_view text_;
  const IdSet& declared_;
  std::size_t pos_ = 0;
  Token tok_;
};

int precedence(const Condition& c) {
  switch (c.kind()) {
    case Condition::Kind::Or: return 1;
    case Condition::Kind::And: return 2;
    case Condition::Kind::Not: return 3;
    default: return 4;
  }
}

std::string render(const Condition& c, int min_prec) {
  std::string s;
  switch (c.kind()) {
    case Condition::Kind::Constant: s = c.constant_value() ? "true" : "false"; break;
    case Condition::Kind::Ref: s = c.name(); break;
    case Condition::Kind::Not: s = "!" + render(c.operand(), 3); break;
    case Condition::Kind::And: s = render(c.lhs(), 2) + " & " + render(c.rhs(), 3); break;
    case Condition::Kind::Or: s = render(c.lhs(), 1) + " | " + render(c.rhs(), 2); break;
  }
  return precedence(c) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

Condition parse_condition(std::string_view text, const IdSet& declared) {
  return Parser(text, declared).parse();
}

std::string serialize(const Condition& c) { return render(c, 0); }

TriValue evaluate_condition(const Condition& c, const std::map<ArgId, TriValue>& assignment) {
  switch (c.kind()) {
    case Condition::Kind::Constant: return c.constant_value() ? TriValue::T : TriValue::F;
    case Condition::Kind::Ref: {
      auto it = assignment.find(c.name());
      if (it == assignment.end())
        throw Error(ErrorCode::MissingAssignment, "no value assigned to '" + c.name() + "'");
      return it->second;
    }
    case Condition::Kind::Not: {
      const TriValue v = evaluate_condition(c.operand(), assignment);
      return v == TriValue::T ? TriValue::F : v == TriValue::F ? TriValue::T : TriValue::U;
    }
    case Condition::Kind::And: {
      const TriValue l = evaluate_condition(c.lhs(), assignment);
      const TriValue r = evaluate_condition(c.rhs(), assignment);
      if (l == TriValue::F || r == TriValue::F) return TriValue::F;
      if (l == TriValue::T && r == TriValue::T) return TriValue::T;
      return TriValue::U;
    }
    case Condition::Kind::Or: {
      const TriValue l = evaluate_condition(c.lhs(), assignment);
      const TriValue r = evaluate_condition(c.rhs(), assignment);
      if (l == TriValue::T || r == TriValue::T) return TriValue::T;
      if (l == TriValue::F && r == TriValue::F) return TriValue::F;
      return TriValue::U;
    }
  }
  return TriValue::U;
}

bool evaluate_classical(const Condition& c, const std::map<ArgId, bool>& assignment) {
  switch (c.kind()) {
    case Condition::Kind::Constant: return c.constant_value();
    case Condition::Kind::Ref: {
      auto it = assignment.find(c.name());
      if (it == assignment.end())
        throw Error(ErrorCode::MissingAssignment, "no value assigned to '" + c.name() + "'");
      return it->second;
    }
    case Condition::Kind::Not: return !evaluate_classical(c.operand(), assignment);
    case Condition::Kind::And:
      return evaluate_classical(c.lhs(), assignment) && evaluate_classical(c.rhs(), assignment);
    case Condition::Kind::Or:
      return evaluate_classical(c.lhs(), assignment) || evaluate_classical(c.rhs(), assignment);
  }
  return false;
}

}  // namespace argwb
