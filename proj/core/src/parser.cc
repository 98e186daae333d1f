#include "streamfix/parser.h"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "streamfix/errors.h"

namespace streamfix {
namespace {

enum class Tok {
  kIdent,
  kNumber,
  kInf,
  kTrue,
  kBox,
  kDiamond,
  kNot,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kPeriod,
  kIf,
  kAnd,
  kOr,
  kArrow,
  kBang,
  kAt,
  kEnd,
};

const char* Spelling(Tok t) {
  switch (t) {
    case Tok::kIdent: return "atom";
    case Tok::kNumber: return "number";
    case Tok::kInf: return "'inf'";
    case Tok::kTrue: return "'true'";
    case Tok::kBox: return "'box'";
    case Tok::kDiamond: return "'diamond'";
    case Tok::kNot: return "'not'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kComma: return "','";
    case Tok::kPeriod: return "'.'";
    case Tok::kIf: return "':-'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kArrow: return "'->'";
    case Tok::kBang: return "'!'";
    case Tok::kAt: return "'@'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '#';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok{Tok::kEnd, "", line, column};
    if (IsIdentStart(c)) {
      std::size_t j = i + 1;
      if (c != '#') {
        while (j < text.size() && IsIdentChar(text[j])) ++j;
      }
      tok.text = std::string(text.substr(i, j - i));
      if (tok.text == "inf") tok.kind = Tok::kInf;
      else if (tok.text == "true") tok.kind = Tok::kTrue;
      else if (tok.text == "box") tok.kind = Tok::kBox;
      else if (tok.text == "diamond") tok.kind = Tok::kDiamond;
      else if (tok.text == "not") tok.kind = Tok::kNot;
      else tok.kind = Tok::kIdent;
      advance(j - i);
      tokens.push_back(std::move(tok));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      tok.kind = Tok::kNumber;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
      tokens.push_back(std::move(tok));
      continue;
    }
    std::size_t width = 1;
    switch (c) {
      case '(': tok.kind = Tok::kLParen; break;
      case ')': tok.kind = Tok::kRParen; break;
      case '[': tok.kind = Tok::kLBracket; break;
      case ']': tok.kind = Tok::kRBracket; break;
      case ',': tok.kind = Tok::kComma; break;
      case '.': tok.kind = Tok::kPeriod; break;
      case '&': tok.kind = Tok::kAnd; break;
      case '|': tok.kind = Tok::kOr; break;
      case '!': tok.kind = Tok::kBang; break;
      case '@': tok.kind = Tok::kAt; break;
      case ':':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          tok.kind = Tok::kIf;
          width = 2;
          break;
        }
        throw ParseError("unexpected ':'", line, column, {"':-'"});
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          tok.kind = Tok::kArrow;
          width = 2;
          break;
        }
        throw ParseError("unexpected '-'", line, column, {"'->'"});
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         column);
    }
    tok.text = std::string(text.substr(i, width));
    advance(width);
    tokens.push_back(std::move(tok));
  }
  tokens.push_back({Tok::kEnd, "", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lex(text)) {}

  Program ParseProgram() {
    Program program;
    while (!At(Tok::kEnd)) program.rules.push_back(ParseRule());
    if (program.rules.empty()) {
      throw ParseError("program must be nonempty", Peek().line, Peek().column,
                       {"atom"});
    }
    return program;
  }

  Formula ParseSingleFormula() {
    const bool negated = Accept(Tok::kNot);
    Formula f = ParseImplication();
    if (negated) f = Formula::Neg(std::move(f));
    Expect(Tok::kEnd);
    return f;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  bool At(Tok kind) const { return Peek().kind == kind; }

  bool Accept(Tok kind) {
    if (!At(kind)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void Fail(const std::string& message,
                         std::set<std::string> expected) const {
    const Token& tok = Peek();
    std::string found = tok.kind == Tok::kEnd ? "end of input"
                                              : "'" + tok.text + "'";
    throw ParseError(message + ", found " + found, tok.line, tok.column,
                     std::move(expected));
  }

  const Token& Expect(Tok kind) {
    if (!At(kind)) Fail("unexpected token", {Spelling(kind)});
    return tokens_[pos_++];
  }

  Rule ParseRule() {
    const Token& start = Peek();
    Formula head = ParseImplication();
    std::vector<Formula> positive;
    std::vector<Formula> negative;
    if (Accept(Tok::kIf)) {
      do {
        if (Accept(Tok::kNot)) {
          negative.push_back(ParseImplication());
        } else {
          positive.push_back(ParseImplication());
        }
      } while (Accept(Tok::kComma));
    }
    if (!At(Tok::kPeriod)) {
      std::set<std::string> expected{"'.'", "','"};
      if (positive.empty() && negative.empty()) expected = {"'.'", "':-'"};
      Fail("unterminated rule", expected);
    }
    ++pos_;
    try {
      return MakeRule(std::move(head), std::move(positive), std::move(negative));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), start.line, start.column);
    }
  }

  Formula ParseImplication() {
    Formula lhs = ParseDisjunction();
    if (Accept(Tok::kArrow)) return Formula::Implies(lhs, ParseImplication());
    return lhs;
  }

  Formula ParseDisjunction() {
    Formula f = ParseConjunction();
    while (Accept(Tok::kOr)) f = Formula::Or(f, ParseConjunction());
    return f;
  }

  Formula ParseConjunction() {
    Formula f = ParseUnary();
    while (Accept(Tok::kAnd)) f = Formula::And(f, ParseUnary());
    return f;
  }

  std::uint64_t ParseNumber() {
    const Token& tok = Expect(Tok::kNumber);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(),
                                     tok.text.data() + tok.text.size(), value);
    if (ec != std::errc()) {
      throw ParseError("number out of range", tok.line, tok.column);
    }
    return value;
  }

  ExtNat ParseBound() {
    if (Accept(Tok::kInf)) return ExtNat::Infinity();
    if (!At(Tok::kNumber)) Fail("expected a window bound", {"number", "'inf'"});
    return ExtNat(ParseNumber());
  }

  Formula ParseUnary() {
    const Token& tok = Peek();
    switch (tok.kind) {
      case Tok::kBang:
        ++pos_;
        return Formula::Neg(ParseUnary());
      case Tok::kBox:
        ++pos_;
        return Formula::Box(ParseUnary());
      case Tok::kDiamond:
        ++pos_;
        return Formula::Diamond(ParseUnary());
      case Tok::kAt: {
        ++pos_;
        const Token& num = Peek();
        if (!At(Tok::kNumber)) Fail("expected a time point after '@'", {"number"});
        const std::uint64_t t = ParseNumber();
        if (t == 0) {
          throw ParseError("@ requires a time point >= 1", num.line, num.column);
        }
        return Formula::At(t, ParseUnary());
      }
      case Tok::kLBracket: {
        ++pos_;
        const ExtNat l = ParseBound();
        Expect(Tok::kComma);
        const ExtNat r = ParseBound();
        Expect(Tok::kRBracket);
        return Formula::Window(l, r, ParseUnary());
      }
      case Tok::kLParen: {
        ++pos_;
        Formula f = ParseImplication();
        Expect(Tok::kRParen);
        return f;
      }
      case Tok::kTrue:
        ++pos_;
        return Formula::Top();
      case Tok::kIdent:
        ++pos_;
        return Formula::Atom(tok.text);
      default:
        Fail("expected a formula", {"atom", "'true'", "'('", "'!'", "'@'",
                                    "'['", "'box'", "'diamond'"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Program ParseProgram(std::string_view text) {
  return Parser(text).ParseProgram();
}

Formula ParseFormula(std::string_view text) {
  return Parser(text).ParseSingleFormula();
}

}  // namespace streamfix
