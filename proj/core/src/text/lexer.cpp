#include <cctype>

#include "lazymdp/errors.hpp"
#include "lazymdp/text/lexer.hpp"

namespace lazymdp::text {

namespace {

bool ident_start(char c) { return std::isalpha((unsigned char)c) || c == '_'; }
bool ident_char(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

}  // namespace

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0, n = src.size();
  int line = 1, col = 1;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto peek = [&](std::size_t k) -> char {
    return i + k < n ? src[i + k] : '\0';
  };
  while (i < n) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && peek(1) == '/') {
      while (i < n && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < n && ident_char(src[j])) ++j;
      t.text = src.substr(i, j - i);
      if (t.text == "var")
        t.kind = Tok::KwVar;
      else if (t.text == "bool")
        t.kind = Tok::KwBool;
      else if (t.text == "init")
        t.kind = Tok::KwInit;
      else if (t.text == "target")
        t.kind = Tok::KwTarget;
      else if (t.text == "true")
        t.kind = Tok::KwTrue;
      else if (t.text == "false")
        t.kind = Tok::KwFalse;
      else
        t.kind = Tok::Ident;
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit((unsigned char)c)) {
      std::size_t j = i;
      while (j < n && std::isdigit((unsigned char)src[j])) ++j;
      // A dot followed by a digit continues a decimal literal; ".." is the
      // range punctuation and stays separate.
      if (j < n && src[j] == '.' && j + 1 < n &&
          std::isdigit((unsigned char)src[j + 1])) {
        ++j;
        while (j < n && std::isdigit((unsigned char)src[j])) ++j;
        t.kind = Tok::Decimal;
      } else {
        t.kind = Tok::Int;
      }
      t.text = src.substr(i, j - i);
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    auto two = [&](Tok k, const char* s) {
      t.kind = k;
      t.text = s;
      advance(2);
      out.push_back(t);
    };
    auto one = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      advance(1);
      out.push_back(t);
    };
    switch (c) {
      case '[': one(Tok::LBracket); continue;
      case ']': one(Tok::RBracket); continue;
      case '(': one(Tok::LParen); continue;
      case ')': one(Tok::RParen); continue;
      case ':': one(Tok::Colon); continue;
      case ';': one(Tok::Semi); continue;
      case '\'': one(Tok::Tick); continue;
      case '+': one(Tok::Plus); continue;
      case '-': one(Tok::Minus); continue;
      case '*': one(Tok::Star); continue;
      case '/': one(Tok::Slash); continue;
      case '&': one(Tok::Amp); continue;
      case '|': one(Tok::Pipe); continue;
      case '.':
        if (peek(1) == '.') {
          two(Tok::DotDot, "..");
          continue;
        }
        throw ParseError(line, col, "stray '.'");
      case '=':
        if (peek(1) == '>') {
          two(Tok::Imp, "=>");
        } else if (peek(1) == '=') {
          two(Tok::EqEq, "==");
        } else {
          one(Tok::Assign);
        }
        continue;
      case '!':
        if (peek(1) == '=') {
          two(Tok::Ne, "!=");
        } else {
          one(Tok::Bang);
        }
        continue;
      case '<':
        if (peek(1) == '=') {
          two(Tok::Le, "<=");
        } else {
          one(Tok::Lt);
        }
        continue;
      case '>':
        if (peek(1) == '=') {
          two(Tok::Ge, ">=");
        } else {
          one(Tok::Gt);
        }
        continue;
      default:
        throw ParseError(line, col,
                         std::string("unexpected character '") + c + "'");
    }
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

}  // namespace lazymdp::text
