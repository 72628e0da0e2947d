#pragma once

#include <string>
#include <vector>

namespace lazymdp::text {

enum class Tok {
  Ident,
  Int,      // digit run
  Decimal,  // digit run '.' digit run, probability literals only
  KwVar,
  KwBool,
  KwInit,
  KwTarget,
  KwTrue,
  KwFalse,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Colon,
  Semi,
  Tick,    // '
  Assign,  // =
  Plus,
  Minus,
  Star,
  Slash,
  DotDot,
  Amp,
  Pipe,
  Bang,
  Imp,   // =>
  EqEq,  // ==
  Ne,    // !=
  Lt,
  Le,
  Gt,
  Ge,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line = 1;
  int col = 1;
};

// Tokenizes a model file; throws ParseError with position on bad input.
// Line comments run from "//" to end of line.
std::vector<Token> lex(const std::string& src);

}  // namespace lazymdp::text
