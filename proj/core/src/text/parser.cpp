#include <algorithm>
#include <unordered_map>

#include "lazymdp/errors.hpp"
#include "lazymdp/text/lexer.hpp"
#include "lazymdp/text/parser.hpp"

namespace lazymdp::text {

namespace {

struct Parser {
  const std::vector<Token>& ts;
  std::size_t pos = 0;
  SymbolicMdp mdp;
  std::unordered_map<std::string, std::int32_t> var_index;

  explicit Parser(const std::vector<Token>& t) : ts(t) {}

  const Token& cur() const { return ts[pos]; }
  const Token& la(std::size_t k) const {
    return ts[std::min(pos + k, ts.size() - 1)];
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.col, msg);
  }

  bool accept(Tok k) {
    if (cur().kind != k) return false;
    ++pos;
    return true;
  }

  const Token& expect(Tok k, const char* what) {
    if (cur().kind != k)
      fail(cur(), std::string("expected ") + what + " before '" +
                      (cur().kind == Tok::End ? "end of file" : cur().text) +
                      "'");
    return ts[pos++];
  }

  Value parse_int_value() {
    bool neg = accept(Tok::Minus);
    const Token& t = expect(Tok::Int, "integer");
    Value v = 0;
    for (char c : t.text) {
      if (__builtin_mul_overflow(v, (Value)10, &v) ||
          __builtin_add_overflow(v, (Value)(c - '0'), &v))
        fail(t, "integer literal out of range");
    }
    return neg ? -v : v;
  }

  void parse_vardecl() {
    expect(Tok::KwVar, "'var'");
    const Token& name = expect(Tok::Ident, "variable name");
    if (var_index.count(name.text))
      fail(name, "duplicate variable '" + name.text + "'");
    expect(Tok::Colon, "':'");
    VarDecl d;
    d.name = name.text;
    if (accept(Tok::KwBool)) {
      d.type = Type::Bool;
      d.lo = 0;
      d.hi = 1;
      expect(Tok::KwInit, "'init'");
      const Token& lit = cur();
      if (accept(Tok::KwTrue))
        d.init = 1;
      else if (accept(Tok::KwFalse))
        d.init = 0;
      else
        fail(lit, "expected 'true' or 'false'");
    } else {
      const Token& open = expect(Tok::LBracket, "'bool' or '['");
      d.type = Type::Int;
      d.lo = parse_int_value();
      expect(Tok::DotDot, "'..'");
      d.hi = parse_int_value();
      if (d.lo > d.hi) fail(open, "empty range");
      expect(Tok::RBracket, "']'");
      expect(Tok::KwInit, "'init'");
      const Token& lit = cur();
      d.init = parse_int_value();
      if (d.init < d.lo || d.init > d.hi)
        fail(lit, "initial value out of range");
    }
    expect(Tok::Semi, "';'");
    var_index[d.name] = (std::int32_t)mdp.vars.size();
    mdp.vars.push_back(std::move(d));
  }

  Rational parse_prob() {
    const Token& t = cur();
    if (accept(Tok::Decimal)) {
      std::size_t dot = t.text.find('.');
      std::string digits = t.text.substr(0, dot) + t.text.substr(dot + 1);
      std::int64_t den = 1;
      for (std::size_t i = 0; i < t.text.size() - dot - 1; ++i) {
        if (__builtin_mul_overflow(den, (std::int64_t)10, &den))
          fail(t, "probability literal out of range");
      }
      std::int64_t num = 0;
      for (char c : digits) {
        if (__builtin_mul_overflow(num, (std::int64_t)10, &num) ||
            __builtin_add_overflow(num, (std::int64_t)(c - '0'), &num))
          fail(t, "probability literal out of range");
      }
      return Rational(num, den);
    }
    Value num = parse_int_value();
    if (accept(Tok::Slash)) {
      Value den = parse_int_value();
      if (den == 0) fail(t, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  // Expressions.  `in_branch` stops the conjunction level in front of an
  // "& x'" sequence, which starts the next assignment of the branch.
  ExprPtr parse_expr(bool in_branch) { return parse_imp(in_branch); }

  void need(const Token& at, const ExprPtr& e, Type t, const char* side) {
    if (e->type != t)
      fail(at, std::string(side) + " of '" + at.text + "' must be " +
                   (t == Type::Bool ? "boolean" : "integer"));
  }

  ExprPtr parse_imp(bool in_branch) {
    ExprPtr lhs = parse_or(in_branch);
    if (cur().kind == Tok::Imp) {
      const Token& op = ts[pos++];
      ExprPtr rhs = parse_imp(in_branch);  // right-associative
      need(op, lhs, Type::Bool, "left operand");
      need(op, rhs, Type::Bool, "right operand");
      return Expr::imp(lhs, rhs);
    }
    return lhs;
  }

  ExprPtr parse_or(bool in_branch) {
    ExprPtr lhs = parse_and(in_branch);
    while (cur().kind == Tok::Pipe) {
      const Token& op = ts[pos++];
      ExprPtr rhs = parse_and(in_branch);
      need(op, lhs, Type::Bool, "left operand");
      need(op, rhs, Type::Bool, "right operand");
      lhs = Expr::lor(lhs, rhs);
    }
    return lhs;
  }

  ExprPtr parse_and(bool in_branch) {
    ExprPtr lhs = parse_cmp(in_branch);
    while (cur().kind == Tok::Amp) {
      if (in_branch && la(1).kind == Tok::Ident && la(2).kind == Tok::Tick)
        break;
      const Token& op = ts[pos++];
      ExprPtr rhs = parse_cmp(in_branch);
      need(op, lhs, Type::Bool, "left operand");
      need(op, rhs, Type::Bool, "right operand");
      lhs = Expr::land(lhs, rhs);
    }
    return lhs;
  }

  ExprPtr parse_cmp(bool in_branch) {
    ExprPtr lhs = parse_add(in_branch);
    Tok k = cur().kind;
    if (k == Tok::EqEq || k == Tok::Ne || k == Tok::Lt || k == Tok::Le ||
        k == Tok::Gt || k == Tok::Ge) {
      const Token& op = ts[pos++];
      ExprPtr rhs = parse_add(in_branch);
      need(op, lhs, Type::Int, "left operand");
      need(op, rhs, Type::Int, "right operand");
      switch (k) {
        case Tok::EqEq: return Expr::eq(lhs, rhs);
        case Tok::Ne: return Expr::ne(lhs, rhs);
        case Tok::Lt: return Expr::lt(lhs, rhs);
        case Tok::Le: return Expr::le(lhs, rhs);
        case Tok::Gt: return Expr::binary(ExprOp::Gt, lhs, rhs);
        default: return Expr::binary(ExprOp::Ge, lhs, rhs);
      }
    }
    return lhs;
  }

  ExprPtr parse_add(bool in_branch) {
    ExprPtr lhs = parse_mul(in_branch);
    while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      const Token& op = ts[pos++];
      ExprPtr rhs = parse_mul(in_branch);
      need(op, lhs, Type::Int, "left operand");
      need(op, rhs, Type::Int, "right operand");
      lhs = op.kind == Tok::Plus ? Expr::add(lhs, rhs) : Expr::sub(lhs, rhs);
    }
    return lhs;
  }

  ExprPtr parse_mul(bool in_branch) {
    ExprPtr lhs = parse_unary(in_branch);
    while (cur().kind == Tok::Star) {
      const Token& op = ts[pos++];
      ExprPtr rhs = parse_unary(in_branch);
      need(op, lhs, Type::Int, "left operand");
      need(op, rhs, Type::Int, "right operand");
      lhs = Expr::mul(lhs, rhs);
    }
    return lhs;
  }

  ExprPtr parse_unary(bool in_branch) {
    if (cur().kind == Tok::Bang) {
      const Token& op = ts[pos++];
      ExprPtr e = parse_unary(in_branch);
      need(op, e, Type::Bool, "operand");
      return Expr::lnot(e);
    }
    if (cur().kind == Tok::Minus) {
      const Token& op = ts[pos++];
      ExprPtr e = parse_unary(in_branch);
      need(op, e, Type::Int, "operand");
      return Expr::neg(e);
    }
    return parse_primary(in_branch);
  }

  ExprPtr parse_primary(bool in_branch) {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Int: {
        Value v = parse_int_value();
        return Expr::int_lit(v);
      }
      case Tok::KwTrue:
        ++pos;
        return Expr::bool_lit(true);
      case Tok::KwFalse:
        ++pos;
        return Expr::bool_lit(false);
      case Tok::Ident: {
        auto it = var_index.find(t.text);
        if (it == var_index.end())
          fail(t, "undeclared variable '" + t.text + "'");
        ++pos;
        return Expr::var_ref(it->second, mdp.vars[it->second].type);
      }
      case Tok::LParen: {
        ++pos;
        ExprPtr e = parse_expr(in_branch);
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        fail(t, "expected expression before '" +
                    (t.kind == Tok::End ? "end of file" : t.text) + "'");
    }
  }

  CommandBranch parse_branch() {
    CommandBranch br;
    const Token& pt = cur();
    br.prob = parse_prob();
    if (!(Rational(0) < br.prob)) fail(pt, "probability must be positive");
    expect(Tok::Colon, "':'");
    expect(Tok::LParen, "'('");
    std::vector<char> assigned(mdp.vars.size(), 0);
    for (;;) {
      const Token& name = expect(Tok::Ident, "variable name");
      auto it = var_index.find(name.text);
      if (it == var_index.end())
        fail(name, "undeclared variable '" + name.text + "'");
      if (assigned[it->second])
        fail(name, "variable '" + name.text + "' assigned twice");
      assigned[it->second] = 1;
      expect(Tok::Tick, "'''");
      expect(Tok::Assign, "'='");
      ExprPtr e = parse_expr(true);
      if (e->type != mdp.vars[it->second].type)
        fail(name, "assignment to '" + name.text + "' has the wrong type");
      br.assign.updates.emplace_back(it->second, std::move(e));
      if (!accept(Tok::Amp)) break;
    }
    expect(Tok::RParen, "')'");
    std::sort(br.assign.updates.begin(), br.assign.updates.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return br;
  }

  void parse_command() {
    expect(Tok::LBracket, "'['");
    Command c;
    const Token& gt = cur();
    c.guard = parse_expr(false);
    if (c.guard->type != Type::Bool) fail(gt, "guard must be boolean");
    expect(Tok::RBracket, "']'");
    c.branches.push_back(parse_branch());
    while (accept(Tok::Plus)) c.branches.push_back(parse_branch());
    const Token& semi = expect(Tok::Semi, "';'");
    Rational sum(0);
    for (const auto& br : c.branches) sum = sum + br.prob;
    if (!(sum == Rational(1)))
      fail(semi, "probabilities sum to " + sum.str());
    mdp.commands.push_back(std::move(c));
  }

  ParsedModel parse() {
    while (cur().kind == Tok::KwVar) parse_vardecl();
    while (cur().kind == Tok::LBracket) parse_command();
    expect(Tok::KwTarget, "'target'");
    const Token& tt = cur();
    ExprPtr target = parse_expr(false);
    if (target->type != Type::Bool) fail(tt, "target must be boolean");
    expect(Tok::Semi, "';'");
    expect(Tok::End, "end of file");
    ParsedModel out;
    out.mdp = std::move(mdp);
    out.query.target = std::move(target);
    return out;
  }
};

}  // namespace

ParsedModel parse_model(const std::string& src) {
  std::vector<Token> toks = lex(src);
  Parser p(toks);
  return p.parse();
}

}  // namespace lazymdp::text
