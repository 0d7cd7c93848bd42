#include "reduktor/parse.hpp"

#include <cctype>

namespace reduktor {
namespace {

enum class Tok { ident, number, plus, minus, star, caret, lparen, rparen,
                 comma, colon, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '#') {  // comment to end of line
        while (i_ < text_.size() && text_[i_] != '\n') ++i_;
        continue;
      }
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++i_;
        continue;
      }
      if (std::isspace((unsigned char)c)) {
        ++col_;
        ++i_;
        continue;
      }
      break;
    }
    cur_.pos = {line_, col_};
    if (i_ >= text_.size()) {
      cur_ = {Tok::end, "", cur_.pos};
      return;
    }
    char c = text_[i_];
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum((unsigned char)text_[j]) || text_[j] == '_'))
        ++j;
      cur_ = {Tok::ident, text_.substr(i_, j - i_), cur_.pos};
      step(j - i_);
      return;
    }
    if (std::isdigit((unsigned char)c)) {
      std::size_t j = i_;
      while (j < text_.size() && std::isdigit((unsigned char)text_[j])) ++j;
      cur_ = {Tok::number, text_.substr(i_, j - i_), cur_.pos};
      step(j - i_);
      return;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case ',': k = Tok::comma; break;
      case ':': k = Tok::colon; break;
      default:
        throw parse_error(cur_.pos, std::string("unexpected character '") +
                                        c + "'");
    }
    cur_ = {k, std::string(1, c), cur_.pos};
    step(1);
  }

  void step(std::size_t n) {
    i_ += n;
    col_ += (int)n;
  }

  const std::string& text_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

class Parser {
public:
  Parser(Lexer& lex, const std::vector<std::string>* vars)
      : lex_(lex), vars_(vars) {}

  // expr := term (('+'|'-') term)*
  Expr expr() {
    Expr e = term();
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      Token op = lex_.take();
      Expr rhs = term();
      Expr node;
      node.kind = op.kind == Tok::plus ? Expr::Kind::add : Expr::Kind::sub;
      node.pos = op.pos;
      node.kids = {std::move(e), std::move(rhs)};
      e = std::move(node);
    }
    return e;
  }

private:
  // term := factor ('*' factor)*
  Expr term() {
    Expr e = factor();
    while (lex_.peek().kind == Tok::star) {
      Token op = lex_.take();
      Expr rhs = factor();
      Expr node;
      node.kind = Expr::Kind::mul;
      node.pos = op.pos;
      node.kids = {std::move(e), std::move(rhs)};
      e = std::move(node);
    }
    return e;
  }

  // factor := atom ('^' INT)?
  Expr factor() {
    Expr e = atom();
    if (lex_.peek().kind == Tok::caret) {
      Token op = lex_.take();
      Token n = lex_.take();
      if (n.kind != Tok::number)
        throw parse_error(n.pos, "exponent must be a nonnegative integer");
      long long v = 0;
      for (char c : n.text) {
        v = v * 10 + (c - '0');
        if (v > 1000000) throw parse_error(n.pos, "exponent too large");
      }
      Expr node;
      node.kind = Expr::Kind::pow;
      node.pos = op.pos;
      node.exponent = (int)v;
      node.kids = {std::move(e)};
      e = std::move(node);
    }
    return e;
  }

  // atom := INT | IDENT | '(' expr ')' | '-' factor
  Expr atom() {
    Token t = lex_.take();
    Expr e;
    e.pos = t.pos;
    switch (t.kind) {
      case Tok::number:
        e.kind = Expr::Kind::number;
        e.text = t.text;
        return e;
      case Tok::ident:
        if (vars_ != nullptr) {
          bool known = false;
          for (const auto& v : *vars_)
            if (v == t.text) known = true;
          if (!known)
            throw parse_error(t.pos, "undeclared variable " + t.text);
        }
        e.kind = Expr::Kind::variable;
        e.text = t.text;
        return e;
      case Tok::lparen: {
        Expr inner = expr();
        Token close = lex_.take();
        if (close.kind != Tok::rparen)
          throw parse_error(close.pos, "expected ')'");
        return inner;
      }
      case Tok::minus: {
        e.kind = Expr::Kind::neg;
        e.kids = {factor()};
        return e;
      }
      default:
        throw parse_error(t.pos, "expected a number, variable, '(' or '-'");
    }
  }

  Lexer& lex_;
  const std::vector<std::string>* vars_;
};

const char* kDirectives[] = {"field", "vars", "order", "ideal", "subideal"};

bool is_directive(const Token& t) {
  if (t.kind != Tok::ident) return false;
  for (const char* d : kDirectives)
    if (t.text == d) return true;
  return false;
}

std::uint64_t parse_uint(const Token& t, std::uint64_t max) {
  if (t.kind != Tok::number)
    throw parse_error(t.pos, "expected an integer");
  std::uint64_t v = 0;
  for (char c : t.text) {
    v = v * 10 + (std::uint64_t)(c - '0');
    if (v > max) throw parse_error(t.pos, "integer too large");
  }
  return v;
}

}  // namespace

Expr parse_expression(const std::string& text,
                      const std::vector<std::string>& vars) {
  Lexer lex(text);
  Parser parser(lex, &vars);
  Expr e = parser.expr();
  if (lex.peek().kind != Tok::end)
    throw parse_error(lex.peek().pos, "trailing input after expression");
  return e;
}

ProblemFile parse_problem(const std::string& text) {
  ProblemFile pf;
  bool saw_field = false, saw_vars = false, saw_order = false,
       saw_ideal = false, saw_subideal = false;
  Lexer lex(text);
  while (lex.peek().kind != Tok::end) {
    Token head = lex.take();
    if (!is_directive(head))
      throw parse_error(head.pos,
                        "expected a directive (field, vars, order, ideal, "
                        "subideal)");
    if (head.text == "field") {
      if (saw_field) throw parse_error(head.pos, "duplicate field directive");
      saw_field = true;
      std::uint64_t p = parse_uint(lex.take(), (1ull << 32) - 1);
      if (p == 0) {
        pf.rational = true;
        pf.characteristic = 0;
      } else {
        if (!is_prime_u64(p))
          throw parse_error(head.pos, "field characteristic " +
                                          std::to_string(p) +
                                          " is not prime");
        pf.characteristic = p;
      }
    } else if (head.text == "vars") {
      if (saw_vars) throw parse_error(head.pos, "duplicate vars directive");
      saw_vars = true;
      for (;;) {
        Token v = lex.take();
        if (v.kind != Tok::ident)
          throw parse_error(v.pos, "expected a variable name");
        if (is_directive(v))
          throw parse_error(v.pos,
                            "directive keyword cannot be a variable name");
        for (const auto& existing : pf.vars)
          if (existing == v.text)
            throw parse_error(v.pos, "duplicate variable " + v.text);
        pf.vars.push_back(v.text);
        if (lex.peek().kind != Tok::comma) break;
        lex.take();
      }
    } else if (head.text == "order") {
      if (saw_order) throw parse_error(head.pos, "duplicate order directive");
      saw_order = true;
      Token kind = lex.take();
      if (kind.kind != Tok::ident)
        throw parse_error(kind.pos, "expected lex, grevlex or weight:...");
      if (kind.text == "lex") {
        pf.order = MonomialOrder::lex();
      } else if (kind.text == "grevlex") {
        pf.order = MonomialOrder::grevlex();
      } else if (kind.text == "weight") {
        Token colon = lex.take();
        if (colon.kind != Tok::colon)
          throw parse_error(colon.pos, "expected ':' after weight");
        std::vector<long long> w;
        for (;;) {
          long long sign = 1;
          if (lex.peek().kind == Tok::minus) {
            lex.take();
            sign = -1;
          }
          Token n = lex.take();
          w.push_back(sign * (long long)parse_uint(n, 1000000000ull));
          if (lex.peek().kind != Tok::comma) break;
          lex.take();
        }
        pf.order = MonomialOrder::weight(std::move(w));
      } else {
        throw parse_error(kind.pos, "unknown order " + kind.text);
      }
    } else {  // ideal | subideal
      bool sub = head.text == "subideal";
      if (sub ? saw_subideal : saw_ideal)
        throw parse_error(head.pos, "duplicate " + head.text + " directive");
      (sub ? saw_subideal : saw_ideal) = true;
      if (!saw_vars)
        throw parse_error(head.pos,
                          "vars must be declared before " + head.text);
      auto& dst = sub ? pf.subideal : pf.ideal;
      Parser parser(lex, &pf.vars);
      for (;;) {
        dst.push_back(parser.expr());
        if (lex.peek().kind != Tok::comma) break;
        lex.take();
      }
    }
  }
  if (!saw_vars) throw parse_error({1, 1}, "missing vars directive");
  if (pf.order) {
    if (pf.order->kind() == OrderKind::weight &&
        pf.order->weights().size() != pf.vars.size())
      throw parse_error({1, 1},
                        "weight vector length does not match variable count");
  }
  return pf;
}

}  // namespace reduktor
