#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reduktor/order.hpp"
#include "reduktor/polynomial.hpp"
#include "reduktor/presentation.hpp"

namespace reduktor {

struct SourcePos {
  int line = 0;
  int col = 0;
};

class parse_error : public error {
public:
  parse_error(SourcePos pos, const std::string& what)
      : error("line " + std::to_string(pos.line) + ", column " +
              std::to_string(pos.col) + ": " + what),
        pos_(pos) {}
  SourcePos pos() const { return pos_; }

private:
  SourcePos pos_;
};

// Expression tree; coefficients stay as digit strings so one parse serves
// every coefficient field.
struct Expr {
  enum class Kind { number, variable, add, sub, mul, pow, neg };
  Kind kind;
  std::string text;  // digits or identifier
  int exponent = 0;  // pow only
  std::vector<Expr> kids;
  SourcePos pos;
};

// Parsed problem file: field/vars/order directives plus the generator lists.
struct ProblemFile {
  std::uint64_t characteristic = 2147483647ull;
  bool rational = false;  // `field 0`
  std::vector<std::string> vars;
  std::optional<MonomialOrder> order;
  std::vector<Expr> ideal;
  std::vector<Expr> subideal;
};

ProblemFile parse_problem(const std::string& text);

// Single expression entry point (tests, --subideal overrides).
Expr parse_expression(const std::string& text,
                      const std::vector<std::string>& vars);

template <class F>
Polynomial<F> eval_expr(const Ring<F>& ring, const Expr& e,
                        const MonomialOrder& order) {
  switch (e.kind) {
    case Expr::Kind::number:
      return poly_const(ring, ring.field.from_decimal(e.text), order);
    case Expr::Kind::variable: {
      int i = ring.var_index(e.text);
      if (i < 0) throw parse_error(e.pos, "undeclared variable " + e.text);
      return poly_var(ring, (std::size_t)i, order);
    }
    case Expr::Kind::add:
      return poly_add(ring, eval_expr(ring, e.kids[0], order),
                      eval_expr(ring, e.kids[1], order));
    case Expr::Kind::sub:
      return poly_sub(ring, eval_expr(ring, e.kids[0], order),
                      eval_expr(ring, e.kids[1], order));
    case Expr::Kind::mul:
      return poly_mul(ring, eval_expr(ring, e.kids[0], order),
                      eval_expr(ring, e.kids[1], order));
    case Expr::Kind::pow:
      return poly_pow(ring, eval_expr(ring, e.kids[0], order), e.exponent);
    case Expr::Kind::neg:
      return poly_neg(ring, eval_expr(ring, e.kids[0], order));
  }
  throw internal_error("eval_expr: bad node");
}

template <class F>
Polynomial<F> parse_polynomial(const Ring<F>& ring, const std::string& text,
                               const MonomialOrder& order =
                                   MonomialOrder::grevlex()) {
  return eval_expr(ring, parse_expression(text, ring.vars), order);
}

template <class F>
std::vector<Polynomial<F>> eval_exprs(const Ring<F>& ring,
                                      const std::vector<Expr>& exprs,
                                      const MonomialOrder& order) {
  std::vector<Polynomial<F>> out;
  for (const auto& e : exprs) out.push_back(eval_expr(ring, e, order));
  return out;
}

}  // namespace reduktor
