#pragma once

#include <memory>
#include <string>
#include <vector>

#include "reduktor/errors.hpp"
#include "reduktor/monomial.hpp"

namespace reduktor {

enum class OrderKind { lex, grevlex, weight };
enum class TieBreak { lex, grevlex };

// Term order on monomials: lex, graded reverse lex, or a weight vector
// refined by a tie-break order.  Weight entries may be negative; such orders
// are only admissible on homogeneous input (enforced by the basis engine).
class MonomialOrder {
public:
  MonomialOrder() : kind_(OrderKind::grevlex), tie_(TieBreak::grevlex) {}

  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static MonomialOrder weight(std::vector<long long> w,
                              TieBreak tie = TieBreak::grevlex) {
    MonomialOrder o(OrderKind::weight);
    o.tie_ = tie;
    o.weights_ = std::make_shared<const std::vector<long long>>(std::move(w));
    return o;
  }

  OrderKind kind() const { return kind_; }
  TieBreak tie_break() const { return tie_; }
  const std::vector<long long>& weights() const { return *weights_; }

  // All weights nonnegative means the order is a well-order on all of the
  // monomials; otherwise only homogeneous computations are admissible.
  bool is_global() const {
    if (kind_ != OrderKind::weight) return true;
    for (long long w : *weights_)
      if (w < 0) return false;
    return true;
  }

  // +1 if a > b, 0 if equal, -1 if a < b.
  int cmp(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
      throw error("mono_cmp: monomials live in different rings");
    switch (kind_) {
      case OrderKind::lex:
        return cmp_lex(a, b);
      case OrderKind::grevlex:
        return cmp_grevlex(a, b);
      case OrderKind::weight: {
        if (weights_->size() != a.nvars())
          throw error("mono_cmp: weight vector length mismatch");
        long long wa = 0, wb = 0;
        for (std::size_t i = 0; i < a.nvars(); ++i) {
          wa += (*weights_)[i] * a[i];
          wb += (*weights_)[i] * b[i];
        }
        if (wa != wb) return wa > wb ? 1 : -1;
        return tie_ == TieBreak::lex ? cmp_lex(a, b) : cmp_grevlex(a, b);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) > 0;
  }

  // Stable identifier, used as basis-cache key and in reports.
  std::string key() const {
    switch (kind_) {
      case OrderKind::lex:
        return "lex";
      case OrderKind::grevlex:
        return "grevlex";
      case OrderKind::weight: {
        std::string s = "weight:";
        for (std::size_t i = 0; i < weights_->size(); ++i) {
          if (i) s += ',';
          s += std::to_string((*weights_)[i]);
        }
        s += tie_ == TieBreak::lex ? ";tb=lex" : ";tb=grevlex";
        return s;
      }
    }
    return "?";
  }

  bool operator==(const MonomialOrder& o) const { return key() == o.key(); }

private:
  explicit MonomialOrder(OrderKind k) : kind_(k), tie_(TieBreak::grevlex) {}

  static int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  static int cmp_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = a.nvars(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  OrderKind kind_;
  TieBreak tie_;
  std::shared_ptr<const std::vector<long long>> weights_;
};

// Total order test entry point; throws on ring mismatch.
inline int mono_cmp(const MonomialOrder& order, const Monomial& a,
                    const Monomial& b) {
  return order.cmp(a, b);
}

}  // namespace reduktor
