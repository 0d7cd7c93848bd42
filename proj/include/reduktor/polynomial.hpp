#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reduktor/monomial.hpp"
#include "reduktor/order.hpp"
#include "reduktor/ring.hpp"

namespace reduktor {

template <class F>
struct Term {
  Monomial mono;
  typename F::Elem coeff;
};

// Sparse polynomial: nonzero terms, strictly descending in the order the
// polynomial was sorted by.  Re-sorting to another order is always explicit.
template <class F>
class Polynomial {
public:
  using Elem = typename F::Elem;

  Polynomial() = default;
  explicit Polynomial(MonomialOrder order) : order_(std::move(order)) {}

  // Normalizes: merges duplicate monomials, drops zeros, sorts descending.
  Polynomial(const Ring<F>& ring, std::vector<Term<F>> terms,
             MonomialOrder order)
      : order_(std::move(order)) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) {
                return order_.cmp(a.mono, b.mono) > 0;
              });
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().mono == t.mono)
        terms_.back().coeff = ring.field.add(terms_.back().coeff, t.coeff);
      else
        terms_.push_back(std::move(t));
    }
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [&](const Term<F>& t) {
                                  return ring.field.is_zero(t.coeff);
                                }),
                 terms_.end());
  }

  const std::vector<Term<F>>& terms() const { return terms_; }
  const MonomialOrder& order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw error("leading term of zero polynomial");
    return terms_.front().mono;
  }
  const Elem& leading_coeff() const {
    if (terms_.empty()) throw error("leading term of zero polynomial");
    return terms_.front().coeff;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;  // -1 for the zero polynomial
  }

  // Degree if homogeneous, empty otherwise.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return std::nullopt;
    return d;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono ||
          terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
  std::vector<Term<F>> terms_;
  MonomialOrder order_;
};

// ---- constructors ----------------------------------------------------------

template <class F>
Polynomial<F> poly_zero(const Ring<F>&, const MonomialOrder& order) {
  return Polynomial<F>(order);
}

template <class F>
Polynomial<F> poly_const(const Ring<F>& ring, typename F::Elem c,
                         const MonomialOrder& order) {
  if (ring.field.is_zero(c)) return Polynomial<F>(order);
  return Polynomial<F>(ring, {Term<F>{Monomial::one(ring.nvars()), c}}, order);
}

template <class F>
Polynomial<F> poly_one(const Ring<F>& ring, const MonomialOrder& order) {
  return poly_const(ring, ring.field.one(), order);
}

template <class F>
Polynomial<F> poly_monomial(const Ring<F>& ring, Monomial m,
                            const MonomialOrder& order,
                            std::optional<typename F::Elem> c = {}) {
  return Polynomial<F>(
      ring, {Term<F>{std::move(m), c ? *c : ring.field.one()}}, order);
}

template <class F>
Polynomial<F> poly_var(const Ring<F>& ring, std::size_t i,
                       const MonomialOrder& order) {
  return poly_monomial(ring, Monomial::var(ring.nvars(), i), order);
}

// ---- arithmetic ------------------------------------------------------------

template <class F>
Polynomial<F> poly_add(const Ring<F>& ring, const Polynomial<F>& f,
                       const Polynomial<F>& g) {
  if (!(f.order() == g.order()))
    throw error("polynomial addition across different orders");
  std::vector<Term<F>> out;
  out.reserve(f.terms().size() + g.terms().size());
  std::size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() && j < b.size()) {
    int c = f.order().cmp(a[i].mono, b[j].mono);
    if (c > 0)
      out.push_back(a[i++]);
    else if (c < 0)
      out.push_back(b[j++]);
    else {
      auto s = ring.field.add(a[i].coeff, b[j].coeff);
      if (!ring.field.is_zero(s)) out.push_back(Term<F>{a[i].mono, s});
      ++i, ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return Polynomial<F>(ring, std::move(out), f.order());
}

template <class F>
Polynomial<F> poly_neg(const Ring<F>& ring, const Polynomial<F>& f) {
  std::vector<Term<F>> out = f.terms();
  for (auto& t : out) t.coeff = ring.field.neg(t.coeff);
  return Polynomial<F>(ring, std::move(out), f.order());
}

template <class F>
Polynomial<F> poly_sub(const Ring<F>& ring, const Polynomial<F>& f,
                       const Polynomial<F>& g) {
  return poly_add(ring, f, poly_neg(ring, g));
}

// f * (c * m)
template <class F>
Polynomial<F> poly_mul_term(const Ring<F>& ring, const Polynomial<F>& f,
                            const Monomial& m, const typename F::Elem& c) {
  if (ring.field.is_zero(c)) return Polynomial<F>(f.order());
  std::vector<Term<F>> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms())
    out.push_back(Term<F>{t.mono.mul(m), ring.field.mul(t.coeff, c)});
  return Polynomial<F>(ring, std::move(out), f.order());
}

template <class F>
Polynomial<F> poly_scale(const Ring<F>& ring, const Polynomial<F>& f,
                         const typename F::Elem& c) {
  return poly_mul_term(ring, f, Monomial::one(ring.nvars()), c);
}

template <class F>
Polynomial<F> poly_mul(const Ring<F>& ring, const Polynomial<F>& f,
                       const Polynomial<F>& g) {
  if (!(f.order() == g.order()))
    throw error("polynomial multiplication across different orders");
  std::vector<Term<F>> out;
  out.reserve(f.terms().size() * g.terms().size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms())
      out.push_back(
          Term<F>{a.mono.mul(b.mono), ring.field.mul(a.coeff, b.coeff)});
  return Polynomial<F>(ring, std::move(out), f.order());
}

template <class F>
Polynomial<F> poly_pow(const Ring<F>& ring, const Polynomial<F>& f, int e) {
  if (e < 0) throw error("negative polynomial power");
  Polynomial<F> acc = poly_one(ring, f.order());
  Polynomial<F> base = f;
  while (e > 0) {
    if (e & 1) acc = poly_mul(ring, acc, base);
    e >>= 1;
    if (e) base = poly_mul(ring, base, base);
  }
  return acc;
}

template <class F>
Polynomial<F> make_monic(const Ring<F>& ring, const Polynomial<F>& f) {
  if (f.is_zero()) return f;
  return poly_scale(ring, f, ring.field.inv(f.leading_coeff()));
}

// Explicit re-sort under another order.
template <class F>
Polynomial<F> resorted(const Ring<F>& ring, const Polynomial<F>& f,
                       const MonomialOrder& order) {
  return Polynomial<F>(ring, f.terms(), order);
}

// ---- structural maps -------------------------------------------------------

// Image of f under x_i -> images[i]; target ring supplies the order context.
template <class F>
Polynomial<F> substitute(const Ring<F>& src, const Polynomial<F>& f,
                         const Ring<F>& dst,
                         const std::vector<Polynomial<F>>& images) {
  if (images.size() != src.nvars())
    throw error("substitute: one image per variable required");
  MonomialOrder order =
      images.empty() ? MonomialOrder::grevlex() : images.front().order();
  Polynomial<F> acc = poly_zero(dst, order);
  // cache powers per variable
  std::vector<std::vector<Polynomial<F>>> pows(src.nvars());
  auto power = [&](std::size_t i, int e) {
    auto& cache = pows[i];
    if (cache.empty()) cache.push_back(poly_one(dst, order));
    while ((int)cache.size() <= e)
      cache.push_back(poly_mul(dst, cache.back(), images[i]));
    return cache[e];
  };
  for (const auto& t : f.terms()) {
    Polynomial<F> term = poly_const(dst, t.coeff, order);
    for (std::size_t i = 0; i < src.nvars(); ++i)
      if (t.mono[i] > 0) term = poly_mul(dst, term, power(i, t.mono[i]));
    acc = poly_add(dst, acc, term);
  }
  return acc;
}

// Reinterpret f in an extension of its ring (extra variables appended).
template <class F>
Polynomial<F> promote(const Ring<F>& src, const Polynomial<F>& f,
                      const Ring<F>& dst, const MonomialOrder& order) {
  std::vector<Term<F>> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::vector<int> e = t.mono.exponents();
    e.resize(dst.nvars(), 0);
    out.push_back(Term<F>{Monomial(std::move(e)), t.coeff});
  }
  (void)src;
  return Polynomial<F>(dst, std::move(out), order);
}

// Drop trailing variables (which must not occur in f).
template <class F>
Polynomial<F> restrict_vars(const Ring<F>& src, const Polynomial<F>& f,
                            const Ring<F>& dst, const MonomialOrder& order) {
  std::vector<Term<F>> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::vector<int> e = t.mono.exponents();
    for (std::size_t i = dst.nvars(); i < src.nvars(); ++i)
      if (e[i] != 0)
        throw internal_error("restrict_vars: variable still present");
    e.resize(dst.nvars());
    out.push_back(Term<F>{Monomial(std::move(e)), t.coeff});
  }
  return Polynomial<F>(dst, std::move(out), order);
}

// ---- printing --------------------------------------------------------------

template <class F>
std::string monomial_to_string(const Ring<F>& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

template <class F>
std::string poly_to_string(const Ring<F>& ring, const Polynomial<F>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    if (!s.empty()) s += " + ";
    std::string c = ring.field.str(t.coeff);
    if (t.mono.is_one())
      s += c;
    else if (c == "1")
      s += monomial_to_string(ring, t.mono);
    else
      s += c + "*" + monomial_to_string(ring, t.mono);
  }
  return s;
}

}  // namespace reduktor
