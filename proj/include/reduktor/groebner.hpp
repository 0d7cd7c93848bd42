#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "reduktor/polynomial.hpp"

namespace reduktor {

struct GroebnerLimits {
  std::size_t max_basis = 5000;
  int max_pair_degree = 60;
};

// Full normal form: reduces the leading term repeatedly and keeps the
// irreducible part, so the result has no monomial divisible by a basis
// leading monomial.  Reducer choice is the first match in basis listing
// order, which makes the computation deterministic.
template <class F>
Polynomial<F> normal_form(const Ring<F>& ring, const Polynomial<F>& f,
                          const std::vector<Polynomial<F>>& basis,
                          const MonomialOrder& order) {
  Polynomial<F> work = f.order() == order ? f : resorted(ring, f, order);
  std::vector<Term<F>> done;
  while (!work.is_zero()) {
    const Monomial& m = work.leading_monomial();
    const Polynomial<F>* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(m)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      done.push_back(work.terms().front());
      work = Polynomial<F>(
          ring,
          std::vector<Term<F>>(work.terms().begin() + 1, work.terms().end()),
          order);
      continue;
    }
    auto c = ring.field.div(work.leading_coeff(), reducer->leading_coeff());
    work = poly_sub(
        ring, work,
        poly_mul_term(ring, *reducer, m.div(reducer->leading_monomial()), c));
  }
  return Polynomial<F>(ring, std::move(done), order);
}

template <class F>
Polynomial<F> s_polynomial(const Ring<F>& ring, const Polynomial<F>& f,
                           const Polynomial<F>& g) {
  const Monomial u = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  auto lf = poly_mul_term(ring, f, u.div(f.leading_monomial()),
                          ring.field.inv(f.leading_coeff()));
  auto lg = poly_mul_term(ring, g, u.div(g.leading_monomial()),
                          ring.field.inv(g.leading_coeff()));
  return poly_sub(ring, lf, lg);
}

namespace detail {

// Minimalize + tail-reduce + sort: the unique reduced basis.
template <class F>
std::vector<Polynomial<F>> interreduce(const Ring<F>& ring,
                                       std::vector<Polynomial<F>> basis,
                                       const MonomialOrder& order) {
  // drop elements whose leading monomial is divisible by another's
  std::vector<Polynomial<F>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || basis[j].is_zero()) continue;
      if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) {
        // on ties keep the earlier element
        if (basis[i].leading_monomial() == basis[j].leading_monomial())
          redundant = j < i;
        else
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial<F>> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      auto nf = normal_form(ring, minimal[i], others, order);
      if (nf != minimal[i]) {
        if (nf.is_zero())
          throw internal_error("interreduce: minimal element vanished");
        minimal[i] = nf;
        changed = true;
      }
    }
  }
  for (auto& g : minimal) g = make_monic(ring, g);
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial<F>& a, const Polynomial<F>& b) {
              return order.cmp(a.leading_monomial(), b.leading_monomial()) > 0;
            });
  return minimal;
}

}  // namespace detail

// Buchberger with the normal selection strategy (minimal lcm degree first),
// the coprime criterion, and the chain criterion.  Non-global orders are
// admissible only on homogeneous input; every intermediate polynomial then
// stays homogeneous and each reduction step descends inside one finite
// degree slice, so the usual termination argument applies.
template <class F>
std::vector<Polynomial<F>> groebner_basis_raw(
    const Ring<F>& ring, const std::vector<Polynomial<F>>& gens,
    const MonomialOrder& order, const GroebnerLimits& limits = {}) {
  if (!order.is_global()) {
    for (const auto& g : gens)
      if (!g.homogeneous_degree())
        throw unsupported_error(
            "weight order with negative entries requires homogeneous "
            "generators");
  }

  std::vector<Polynomial<F>> basis;
  for (const auto& g : gens) {
    auto s = g.order() == order ? g : resorted(ring, g, order);
    if (!s.is_zero()) basis.push_back(make_monic(ring, s));
  }

  using PairKey = std::tuple<int, std::size_t, std::size_t>;  // (deg, i, j)
  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto lcm_deg = [&](std::size_t i, std::size_t j) {
    return Monomial::lcm(basis[i].leading_monomial(),
                         basis[j].leading_monomial())
        .degree();
  };
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      queue.insert({lcm_deg(i, j), i, j});

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    done.insert({i, j});
    if (deg > limits.max_pair_degree)
      throw resource_error(
          "s-pair-degree",
          "S-pair degree " + std::to_string(deg) + " exceeds budget " +
              std::to_string(limits.max_pair_degree));
    const Monomial& li = basis[i].leading_monomial();
    const Monomial& lj = basis[j].leading_monomial();
    if (Monomial::coprime(li, lj)) continue;
    // chain criterion: lcm strictly divisible by a third leading monomial
    // whose pairs with i and j were already treated
    const Monomial u = Monomial::lcm(li, lj);
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].leading_monomial().divides(u)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (done.count({p1.first, p1.second}) &&
          done.count({p2.first, p2.second}))
        skip = true;
    }
    if (skip) continue;

    auto s = normal_form(ring, s_polynomial(ring, basis[i], basis[j]), basis,
                         order);
    if (s.is_zero()) continue;
    if (basis.size() + 1 > limits.max_basis)
      throw resource_error(
          "basis-size", "basis size exceeds budget " +
                            std::to_string(limits.max_basis));
    basis.push_back(make_monic(ring, s));
    const std::size_t t = basis.size() - 1;
    for (std::size_t k = 0; k < t; ++k) queue.insert({lcm_deg(k, t), k, t});
  }
  return detail::interreduce(ring, std::move(basis), order);
}

// Test hook: does every S-polynomial reduce to zero?
template <class F>
bool is_groebner_basis(const Ring<F>& ring,
                       const std::vector<Polynomial<F>>& basis,
                       const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(ring, s_polynomial(ring, basis[i], basis[j]), basis,
                       order)
               .is_zero())
        return false;
  return true;
}

// Quotient of g by f when the division is exact (g in (f)).
template <class F>
Polynomial<F> exact_divide(const Ring<F>& ring, const Polynomial<F>& g,
                           const Polynomial<F>& f) {
  if (f.is_zero()) throw error("exact_divide by zero");
  Polynomial<F> work = g.order() == f.order()
                           ? g
                           : resorted(ring, g, f.order());
  Polynomial<F> quot = poly_zero(ring, f.order());
  while (!work.is_zero()) {
    const Monomial& m = work.leading_monomial();
    if (!f.leading_monomial().divides(m))
      throw internal_error("exact_divide: division is not exact");
    auto c = ring.field.div(work.leading_coeff(), f.leading_coeff());
    auto t = poly_monomial(ring, m.div(f.leading_monomial()), f.order(),
                           std::optional<typename F::Elem>(c));
    quot = poly_add(ring, quot, t);
    work = poly_sub(ring, work, poly_mul(ring, t, f));
  }
  return quot;
}

}  // namespace reduktor
