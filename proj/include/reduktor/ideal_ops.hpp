#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "reduktor/ideal.hpp"

namespace reduktor {

// Weight order putting the variables outside `keep` in front, refined by
// grevlex.  Any monomial touching an eliminated variable outranks every
// monomial in the kept ones, so basis elements supported on `keep` generate
// the elimination ideal.
template <class F>
MonomialOrder elimination_order(const Ring<F>& ring,
                                const std::vector<int>& keep) {
  std::vector<long long> w(ring.nvars(), 1);
  for (int k : keep) w.at(k) = 0;
  return MonomialOrder::weight(std::move(w), TieBreak::grevlex);
}

// I ∩ k[x_i : i in keep], returned in the same ring.
template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, const std::vector<int>& keep,
                   const GroebnerLimits& limits = {}) {
  const auto& ring = ideal.ring();
  std::vector<bool> kept(ring.nvars(), false);
  for (int k : keep) {
    if (k < 0 || (std::size_t)k >= ring.nvars())
      throw error("eliminate: variable index out of range");
    kept[k] = true;
  }
  const auto order = elimination_order(ring, keep);
  std::vector<Polynomial<F>> out;
  for (const auto& g : ideal.groebner(order, limits)) {
    bool ok = true;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < ring.nvars() && ok; ++i)
        if (t.mono[i] > 0 && !kept[i]) ok = false;
    if (ok) out.push_back(resorted(ring, g, MonomialOrder::grevlex()));
  }
  return make_ideal(ring, std::move(out));
}

// t*I + (1-t)*J with a fresh variable t, then eliminate t.
template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b,
                   const GroebnerLimits& limits = {}) {
  const auto& ring = a.ring();
  if (!(ring == b.ring())) throw error("intersect: rings differ");
  const auto ext = extend_ring(ring, {fresh_var_name(ring, "t@")});
  const std::size_t ti = ext.nvars() - 1;
  const auto go = MonomialOrder::grevlex();
  auto t = poly_var(ext, ti, go);
  auto one_minus_t = poly_sub(ext, poly_one(ext, go), t);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.generators())
    gens.push_back(poly_mul(ext, t, promote(ring, g, ext, go)));
  for (const auto& g : b.generators())
    gens.push_back(poly_mul(ext, one_minus_t, promote(ring, g, ext, go)));
  std::vector<int> keep;
  for (std::size_t i = 0; i < ring.nvars(); ++i) keep.push_back((int)i);
  auto elim = eliminate(make_ideal(ext, std::move(gens)), keep, limits);
  std::vector<Polynomial<F>> out;
  for (const auto& g : elim.generators())
    out.push_back(restrict_vars(ext, g, ring, go));
  return make_ideal(ring, std::move(out));
}

// I : f, via (I ∩ (f)) / f.
template <class F>
Ideal<F> colon(const Ideal<F>& ideal, const Polynomial<F>& f,
               const GroebnerLimits& limits = {}) {
  const auto& ring = ideal.ring();
  if (f.is_zero()) throw error("colon by zero");
  auto meet = intersect(ideal, make_ideal(ring, {f}), limits);
  std::vector<Polynomial<F>> out;
  for (const auto& g : meet.generators())
    out.push_back(exact_divide(ring, g, f));
  return make_ideal(ring, std::move(out));
}

// I : J for an ideal J, as the intersection of the generator colons.
template <class F>
Ideal<F> colon_ideal(const Ideal<F>& ideal, const Ideal<F>& j,
                     const GroebnerLimits& limits = {}) {
  if (j.generators().empty())
    throw error("colon by the zero ideal");
  Ideal<F> acc = colon(ideal, j.generators().front(), limits);
  for (std::size_t i = 1; i < j.generators().size(); ++i)
    acc = intersect(acc, colon(ideal, j.generators()[i], limits), limits);
  return acc;
}

// I : f^∞ via the inverse-variable trick: eliminate z from I + (1 - z f).
template <class F>
Ideal<F> saturate(const Ideal<F>& ideal, const Polynomial<F>& f,
                  const GroebnerLimits& limits = {}) {
  const auto& ring = ideal.ring();
  if (f.is_zero()) throw error("saturate by zero");
  const auto ext = extend_ring(ring, {fresh_var_name(ring, "z@")});
  const std::size_t zi = ext.nvars() - 1;
  const auto go = MonomialOrder::grevlex();
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators())
    gens.push_back(promote(ring, g, ext, go));
  gens.push_back(poly_sub(
      ext, poly_one(ext, go),
      poly_mul(ext, poly_var(ext, zi, go), promote(ring, f, ext, go))));
  std::vector<int> keep;
  for (std::size_t i = 0; i < ring.nvars(); ++i) keep.push_back((int)i);
  auto elim = eliminate(make_ideal(ext, std::move(gens)), keep, limits);
  std::vector<Polynomial<F>> out;
  for (const auto& g : elim.generators())
    out.push_back(restrict_vars(ext, g, ring, go));
  return make_ideal(ring, std::move(out));
}

// I : J^∞ = ∩_g I : g^∞ over the generators g of J.
template <class F>
Ideal<F> saturate_ideal(const Ideal<F>& ideal, const Ideal<F>& j,
                        const GroebnerLimits& limits = {}) {
  if (j.generators().empty()) throw error("saturate by the zero ideal");
  Ideal<F> acc = saturate(ideal, j.generators().front(), limits);
  for (std::size_t i = 1; i < j.generators().size(); ++i)
    acc = intersect(acc, saturate(ideal, j.generators()[i], limits), limits);
  return acc;
}

// f ∈ √I  ⟺  1 ∈ I + (1 - y f).
template <class F>
bool radical_member(const Polynomial<F>& f, const Ideal<F>& ideal,
                    const GroebnerLimits& limits = {}) {
  if (f.is_zero()) return true;
  const auto& ring = ideal.ring();
  const auto ext = extend_ring(ring, {fresh_var_name(ring, "y@")});
  const std::size_t yi = ext.nvars() - 1;
  const auto go = MonomialOrder::grevlex();
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators())
    gens.push_back(promote(ring, g, ext, go));
  gens.push_back(poly_sub(
      ext, poly_one(ext, go),
      poly_mul(ext, poly_var(ext, yi, go), promote(ring, f, ext, go))));
  const auto trick = make_ideal(ext, std::move(gens));
  for (const auto& g : trick.groebner(go, limits))
    if (g.leading_monomial().is_one()) return true;
  return false;
}

namespace detail {

// Minimal generators of the monomial ideal spanned by `monos`.
inline std::vector<Monomial> minimal_monomials(std::vector<Monomial> monos) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < monos.size() && !redundant; ++j) {
      if (i == j) continue;
      if (monos[j].divides(monos[i]))
        redundant = monos[i] == monos[j] ? j < i : true;
    }
    if (!redundant) out.push_back(monos[i]);
  }
  return out;
}

}  // namespace detail

// Krull dimension of R/I, computed combinatorially from the grevlex initial
// ideal: the largest size of a variable subset S such that no leading
// monomial is supported entirely inside S.  Returns -1 for the unit ideal.
template <class F>
int krull_dimension(const Ideal<F>& ideal, const GroebnerLimits& limits = {}) {
  const auto& ring = ideal.ring();
  const std::size_t m = ring.nvars();
  if (m > 20) throw resource_error("dimension-vars", "too many variables");
  const auto& basis = ideal.groebner(MonomialOrder::grevlex(), limits);
  std::vector<Monomial> lts;
  for (const auto& g : basis) {
    if (g.leading_monomial().is_one()) return -1;
    lts.push_back(g.leading_monomial());
  }
  lts = detail::minimal_monomials(std::move(lts));
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    int size = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1ull << i)) ++size;
    if (size <= best) continue;
    bool independent = true;
    for (const auto& lt : lts) {
      bool inside = true;
      for (std::size_t i = 0; i < m && inside; ++i)
        if (lt[i] > 0 && !(mask & (1ull << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

// ---- convenience constructions ---------------------------------------------

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  std::vector<Polynomial<F>> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return make_ideal(a.ring(), std::move(gens));
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators())
      gens.push_back(poly_mul(a.ring(), f, g));
  return make_ideal(a.ring(), std::move(gens));
}

}  // namespace reduktor
