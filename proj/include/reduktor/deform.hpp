#pragma once

// One-parameter degenerations driven by integer weight vectors, plus initial
// ideals for term orders and the generic initial ideal.  The deformation of
// an ideal lives in R[t] with the deformation variable appended last; the
// fiber at t = 0 is the weight-initial ideal and the fiber at t = 1 recovers
// the source.  The deformation variable carries no grading of its own, so
// family members are x-homogeneous but not t-homogeneous; every Groebner run
// on the family uses a global order, where that does not matter.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reduktor/errors.hpp"
#include "reduktor/forms.hpp"
#include "reduktor/ideal.hpp"
#include "reduktor/ideal_ops.hpp"
#include "reduktor/linalg.hpp"
#include "reduktor/polynomial.hpp"
#include "reduktor/presentation.hpp"
#include "reduktor/reduction.hpp"
#include "reduktor/ring.hpp"
#include "reduktor/rng.hpp"

namespace reduktor {

inline long long monomial_weight(const Monomial& m,
                                 const std::vector<long long>& lambda) {
  if (lambda.size() != m.nvars())
    throw error("weight vector needs one entry per variable");
  long long acc = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    acc += lambda[i] * m.exponents()[i];
  return acc;
}

// Terms of maximal lambda-weight.
template <class F>
Polynomial<F> weight_initial_form(const Ring<F>& ring, const Polynomial<F>& f,
                                  const std::vector<long long>& lambda) {
  if (f.is_zero()) return f;
  long long top = monomial_weight(f.terms().front().mono, lambda);
  for (const auto& t : f.terms())
    top = std::max(top, monomial_weight(t.mono, lambda));
  std::vector<Term<F>> kept;
  for (const auto& t : f.terms())
    if (monomial_weight(t.mono, lambda) == top) kept.push_back(t);
  return Polynomial<F>(ring, std::move(kept), f.order());
}

// in_lambda(I), generated by the weight-initial forms of a Groebner basis
// under the weight order refined by `tie`.  Generally not a monomial ideal.
// Negative weights are fine as long as the generators are homogeneous.
template <class F>
Ideal<F> weight_initial_ideal(const Ideal<F>& source,
                              const std::vector<long long>& lambda,
                              TieBreak tie = TieBreak::grevlex,
                              const GroebnerLimits& limits = {}) {
  const auto order = MonomialOrder::weight(lambda, tie);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : source.groebner(order, limits)) {
    auto form = weight_initial_form(source.ring(), g, lambda);
    gens.push_back(Polynomial<F>(source.ring(), form.terms(),
                                 MonomialOrder::grevlex()));
  }
  return make_ideal(source.ring(), std::move(gens));
}

// Monomial ideal of Groebner leading terms.
template <class F>
Ideal<F> initial_ideal(const Ideal<F>& source, const MonomialOrder& order,
                       const GroebnerLimits& limits = {}) {
  std::vector<Polynomial<F>> gens;
  for (const auto& g : source.groebner(order, limits))
    gens.push_back(poly_monomial(source.ring(), g.leading_monomial(),
                                 MonomialOrder::grevlex()));
  return make_ideal(source.ring(), std::move(gens));
}

template <class F>
struct WeightContext {
  Ring<F> source;
  Ring<F> ambient;   // source variables plus the deformation variable, last
  std::size_t tvar;  // index of the deformation variable in `ambient`
  std::vector<long long> lambda;
};

template <class F>
WeightContext<F> make_weight_context(const Ring<F>& ring,
                                     std::vector<long long> lambda) {
  if (lambda.size() != ring.nvars())
    throw error("weight vector needs one entry per variable");
  auto ambient = extend_ring(ring, {fresh_var_name(ring, "t")});
  return WeightContext<F>{ring, std::move(ambient), ring.nvars(),
                          std::move(lambda)};
}

template <class F>
struct WeightedLift {
  Polynomial<F> value;   // element of the ambient ring
  long long top_weight;  // b(f): largest lambda-weight over the terms of f
};

// f* = sum over terms c x^a t^(b(f) - lambda(a)).  Every exponent of the
// deformation variable is nonnegative and at least one of them is zero, and
// every term satisfies lambda(x-part) + t-exponent = b(f).
template <class F>
WeightedLift<F> weight_homogenize(const WeightContext<F>& ctx,
                                  const Polynomial<F>& f) {
  const auto order = MonomialOrder::grevlex();
  if (f.is_zero()) return {poly_zero(ctx.ambient, order), 0};
  long long top = monomial_weight(f.terms().front().mono, ctx.lambda);
  for (const auto& t : f.terms())
    top = std::max(top, monomial_weight(t.mono, ctx.lambda));
  std::vector<Term<F>> lifted;
  lifted.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    const long long gap = top - monomial_weight(t.mono, ctx.lambda);
    if (gap > 1000000)
      throw resource_error("weight-gap",
                           "homogenization exponent exceeds 10^6");
    std::vector<int> exps = t.mono.exponents();
    exps.push_back(static_cast<int>(gap));
    lifted.push_back(Term<F>{Monomial(std::move(exps)), t.coeff});
  }
  return {Polynomial<F>(ctx.ambient, std::move(lifted), order), top};
}

// Fiber of a family at a scalar value of the deformation variable.
template <class F>
Ideal<F> fiber_at(const WeightContext<F>& ctx, const Ideal<F>& family,
                  const typename F::Elem& value) {
  const auto order = MonomialOrder::grevlex();
  std::vector<Polynomial<F>> images;
  images.reserve(ctx.ambient.nvars());
  for (std::size_t i = 0; i < ctx.source.nvars(); ++i)
    images.push_back(poly_var(ctx.source, i, order));
  images.push_back(
      poly_monomial(ctx.source, Monomial::one(ctx.source.nvars()), order,
                    value));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : family.generators()) {
    auto image = substitute(ctx.ambient, g, ctx.source, images);
    if (!image.is_zero()) gens.push_back(std::move(image));
  }
  return make_ideal(ctx.source, std::move(gens));
}

template <class F>
struct DeformedIdeal {
  WeightContext<F> ctx;
  Ideal<F> family;               // t-saturated; flat over k[t]
  Ideal<F> initial;              // fiber at t = 0, the weight-initial ideal
  std::vector<long long> tops;   // b(f_j) for each source generator
};

// Order adapted to the family: weight (2*lambda, 1) refined by grevlex.  On
// the homogenization f* of an x-homogeneous f the weight of a term x^a t^e
// is b(f) + lambda(a), so the source leading term stays in front and the
// deformation variable is confined to the tails.
template <class F>
MonomialOrder family_order(const WeightContext<F>& ctx) {
  std::vector<long long> w;
  w.reserve(ctx.lambda.size() + 1);
  for (auto v : ctx.lambda) w.push_back(2 * v);
  w.push_back(1);
  return MonomialOrder::weight(std::move(w), TieBreak::grevlex);
}

// Saturated one-parameter family interpolating between an ideal and its
// weight-initial degeneration.  Homogenizing a Groebner basis adapted to
// the weight yields the t-saturated family directly; homogenizing the raw
// generators would need a saturation step whose basis can run far past the
// degree budget.  Verifies, before returning, that the deformation variable
// is a nonzerodivisor on the family, that the fiber at zero equals
// in_lambda of the source, and that the fiber at one recovers the source.
template <class F>
DeformedIdeal<F> deformed_ideal(const Ideal<F>& source,
                                std::vector<long long> lambda,
                                const GroebnerLimits& limits = {}) {
  const auto& ring = source.ring();
  auto ctx = make_weight_context(ring, std::move(lambda));
  const auto worder = MonomialOrder::weight(ctx.lambda, TieBreak::grevlex);
  std::vector<Polynomial<F>> lifts;
  for (const auto& g : source.groebner(worder, limits))
    lifts.push_back(weight_homogenize(ctx, g).value);
  std::vector<long long> tops;
  for (const auto& g : source.generators()) {
    if (g.is_zero()) continue;
    tops.push_back(weight_homogenize(ctx, g).top_weight);
  }
  const auto order = MonomialOrder::grevlex();
  auto family = make_ideal(ctx.ambient, std::move(lifts));
  // Leading terms free of t certify (family : t) = family: if t*h lies in
  // the family, the normal form of h would otherwise keep a leading term
  // divisible by a t-free basis leading term.
  for (const auto& g : family.groebner(family_order(ctx), limits)) {
    if (g.leading_monomial()[ctx.tvar] > 0)
      throw internal_error(
          "deformation variable divides a leading term of the family");
  }
  auto special = fiber_at(ctx, family, ring.field.zero());
  if (!equal_ideals(special,
                    weight_initial_ideal(source, ctx.lambda,
                                         TieBreak::grevlex, limits),
                    order, limits))
    throw internal_error(
        "special fiber of the family differs from the weight-initial ideal");
  if (!equal_ideals(fiber_at(ctx, family, ring.field.one()), source, order,
                    limits))
    throw internal_error(
        "fiber of the family at one differs from the source ideal");
  return {std::move(ctx), std::move(family), std::move(special),
          std::move(tops)};
}

// Integer weight vector whose initial forms agree with `order` on the
// reduced Groebner basis of the source: within each basis element the
// leading term strictly outweighs every other term.  That pins the initial
// ideal, since (in(I) =) the span of those leading terms sits inside
// in_lambda(I) and both degenerations share the Hilbert function of I.
// Searched greedily through vectors with small nonnegative entries, so the
// result stays budget-friendly for later homogenization; a power-basis
// vector built from the order's staircase rows is the fallback.
template <class F>
std::vector<long long> order_weight_vector(const Ideal<F>& source,
                                           const MonomialOrder& order,
                                           const GroebnerLimits& limits = {}) {
  const auto& ring = source.ring();
  const std::size_t m = ring.nvars();
  if (m == 0) throw error("weight representation needs variables");

  std::vector<std::vector<long long>> diffs;
  int maxdeg = 0;
  for (const auto& g : source.groebner(order, limits)) {
    maxdeg = std::max(maxdeg, g.total_degree());
    const auto& lead = g.leading_monomial().exponents();
    for (std::size_t k = 1; k < g.terms().size(); ++k) {
      const auto& other = g.terms()[k].mono.exponents();
      std::vector<long long> d(m);
      for (std::size_t j = 0; j < m; ++j)
        d[j] = (long long)lead[j] - other[j];
      diffs.push_back(std::move(d));
    }
  }
  const auto separates = [&](const std::vector<long long>& lambda) {
    for (const auto& d : diffs) {
      long long dot = 0;
      for (std::size_t j = 0; j < m; ++j) dot += lambda[j] * d[j];
      if (dot < 1) return false;
    }
    return true;
  };
  if (diffs.empty()) return std::vector<long long>(m, 0);

  // shells of growing maximum entry, odometer order inside each shell
  for (long long top = 1; top <= 24; ++top) {
    double count = 1;
    for (std::size_t j = 0; j < m; ++j) count *= (double)(top + 1);
    if (count > 2e6)
      throw resource_error("weight-representation",
                           "weight search space exceeds the budget");
    std::vector<long long> lambda(m, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < m && lambda[i] == top) lambda[i++] = 0;
      if (i == m) break;
      ++lambda[i];
      bool fresh = false;  // skip vectors already seen in smaller shells
      for (std::size_t j = 0; j < m; ++j) fresh = fresh || lambda[j] == top;
      if (fresh && separates(lambda)) return lambda;
    }
  }

  // fallback: staircase rows of the order, dominant base powers
  std::vector<std::vector<long long>> rows;
  const auto push_tie_rows = [&](TieBreak tie) {
    if (tie == TieBreak::lex) {
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<long long> r(m, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
      }
    } else {
      rows.push_back(std::vector<long long>(m, 1));
      for (std::size_t i = m; i-- > 1;) {
        std::vector<long long> r(m, 0);
        r[i] = -1;
        rows.push_back(std::move(r));
      }
    }
  };
  switch (order.kind()) {
    case OrderKind::lex:
      push_tie_rows(TieBreak::lex);
      break;
    case OrderKind::grevlex:
      push_tie_rows(TieBreak::grevlex);
      break;
    case OrderKind::weight:
      rows.push_back(order.weights());
      push_tie_rows(order.tie_break());
      break;
  }
  for (long long base = 2LL * maxdeg + 3, round = 0; round < 16;
       base *= 2, ++round) {
    std::vector<long long> lambda(m, 0);
    long long power = 1;
    bool overflow = false;
    for (std::size_t r = rows.size(); r-- > 0;) {
      for (std::size_t j = 0; j < m; ++j) lambda[j] += rows[r][j] * power;
      if (power > (1LL << 40) / base) {
        overflow = true;
        break;
      }
      power *= base;
    }
    if (overflow) break;
    if (separates(lambda)) return lambda;
  }
  throw error(
      "no weight vector represents the order on this Groebner basis");
}

struct VasconcelosReport {
  int r_source = -1;
  int r_initial = -1;
  bool holds = false;
  int trials_used = 0;
  bool retried = false;
  std::uint64_t seed = 0;
};

namespace detail {

template <class F>
VasconcelosReport vasconcelos_run(const Presentation<F>& pres,
                                  const Ideal<F>& initial, int trials,
                                  std::uint64_t seed,
                                  const ReductionOptions& opts) {
  if (trials < 1) throw error("trial count must be positive");
  Presentation<F> ini(pres.ring(), initial.generators());
  VasconcelosReport rep;
  rep.seed = seed;
  for (int round = 0; round < 2; ++round) {
    const int n = round == 0 ? trials : 3 * trials;
    const std::uint64_t s = round == 0 ? seed : mix_seed(seed, 0x7e5eedULL);
    const auto src = generic_reduction_number(pres, n, s, opts);
    const auto ini_rep =
        generic_reduction_number(ini, n, mix_seed(s, 0x1417ULL), opts);
    rep.r_source = src.r_value.value();
    rep.r_initial = ini_rep.r_value.value();
    rep.trials_used = n;
    rep.holds = rep.r_source <= rep.r_initial;
    if (rep.holds) return rep;
    rep.retried = true;
  }
  return rep;
}

}  // namespace detail

// Sampled check that passing to the initial ideal cannot lower the reduction
// number.  A failed comparison is retried once with three times the trials
// before being reported; holds == false in the result is a genuine
// counterexample candidate and callers are expected to flag it.
template <class F>
VasconcelosReport vasconcelos_check(const Presentation<F>& pres,
                                    const MonomialOrder& order, int trials,
                                    std::uint64_t seed,
                                    const ReductionOptions& opts = {},
                                    const GroebnerLimits& limits = {}) {
  return detail::vasconcelos_run(
      pres, initial_ideal(pres.ideal(), order, limits), trials, seed, opts);
}

template <class F>
VasconcelosReport vasconcelos_check(const Presentation<F>& pres,
                                    const std::vector<long long>& lambda,
                                    int trials, std::uint64_t seed,
                                    const ReductionOptions& opts = {},
                                    const GroebnerLimits& limits = {}) {
  return detail::vasconcelos_run(
      pres, weight_initial_ideal(pres.ideal(), lambda, TieBreak::grevlex,
                                 limits),
      trials, seed, opts);
}

template <class F>
struct GinReport {
  Ideal<F> gin;
  std::vector<typename F::Elem> change;  // row-major coordinate change
  int attempts = 1;
};

// Initial ideal in generic coordinates under graded reverse lex: a random
// invertible linear change of variables followed by initial_ideal.  Distinct
// seeds agree with high probability over a large field.
template <class F>
GinReport<F> generic_initial_ideal(const Ideal<F>& source, std::uint64_t seed,
                                   const GroebnerLimits& limits = {}) {
  const auto& ring = source.ring();
  const std::size_t m = ring.nvars();
  const auto order = MonomialOrder::grevlex();
  for (int attempt = 0; attempt < 64; ++attempt) {
    SeededRng rng(detail::mix_seed(seed, 0x91AULL + attempt));
    std::vector<typename F::Elem> change;
    change.reserve(m * m);
    Matrix<F> probe(0, m, ring.field);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<typename F::Elem> row;
      for (std::size_t j = 0; j < m; ++j) {
        row.push_back(ring.field.random(rng));
        change.push_back(row.back());
      }
      probe.append_row(row);
    }
    if (matrix_rank(ring.field, probe) < m) continue;
    std::vector<Polynomial<F>> images;
    for (std::size_t i = 0; i < m; ++i) {
      Polynomial<F> im = poly_zero(ring, order);
      for (std::size_t j = 0; j < m; ++j)
        im = poly_add(ring, im,
                      poly_monomial(ring, Monomial::var(m, j), order,
                                    change[i * m + j]));
      images.push_back(std::move(im));
    }
    std::vector<Polynomial<F>> gens;
    for (const auto& g : source.generators()) {
      auto image = substitute(ring, g, ring, images);
      if (!image.is_zero()) gens.push_back(std::move(image));
    }
    return {initial_ideal(make_ideal(ring, std::move(gens)), order, limits),
            std::move(change), attempt + 1};
  }
  throw internal_error("no invertible coordinate change found");
}

}  // namespace reduktor
