#pragma once

// Reductions of a homogeneous ideal inside a graded quotient ring: fiber
// ring presentation, the testing ideal whose unit locus parameterizes the
// minimal reductions, the sandwich bounding the core, and membership
// certificates for the generic contraction.  All ideals of the quotient L
// are represented by ideals of its polynomial cover containing the defining
// ideal.

#include <cstdint>
#include <map>
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

// Homogeneous ideal of a graded quotient, held as same-degree normal-form
// lifts.  Equal generator degrees keep the fiber ring computable as the
// subalgebra the generators span.
template <class F>
struct QuotientIdeal {
  Presentation<F> ambient;
  std::vector<Polynomial<F>> gens;
  int degree = 1;
};

template <class F>
QuotientIdeal<F> make_quotient_ideal(const Presentation<F>& ambient,
                                     const std::vector<Polynomial<F>>& gens,
                                     const GroebnerLimits& limits = {}) {
  if (gens.empty()) throw error("quotient ideal needs generators");
  const auto& ring = ambient.ring();
  const auto order = MonomialOrder::grevlex();
  const auto& gb = ambient.ideal().groebner(order, limits);
  QuotientIdeal<F> q{ambient, {}, 0};
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto nf = normal_form(ring, gens[k], gb, order);
    if (nf.is_zero())
      throw error("generator " + std::to_string(k + 1) +
                  " lies in the defining ideal");
    const auto deg = nf.homogeneous_degree();
    if (!deg)
      throw error("generator " + std::to_string(k + 1) +
                  " is not homogeneous");
    if (k == 0)
      q.degree = *deg;
    else if (*deg != q.degree)
      throw unsupported_error(
          "mixed generator degrees: the fiber ring of this ideal is out of "
          "scope");
    q.gens.push_back(std::move(nf));
  }
  return q;
}

namespace detail {

// Row-reduced spanning set over the field with coordinates of each stored
// row in terms of the originally inserted vectors.
template <class F>
class SpanBasis {
 public:
  using Elem = typename F::Elem;

  SpanBasis(const F& field, std::size_t width) : field_(field), width_(width) {}

  std::size_t size() const { return rows_.size(); }

  // Inserts v if independent of the rows so far; returns whether it was.
  bool insert(const std::vector<Elem>& v) {
    auto [residue, coords] = reduce(v);
    std::size_t p = 0;
    while (p < width_ && residue[p] == field_.zero()) ++p;
    if (p == width_) return false;
    const Elem inv = field_.inv(residue[p]);
    for (auto& e : residue) e = field_.mul(e, inv);
    for (auto& e : coords) e = field_.mul(e, field_.neg(inv));
    coords.push_back(inv);
    rows_.push_back(std::move(residue));
    pivots_.push_back(p);
    combos_.push_back(std::move(coords));
    return true;
  }

  // Coordinates of v in the inserted vectors, if v lies in their span.
  std::optional<std::vector<Elem>> coordinates(const std::vector<Elem>& v)
      const {
    auto [residue, coords] = reduce(v);
    for (const auto& e : residue)
      if (e != field_.zero()) return std::nullopt;
    coords.resize(rows_.size(), field_.zero());
    return coords;
  }

 private:
  // v = residue + sum coords[t] * inserted[t]
  std::pair<std::vector<Elem>, std::vector<Elem>> reduce(
      std::vector<Elem> v) const {
    if (v.size() != width_) throw internal_error("span basis width mismatch");
    std::vector<Elem> coords(rows_.size(), field_.zero());
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      const Elem c = v[pivots_[t]];
      if (c == field_.zero()) continue;
      for (std::size_t j = 0; j < width_; ++j)
        v[j] = field_.sub(v[j], field_.mul(c, rows_[t][j]));
      for (std::size_t s = 0; s < combos_[t].size(); ++s)
        coords[s] = field_.sub(coords[s], field_.mul(c, combos_[t][s]));
    }
    for (auto& e : coords) e = field_.neg(e);
    return {std::move(v), std::move(coords)};
  }

  F field_;
  std::size_t width_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Elem>> combos_;  // row t as combo of inserted
};

template <class F>
typename F::Elem evaluate_scalar(const Ring<F>& ring, const Polynomial<F>& f,
                                 const std::vector<typename F::Elem>& at) {
  if (at.size() != ring.nvars())
    throw error("evaluation needs one value per variable");
  const auto& field = ring.field;
  auto acc = field.zero();
  for (const auto& t : f.terms()) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
      for (int e = 0; e < t.mono.exponents()[i]; ++e)
        v = field.mul(v, at[i]);
    acc = field.add(acc, v);
  }
  return acc;
}

// Monomial in given polynomials: prod gens[i]^exps[i].
template <class F>
Polynomial<F> word_image(const Ring<F>& ring,
                         const std::vector<Polynomial<F>>& gens,
                         const Monomial& word) {
  auto acc = poly_one(ring, MonomialOrder::grevlex());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int e = 0; e < word.exponents()[i]; ++e)
      acc = poly_mul(ring, acc, gens[i]);
  return acc;
}

}  // namespace detail

// Presentation of the fiber ring F(a) = k[a_1,...,a_s] regraded so the
// generators sit in degree one: kernel of y_i -> a_i by elimination.
template <class F>
Presentation<F> fiber_ring(const QuotientIdeal<F>& q,
                           const GroebnerLimits& limits = {}) {
  const auto& ring = q.ambient.ring();
  const std::size_t s = q.gens.size();
  const std::size_t m = ring.nvars();
  const auto order = MonomialOrder::grevlex();

  std::vector<std::string> names;
  for (std::size_t i = 0; i < s; ++i) {
    std::string want = "y" + std::to_string(i + 1);
    if (ring.var_index(want) >= 0) want += "@";
    names.push_back(want);
  }
  auto yring = make_ring(ring.field, names);
  for (std::size_t i = 0; i < m; ++i) names.push_back(ring.vars[i]);
  auto ext = make_ring(ring.field, names);

  std::vector<Polynomial<F>> ximages;
  for (std::size_t i = 0; i < m; ++i)
    ximages.push_back(poly_var(ext, s + i, order));
  std::vector<Polynomial<F>> big;
  for (const auto& g : q.ambient.ideal().generators())
    big.push_back(substitute(ring, g, ext, ximages));
  for (std::size_t i = 0; i < s; ++i)
    big.push_back(poly_sub(ext, poly_var(ext, i, order),
                           substitute(ring, q.gens[i], ext, ximages)));

  std::vector<int> keep;
  for (std::size_t i = 0; i < s; ++i) keep.push_back((int)i);
  auto kernel = eliminate(make_ideal(ext, std::move(big)), keep, limits);
  std::vector<Polynomial<F>> fgens;
  for (const auto& g : kernel.generators())
    fgens.push_back(restrict_vars(ext, g, yring, order));
  return validate_presentation(yring, std::move(fgens));
}

template <class F>
int analytic_spread(const QuotientIdeal<F>& q,
                    const GroebnerLimits& limits = {}) {
  return fiber_ring(q, limits).dim();
}

// Reduction data of the quotient ideal through its fiber ring.  alpha rows
// parameterize candidate reductions c_i = sum_j alpha_ij a_j.
template <class F>
ReductionReport local_reduction_number(const QuotientIdeal<F>& q,
                                       const ReductionParams<F>& alpha,
                                       const ReductionOptions& opts = {}) {
  return reduction_number_of(fiber_ring(q), alpha, opts);
}

template <class F>
ReductionReport generic_local_reduction_number(const QuotientIdeal<F>& q,
                                               int trials, std::uint64_t seed,
                                               const ReductionOptions& opts =
                                                   {}) {
  return generic_reduction_number(fiber_ring(q), trials, seed, opts);
}

template <class F>
SpectrumReport local_reduction_spectrum(const QuotientIdeal<F>& q,
                                        const SymbolicSpectrumOptions& opts =
                                            {}) {
  return reduction_spectrum_symbolic(fiber_ring(q), opts);
}

// Testing ideal: maximal minors of the coefficient matrix of the generic
// elements against a fixed basis of a^(br+1).  Its unit locus in u-space is
// exactly the set of minimal-reduction parameters.
template <class F>
struct TestingIdeal {
  Presentation<F> ambient;
  Presentation<F> fiber;
  std::vector<Polynomial<F>> gens;     // normal-form lifts of the a_i
  Ring<F> uring;                       // k[u], spread rows by s columns
  Ring<F> mixed;                       // ambient variables then u variables
  Ideal<F> minors;                     // the testing ideal, in uring
  Ideal<F> generic;                    // (b_1..b_d) + defining ideal, mixed
  std::vector<Polynomial<F>> basis;    // fixed basis of a^(br+1), in ambient
  std::vector<Monomial> basis_words;   // chosen monomials in the generators
  int big_reduction = 0;
  int spread = 0;
  int minor_size = 0;
};

template <class F>
TestingIdeal<F> testing_ideal(const QuotientIdeal<F>& q,
                              const SymbolicSpectrumOptions& spectrum_opts =
                                  {},
                              const GroebnerLimits& limits = {}) {
  const auto& ring = q.ambient.ring();
  const auto& field = ring.field;
  const auto order = MonomialOrder::grevlex();
  const std::size_t s = q.gens.size();

  auto fiber = fiber_ring(q, limits);
  const int d = fiber.dim();
  if (d < 0) throw internal_error("fiber ring of a proper ideal is the unit");
  if (s * (std::size_t)d > 6)
    throw resource_error("testing-ideal",
                         "generator count times analytic spread exceeds 6");
  const int br = big_reduction_number_symbolic(fiber, spectrum_opts);

  // fixed basis of a^(br+1): first independent monomial images, scanning
  // the degree-(br+1) words in the generators in descending lex order
  const int slice_degree = q.degree * (br + 1);
  const auto columns = detail::standard_monomials(q.ambient, slice_degree);
  std::map<std::vector<int>, std::size_t> column_index;
  for (std::size_t c = 0; c < columns.size(); ++c)
    column_index.emplace(columns[c].exponents(), c);
  const auto& gb = q.ambient.ideal().groebner(order, limits);
  const auto slice_vector = [&](const Polynomial<F>& f) {
    std::vector<typename F::Elem> v(columns.size(), field.zero());
    for (const auto& t : f.terms()) {
      auto it = column_index.find(t.mono.exponents());
      if (it == column_index.end())
        throw internal_error("normal form leaves the standard slice");
      v[it->second] = t.coeff;
    }
    return v;
  };

  TestingIdeal<F> out{q.ambient,
                      fiber,
                      q.gens,
                      parameter_ring(fiber.ring(), (std::size_t)d),
                      ring,  // replaced below
                      make_ideal(parameter_ring(fiber.ring(), (std::size_t)d),
                                 {}),
                      make_ideal(ring, {}),  // replaced below
                      {},
                      {},
                      br,
                      d,
                      0};

  detail::SpanBasis<F> span(field, columns.size());
  for (const auto& word :
       monomials_of_degree(s, br + 1, MonomialOrder::lex())) {
    auto image = normal_form(ring, detail::word_image(ring, q.gens, word), gb,
                             order);
    if (image.is_zero()) continue;
    if (span.insert(slice_vector(image))) {
      out.basis_words.push_back(word);
      out.basis.push_back(std::move(image));
    }
  }
  const std::size_t h = out.basis.size();
  if (h > 12)
    throw resource_error("testing-ideal",
                         "power of the ideal needs more than 12 generators");
  out.minor_size = (int)h;

  // coefficient rows of b_i * g over the fixed basis, entries linear in u
  std::vector<std::vector<Polynomial<F>>> rows;
  if (d > 0 && h > 0) {
    std::vector<std::vector<std::vector<typename F::Elem>>> coords_by_word;
    std::vector<Monomial> words = monomials_of_degree(s, br,
                                                      MonomialOrder::lex());
    for (const auto& g : words) {
      auto gimage = detail::word_image(ring, q.gens, g);
      std::vector<std::vector<typename F::Elem>> per_gen;
      for (std::size_t j = 0; j < s; ++j) {
        auto prod = normal_form(ring, poly_mul(ring, gimage, q.gens[j]), gb,
                                order);
        auto coords = span.coordinates(slice_vector(prod));
        if (!coords)
          throw internal_error("product escapes the fixed power basis");
        per_gen.push_back(std::move(*coords));
      }
      coords_by_word.push_back(std::move(per_gen));
    }
    for (int i = 0; i < d; ++i)
      for (const auto& per_gen : coords_by_word) {
        std::vector<Polynomial<F>> row;
        for (std::size_t b = 0; b < h; ++b) {
          auto entry = poly_zero(out.uring, order);
          for (std::size_t j = 0; j < s; ++j) {
            if (per_gen[j][b] == field.zero()) continue;
            entry = poly_add(
                out.uring, entry,
                poly_monomial(out.uring,
                              Monomial::var(out.uring.nvars(), i * s + j),
                              order, per_gen[j][b]));
          }
          row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
      }
  }
  out.minors = detail::maximal_minor_ideal(out.uring, rows, h);

  // mixed ring: ambient variables first, then collision-free u names
  {
    auto acc = ring;
    for (const auto& uname : out.uring.vars)
      acc = extend_ring(acc, {fresh_var_name(acc, uname)});
    out.mixed = acc;
  }
  const std::size_t m = ring.nvars();
  std::vector<Polynomial<F>> to_mixed;
  for (std::size_t i = 0; i < m; ++i)
    to_mixed.push_back(poly_var(out.mixed, i, order));
  std::vector<Polynomial<F>> qgens;
  for (int i = 0; i < d; ++i) {
    auto b = poly_zero(out.mixed, order);
    for (std::size_t j = 0; j < s; ++j)
      b = poly_add(out.mixed, b,
                   poly_mul(out.mixed,
                            poly_var(out.mixed, m + i * s + j, order),
                            substitute(ring, q.gens[j], out.mixed, to_mixed)));
    qgens.push_back(std::move(b));
  }
  for (const auto& g : q.ambient.ideal().generators())
    qgens.push_back(substitute(ring, g, out.mixed, to_mixed));
  out.generic = make_ideal(out.mixed, std::move(qgens));

  // invariant: J * a^(br+1) lies in the generic ideal
  std::vector<Polynomial<F>> uimages;
  for (std::size_t k = 0; k < out.uring.nvars(); ++k)
    uimages.push_back(poly_var(out.mixed, m + k, order));
  for (const auto& mu : out.minors.generators()) {
    auto mu_mixed = substitute(out.uring, mu, out.mixed, uimages);
    for (const auto& beta : out.basis) {
      auto lifted = poly_mul(out.mixed, mu_mixed,
                             substitute(ring, beta, out.mixed, to_mixed));
      if (!contains(out.generic, lifted))
        throw internal_error(
            "testing ideal times the power escapes the generic ideal");
    }
  }
  // invariant: reduced modulo the irrelevant ideal, the testing ideal is the
  // symbolic minor ideal of the fiber ring one past the big reduction number
  if (!equal_ideals(out.minors,
                    reduced_variety_chain_ideal(fiber, br + 1).minors))
    throw internal_error(
        "testing ideal disagrees with the fiber-ring minor ideal");
  return out;
}

// q parameterized by alpha is a minimal reduction iff the specialized
// testing ideal is the unit ideal; with scalar alpha that means some minor
// evaluates to a nonzero constant.
template <class F>
bool minimal_reduction_test_local(const TestingIdeal<F>& t,
                                  const ReductionParams<F>& alpha) {
  if (alpha.rows != (std::size_t)t.spread ||
      alpha.cols != t.gens.size())
    throw error("alpha must be spread by generator-count");
  for (const auto& mu : t.minors.generators())
    if (detail::evaluate_scalar(t.uring, mu, alpha.entries) !=
        t.uring.field.zero())
      return true;
  return false;
}

template <class F>
struct CoreSandwichReport {
  Ideal<F> power;    // a^(br+1), as an ideal of the polynomial cover
  Ideal<F> middle;   // (Q : J^inf) contracted to the quotient
  Ideal<F> sampled;  // intersection of sampled minimal reductions
  bool power_in_middle = false;
  bool middle_in_sampled = false;
  bool middle_equals_sampled = false;
  bool stabilized = false;
  int reductions_used = 0;
  std::uint64_t patterns_tried = 0;
  int big_reduction = 0;
  int spread = 0;
};

// Sandwich a^(br+1) <= (Q : J^inf) cap L <= core(a).  The sampled side
// intersects minimal reductions drawn across all zero-support patterns of
// alpha; sparse patterns are essential, dense sampling alone misses
// reductions like a single generator.
template <class F>
CoreSandwichReport<F> core_sandwich(const TestingIdeal<F>& t, int trials,
                                    std::uint64_t seed,
                                    const GroebnerLimits& limits = {}) {
  if (trials < 1) throw error("trial count must be positive");
  const auto& ring = t.ambient.ring();
  const auto& field = ring.field;
  const auto order = MonomialOrder::grevlex();
  const std::size_t s = t.gens.size();
  const std::size_t m = ring.nvars();
  const std::size_t d = (std::size_t)t.spread;

  CoreSandwichReport<F> rep{make_ideal(ring, {}),
                            make_ideal(ring, {}),
                            make_ideal(ring, {}),
                            false,
                            false,
                            false,
                            false,
                            0,
                            0,
                            t.big_reduction,
                            t.spread};

  std::vector<Polynomial<F>> power_gens = t.basis;
  for (const auto& g : t.ambient.ideal().generators())
    power_gens.push_back(g);
  rep.power = make_ideal(ring, std::move(power_gens));

  // middle: iterated saturation of the generic ideal by the minors, checked
  // against a final colon, then contraction by eliminating u
  std::vector<Polynomial<F>> uimages;
  for (std::size_t k = 0; k < t.uring.nvars(); ++k)
    uimages.push_back(poly_var(t.mixed, m + k, order));
  std::vector<Polynomial<F>> minors_mixed;
  for (const auto& mu : t.minors.generators())
    minors_mixed.push_back(substitute(t.uring, mu, t.mixed, uimages));
  auto sat = t.generic;
  for (int sweep = 0; sweep < 8; ++sweep) {
    auto prev = sat;
    for (const auto& mu : minors_mixed) sat = saturate(sat, mu, limits);
    if (equal_ideals(prev, sat)) break;
    if (sweep == 7)
      throw internal_error("saturation by the testing ideal did not settle");
  }
  if (!minors_mixed.empty() &&
      !equal_ideals(colon_ideal(sat, make_ideal(t.mixed, minors_mixed),
                                limits),
                    sat))
    throw internal_error(
        "iterated saturation misses the testing-ideal saturation");
  std::vector<int> keep;
  for (std::size_t i = 0; i < m; ++i) keep.push_back((int)i);
  auto contracted = eliminate(sat, keep, limits);
  std::vector<Polynomial<F>> middle_gens;
  for (const auto& g : contracted.generators())
    middle_gens.push_back(restrict_vars(t.mixed, g, ring, order));
  rep.middle = make_ideal(ring, std::move(middle_gens));

  // sampled upper bound for the core
  if (d == 0) {
    rep.sampled = make_ideal(ring, t.ambient.ideal().generators());
    rep.reductions_used = 1;
    rep.stabilized = true;
    rep.patterns_tried = 1;
  } else {
    const std::size_t bits = s * d;
    std::vector<std::uint64_t> masks;
    if (bits < 10) {
      for (std::uint64_t mask = 1; mask < (1ull << bits); ++mask)
        masks.push_back(mask);
    } else {
      masks.push_back(~0ull >> (64 - bits));
      SeededRng mrng(detail::mix_seed(seed, 0xc03eULL));
      for (int k = 0; k < 512; ++k)
        masks.push_back(1 + mrng.below((1ull << bits) - 1));
    }
    std::optional<Ideal<F>> acc;
    int streak = 0;
    for (int sweep = 0; sweep < 8 && rep.reductions_used < trials; ++sweep) {
      for (const auto mask : masks) {
        if (rep.reductions_used >= trials && streak >= 2) break;
        ++rep.patterns_tried;
        SeededRng rng(detail::mix_seed(
            seed, (std::uint64_t)sweep * 0x9e3779b97f4a7c15ULL + mask));
        ReductionParams<F> alpha;
        alpha.rows = d;
        alpha.cols = s;
        for (std::size_t b = 0; b < bits; ++b)
          alpha.entries.push_back((mask >> b) & 1 ? field.random_nonzero(rng)
                                                  : field.zero());
        if (!minimal_reduction_test_local(t, alpha)) continue;
        std::vector<Polynomial<F>> cgens;
        for (std::size_t i = 0; i < d; ++i) {
          auto c = poly_zero(ring, order);
          for (std::size_t j = 0; j < s; ++j) {
            const auto& e = alpha.entries[i * s + j];
            if (e == field.zero()) continue;
            c = poly_add(ring, c,
                         poly_mul(ring, t.gens[j],
                                  poly_monomial(ring, Monomial::one(m), order,
                                                e)));
          }
          cgens.push_back(std::move(c));
        }
        for (const auto& g : t.ambient.ideal().generators())
          cgens.push_back(g);
        auto candidate = make_ideal(ring, std::move(cgens));
        ++rep.reductions_used;
        if (!acc) {
          acc = candidate;
          streak = 0;
          continue;
        }
        auto next = intersect(*acc, candidate, limits);
        if (equal_ideals(next, *acc))
          ++streak;
        else
          streak = 0;
        acc = std::move(next);
      }
    }
    if (!acc) throw error("no minimal reduction found while sampling");
    rep.sampled = *acc;
    rep.stabilized = streak >= 2;
  }

  rep.power_in_middle = contains_ideal(rep.middle, rep.power);
  rep.middle_in_sampled = contains_ideal(rep.sampled, rep.middle);
  if (!rep.power_in_middle || !rep.middle_in_sampled)
    throw internal_error("core sandwich containment failed");
  rep.middle_equals_sampled =
      rep.middle_in_sampled && contains_ideal(rep.middle, rep.sampled);
  return rep;
}

template <class F>
struct ContractionWitness {
  bool member = false;
  // scalar-coefficient polynomial in u with certificate * f in the generic
  // ideal; unit content is automatic
  std::optional<Polynomial<F>> certificate;
};

// Membership of f in the contraction of the generic minimal reduction:
// f lies in it iff some nonzero c(u) over the scalars multiplies f into the
// generic ideal, found exactly by a colon followed by elimination.
template <class F>
ContractionWitness<F> generic_contraction_witness(const TestingIdeal<F>& t,
                                                  const Polynomial<F>& f,
                                                  const GroebnerLimits&
                                                      limits = {}) {
  const auto& ring = t.ambient.ring();
  const auto order = MonomialOrder::grevlex();
  if (!f.is_zero() && !f.homogeneous_degree())
    throw error("contraction witnesses need homogeneous elements");
  const std::size_t m = ring.nvars();
  std::vector<Polynomial<F>> to_mixed;
  for (std::size_t i = 0; i < m; ++i)
    to_mixed.push_back(poly_var(t.mixed, i, order));
  auto fp = substitute(ring, f, t.mixed, to_mixed);

  ContractionWitness<F> out;
  if (fp.is_zero() || contains(t.generic, fp)) {
    out.member = true;
    out.certificate = poly_one(t.uring, order);
    return out;
  }
  auto quot = colon(t.generic, fp, limits);
  std::vector<int> keep;
  for (std::size_t k = 0; k < t.uring.nvars(); ++k)
    keep.push_back((int)(m + k));
  const Polynomial<F>* best = nullptr;
  auto pure = eliminate(quot, keep, limits);
  for (const auto& g : pure.generators()) {
    if (g.is_zero()) continue;
    if (!best || g.terms().size() < best->terms().size()) best = &g;
  }
  if (!best) return out;

  std::vector<Polynomial<F>> to_uring;
  for (std::size_t i = 0; i < m; ++i)
    to_uring.push_back(poly_zero(t.uring, order));
  for (std::size_t k = 0; k < t.uring.nvars(); ++k)
    to_uring.push_back(poly_var(t.uring, k, order));
  auto cert = substitute(t.mixed, *best, t.uring, to_uring);
  if (!contains(t.generic, poly_mul(t.mixed, *best, fp)))
    throw internal_error("contraction certificate fails verification");
  out.member = true;
  out.certificate = make_monic(t.uring, cert);
  return out;
}

}  // namespace reduktor
