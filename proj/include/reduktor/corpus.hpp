#pragma once

// Reproducible random presentations for the property suites.  Four shapes:
// monomial (initial ideal equals the ideal), binomial differences, dense
// forms, and complete intersections built from pairwise coprime leading
// powers.  Sizes stay small: at most 4 variables, 4 generators, degree 4.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reduktor/errors.hpp"
#include "reduktor/monomial.hpp"
#include "reduktor/polynomial.hpp"
#include "reduktor/presentation.hpp"
#include "reduktor/reduction.hpp"
#include "reduktor/rng.hpp"

namespace reduktor {

enum class CorpusProfile { monomial, binomial, dense, complete_intersection,
                           mixed };

inline std::optional<CorpusProfile> corpus_profile_from(
    const std::string& name) {
  if (name == "monomial") return CorpusProfile::monomial;
  if (name == "binomial") return CorpusProfile::binomial;
  if (name == "dense") return CorpusProfile::dense;
  if (name == "complete-intersection")
    return CorpusProfile::complete_intersection;
  if (name == "mixed") return CorpusProfile::mixed;
  return std::nullopt;
}

inline const char* corpus_profile_name(CorpusProfile p) {
  switch (p) {
    case CorpusProfile::monomial: return "monomial";
    case CorpusProfile::binomial: return "binomial";
    case CorpusProfile::dense: return "dense";
    case CorpusProfile::complete_intersection:
      return "complete-intersection";
    case CorpusProfile::mixed: return "mixed";
  }
  return "?";
}

template <class F>
struct CorpusInstance {
  Presentation<F> presentation;
  CorpusProfile profile = CorpusProfile::monomial;
  std::uint64_t seed = 0;    // per-instance stream
  int expected_codim = -1;   // complete intersections only
};

namespace detail {

inline Monomial random_monomial(SeededRng& rng, std::size_t nvars,
                                int degree) {
  std::vector<int> exps(nvars, 0);
  for (int k = 0; k < degree; ++k) ++exps[rng.below(nvars)];
  return Monomial(std::move(exps));
}

// Random homogeneous polynomial supported on [lo, nvars) with roughly half
// the monomials present; may be zero when allow_zero is set.
template <class F>
Polynomial<F> random_form(const Ring<F>& ring, SeededRng& rng,
                          std::size_t lo, int degree, bool allow_zero) {
  const auto order = MonomialOrder::grevlex();
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto f = poly_zero(ring, order);
    for (const auto& m :
         monomials_of_degree(ring.nvars() - lo, degree, order)) {
      if (rng.below(2) == 0) continue;
      std::vector<int> exps(ring.nvars(), 0);
      for (std::size_t i = 0; i < ring.nvars() - lo; ++i)
        exps[lo + i] = m[i];
      f = poly_add(ring, f,
                   poly_monomial(ring, Monomial(std::move(exps)), order,
                                 ring.field.random_nonzero(rng)));
    }
    if (!f.is_zero() || allow_zero) return f;
  }
  return poly_zero(ring, order);
}

}  // namespace detail

// One presentation drawn from the profile; `mixed` rotates by instance
// index in generate_corpus, not here.
template <class F>
CorpusInstance<F> corpus_instance(const F& field, CorpusProfile profile,
                                  std::uint64_t seed) {
  if (profile == CorpusProfile::mixed)
    throw error("mixed resolves to a concrete profile per instance");
  SeededRng rng(seed);
  const std::size_t m = 2 + rng.below(3);  // 2..4 variables
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    names.push_back("x" + std::to_string(i + 1));
  auto ring = make_ring(field, names);
  const auto order = MonomialOrder::grevlex();

  CorpusInstance<F> out{Presentation<F>(ring, {}), profile, seed, -1};
  std::vector<Polynomial<F>> gens;

  switch (profile) {
    case CorpusProfile::monomial: {
      const std::size_t v = 1 + rng.below(4);
      std::vector<Monomial> monos;
      for (std::size_t k = 0; k < v; ++k) {
        auto mono = detail::random_monomial(rng, m, 1 + (int)rng.below(4));
        bool redundant = false;
        for (const auto& seen : monos)
          if (seen.divides(mono)) {
            redundant = true;
            break;
          }
        if (!redundant) monos.push_back(mono);
      }
      for (const auto& mono : monos)
        gens.push_back(poly_monomial(ring, mono, order));
      break;
    }
    case CorpusProfile::binomial: {
      const std::size_t v = 1 + rng.below(4);
      for (std::size_t k = 0; k < v; ++k) {
        const int deg = 1 + (int)rng.below(4);
        auto a = detail::random_monomial(rng, m, deg);
        auto b = detail::random_monomial(rng, m, deg);
        for (int attempt = 0; attempt < 8 && a == b; ++attempt)
          b = detail::random_monomial(rng, m, deg);
        auto f = poly_monomial(ring, a, order);
        if (!(a == b))
          f = poly_sub(ring, f, poly_monomial(ring, b, order));
        gens.push_back(std::move(f));
      }
      break;
    }
    case CorpusProfile::dense: {
      const std::size_t v = 1 + rng.below(m == 4 ? 2 : 3);
      const int cap = m == 4 ? 3 : 4;  // keeps lex bases inside the budgets
      for (std::size_t k = 0; k < v; ++k) {
        const int deg = 2 + (int)rng.below((std::uint64_t)cap - 1);
        auto f = detail::random_form(ring, rng, 0, deg, false);
        if (f.is_zero())
          f = poly_monomial(ring, detail::random_monomial(rng, m, deg),
                            order);
        gens.push_back(std::move(f));
      }
      break;
    }
    case CorpusProfile::complete_intersection: {
      const std::size_t v = 1 + rng.below(m < 4 ? m : 4);
      for (std::size_t i = 0; i < v; ++i) {
        const int deg = 2 + (int)rng.below(3);
        auto f = poly_monomial(ring, Monomial::var(m, i, deg), order);
        // tail in the later variables keeps the leading powers coprime
        if (i + 1 < m)
          f = poly_add(ring,
                       f, detail::random_form(ring, rng, i + 1, deg, true));
        gens.push_back(std::move(f));
      }
      out.expected_codim = (int)v;
      break;
    }
    case CorpusProfile::mixed: break;  // unreachable
  }

  out.presentation = validate_presentation(ring, std::move(gens));
  return out;
}

// count instances with per-index seed streams; mixed cycles the four
// concrete profiles by index.
template <class F>
std::vector<CorpusInstance<F>> generate_corpus(const F& field, int count,
                                               std::uint64_t seed,
                                               CorpusProfile profile) {
  if (count < 0) throw error("corpus count must be nonnegative");
  static constexpr CorpusProfile rotation[] = {
      CorpusProfile::monomial, CorpusProfile::binomial, CorpusProfile::dense,
      CorpusProfile::complete_intersection};
  std::vector<CorpusInstance<F>> out;
  for (int i = 0; i < count; ++i) {
    auto p = profile == CorpusProfile::mixed ? rotation[i % 4] : profile;
    out.push_back(corpus_instance(field, p, detail::mix_seed(seed,
                                                             (std::uint64_t)i)));
  }
  return out;
}

}  // namespace reduktor
