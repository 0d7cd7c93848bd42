#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reduktor/forms.hpp"
#include "reduktor/linalg.hpp"
#include "reduktor/presentation.hpp"

namespace reduktor {

// ---- reduction matrices ------------------------------------------------

// Degree-n coefficient matrix of the products y_i*g (deg g = n-1) and
// f_j*h (deg h = n - deg f_j) over the degree-n monomial basis, columns
// descending grevlex.  The forms y_i are a candidate reduction; the ideal
// they generate is one exactly when some M_n reaches full column rank.
template <class F>
struct ReductionMatrix {
  int degree = 0;
  Matrix<F> mat;
  std::uint64_t target = 0;  // column count
  std::size_t form_rows = 0;
  std::size_t generator_rows = 0;
};

template <class F>
ReductionMatrix<F> build_reduction_matrix(const Presentation<F>& p,
                                          const ReductionParams<F>& params,
                                          int n) {
  const auto& ring = p.ring();
  const auto order = MonomialOrder::grevlex();
  if (n < 0) throw error("reduction matrix degree must be nonnegative");
  if (params.cols != ring.nvars())
    throw error("parameter matrix has " + std::to_string(params.cols) +
                " columns, ring has " + std::to_string(ring.nvars()) +
                " variables");
  auto cols = monomials_of_degree(ring.nvars(), n, order);
  std::unordered_map<Monomial, std::size_t, MonomialHash> col;
  for (std::size_t j = 0; j < cols.size(); ++j) col[cols[j]] = j;

  ReductionMatrix<F> out;
  out.degree = n;
  out.target = cols.size();
  out.mat = Matrix<F>(0, cols.size(), ring.field);

  for (std::size_t i = 0; i < params.rows; ++i) {
    for (const auto& g : monomials_of_degree(ring.nvars(), n - 1, order)) {
      std::vector<typename F::Elem> row(cols.size(), ring.field.zero());
      for (std::size_t j = 0; j < ring.nvars(); ++j) {
        const auto& c = params.at(i, j);
        if (ring.field.is_zero(c)) continue;
        auto m = g.mul(Monomial::var(ring.nvars(), j));
        row[col.at(m)] = ring.field.add(row[col.at(m)], c);
      }
      out.mat.append_row(row);
      ++out.form_rows;
    }
  }
  for (const auto& f : p.ideal().generators()) {
    int df = f.total_degree();
    if (df > n) continue;
    for (const auto& h : monomials_of_degree(ring.nvars(), n - df, order)) {
      std::vector<typename F::Elem> row(cols.size(), ring.field.zero());
      for (const auto& t : f.terms()) {
        auto m = t.mono.mul(h);
        row[col.at(m)] = ring.field.add(row[col.at(m)], t.coeff);
      }
      out.mat.append_row(row);
      ++out.generator_rows;
    }
  }
  return out;
}

// ---- reduction number of one candidate ----------------------------------

struct RankProbe {
  int degree = 0;
  std::size_t rank = 0;
  std::uint64_t target = 0;
};

struct ReductionReport {
  bool is_reduction = false;
  std::optional<int> r_value;
  int witness_degree = -1;  // first degree with full column rank
  std::vector<RankProbe> rank_trace;
  std::string method = "matrix";
  int trials = 1;
  std::uint64_t seed = 0;
  bool trials_disagree = false;
  std::vector<int> trial_values;
  int residual_dimension = -1;  // dim of the quotient by the forms, if > 0
};

struct ReductionOptions {
  int max_degree = 50;
  // Assert rank M_n + dim (R/(I+Q))_n = column count at every probe.
  bool check_duality = false;
};

template <class F>
ReductionReport reduction_number_of(const Presentation<F>& p,
                                    const ReductionParams<F>& params,
                                    const ReductionOptions& opts = {}) {
  const auto& ring = p.ring();
  const auto order = MonomialOrder::grevlex();
  if ((int)params.rows != p.dim())
    throw error("expected " + std::to_string(p.dim()) +
                " linear forms for this presentation, got " +
                std::to_string(params.rows));
  if (opts.max_degree < 1) throw error("max_degree must be at least 1");

  ReductionReport rep;
  rep.seed = params.seed;
  auto forms = linear_forms(ring, params, order);

  std::vector<Polynomial<F>> combined = p.ideal().generators();
  for (const auto& y : forms)
    if (!y.is_zero()) combined.push_back(y);
  int resid = krull_dimension(make_ideal(ring, combined));
  if (resid != 0) {
    rep.is_reduction = false;
    rep.residual_dimension = resid;
    return rep;
  }
  rep.is_reduction = true;

  for (int n = 1; n <= opts.max_degree; ++n) {
    auto M = build_reduction_matrix(p, params, n);
    std::size_t rk = matrix_rank(ring.field, M.mat);
    rep.rank_trace.push_back(RankProbe{n, rk, M.target});
    if (opts.check_duality) {
      long long hf = hilbert_function(p, forms, n);
      if ((long long)rk + hf != (long long)M.target)
        throw internal_error("rank/Hilbert duality violated at degree " +
                             std::to_string(n));
    }
    if (rk == M.target) {
      rep.witness_degree = n;
      rep.r_value = n - 1;
      return rep;
    }
  }
  throw internal_error(
      "zero-dimensional quotient never reached full rank by degree " +
      std::to_string(opts.max_degree));
}

template <class F>
bool noether_test(const Presentation<F>& p, const ReductionParams<F>& params,
                  const ReductionOptions& opts = {}) {
  return reduction_number_of(p, params, opts).is_reduction;
}

// ---- generic reduction number -------------------------------------------

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

// Minimum r over independently drawn candidate form sets.  Almost every
// candidate attains the generic value, so disagreement among trials is
// reported but the minimum is returned.
template <class F>
ReductionReport generic_reduction_number(const Presentation<F>& p, int trials,
                                         std::uint64_t seed,
                                         const ReductionOptions& opts = {}) {
  if (trials < 1) throw error("trials must be at least 1");
  const auto d = (std::size_t)p.dim();
  std::optional<ReductionReport> best;
  std::vector<int> values;
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    auto params =
        random_linear_forms(p.ring(), d, detail::mix_seed(seed, (std::uint64_t)t));
    auto rep = reduction_number_of(p, params, opts);
    if (!rep.is_reduction) {
      ++failures;
      continue;
    }
    values.push_back(*rep.r_value);
    if (!best || *rep.r_value < *best->r_value) best = rep;
  }
  if (!best)
    throw error("all " + std::to_string(trials) +
                " sampled form sets failed to be reductions; over a field of "
                "this size that indicates a degenerate presentation");
  best->trials = trials;
  best->seed = seed;
  best->trial_values = values;
  best->trials_disagree =
      std::set<int>(values.begin(), values.end()).size() > 1;
  if (failures > 0) best->trials_disagree = true;
  return *best;
}

// ---- reduction number by substitution ------------------------------------

// Specializes the last d variables to random combinations of the first
// m-d; the top nonvanishing degree of the resulting artinian quotient is
// the generic reduction number.  A degenerate sample (positive-dimensional
// image) is redrawn up to three times.
template <class F>
int reduction_number_by_substitution(const Presentation<F>& p,
                                     std::uint64_t seed,
                                     int max_degree = 200) {
  const auto& ring = p.ring();
  const auto order = MonomialOrder::grevlex();
  const std::size_t m = ring.nvars();
  const std::size_t d = (std::size_t)p.dim();
  if (d == m) return 0;
  if (d == 0) {
    int last = 0;
    for (int n = 0; n <= max_degree; ++n) {
      if (hilbert_function(p, {}, n) == 0) return last;
      last = n;
    }
    throw error("quotient is not artinian despite dimension zero");
  }

  std::vector<std::string> keep(ring.vars.begin(),
                                ring.vars.begin() + (m - d));
  auto small = make_ring(ring.field, keep);
  for (int attempt = 0; attempt < 3; ++attempt) {
    SeededRng rng(detail::mix_seed(seed, (std::uint64_t)attempt));
    std::vector<Polynomial<F>> images;
    for (std::size_t j = 0; j < m - d; ++j)
      images.push_back(poly_var(small, j, order));
    for (std::size_t i = m - d; i < m; ++i) {
      auto f = poly_zero(small, order);
      for (std::size_t j = 0; j < m - d; ++j)
        f = poly_add(small, f,
                     poly_monomial(small, Monomial::var(m - d, j), order,
                                   ring.field.random(rng)));
      images.push_back(f);
    }
    std::vector<Polynomial<F>> gens;
    for (const auto& g : p.ideal().generators()) {
      auto img = substitute(ring, g, small, images);
      if (!img.is_zero()) gens.push_back(img);
    }
    if (krull_dimension(make_ideal(small, gens)) != 0) continue;
    auto q = validate_presentation(small, gens);
    int last = 0;
    for (int n = 0; n <= max_degree; ++n) {
      if (hilbert_function(q, {}, n) == 0) return last;
      last = n;
    }
    throw internal_error("zero-dimensional substituted quotient with "
                         "nonvanishing Hilbert values");
  }
  throw error("substitution sample degenerate after 3 attempts");
}

// ---- symbolic parameter machinery ----------------------------------------

// Ring of the form coefficients u_ij.
template <class F>
Ring<F> parameter_ring(const Ring<F>& base, std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < base.nvars(); ++j)
      names.push_back(d == 1 ? "u" + std::to_string(j + 1)
                             : "u" + std::to_string(i + 1) + "_" +
                                   std::to_string(j + 1));
  return make_ring(base.field, names);
}

template <class F>
struct SymbolicMinorIdeal {
  int degree = 0;
  Ring<F> uring;
  std::vector<std::vector<Polynomial<F>>> matrix;  // generic coefficient rows
  Ideal<F> minors;
  std::size_t minor_size = 0;
};

namespace detail {

// Fraction-free determinant over a polynomial ring.
template <class F>
Polynomial<F> bareiss_determinant(const Ring<F>& ring,
                                  std::vector<std::vector<Polynomial<F>>> a) {
  const auto order = MonomialOrder::grevlex();
  const std::size_t n = a.size();
  if (n == 0) return poly_one(ring, order);
  bool negate = false;
  auto prev = poly_one(ring, order);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a[i][k].is_zero() &&
          (pivot == n ||
           a[i][k].terms().size() < a[pivot][k].terms().size()))
        pivot = i;
    if (pivot == n) return poly_zero(ring, order);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = poly_sub(ring, poly_mul(ring, a[k][k], a[i][j]),
                            poly_mul(ring, a[i][k], a[k][j]));
        a[i][j] = num.is_zero() ? num : exact_divide(ring, num, prev);
      }
      a[i][k] = poly_zero(ring, order);
    }
    prev = a[k][k];
  }
  return negate ? poly_neg(ring, a[n - 1][n - 1]) : a[n - 1][n - 1];
}

inline std::uint64_t choose_capped(std::size_t n, std::size_t k,
                                   std::uint64_t cap) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

// All size*size minors (every column, chosen rows) as monic deduplicated
// generators.
template <class F>
Ideal<F> maximal_minor_ideal(const Ring<F>& uring,
                             const std::vector<std::vector<Polynomial<F>>>& m,
                             std::size_t size) {
  const std::size_t rows = m.size();
  if (size == 0)
    return make_ideal(uring, {poly_one(uring, MonomialOrder::grevlex())});
  if (rows < size) return make_ideal(uring, {});
  if (size > 12)
    throw resource_error("minor-size",
                         "determinants of side " + std::to_string(size) +
                             " exceed the symbolic budget");
  if (choose_capped(rows, size, 5000) > 5000)
    throw resource_error("minor-count",
                         "too many row choices for symbolic minors");
  std::vector<Polynomial<F>> gens;
  std::vector<std::string> seen;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<Polynomial<F>>> sub;
    for (auto i : idx) sub.push_back(m[i]);
    auto det = bareiss_determinant(uring, std::move(sub));
    if (!det.is_zero()) {
      det = make_monic(uring, det);
      auto s = poly_to_string(uring, det);
      if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
        seen.push_back(s);
        gens.push_back(det);
      }
    }
    // next row combination
    std::size_t t = size;
    while (t > 0 && idx[t - 1] == rows - size + (t - 1)) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t j = t; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return make_ideal(uring, std::move(gens));
}

// Degree-n monomials outside the initial ideal, descending grevlex.
template <class F>
std::vector<Monomial> standard_monomials(const Presentation<F>& p, int n) {
  const auto order = MonomialOrder::grevlex();
  std::vector<Monomial> lts;
  for (const auto& g : p.ideal().groebner(order))
    lts.push_back(g.leading_monomial());
  lts = minimal_monomials(std::move(lts));
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(p.ring().nvars(), n, order)) {
    bool standard = true;
    for (const auto& lt : lts)
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return out;
}

}  // namespace detail

// Minor ideal of the full presentation-level coefficient matrix M_n(u);
// kept exact and small by a hard side guard.
template <class F>
SymbolicMinorIdeal<F> variety_chain_ideal(const Presentation<F>& p, int n) {
  const auto& ring = p.ring();
  const auto order = MonomialOrder::grevlex();
  const std::size_t d = (std::size_t)p.dim();
  auto uring = parameter_ring(ring, d);
  SymbolicMinorIdeal<F> out{n, uring, {}, make_ideal(uring, {}), 0};
  if (n < 0) throw error("degree must be nonnegative");
  if (n == 0) return out;  // M_0 = 0

  auto cols = monomials_of_degree(ring.nvars(), n, order);
  std::unordered_map<Monomial, std::size_t, MonomialHash> col;
  for (std::size_t j = 0; j < cols.size(); ++j) col[cols[j]] = j;
  std::size_t rows = d * monomial_count((int)ring.nvars(), n - 1);
  for (const auto& f : p.ideal().generators())
    if (f.total_degree() <= n)
      rows += monomial_count((int)ring.nvars(), n - f.total_degree());
  if (cols.size() > 12 || rows > 12)
    throw resource_error("matrix-side",
                         "symbolic matrix is " + std::to_string(rows) + "x" +
                             std::to_string(cols.size()) +
                             ", budget is 12 per side");

  auto zero = poly_zero(uring, order);
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& g : monomials_of_degree(ring.nvars(), n - 1, order)) {
      std::vector<Polynomial<F>> row(cols.size(), zero);
      for (std::size_t j = 0; j < ring.nvars(); ++j) {
        auto c = col.at(g.mul(Monomial::var(ring.nvars(), j)));
        row[c] = poly_add(uring, row[c],
                          poly_var(uring, i * ring.nvars() + j, order));
      }
      out.matrix.push_back(std::move(row));
    }
  }
  for (const auto& f : p.ideal().generators()) {
    int df = f.total_degree();
    if (df > n) continue;
    for (const auto& h : monomials_of_degree(ring.nvars(), n - df, order)) {
      std::vector<Polynomial<F>> row(cols.size(), zero);
      for (const auto& t : f.terms()) {
        auto c = col.at(t.mono.mul(h));
        row[c] = poly_add(uring, row[c], poly_const(uring, t.coeff, order));
      }
      out.matrix.push_back(std::move(row));
    }
  }
  out.minor_size = cols.size();
  out.minors = detail::maximal_minor_ideal(uring, out.matrix, cols.size());
  return out;
}

// Same zero locus from the quotient-basis coefficient matrix: rows are the
// products (generic form_i) * b over the standard monomial basis of degree
// n-1, written on the standard basis of degree n.  Far smaller than the
// presentation-level matrix.
template <class F>
SymbolicMinorIdeal<F> reduced_variety_chain_ideal(const Presentation<F>& p,
                                                  int n) {
  const auto& ring = p.ring();
  const auto order = MonomialOrder::grevlex();
  const std::size_t d = (std::size_t)p.dim();
  auto uring = parameter_ring(ring, d);
  SymbolicMinorIdeal<F> out{n, uring, {}, make_ideal(uring, {}), 0};
  if (n < 0) throw error("degree must be nonnegative");
  if (n == 0) return out;

  auto basis_lo = detail::standard_monomials(p, n - 1);
  auto basis_hi = detail::standard_monomials(p, n);
  std::unordered_map<Monomial, std::size_t, MonomialHash> col;
  for (std::size_t j = 0; j < basis_hi.size(); ++j) col[basis_hi[j]] = j;
  const auto& gb = p.ideal().groebner(order);

  auto zero = poly_zero(uring, order);
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& b : basis_lo) {
      std::vector<Polynomial<F>> row(basis_hi.size(), zero);
      for (std::size_t j = 0; j < ring.nvars(); ++j) {
        auto prod = poly_monomial(ring, b.mul(Monomial::var(ring.nvars(), j)),
                                  order);
        auto nf = normal_form(ring, prod, gb, order);
        for (const auto& t : nf.terms()) {
          auto c = col.at(t.mono);
          row[c] = poly_add(
              uring, row[c],
              poly_monomial(uring,
                            Monomial::var(uring.nvars(), i * ring.nvars() + j),
                            order, t.coeff));
        }
      }
      out.matrix.push_back(std::move(row));
    }
  }
  out.minor_size = basis_hi.size();
  out.minors =
      detail::maximal_minor_ideal(uring, out.matrix, basis_hi.size());
  return out;
}

// Ideal in the parameter ring cutting out the coefficient matrices whose
// forms are NOT a reduction: project the incidence variety
// {(u, x) : x in V(I + forms(u)), x != 0}.
template <class F>
Ideal<F> nonreduction_locus_ideal(const Presentation<F>& p,
                                  const Ring<F>& uring) {
  const auto& ring = p.ring();
  const auto order = MonomialOrder::grevlex();
  const std::size_t m = ring.nvars();
  const std::size_t d = (std::size_t)p.dim();
  auto ext = extend_ring(uring, ring.vars);

  std::vector<Polynomial<F>> images;
  for (std::size_t j = 0; j < m; ++j)
    images.push_back(poly_var(ext, uring.nvars() + j, order));
  std::vector<Polynomial<F>> hgens;
  for (const auto& g : p.ideal().generators())
    hgens.push_back(substitute(ring, g, ext, images));
  for (std::size_t i = 0; i < d; ++i) {
    auto z = poly_zero(ext, order);
    for (std::size_t j = 0; j < m; ++j)
      z = poly_add(ext, z,
                   poly_mul(ext, poly_var(ext, i * m + j, order),
                            poly_var(ext, uring.nvars() + j, order)));
    hgens.push_back(z);
  }
  auto H = make_ideal(ext, std::move(hgens));

  std::vector<int> keep;
  for (std::size_t i = 0; i < uring.nvars(); ++i) keep.push_back((int)i);

  std::optional<Ideal<F>> acc;
  for (std::size_t v = 0; v < m; ++v) {
    auto sat = saturate(H, poly_var(ext, uring.nvars() + v, order));
    auto piece = eliminate(sat, keep);
    std::vector<Polynomial<F>> rgens;
    for (const auto& g : piece.generators())
      rgens.push_back(restrict_vars(ext, g, uring, order));
    auto part = make_ideal(uring, std::move(rgens));
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

// ---- spectrum -------------------------------------------------------------

struct SpectrumReport {
  std::set<int> values;
  std::string mode;  // "sampled" | "symbolic"
  bool exact = false;
  int stabilized_at = -1;      // symbolic: degree where the chain freezes
  std::uint64_t patterns = 0;  // sampled: candidates actually tried
};

struct SampledSpectrumOptions {
  std::uint64_t budget = 1024;
  std::uint64_t seed = 1;
  ReductionOptions reduction;
};

struct SymbolicSpectrumOptions {
  int max_scan = 64;
  ReductionOptions reduction;  // used only for the dimension-zero case
};

namespace detail {

template <class F>
SpectrumReport artinian_spectrum(const Presentation<F>& p, const char* mode) {
  // no forms needed: the only reduction is the zero ideal
  SpectrumReport rep;
  rep.mode = mode;
  rep.exact = true;
  auto r = reduction_number_of(p, ReductionParams<F>{0, p.ring().nvars(), {}, 0});
  rep.values.insert(*r.r_value);
  return rep;
}

}  // namespace detail

// Observed reduction numbers over all zero/nonzero support patterns of the
// coefficient matrix (random nonzero entries), capped by budget.  Always a
// subset of the true spectrum; dense draws alone would only ever see the
// generic value, so the coordinate patterns matter.
template <class F>
SpectrumReport reduction_spectrum_sampled(const Presentation<F>& p,
                                          const SampledSpectrumOptions& opts) {
  const auto& ring = p.ring();
  const std::size_t d = (std::size_t)p.dim();
  const std::size_t m = ring.nvars();
  if (d == 0) return detail::artinian_spectrum(p, "sampled");

  SpectrumReport rep;
  rep.mode = "sampled";
  const std::size_t md = m * d;
  std::vector<std::uint64_t> masks;
  if (md < 63 && (1ull << md) <= opts.budget) {
    for (std::uint64_t mask = 0; mask < (1ull << md); ++mask)
      masks.push_back(mask);
  } else {
    SeededRng mrng(detail::mix_seed(opts.seed, 0xA11));
    masks.push_back(~0ull);  // dense pattern first
    for (std::uint64_t k = 1; k < opts.budget; ++k) {
      std::uint64_t mask = 0;
      for (std::size_t b = 0; b < md; ++b)
        if (mrng.below(2)) mask |= 1ull << b;
      masks.push_back(mask);
    }
  }
  for (std::size_t k = 0; k < masks.size(); ++k) {
    SeededRng rng(detail::mix_seed(opts.seed, k + 1));
    ReductionParams<F> params;
    params.rows = d;
    params.cols = m;
    params.seed = opts.seed;
    params.entries.assign(md, ring.field.zero());
    for (std::size_t b = 0; b < md; ++b)
      if (masks[k] & (1ull << b))
        params.entries[b] = ring.field.random_nonzero(rng);
    ++rep.patterns;
    auto r = reduction_number_of(p, params, opts.reduction);
    if (r.is_reduction) rep.values.insert(*r.r_value);
  }
  return rep;
}

// Exact spectrum from the descending chain of minor-ideal zero loci in the
// parameter space: n is attained exactly when the locus strictly drops
// from degree n to degree n+1, witnessed by a degree-(n+1) minor outside
// the radical of the degree-n minor ideal.  The scan stops when the locus
// reaches the non-reduction locus, which it can never pass.
template <class F>
SpectrumReport reduction_spectrum_symbolic(
    const Presentation<F>& p, const SymbolicSpectrumOptions& opts = {}) {
  const auto& ring = p.ring();
  const std::size_t d = (std::size_t)p.dim();
  if (d == 0) return detail::artinian_spectrum(p, "symbolic");
  if (ring.nvars() * d > 6)
    throw error("symbolic spectrum supports at most 6 parameter variables "
                "(here " +
                std::to_string(ring.nvars() * d) +
                "); use sampled mode instead");
  for (const auto& g : p.ideal().generators())
    if (g.total_degree() > 6)
      throw error("symbolic spectrum supports generator degrees up to 6; "
                  "use sampled mode instead");

  SpectrumReport rep;
  rep.mode = "symbolic";
  rep.exact = true;
  auto uring = parameter_ring(ring, d);
  auto locus = nonreduction_locus_ideal(p, uring);
  if (locus.generators().empty() || !is_proper(locus))
    throw internal_error("degenerate non-reduction locus");

  auto prev = make_ideal(uring, {});
  for (int n = 1; n <= opts.max_scan; ++n) {
    auto cur = reduced_variety_chain_ideal(p, n).minors;
    for (const auto& g : cur.generators())
      if (!radical_member(g, prev)) {
        rep.values.insert(n - 1);
        break;
      }
    bool frozen = true;
    for (const auto& g : locus.generators())
      if (!radical_member(g, cur)) {
        frozen = false;
        break;
      }
    if (frozen) {
      rep.stabilized_at = n;
      if (rep.values.empty())
        throw internal_error("empty spectrum for a positive-dimensional "
                             "algebra");
      return rep;
    }
    prev = cur;
  }
  throw resource_error("spectrum-scan",
                       "parameter locus chain did not stabilize within " +
                           std::to_string(opts.max_scan) + " degrees");
}

template <class F>
int big_reduction_number_sampled(const Presentation<F>& p,
                                 const SampledSpectrumOptions& opts) {
  auto rep = reduction_spectrum_sampled(p, opts);
  if (rep.values.empty())
    throw error("no reduction found among sampled patterns");
  return *rep.values.rbegin();
}

template <class F>
int big_reduction_number_symbolic(const Presentation<F>& p,
                                  const SymbolicSpectrumOptions& opts = {}) {
  return *reduction_spectrum_symbolic(p, opts).values.rbegin();
}

}  // namespace reduktor
