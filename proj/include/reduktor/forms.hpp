#pragma once

#include <cstdint>
#include <vector>

#include "reduktor/polynomial.hpp"
#include "reduktor/rng.hpp"

namespace reduktor {

// A d x m coefficient matrix: row i gives the linear form
// y_i = sum_j entries[i*m+j] * x_j.  Rows are never all zero when d > 0.
template <class F>
struct ReductionParams {
  std::size_t rows = 0;  // d
  std::size_t cols = 0;  // m
  std::vector<typename F::Elem> entries;
  std::uint64_t seed = 0;

  const typename F::Elem& at(std::size_t i, std::size_t j) const {
    return entries[i * cols + j];
  }
};

// Seeded uniform entries; an all-zero row is redrawn (probability ~ p^-m,
// kept out so the forms always have a chance of being a reduction).
template <class F>
ReductionParams<F> random_linear_forms(const Ring<F>& ring, std::size_t d,
                                       std::uint64_t seed) {
  const std::size_t m = ring.nvars();
  if (d > m) throw error("requested more linear forms than variables");
  ReductionParams<F> p;
  p.rows = d;
  p.cols = m;
  p.seed = seed;
  SeededRng rng(seed);
  for (std::size_t i = 0; i < d; ++i) {
    for (;;) {
      std::vector<typename F::Elem> row;
      bool nonzero = false;
      for (std::size_t j = 0; j < m; ++j) {
        row.push_back(ring.field.random(rng));
        if (!ring.field.is_zero(row.back())) nonzero = true;
      }
      if (nonzero || m == 0) {
        for (auto& e : row) p.entries.push_back(std::move(e));
        break;
      }
    }
  }
  return p;
}

// Convenience alias used by the tests.
template <class F>
ReductionParams<F> random_reduction_params(const Ring<F>& ring, std::size_t d,
                                           std::uint64_t seed) {
  return random_linear_forms(ring, d, seed);
}

// Explicit parameter matrix from field elements (row-major).
template <class F>
ReductionParams<F> reduction_params_from(const Ring<F>& ring, std::size_t d,
                                         std::vector<typename F::Elem> flat) {
  if (flat.size() != d * ring.nvars())
    throw error("parameter matrix shape mismatch");
  ReductionParams<F> p;
  p.rows = d;
  p.cols = ring.nvars();
  p.entries = std::move(flat);
  return p;
}

// The linear forms y_i as polynomials.
template <class F>
std::vector<Polynomial<F>> linear_forms(const Ring<F>& ring,
                                        const ReductionParams<F>& p,
                                        const MonomialOrder& order =
                                            MonomialOrder::grevlex()) {
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < p.rows; ++i) {
    std::vector<Term<F>> terms;
    for (std::size_t j = 0; j < p.cols; ++j)
      terms.push_back(
          Term<F>{Monomial::var(ring.nvars(), j), p.at(i, j)});
    out.push_back(Polynomial<F>(ring, std::move(terms), order));
  }
  return out;
}

// Left-multiply the parameter matrix by T (d x d): row space is preserved
// when T is invertible.
template <class F>
ReductionParams<F> transform_params(const Ring<F>& ring,
                                    const ReductionParams<F>& p,
                                    const std::vector<typename F::Elem>& t) {
  if (t.size() != p.rows * p.rows)
    throw error("transform matrix shape mismatch");
  ReductionParams<F> out;
  out.rows = p.rows;
  out.cols = p.cols;
  out.seed = p.seed;
  for (std::size_t i = 0; i < p.rows; ++i)
    for (std::size_t j = 0; j < p.cols; ++j) {
      auto acc = ring.field.zero();
      for (std::size_t k = 0; k < p.rows; ++k)
        acc = ring.field.add(
            acc, ring.field.mul(t[i * p.rows + k], p.at(k, j)));
      out.entries.push_back(acc);
    }
  return out;
}

}  // namespace reduktor
