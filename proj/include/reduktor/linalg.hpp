#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "reduktor/errors.hpp"
#include "reduktor/ring.hpp"

namespace reduktor {

// Dense matrix over an exact field; row-major.
template <class F>
class Matrix {
public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const F& field)
      : rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void append_row(const std::vector<Elem>& row) {
    if (cols_ == 0 && rows_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw internal_error("ragged matrix row");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

// Rank by Gaussian elimination; destroys a working copy.
template <class F>
std::size_t matrix_rank(const F& field, Matrix<F> m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && field.is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < m.cols(); ++c)
        std::swap(m.at(pivot, c), m.at(rank, c));
    auto inv = field.inv(m.at(rank, col));
    for (std::size_t c = col; c < m.cols(); ++c)
      m.at(rank, c) = field.mul(m.at(rank, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || field.is_zero(m.at(r, col))) continue;
      auto factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) =
            field.sub(m.at(r, c), field.mul(factor, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

// Incremental row echelon accumulator: supports "is this row in the span?"
// and greedy basis selection.
template <class F>
class RowSpace {
public:
  using Elem = typename F::Elem;

  RowSpace(const F& field, std::size_t cols) : field_(field), cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }

  // Reduce row against current echelon rows (in place).
  void reduce(std::vector<Elem>& row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = row[pivots_[i]];
      if (field_.is_zero(c)) continue;
      auto factor = c;
      for (std::size_t j = 0; j < cols_; ++j)
        row[j] = field_.sub(row[j], field_.mul(factor, rows_[i][j]));
    }
  }

  bool in_span(std::vector<Elem> row) const {
    reduce(row);
    for (const auto& c : row)
      if (!field_.is_zero(c)) return false;
    return true;
  }

  // Returns true when the row enlarged the span.
  bool insert(std::vector<Elem> row) {
    reduce(row);
    std::size_t p = 0;
    while (p < cols_ && field_.is_zero(row[p])) ++p;
    if (p == cols_) return false;
    auto inv = field_.inv(row[p]);
    for (auto& c : row) c = field_.mul(c, inv);
    // back-substitute into existing rows to keep reduced echelon form
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto factor = rows_[i][p];
      if (field_.is_zero(factor)) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        rows_[i][j] = field_.sub(rows_[i][j], field_.mul(factor, row[j]));
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

  // Coordinates of `row` in terms of previously inserted basis rows; the
  // basis rows must have been inserted raw via insert_tracked.
  // (Provided by SolveSpace below instead.)

private:
  F field_;
  std::size_t cols_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

// Solve x * B = v for a fixed list of basis rows B (rows independent).
// Row-reduces [B | I] once, then answers queries by elimination.
template <class F>
class SolveSpace {
public:
  using Elem = typename F::Elem;

  SolveSpace(const F& field, const std::vector<std::vector<Elem>>& basis,
             std::size_t cols)
      : field_(field), cols_(cols), n_(basis.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
      std::vector<Elem> row = basis[i];
      row.resize(cols_ + n_, field_.zero());
      row[cols_ + i] = field_.one();
      if (!insert(std::move(row)))
        throw internal_error("SolveSpace: dependent basis row");
    }
  }

  // Returns coordinates if v is in the span, empty optional otherwise.
  std::optional<std::vector<Elem>> solve(std::vector<Elem> v) const {
    v.resize(cols_ + n_, field_.zero());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto factor = v[pivots_[i]];
      if (field_.is_zero(factor)) continue;
      for (std::size_t j = 0; j < cols_ + n_; ++j)
        v[j] = field_.sub(v[j], field_.mul(factor, rows_[i][j]));
    }
    for (std::size_t j = 0; j < cols_; ++j)
      if (!field_.is_zero(v[j])) return std::nullopt;
    std::vector<Elem> coords(n_);
    for (std::size_t i = 0; i < n_; ++i)
      coords[i] = field_.neg(v[cols_ + i]);
    return coords;
  }

private:
  bool insert(std::vector<Elem> row) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto factor = row[pivots_[i]];
      if (field_.is_zero(factor)) continue;
      for (std::size_t j = 0; j < cols_ + n_; ++j)
        row[j] = field_.sub(row[j], field_.mul(factor, rows_[i][j]));
    }
    std::size_t p = 0;
    while (p < cols_ && field_.is_zero(row[p])) ++p;
    if (p == cols_) return false;
    auto inv = field_.inv(row[p]);
    for (auto& c : row) c = field_.mul(c, inv);
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

  F field_;
  std::size_t cols_, n_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace reduktor
