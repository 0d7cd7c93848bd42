#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "reduktor/errors.hpp"

namespace reduktor {

// Exponent vector with cached total degree.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps)
      : exps_(std::move(exps)),
        degree_(std::accumulate(exps_.begin(), exps_.end(), 0)) {
    for (int e : exps_)
      if (e < 0) throw error("negative exponent in monomial");
  }

  static Monomial one(std::size_t nvars) {
    return Monomial(std::vector<int>(nvars, 0));
  }
  static Monomial var(std::size_t nvars, std::size_t i, int e = 1) {
    std::vector<int> x(nvars, 0);
    x.at(i) = e;
    return Monomial(std::move(x));
  }

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial mul(const Monomial& o) const {
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
      r.exps_[i] = exps_[i] + o.exps_[i];
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  // this / o, requires o.divides(*this)
  Monomial div(const Monomial& o) const {
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      r.exps_[i] = exps_[i] - o.exps_[i];
      if (r.exps_[i] < 0) throw internal_error("monomial division underflow");
    }
    r.degree_ = degree_ - o.degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps_.resize(a.exps_.size());
    r.degree_ = 0;
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    return true;
  }

  // Variable indices with positive exponent.
  std::vector<int> support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0) s.push_back((int)i);
    return s;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  std::size_t hash() const {
    std::size_t h = 0x811c9dc5u;
    for (int e : exps_) h = (h ^ (std::size_t)e) * 0x01000193u;
    return h;
  }

private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace reduktor
