#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "reduktor/ideal_ops.hpp"

namespace reduktor {

// C(n+m-1, m-1): monomials of degree n in m variables.  Exact in 64 bits at
// the scale the budget below allows.
inline std::uint64_t monomial_count(int nvars, int degree) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // C(degree + nvars - 1, nvars - 1)
  std::uint64_t num = 1;
  for (int i = 1; i <= nvars - 1; ++i) {
    num = num * (std::uint64_t)(degree + i);
    num /= (std::uint64_t)i;  // exact: product of i consecutive integers
  }
  return num;
}

constexpr std::uint64_t kMonomialBudget = 1000000;

// All monomials of the given degree, sorted descending under `order`.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree,
                                                 const MonomialOrder& order) {
  if (degree < 0) return {};
  if (monomial_count((int)nvars, degree) > kMonomialBudget)
    throw resource_error("monomial-count",
                         "degree " + std::to_string(degree) + " slice in " +
                             std::to_string(nvars) +
                             " variables exceeds the monomial budget");
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int rest) -> void {
    if (i + 1 == nvars) {
      e[i] = rest;
      out.push_back(Monomial(e));
      return;
    }
    for (int v = rest; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, rest - v);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(Monomial(std::vector<int>{}));
    return out;
  }
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return order.cmp(a, b) > 0;
  });
  return out;
}

// Standard graded algebra A = R/I presented by homogeneous generators.
// Dimension and Hilbert values are cached; the Hilbert cache is keyed by a
// fingerprint of the extra forms so probes along one (I + extra) reuse the
// same basis.
template <class F>
class Presentation {
public:
  Presentation() = default;
  Presentation(Ring<F> ring, std::vector<Polynomial<F>> gens)
      : ideal_(std::move(ring), std::move(gens)),
        state_(std::make_shared<State>()) {}

  const Ring<F>& ring() const { return ideal_.ring(); }
  const Ideal<F>& ideal() const { return ideal_; }

  int dim() const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    if (state_->dim < -1) state_->dim = krull_dimension(ideal_);
    return state_->dim;
  }

private:
  struct State {
    std::mutex mutex;
    int dim = -2;
    std::string hilbert_key = "\x01unset";  // never equals a real key
    std::vector<Monomial> hilbert_lts;      // minimal initial-ideal generators
    std::map<int, long long> hilbert_values;
  };

  Ideal<F> ideal_;
  std::shared_ptr<State> state_;

  template <class G>
  friend long long hilbert_function(const Presentation<G>&,
                                    const std::vector<Polynomial<G>>&, int);
};

// Rejects zero and inhomogeneous generators; reports the offending
// generator and term pair.  Constant generators would present the zero ring
// and are rejected too.
template <class F>
Presentation<F> validate_presentation(const Ring<F>& ring,
                                      const std::vector<Polynomial<F>>& gens) {
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& g = gens[k];
    if (g.is_zero())
      throw error("generator " + std::to_string(k + 1) + " is zero");
    if (!g.homogeneous_degree()) {
      int d0 = g.terms().front().mono.degree();
      for (const auto& t : g.terms())
        if (t.mono.degree() != d0)
          throw error("generator " + std::to_string(k + 1) +
                      " is not homogeneous: term " +
                      monomial_to_string(ring, g.terms().front().mono) +
                      " has degree " + std::to_string(d0) + ", term " +
                      monomial_to_string(ring, t.mono) + " has degree " +
                      std::to_string(t.mono.degree()));
    }
    if (*g.homogeneous_degree() == 0)
      throw error("generator " + std::to_string(k + 1) +
                  " is a nonzero constant (the quotient would be the zero "
                  "ring)");
  }
  return Presentation<F>(ring, gens);
}

// dim_k (R/(I + extra))_n by counting standard monomials of the initial
// ideal.  `extra` is a list of forms added to the presentation ideal.
template <class F>
long long hilbert_function(const Presentation<F>& p,
                           const std::vector<Polynomial<F>>& extra, int n) {
  const auto& ring = p.ring();
  if (n < 0) return 0;
  std::string key;
  {
    std::vector<std::string> parts;
    for (const auto& f : extra)
      parts.push_back(poly_to_string(
          ring, resorted(ring, f, MonomialOrder::grevlex())));
    std::sort(parts.begin(), parts.end());
    for (const auto& s : parts) key += s + ";";
  }
  auto& st = *p.state_;
  {
    std::lock_guard<std::mutex> lock(st.mutex);
    if (st.hilbert_key == key) {
      auto it = st.hilbert_values.find(n);
      if (it != st.hilbert_values.end()) return it->second;
    }
  }
  std::vector<Monomial> lts;
  bool have_lts = false;
  {
    std::lock_guard<std::mutex> lock(st.mutex);
    if (st.hilbert_key == key) {
      lts = st.hilbert_lts;
      have_lts = true;
    }
  }
  if (!have_lts) {
    std::vector<Polynomial<F>> gens = p.ideal().generators();
    for (const auto& f : extra)
      if (!f.is_zero()) gens.push_back(f);
    auto basis = groebner_basis_raw(ring, gens, MonomialOrder::grevlex());
    for (const auto& g : basis) lts.push_back(g.leading_monomial());
    lts = detail::minimal_monomials(std::move(lts));
    std::lock_guard<std::mutex> lock(st.mutex);
    if (st.hilbert_key != key) {
      st.hilbert_key = key;
      st.hilbert_lts = lts;
      st.hilbert_values.clear();
    }
  }
  long long count = 0;
  for (const auto& m :
       monomials_of_degree(ring.nvars(), n, MonomialOrder::grevlex())) {
    bool standard = true;
    for (const auto& lt : lts)
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
  }
  std::lock_guard<std::mutex> lock(st.mutex);
  if (st.hilbert_key == key) st.hilbert_values[n] = count;
  return count;
}

}  // namespace reduktor
