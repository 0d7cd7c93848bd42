#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "reduktor/groebner.hpp"

namespace reduktor {

// Ideal in a fixed ring.  Generators are immutable after construction; the
// reduced basis for each order is computed on demand and cached.  The cache
// is shared across copies and guarded by a mutex; entries are verified on
// insertion (every generator must reduce to zero) and never mutated after,
// so lookups may return references into it.
template <class F>
class Ideal {
public:
  Ideal() = default;
  Ideal(Ring<F> ring, std::vector<Polynomial<F>> gens)
      : ring_(std::move(ring)),
        gens_(std::move(gens)),
        cache_(std::make_shared<Cache>()) {
    for (auto& g : gens_)
      if (g.is_zero()) throw error("zero generator in ideal");
  }

  const Ring<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }

  const std::vector<Polynomial<F>>& groebner(
      const MonomialOrder& order, const GroebnerLimits& limits = {}) const {
    const std::string key = order.key();
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->bases.find(key);
      if (it != cache_->bases.end()) return it->second;
    }
    auto basis = groebner_basis_raw(ring_, gens_, order, limits);
    for (const auto& g : gens_)
      if (!normal_form(ring_, g, basis, order).is_zero())
        throw internal_error("basis cache verification failed");
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [it, inserted] = cache_->bases.emplace(key, std::move(basis));
    (void)inserted;  // losing a race is fine, both values are the reduced basis
    return it->second;
  }

private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<Polynomial<F>>> bases;
  };

  Ring<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
Ideal<F> make_ideal(const Ring<F>& ring, std::vector<Polynomial<F>> gens) {
  std::vector<Polynomial<F>> nz;
  for (auto& g : gens)
    if (!g.is_zero()) nz.push_back(std::move(g));
  return Ideal<F>(ring, std::move(nz));
}

// Reduced Groebner basis under `order` (cached).
template <class F>
const std::vector<Polynomial<F>>& groebner_basis(
    const Ideal<F>& ideal, const MonomialOrder& order,
    const GroebnerLimits& limits = {}) {
  return ideal.groebner(order, limits);
}

template <class F>
Polynomial<F> normal_form(const Ideal<F>& ideal, const Polynomial<F>& f,
                          const MonomialOrder& order,
                          const GroebnerLimits& limits = {}) {
  return normal_form(ideal.ring(), f, ideal.groebner(order, limits), order);
}

template <class F>
bool contains(const Ideal<F>& ideal, const Polynomial<F>& f,
              const MonomialOrder& order = MonomialOrder::grevlex(),
              const GroebnerLimits& limits = {}) {
  return normal_form(ideal, f, order, limits).is_zero();
}

// Membership for every generator of `other`.
template <class F>
bool contains_ideal(const Ideal<F>& ideal, const Ideal<F>& other,
                    const MonomialOrder& order = MonomialOrder::grevlex(),
                    const GroebnerLimits& limits = {}) {
  for (const auto& g : other.generators())
    if (!contains(ideal, g, order, limits)) return false;
  return true;
}

template <class F>
bool equal_ideals(const Ideal<F>& a, const Ideal<F>& b,
                  const MonomialOrder& order = MonomialOrder::grevlex(),
                  const GroebnerLimits& limits = {}) {
  return a.groebner(order, limits) == b.groebner(order, limits);
}

// Proper means 1 is not a member.
template <class F>
bool is_proper(const Ideal<F>& ideal,
               const MonomialOrder& order = MonomialOrder::grevlex()) {
  for (const auto& g : ideal.groebner(order))
    if (g.leading_monomial().is_one()) return false;
  return true;
}

}  // namespace reduktor
