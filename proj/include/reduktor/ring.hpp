#pragma once

#include <string>
#include <vector>

#include "reduktor/errors.hpp"
#include "reduktor/field.hpp"

namespace reduktor {

// Polynomial ring descriptor: coefficient field plus named variables.
// Cheap to copy; passed by const reference through the whole library.
template <class F>
struct Ring {
  F field;
  std::vector<std::string> vars;

  std::size_t nvars() const { return vars.size(); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return (int)i;
    return -1;
  }

  bool operator==(const Ring& o) const {
    return field == o.field && vars == o.vars;
  }
};

template <class F>
Ring<F> make_ring(F field, std::vector<std::string> vars) {
  for (const auto& v : vars)
    if (v.empty()) throw error("empty variable name");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw error("duplicate variable " + vars[i]);
  return Ring<F>{std::move(field), std::move(vars)};
}

// Ring with extra variables appended after the existing ones.
template <class F>
Ring<F> extend_ring(const Ring<F>& r, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = r.vars;
  for (const auto& e : extra) vars.push_back(e);
  return make_ring(r.field, std::move(vars));
}

// A variable name not already used in the ring (base, base0, base1, ...).
template <class F>
std::string fresh_var_name(const Ring<F>& r, const std::string& base) {
  if (r.var_index(base) < 0) return base;
  for (int i = 0;; ++i) {
    std::string c = base + std::to_string(i);
    if (r.var_index(c) < 0) return c;
  }
}

}  // namespace reduktor
