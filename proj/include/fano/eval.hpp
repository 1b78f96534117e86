#pragma once

#include "fano/mpoly.hpp"
#include "fano/upoly.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace fano {

/// Evaluates p at values of type T; every variable of p must be bound.
template <class T>
T evaluate_poly(const MPoly& p, const std::map<Var, T>& values) {
  std::map<std::pair<Var, unsigned>, T> powers;
  const auto power = [&](Var v, unsigned e) -> const T& {
    auto key = std::make_pair(v, e);
    if (auto it = powers.find(key); it != powers.end()) return it->second;
    auto found = values.find(v);
    if (found == values.end()) throw std::invalid_argument("evaluate_poly: unbound variable " + std::string(var_name(v)));
    T acc(1);
    for (unsigned k = 0; k < e; ++k) acc = acc * found->second;
    return powers.emplace(key, acc).first->second;
  };
  T total(0);
  for (const auto& [m, c] : p.terms()) {
    T term(c);
    for (std::size_t i = 0; i < m.exp.size(); ++i)
      if (m.exp[i] != 0) term = term * power(static_cast<Var>(i), m.exp[i]);
    total = total + term;
  }
  return total;
}

/// Views p as a polynomial in v with coefficients evaluated at `values`.
template <class T>
UPoly<T> to_upoly(const MPoly& p, Var v, const std::map<Var, T>& values) {
  std::vector<T> out;
  for (const MPoly& c : p.coefficients(v)) out.push_back(evaluate_poly(c, values));
  return UPoly<T>(std::move(out));
}

}  // namespace fano
