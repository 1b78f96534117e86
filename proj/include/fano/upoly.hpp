#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fano {

/// Dense univariate polynomial over a coefficient ring K. Coefficient k
/// multiplies x^k. K must provide is_zero(K) and, for division, inverse(K).
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }
  static UPoly monomial(const K& k, std::size_t degree) {
    std::vector<K> c(degree + 1, K(0));
    c[degree] = k;
    return UPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(0); }
  const K& leading() const { return c_.back(); }

  K operator()(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<K> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * K(static_cast<long>(k)));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (c_.empty()) return *this;
    return *this * inverse(leading());
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] = c[k] + b.c_[k];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly{};
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend UPoly operator*(const UPoly& a, const K& k) {
    std::vector<K> c = a.c_;
    for (auto& x : c) x = x * k;
    return UPoly(std::move(c));
  }

  std::string str(std::string_view var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (is_zero(c_[k])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[k] << ")";
      if (k > 0) os << "*" << var;
      if (k > 1) os << "^" << k;
    }
    return os.str();
  }

 private:
  static bool is_zero(const K& k) {
    using fano::is_zero;
    return is_zero(k);
  }
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

/// Quotient and remainder; inverts the leading coefficient of b.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divrem(const UPoly<K>& a, const UPoly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<K>{}, a};
  const K lead_inv = inverse(b.leading());
  std::vector<K> rem = a.coeffs();
  std::vector<K> quo(rem.size() - b.coeffs().size() + 1, K(0));
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = rem.size(); k-- > db;) {
    const K factor = rem[k] * lead_inv;
    quo[k - db] = factor;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = rem[k - db + i] - factor * b.coeffs()[i];
  }
  rem.resize(db);
  return {UPoly<K>(std::move(quo)), UPoly<K>(std::move(rem))};
}

/// Monic gcd (zero when both inputs vanish).
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s) with s*a = g mod b and g the monic gcd of a and b.
template <class K>
std::pair<UPoly<K>, UPoly<K>> half_xgcd(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r0 = a, r1 = b;
  UPoly<K> s0 = UPoly<K>::constant(K(1)), s1;
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    UPoly<K> s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {r0, s0};
  const K lead_inv = inverse(r0.leading());
  return {r0 * lead_inv, s0 * lead_inv};
}

/// p / gcd(p, p'), made monic.
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
  if (p.degree() < 1) return p.monic();
  const UPoly<K> g = gcd(p, p.derivative());
  return divrem(p, g).first.monic();
}

}  // namespace fano
