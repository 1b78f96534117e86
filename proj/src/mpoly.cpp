#include "fano/mpoly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace fano {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "x0", "x1", "x2", "x3", "x4", "s0", "s1", "s2", "s3", "s4", "s5",
    "u", "v", "b", "c", "lambda", "mu", "n", "t",
    "r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8", "r9", "r10", "r11", "r12", "r13"};

bool term_order(const MPoly::Term& a, const MPoly::Term& b) { return a.first > b.first; }

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

Var root_var(int level) {
  if (level < 1 || level > kMaxTowerLevel) throw std::out_of_range("tower level out of range");
  return static_cast<Var>(static_cast<int>(Var::r1) + level - 1);
}

int root_level(Var v) {
  const int idx = static_cast<int>(v);
  const int first = static_cast<int>(Var::r1);
  return idx >= first ? idx - first + 1 : 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const unsigned e = unsigned{a.exp[i]} + unsigned{b.exp[i]};
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (b.exp[i] > a.exp[i]) throw std::domain_error("monomial does not divide");
    m.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
  }
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const int c = std::memcmp(a.exp.data(), b.exp.data(), kVarCount);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

MPoly from_sorted_terms(std::vector<MPoly::Term> terms) {
  MPoly p;
  p.terms_ = std::move(terms);
  return p;
}

namespace {

// Sorts, combines equal monomials and drops zeros.
MPoly normalize_terms(std::vector<MPoly::Term> terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  std::vector<MPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return from_sorted_terms(std::move(out));
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

MPoly MPoly::variable(Var v, unsigned power) {
  if (power > 255) throw std::overflow_error("monomial exponent overflow");
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
  return term(m, Rational(1));
}

MPoly MPoly::term(const Monomial& m, const Rational& c) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == Monomial{});
}

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first == Monomial{}) return terms_.back().second;
  return Rational(0);
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[v]);
  return d;
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool MPoly::contains(Var v) const { return degree(v) > 0; }

std::vector<Var> MPoly::variables() const {
  std::vector<Var> vars;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const Var v = static_cast<Var>(i);
    if (contains(v)) vars.push_back(v);
  }
  return vars;
}

int MPoly::max_root_level() const {
  for (int level = kMaxTowerLevel; level >= 1; --level)
    if (contains(root_var(level))) return level;
  return 0;
}

std::vector<MPoly> MPoly::coefficients(Var v) const {
  const std::size_t idx = static_cast<std::size_t>(v);
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial stripped = m;
    stripped.exp[idx] = 0;
    buckets[m.exp[idx]].emplace_back(stripped, c);
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_sorted_terms(std::move(b)));
  if (terms_.empty()) out.assign(1, MPoly{});
  return out;
}

MPoly MPoly::from_coefficients(std::span<const MPoly> coeffs, Var v) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [m, c] : coeffs[k].terms_) {
      Monomial shifted = m;
      const unsigned e = unsigned{m[v]} + static_cast<unsigned>(k);
      if (e > 255) throw std::overflow_error("monomial exponent overflow");
      shifted.exp[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e);
      terms.emplace_back(shifted, c);
    }
  }
  return normalize_terms(std::move(terms));
}

MPoly MPoly::derivative(Var v) const {
  std::vector<Term> terms;
  const std::size_t idx = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    if (m.exp[idx] == 0) continue;
    Monomial d = m;
    d.exp[idx] = static_cast<std::uint8_t>(m.exp[idx] - 1);
    terms.emplace_back(d, c * Rational(m.exp[idx]));
  }
  return normalize_terms(std::move(terms));
}

MPoly MPoly::substitute(const std::map<Var, MPoly>& bindings) const {
  std::map<std::pair<Var, unsigned>, MPoly> powers;
  auto power_of = [&](Var v, unsigned e) -> const MPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, pow(bindings.at(v), e)).first;
    return it->second;
  };
  MPoly result;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    MPoly factor(c);
    for (const auto& [v, image] : bindings) {
      const unsigned e = m[v];
      if (e == 0) continue;
      rest.exp[static_cast<std::size_t>(v)] = 0;
      factor = factor * power_of(v, e);
    }
    result += factor * term(rest, Rational(1));
  }
  return result;
}

Rational MPoly::evaluate(const std::map<Var, Rational>& point) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (m.exp[i] == 0) continue;
      auto it = point.find(static_cast<Var>(i));
      if (it == point.end())
        throw std::invalid_argument("evaluate: unbound variable " + std::string(var_name(static_cast<Var>(i))));
      value *= pow(it->second, m.exp[i]);
    }
    total += value;
  }
  return total;
}

MPoly MPoly::merge(const MPoly& a, const MPoly& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first > ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first > ia->first) {
      out.emplace_back(ib->first, subtract ? -ib->second : ib->second);
      ++ib;
    } else {
      Rational c = subtract ? ia->second - ib->second : ia->second + ib->second;
      if (!c.is_zero()) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return from_sorted_terms(std::move(out));
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  return *this = merge(*this, o, false);
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.is_zero()) return *this;
  return *this = merge(*this, o, true);
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly{};
  const MPoly& small = a.size() <= b.size() ? a : b;
  const MPoly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    // Multiplying by a single term preserves the order.
    const auto& [sm, sc] = small.terms_.front();
    std::vector<MPoly::Term> out;
    out.reserve(large.size());
    for (const auto& [m, c] : large.terms_) out.emplace_back(m * sm, c * sc);
    return from_sorted_terms(std::move(out));
  }
  std::vector<MPoly::Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
  return normalize_terms(std::move(products));
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit_monomial = m == Monomial{};
    bool need_star = false;
    if (unit_monomial || mag != Rational(1)) {
      os << mag.str();
      need_star = true;
    }
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (m.exp[i] == 0) continue;
      if (need_star) os << "*";
      os << var_name(static_cast<Var>(i));
      if (m.exp[i] > 1) os << "^" << static_cast<unsigned>(m.exp[i]);
      need_star = true;
    }
  }
  return os.str();
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result(1);
  MPoly b = base;
  while (exponent != 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1u;
    if (exponent != 0) b = b * b;
  }
  return result;
}

MPoly exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide by zero polynomial");
  if (b.size() == 1) {
    const auto& [mb, cb] = b.leading_term();
    std::vector<MPoly::Term> out;
    out.reserve(a.size());
    for (const auto& [m, c] : a.terms()) {
      if (!mb.divides(m)) throw std::domain_error("exact_divide: not divisible");
      out.emplace_back(m / mb, c / cb);
    }
    return from_sorted_terms(std::move(out));
  }
  MPoly quotient;
  MPoly rest = a;
  const auto& [lead_m, lead_c] = b.leading_term();
  const Rational lead_inv = lead_c.inverse();
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading_term();
    if (!lead_m.divides(m)) throw std::domain_error("exact_divide: not divisible");
    MPoly t = MPoly::term(m / lead_m, c * lead_inv);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

std::pair<MPoly, MPoly> divide_in(const MPoly& a, const MPoly& b, Var v) {
  if (b.is_zero()) throw std::domain_error("divide_in by zero polynomial");
  const auto bc = b.coefficients(v);
  const std::size_t db = bc.size() - 1;
  if (!bc.back().is_constant()) throw std::invalid_argument("divide_in: leading coefficient is not constant");
  const Rational lead_inv = bc.back().constant_term().inverse();
  auto ac = a.coefficients(v);
  if (ac.size() <= db) return {MPoly{}, a};
  std::vector<MPoly> qc(ac.size() - db);
  for (std::size_t k = ac.size(); k-- > db;) {
    if (ac[k].is_zero()) continue;
    MPoly factor = ac[k] * lead_inv;
    qc[k - db] = factor;
    for (std::size_t i = 0; i <= db; ++i) ac[k - db + i] -= factor * bc[i];
  }
  ac.resize(db);
  return {MPoly::from_coefficients(qc, v), MPoly::from_coefficients(ac, v)};
}

MPoly integrate(const MPoly& p, Var v, const MPoly& lo, const MPoly& hi) {
  if (lo.contains(v) || hi.contains(v))
    throw std::invalid_argument("integrate: bounds depend on the integration variable");
  std::vector<MPoly::Term> anti;
  for (const auto& [m, c] : p.terms()) {
    Monomial up = m;
    const unsigned e = unsigned{m[v]} + 1;
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    up.exp[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e);
    anti.emplace_back(up, c / Rational(static_cast<long>(e)));
  }
  std::sort(anti.begin(), anti.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  const MPoly antiderivative = from_sorted_terms(std::move(anti));
  return antiderivative.substitute({{v, hi}}) - antiderivative.substitute({{v, lo}});
}

MPoly solve_affine(const MPoly& p, Var v) {
  const auto coeffs = p.coefficients(v);
  if (coeffs.size() != 2) throw std::invalid_argument("solve_affine: not of degree one in the variable");
  if (!coeffs[1].is_constant()) throw std::invalid_argument("solve_affine: slope is not constant");
  return -coeffs[0] * coeffs[1].constant_term().inverse();
}

std::vector<Rational> univariate_coefficients(const MPoly& p, Var v) {
  std::vector<Rational> out(p.degree(v) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.exp[static_cast<std::size_t>(v)] = 0;
    if (!(rest == Monomial{})) throw std::invalid_argument("univariate_coefficients: foreign variable present");
    out[m[v]] += c;
  }
  return out;
}

}  // namespace fano
