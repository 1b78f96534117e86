#pragma once

#include "fano/rational.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fano {

/// Fixed global variable universe. Tower generators r1..r13 name the roots
/// adjoined by the algebraic-extension machinery.
enum class Var : std::uint8_t {
  x0, x1, x2, x3, x4,
  s0, s1, s2, s3, s4, s5,
  u, v, b, c, lambda, mu, n, t,
  r1, r2, r3, r4, r5, r6, r7, r8, r9, r10, r11, r12, r13,
};

inline constexpr std::size_t kVarCount = 32;
inline constexpr int kMaxTowerLevel = 13;

std::string_view var_name(Var v);
constexpr Var x_var(int i) { return static_cast<Var>(static_cast<int>(Var::x0) + i); }
constexpr Var s_var(int i) { return static_cast<Var>(static_cast<int>(Var::s0) + i); }
/// Generator of tower level `level` (1-based).
Var root_var(int level);
/// Inverse of root_var; 0 when `v` is not a tower generator.
int root_level(Var v);

struct Monomial {
  std::array<std::uint8_t, kVarCount> exp{};

  std::uint8_t operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
  unsigned total_degree() const;
  bool divides(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic with x0 most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept sorted by descending lexicographic monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  MPoly(I c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v, unsigned power = 1);
  static MPoly term(const Monomial& m, const Rational& c);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the unit monomial.
  Rational constant_term() const;
  const Term& leading_term() const { return terms_.front(); }

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool contains(Var v) const;
  std::vector<Var> variables() const;
  /// Highest tower level whose generator occurs, 0 when none.
  int max_root_level() const;

  /// Coefficient list in `v`: element k multiplies v^k.
  std::vector<MPoly> coefficients(Var v) const;
  static MPoly from_coefficients(std::span<const MPoly> coeffs, Var v);
  MPoly derivative(Var v) const;

  /// Ring homomorphism sending each bound variable to its image.
  MPoly substitute(const std::map<Var, MPoly>& bindings) const;
  /// Evaluates with every occurring variable bound; throws otherwise.
  Rational evaluate(const std::map<Var, Rational>& point) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  template <std::integral I>
  friend MPoly operator*(I c, MPoly a) { return a *= Rational(c); }
  template <std::integral I>
  friend MPoly operator*(MPoly a, I c) { return a *= Rational(c); }
  MPoly operator-() const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

 private:
  friend MPoly from_sorted_terms(std::vector<Term> terms);
  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract);

  std::vector<Term> terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }
MPoly pow(const MPoly& base, unsigned exponent);
inline MPoly var(Var v, unsigned power = 1) { return MPoly::variable(v, power); }

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
MPoly exact_divide(const MPoly& a, const MPoly& b);
/// Quotient and remainder of a by b viewed as univariate in `v`; requires the
/// leading coefficient of b in `v` to be a rational constant.
std::pair<MPoly, MPoly> divide_in(const MPoly& a, const MPoly& b, Var v);

/// Antiderivative in `v` evaluated between bounds free of `v`.
MPoly integrate(const MPoly& p, Var v, const MPoly& lo, const MPoly& hi);

/// Affine polynomial a*v + c0 solved for v (other variables treated as
/// parameters, division by the constant slope).
MPoly solve_affine(const MPoly& p, Var v);

/// Collects the polynomial as a dense list of numeric coefficients in a single
/// variable; throws when other variables occur.
std::vector<Rational> univariate_coefficients(const MPoly& p, Var v);

}  // namespace fano

namespace Eigen {
template <>
struct NumTraits<fano::MPoly> : GenericNumTraits<fano::MPoly> {
  using Real = fano::MPoly;
  using NonInteger = fano::MPoly;
  using Nested = fano::MPoly;
  using Literal = fano::MPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};
}  // namespace Eigen
