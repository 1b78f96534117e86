#pragma once

#include "fano/mpoly.hpp"
#include "fano/upoly.hpp"

#include <exception>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fano {

class Tower;
struct DenseOps;
using TowerPtr = std::shared_ptr<const Tower>;

/// Triangular chain of simple extensions over Q. Level k adjoins a root r_k of
/// a monic modulus in r_k whose coefficients live at level k-1. Moduli are
/// only assumed squarefree; a reducible modulus is discovered lazily when an
/// inversion hits a zero divisor.
class Tower {
 public:
  static const TowerPtr& rationals();
  /// `modulus` must be monic in root_var(parent->level() + 1) and reduced
  /// with respect to the parent.
  static TowerPtr extend(const TowerPtr& parent, MPoly modulus);

  int level() const { return level_; }
  unsigned degree() const { return degree_; }
  const MPoly& modulus() const { return modulus_; }
  const TowerPtr& parent() const { return parent_; }
  /// Product of the level degrees.
  unsigned total_degree() const { return total_; }

  /// The node at `level` on this chain.
  TowerPtr ancestor(const TowerPtr& self, int level) const;
  /// True when `other` lies on this chain.
  bool extends(const Tower& other) const;

  /// Normal form: remainder modulo every level, top down.
  MPoly reduce(MPoly p) const;

  /// Moduli from level 1 upward.
  std::vector<MPoly> moduli() const;

 private:
  Tower() = default;

  friend class AlgElem;
  friend struct DenseOps;

  TowerPtr parent_;
  int level_ = 0;
  unsigned degree_ = 1;
  unsigned total_ = 1;
  MPoly modulus_;
  // Internally the level works with y = scale_ * r, chosen so that the
  // modulus in y is monic with integer coordinates (non-leading coefficients
  // below, each a dense parent element in the parent's y-basis).
  mpz_class scale_ = 1;
  std::vector<std::vector<mpz_class>> dense_mod_;
  std::vector<char> mod_nonzero_;
};

/// Raised when an inversion exposes a nontrivial factorization of the modulus
/// at `level`: modulus = factor * cofactor, both monic in r_level.
class ZeroDivisorSplit : public std::exception {
 public:
  ZeroDivisorSplit(int level, MPoly factor, MPoly cofactor);
  const char* what() const noexcept override { return message_.c_str(); }

  int level;
  MPoly factor;
  MPoly cofactor;

 private:
  std::string message_;
};

/// Element of a tower. Stored densely over the integral generators
/// y_i = D_i r_i: num[e_1 + d_1 (e_2 + d_2 (...))] / den is the coefficient of
/// y_1^e_1 ... y_k^e_k, e_i < d_i, with gcd(content, den) = 1 and den > 0.
/// An element of a lower level embeds by zero padding.
class AlgElem {
 public:
  AlgElem() : tower_(Tower::rationals()), num_(1), den_(1) {}
  AlgElem(const Rational& q)  // NOLINT(google-explicit-constructor)
      : tower_(Tower::rationals()), num_{q.numerator()}, den_(q.denominator()) {}
  template <std::integral I>
  AlgElem(I q) : AlgElem(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  AlgElem(TowerPtr tower, const MPoly& rep);

  static AlgElem generator(const TowerPtr& tower);

  const TowerPtr& tower() const { return tower_; }
  /// Normal form as a polynomial in r_1..r_level.
  MPoly rep() const;

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;

  /// Multiplicative inverse; throws ZeroDivisorSplit on a zero divisor and
  /// std::domain_error on zero.
  AlgElem inverse() const;

  friend AlgElem operator+(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator-(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator/(const AlgElem& a, const AlgElem& b) { return a * b.inverse(); }
  AlgElem operator-() const;
  AlgElem& operator+=(const AlgElem& o) { return *this = *this + o; }
  AlgElem& operator-=(const AlgElem& o) { return *this = *this - o; }
  AlgElem& operator*=(const AlgElem& o) { return *this = *this * o; }
  AlgElem& operator/=(const AlgElem& o) { return *this = *this / o; }

  friend bool operator==(const AlgElem& a, const AlgElem& b);

  std::string str() const { return rep().str(); }
  friend std::ostream& operator<<(std::ostream& os, const AlgElem& a) { return os << a.str(); }

 private:
  friend UPoly<AlgElem> split_top(const AlgElem& a, const TowerPtr& tower);
  friend struct DenseOps;
  AlgElem(TowerPtr tower, std::vector<mpz_class> num, mpz_class den);
  friend class Tower;
  void normalize();
  static AlgElem add(const AlgElem& a, const AlgElem& b, int sign);

  TowerPtr tower_;
  std::vector<mpz_class> num_;  // size tower_->total_degree()
  mpz_class den_;
};

inline bool is_zero(const AlgElem& a) { return a.is_zero(); }
inline AlgElem inverse(const AlgElem& a) { return a.inverse(); }
AlgElem pow(const AlgElem& a, unsigned k);

/// Zero test that also certifies nonzero elements by inverting them; a zero
/// divisor surfaces as ZeroDivisorSplit.
bool decide_zero(const AlgElem& a);

/// The deeper of two towers, checking that one extends the other.
const TowerPtr& common_tower(const TowerPtr& a, const TowerPtr& b);

/// Coefficients of an element's normal form as a polynomial in its top
/// generator, each living one level down.
UPoly<AlgElem> split_top(const AlgElem& a, const TowerPtr& tower);

/// Moduli fixed per level, used to steer a rerun into one branch of a split.
struct BranchPlan {
  std::map<int, MPoly> fixed;
};

/// Owns the growing tower for one classification attempt.
class ExtensionContext {
 public:
  explicit ExtensionContext(BranchPlan plan = {});

  const TowerPtr& tower() const { return tower_; }
  const BranchPlan& plan() const { return plan_; }

  /// A root of p (positive degree after trimming). Degree-one squarefree parts
  /// are solved in place; otherwise a new level is added.
  AlgElem adjoin_root(const UPoly<AlgElem>& p);
  /// A k-th root of r; rational perfect powers are returned directly.
  AlgElem adjoin_radical(const AlgElem& r, unsigned k);

 private:
  BranchPlan plan_;
  TowerPtr tower_;
};

/// Runs `attempt` under successive branch plans, depth first. A split at
/// level k spawns one plan per factor (lower degree first, then by printed
/// form). The first attempt that returns wins; if every branch throws, the
/// last error is rethrown.
template <class F>
auto explore_branches(F&& attempt, int max_attempts = 64) -> decltype(attempt(std::declval<const BranchPlan&>()));

}  // namespace fano

namespace Eigen {
template <>
struct NumTraits<fano::AlgElem> : GenericNumTraits<fano::AlgElem> {
  using Real = fano::AlgElem;
  using NonInteger = fano::AlgElem;
  using Nested = fano::AlgElem;
  using Literal = fano::AlgElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 128
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};
}  // namespace Eigen

#include "fano/detail/explore_branches.hpp"
