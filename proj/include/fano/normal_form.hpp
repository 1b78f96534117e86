#pragma once

#include "fano/algebraic.hpp"
#include "fano/quadric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

enum class GitStatus { polystable, strictly_semistable, stable };
std::string to_string(GitStatus g);

struct CaseLabel {
  int number = 0;  // 1..5
  std::optional<AlgElem> lambda;
  std::optional<AlgElem> mu;
  GitStatus git = GitStatus::stable;
};

/// Coefficient vector of the normal form named by a label.
QuadricCoeffs<AlgElem> normal_form_coeffs(const CaseLabel& label);

/// The nondegeneracy expression of the case (nonzero iff the normal form is
/// smooth); constant 1 for the parameter-free cases.
AlgElem case_constraint(const CaseLabel& label);

/// Table lookup on the normal-form pattern.
GitStatus git_status(int case_number, const std::optional<AlgElem>& mu);

struct Move {
  enum class Kind { lower, upper, iota, tau, cstar };
  Kind kind;
  AlgElem param;  // c, b or the scaling factor; unused for involutions

  std::string str() const;
};

struct Witness {
  std::vector<Move> moves;
  TowerPtr tower;
};

struct Classification {
  QuadricCoeffs<Rational> input;
  Witness witness;
  CaseLabel label;
  QuadricCoeffs<AlgElem> normal_form;
  std::vector<std::string> trace;
  int branches_tried = 1;
};

class SingularQuadric : public std::invalid_argument {
 public:
  SingularQuadric() : std::invalid_argument("quadric is singular (Hessian determinant vanishes)") {}
};

/// Applies one move with the generic substitution-based operations.
QuadricCoeffs<AlgElem> apply_move(const QuadricCoeffs<AlgElem>& s, const Move& m);
/// Replays every move from the input.
QuadricCoeffs<AlgElem> replay(const QuadricCoeffs<Rational>& input, const Witness& w);
/// Replay reproduces the normal form projectively, modulo the tower.
bool verify_witness(const Classification& c);

/// Reduces a smooth quadric through C4 to one of the five normal forms.
Classification classify(const QuadricCoeffs<Rational>& s);

/// The displayed invariant h(s2, s4). In the coordinates used here the s3
/// elimination is governed by h(-s2, s4); see h_homogeneous.
template <class T>
T h_invariant(const T& s2, const T& s4) {
  return T(256) * s2 * s2 * s2 * s2 * s4 - T(128) * s2 * s2 * s4 * s4 + T(64) * s2 * s2 * s2 + T(16) * s4 * s4 * s4 -
         T(144) * s2 * s4 - T(27);
}

/// Weighted-homogeneous form of h(-s2, s4): restricts to it at s0 = s3 = 1
/// and scales with weight 18 under C*. Vanishes iff the s3 elimination
/// fails, for s1 = 0 and s0 s3 != 0.
MPoly h_homogeneous();

/// Polynomials in b, c from the move [[1,b],[c,1+bc]] (lower(c) then
/// upper(b)) applied to f0 + s2 f2 + f3 + s4 f4 + s5 f5.
struct EliminationPolynomials {
  MPoly s1_prime;  // cubic in b
  MPoly s3_prime;  // affine in b
  MPoly s4_prime;  // free of b
  MPoly g1;        // s1' at the root b of s3', times g2^2
  MPoly g2;        // coefficient of b in s3'
  MPoly resultant_g1_g2;
  MPoly b_free_combination;  // s3' - 2 b s4'
  MPoly resultant_lemma_pair;
};
const EliminationPolynomials& elimination_polynomials();

/// Substitutes x_i -> lambda^i x_i into s0 f0 + s1 f1 + s2 f2 + f5 and returns
/// (substituted, lambda^4 (f5 + s2 f2 + lambda s1 f1 + lambda^2 s0 f0)).
std::pair<MPoly, MPoly> degeneration_identity(const QuadricCoeffs<MPoly>& s);

/// Hessian of f5 + mu (f0 + f4) as a polynomial in mu, and whether its roots
/// are exactly {+-2, +-sqrt 3}.
struct Case1Locus {
  MPoly hessian;
  MPoly stated;  // 8 (mu^2 - 3)(mu^2 - 4)
  bool agrees;
};
Case1Locus case1_smoothness_locus();

std::string describe(const AlgElem& a);

}  // namespace fano
