#pragma once

#include "fano/chow.hpp"
#include "fano/linalg.hpp"
#include "fano/mpoly.hpp"
#include "fano/rational.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fano {

// ---------------------------------------------------------------------------
// Threefold path: Zariski decomposition of -K_X - uS for u in [0, tau].

struct PathPiece {
  Rational lo, hi;
  DivClass<MPoly> P;
  DivClass<MPoly> N;
  /// Coefficient of each effective generator in N, keyed by name ("E", "E'").
  std::map<std::string, MPoly> n_coeffs;
};

struct DivisorPath {
  DivClass<Rational> surface;
  std::vector<PathPiece> pieces;
  Rational tau;
};

/// Extremal rays of the Mori cone, each with the divisor it sweeps out.
struct ConeData {
  std::vector<std::string> curve_names;
  std::vector<CurveClass> curves;
  std::vector<DivClass<Rational>> swept;  // swept[i].curves[i] < 0
  std::vector<std::string> swept_names;
};

/// Mori cone generated by f, f' with swept divisors E, E'. The effective cone
/// is generated by the same two divisors.
ConeData blowup_cone();

/// Accepts S = H (generic hyperplane section) and S = E; throws
/// std::invalid_argument otherwise.
DivisorPath threefold_path(const DivClass<Rational>& S);

// ---------------------------------------------------------------------------
// Surfaces with finitely many relevant curves.

struct CurveConfig {
  std::string name;
  std::vector<std::string> curves;
  Mat<Rational> gram;
  /// Designated points, each with the indices of config curves through it.
  std::map<std::string, std::vector<int>> incidence;

  int index(const std::string& curve) const;
};

/// Lines C1, C2 and conics Z1, Z2 on the quartic del Pezzo surface.
CurveConfig dp4_config();
/// Adds the exceptional curve of a point blow-up; mult[i] is the multiplicity
/// of curve i at the point.
CurveConfig blow_up_point(const CurveConfig& cfg, const std::vector<int>& mult,
                          const std::string& exceptional, const std::string& name);
/// dp4 blown up at the common point of all four curves; exceptional curve G.
/// Designated points "O-on-curve" (on G and C1) and "O-generic" (on G only).
CurveConfig dp4_blowup_config();
/// Negative section s and fibre f on F_n.
CurveConfig hirzebruch_config(int n);
/// Looks up "dp4", "dp4-blowup", "hirzebruch-<n>".
CurveConfig named_config(const std::string& name);

using SurfClass = Eigen::Matrix<MPoly, Eigen::Dynamic, 1>;

MPoly surf_dot(const SurfClass& a, const SurfClass& b, const Mat<Rational>& gram);
MPoly surf_dot_curve(const SurfClass& a, int curve, const Mat<Rational>& gram);

/// P(u)|_S on a general member S of |H|, as a combination of dp4 curves, for
/// the given piece of the threefold path (0 or 1).
SurfClass h_surface_restriction(int piece);
/// g^*(cls) - v G on the blow-up, given multiplicities of the original curves.
SurfClass pullback_minus_vG(const SurfClass& cls, const std::vector<int>& mult);

struct Chamber {
  MPoly v_lo, v_hi;  // affine in u
  std::vector<int> support;
  SurfClass P, N;
};

struct SurfaceChambers {
  Rational u_lo, u_hi;
  SurfClass cls;
  std::vector<Chamber> chambers;
  MPoly threshold;  // where P^2 reaches 0; equals the last v_hi
};

/// Parametric Zariski decomposition of cls(u, v) for u in [u_lo, u_hi] and v
/// from 0 to the pseudoeffective threshold. Throws std::domain_error on
/// non-affine data or a support whose Gram matrix is not negative definite.
SurfaceChambers surface_chambers(const SurfClass& cls, const CurveConfig& cfg,
                                 const Rational& u_lo, const Rational& u_hi);

struct ChamberSquare {
  MPoly p_squared;
  MPoly p_dot_curve;
};
std::vector<ChamberSquare> chamber_squares(const SurfaceChambers& ch, const CurveConfig& cfg,
                                           int designated_curve);

/// True iff every leading principal minor has sign (-1)^k.
bool negative_definite(const Mat<Rational>& gram);

// ---------------------------------------------------------------------------
// Volumes on F_n.

struct VolumeRegion {
  std::string name;
  std::vector<MPoly> nonneg;    // each >= 0
  std::vector<MPoly> positive;  // each > 0
  MPoly volume;
};

/// Case split of vol(a s + b f) on F_n. Regions: "a<0", "b<0" (volume 0),
/// "nef" (b >= n a), "zariski" (0 <= b < n a, only for n > 0).
std::vector<VolumeRegion> hirzebruch_vol(const MPoly& a, const MPoly& b, int n);
Rational hirzebruch_vol(const Rational& a, const Rational& b, int n);

// ---------------------------------------------------------------------------
// Exact sign checks for affine data.

using Point = std::map<Var, Rational>;

/// Throws std::domain_error unless p has total degree <= 1 in u, v and no
/// other variables.
void require_affine_uv(const MPoly& p, const char* what);
/// Vertices of {u_lo <= u <= u_hi, lo(u) <= v <= hi(u)}.
std::vector<Point> strip_vertices(const Rational& u_lo, const Rational& u_hi, const MPoly& lo,
                                  const MPoly& hi);
/// Affine p is >= 0 on the convex hull of the points.
bool nonneg_at_vertices(const MPoly& p, const std::vector<Point>& pts);
/// Univariate p(u) of degree <= 2 is >= 0 on [lo, hi]; throws for higher degree.
bool nonneg_on_interval(const MPoly& p, const Rational& lo, const Rational& hi);

}  // namespace fano
