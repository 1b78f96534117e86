#pragma once

#include "fano/chow.hpp"
#include "fano/rational.hpp"
#include "fano/zariski.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fano {

/// (-K_X)^3.
Rational anticanonical_volume();

struct SPiece {
  Rational lo, hi;
  MPoly integrand;  // in u
  Rational integral;
};

struct SReport {
  std::string target;
  Rational tau;
  std::vector<SPiece> pieces;
  Rational value;
  Rational beta;  // A - S with A = 1
};

/// S_X(S) = prefactor * int_0^tau P(u)^3 du; prefactor defaults to 1/(-K_X)^3.
SReport s_divisor(const DivClass<Rational>& S);
SReport s_divisor(const DivClass<Rational>& S, const Rational& prefactor);

struct RegionIntegral {
  std::string label;
  Rational u_lo, u_hi;
  MPoly v_lo, v_hi;  // in u
  MPoly integrand;   // in u, v
  Rational value;    // already multiplied by the prefactor
};

struct WReport {
  std::string target;
  std::vector<RegionIntegral> terms;
  Rational value;
};

/// Chamber families of g^*(P(u)|_S) - vG, one per threefold path piece for S = H.
std::vector<SurfaceChambers> blowup_chamber_families(const CurveConfig& cfg);

/// S(W^S; G) with the ord-term absent (a general point of G avoids Supp N).
/// Only "dp4-blowup" is accepted.
WReport s_w2_exceptional(const CurveConfig& cfg);
WReport s_w2_exceptional(const CurveConfig& cfg, const Rational& prefactor);

struct PointReport {
  WReport main;  // (3/(-K)^3) int int (P.G)^2
  WReport f_o;   // (6/(-K)^3) int int (P.G) ord_O(N|_G)
  Rational value;
};

/// S(W^{S,G}; O) for O on G, on C1~ when on_curves is set.
PointReport s_w3_point(const CurveConfig& cfg, bool on_curves);

struct DeltaCertificate {
  std::string target;
  std::vector<std::pair<std::string, Rational>> candidates;
  Rational bound;
};

DeltaCertificate delta_bound_generic_point();

struct CurveOnEReport {
  int n = 0;
  /// ord-term with ord_C(E'|_E) replaced by 0, 1, 2.
  std::array<Rational, 3> ord_term_by_multiplicity;
  Rational ord_term;  // worst case
  int worst_multiplicity = 0;
  WReport volume;
  bool nef_confirmed = false;  // P(u)|_E - v s nef for all 0 <= v <= t(u)
  std::vector<MPoly> thresholds;  // t(u) per path piece
  Rational total;
};

/// Upper bound for S(W^E; C) with E = F_n. Throws for n outside {0, 2, 4, 6}.
CurveOnEReport s_w2_curve_on_E(int n);

struct CurveCaseCertificate {
  std::vector<std::pair<int, DeltaCertificate>> per_n;
  Rational bound;  // worst case over n
};

CurveCaseCertificate beta_certificate_curve_case();

}  // namespace fano
