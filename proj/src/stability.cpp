#include "fano/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace fano {

namespace {

Rational constant_of(const MPoly& p) {
  if (!p.is_constant()) throw std::logic_error("integral did not reduce to a number: " + p.str());
  return p.constant_term();
}

Rational integrate_u(const MPoly& f, const Rational& lo, const Rational& hi) {
  return constant_of(integrate(f, Var::u, MPoly(lo), MPoly(hi)));
}

Rational integrate_uv(const MPoly& f, const Rational& u_lo, const Rational& u_hi, const MPoly& v_lo,
                      const MPoly& v_hi) {
  return integrate_u(integrate(f, Var::v, v_lo, v_hi), u_lo, u_hi);
}

std::string interval(const Rational& lo, const Rational& hi) {
  return "[" + lo.str() + ", " + hi.str() + "]";
}

}  // namespace

Rational anticanonical_volume() {
  const auto k = anticanonical();
  return triple(k, k, k);
}

SReport s_divisor(const DivClass<Rational>& S) { return s_divisor(S, anticanonical_volume().inverse()); }

SReport s_divisor(const DivClass<Rational>& S, const Rational& prefactor) {
  const DivisorPath path = threefold_path(S);
  SReport r;
  r.target = S == class_H() ? "S_X(H)" : "S_X(E)";
  r.tau = path.tau;
  for (const auto& pc : path.pieces) {
    const MPoly cube = triple(pc.P, pc.P, pc.P);
    const Rational val = integrate_u(cube, pc.lo, pc.hi);
    r.pieces.push_back({pc.lo, pc.hi, cube, val});
    r.value += val;
  }
  r.value *= prefactor;
  r.beta = Rational(1) - r.value;
  return r;
}

std::vector<SurfaceChambers> blowup_chamber_families(const CurveConfig& cfg) {
  if (cfg.name != "dp4-blowup") throw std::invalid_argument("expected the dp4-blowup configuration");
  const int g = cfg.index("G");
  std::vector<int> mult;
  for (int i = 0; i < g; ++i) mult.push_back(static_cast<int>(cfg.gram(i, g).numerator().get_si()));
  const DivisorPath path = threefold_path(class_H());
  std::vector<SurfaceChambers> out;
  for (std::size_t k = 0; k < path.pieces.size(); ++k) {
    const SurfClass cls = pullback_minus_vG(h_surface_restriction(static_cast<int>(k)), mult);
    out.push_back(surface_chambers(cls, cfg, path.pieces[k].lo, path.pieces[k].hi));
  }
  return out;
}

WReport s_w2_exceptional(const CurveConfig& cfg) {
  return s_w2_exceptional(cfg, Rational(3) / anticanonical_volume());
}

WReport s_w2_exceptional(const CurveConfig& cfg, const Rational& prefactor) {
  WReport r;
  r.target = "S(W^S; G)";
  for (const auto& fam : blowup_chamber_families(cfg)) {
    for (std::size_t k = 0; k < fam.chambers.size(); ++k) {
      const auto& ch = fam.chambers[k];
      const MPoly sq = surf_dot(ch.P, ch.P, cfg.gram);
      const Rational val = prefactor * integrate_uv(sq, fam.u_lo, fam.u_hi, ch.v_lo, ch.v_hi);
      r.terms.push_back({"u in " + interval(fam.u_lo, fam.u_hi) + ", chamber " + std::to_string(k + 1),
                         fam.u_lo, fam.u_hi, ch.v_lo, ch.v_hi, sq, val});
      r.value += val;
    }
  }
  return r;
}

PointReport s_w3_point(const CurveConfig& cfg, bool on_curves) {
  const int g = cfg.index("G");
  const std::vector<int>& through = cfg.incidence.at(on_curves ? "O-on-curve" : "O-generic");
  const Rational vol = anticanonical_volume();
  PointReport r;
  r.main.target = "(3/28) int int (P.G)^2";
  r.f_o.target = "F_O";
  for (const auto& fam : blowup_chamber_families(cfg)) {
    for (std::size_t k = 0; k < fam.chambers.size(); ++k) {
      const auto& ch = fam.chambers[k];
      const std::string label = "u in " + interval(fam.u_lo, fam.u_hi) + ", chamber " + std::to_string(k + 1);
      const MPoly pg = surf_dot_curve(ch.P, g, cfg.gram);
      const MPoly sq = pg * pg;
      const Rational main = Rational(3) / vol * integrate_uv(sq, fam.u_lo, fam.u_hi, ch.v_lo, ch.v_hi);
      r.main.terms.push_back({label, fam.u_lo, fam.u_hi, ch.v_lo, ch.v_hi, sq, main});
      r.main.value += main;
      MPoly ord;
      for (int i : through)
        if (i != g) ord += ch.N(i) * cfg.gram(i, g);
      if (ord.is_zero()) continue;
      const MPoly integrand = pg * ord;
      const Rational fo = Rational(6) / vol * integrate_uv(integrand, fam.u_lo, fam.u_hi, ch.v_lo, ch.v_hi);
      r.f_o.terms.push_back({label, fam.u_lo, fam.u_hi, ch.v_lo, ch.v_hi, integrand, fo});
      r.f_o.value += fo;
    }
  }
  r.value = r.main.value + r.f_o.value;
  return r;
}

DeltaCertificate delta_bound_generic_point() {
  const CurveConfig cfg = dp4_blowup_config();
  DeltaCertificate c;
  c.target = "delta_P(X), P general";
  c.candidates.emplace_back("1/S_X(H)", s_divisor(class_H()).value.inverse());
  c.candidates.emplace_back("2/S(W^S;G)", Rational(2) / s_w2_exceptional(cfg).value);
  const Rational worst = std::max(s_w3_point(cfg, false).value, s_w3_point(cfg, true).value);
  c.candidates.emplace_back("1/S(W^{S,G};O)", worst.inverse());
  c.bound = c.candidates.front().second;
  for (const auto& [name, v] : c.candidates) c.bound = std::min(c.bound, v);
  return c;
}

CurveOnEReport s_w2_curve_on_E(int n) {
  check_hirzebruch_index(n);
  const DivisorPath path = threefold_path(class_E());
  const Rational prefactor = Rational(3) / anticanonical_volume();
  const MPoly nn(n);
  const MPoly v = var(Var::v);

  CurveOnEReport r;
  r.n = n;
  r.volume.target = "(3/28) int int vol(P(u)|_E - v s)";
  r.nef_confirmed = true;
  // Multiplicity of the negative section in E'|_E.
  const FnClass<Rational> ep = restrict_to_E(class_E_prime(), n);
  r.worst_multiplicity = static_cast<int>(ep(0).numerator().get_si());

  Rational base;  // (3/28) int (P|_E)^2 c(u) du with multiplicity 1
  for (const auto& pc : path.pieces) {
    const FnClass<MPoly> res = restrict_to_E(pc.P, nn);
    const auto it = pc.n_coeffs.find("E'");
    if (it != pc.n_coeffs.end())
      base += prefactor * integrate_u(fn_dot(res, res, nn) * it->second, pc.lo, pc.hi);

    const MPoly a = res(0) - v, b = res(1);
    const auto regions = hirzebruch_vol(a, b, n);
    const VolumeRegion& nef = regions[2];
    const MPoly t = res(0);
    r.thresholds.push_back(t);
    const auto verts = strip_vertices(pc.lo, pc.hi, MPoly(), t);
    for (const MPoly& cond : nef.nonneg) r.nef_confirmed = r.nef_confirmed && nonneg_at_vertices(cond, verts);
    if (!r.nef_confirmed) throw std::logic_error("P(u)|_E - v s leaves the nef region before t(u)");
    const Rational val = prefactor * integrate_uv(nef.volume, pc.lo, pc.hi, MPoly(), t);
    r.volume.terms.push_back({"u in " + interval(pc.lo, pc.hi), pc.lo, pc.hi, MPoly(), t, nef.volume, val});
    r.volume.value += val;
  }
  for (int m = 0; m < 3; ++m) r.ord_term_by_multiplicity[static_cast<std::size_t>(m)] = base * Rational(m);
  r.ord_term = base * Rational(r.worst_multiplicity);
  r.total = r.ord_term + r.volume.value;
  return r;
}

CurveCaseCertificate beta_certificate_curve_case() {
  const Rational inv_se = s_divisor(class_E()).value.inverse();
  CurveCaseCertificate out;
  bool first = true;
  for (int n : {0, 2, 4, 6}) {
    DeltaCertificate c;
    c.target = "E = F_" + std::to_string(n);
    c.candidates.emplace_back("1/S_X(E)", inv_se);
    c.candidates.emplace_back("1/S(W^E;C)", s_w2_curve_on_E(n).total.inverse());
    c.bound = std::min(c.candidates[0].second, c.candidates[1].second);
    if (first || c.bound < out.bound) out.bound = c.bound;
    first = false;
    out.per_n.emplace_back(n, std::move(c));
  }
  return out;
}

}  // namespace fano
