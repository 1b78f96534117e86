#include "fano/zariski.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace fano {

namespace {

MPoly lift(const Rational& r) { return MPoly(r); }

DivClass<MPoly> lift(const DivClass<Rational>& d) { return div_class<MPoly>(lift(d(0)), lift(d(1))); }

Rational as_constant(const MPoly& p, const char* what) {
  if (!p.is_constant()) throw std::domain_error(std::string(what) + " is not constant: " + p.str());
  return p.constant_term();
}

MPoly at_u(const MPoly& p, const Rational& u) { return p.substitute({{Var::u, lift(u)}}); }

Rational eval_u(const MPoly& p, const Rational& u) { return as_constant(at_u(p, u), "value at fixed u"); }

// Coefficient of `v` in a polynomial affine in v.
Rational slope(const MPoly& p, Var v) {
  const auto cs = p.coefficients(v);
  if (cs.size() > 2) throw std::domain_error("not affine in " + std::string(var_name(v)) + ": " + p.str());
  return cs.size() < 2 ? Rational(0) : as_constant(cs[1], "slope");
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.numerator(), d = r.denominator();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(sn, sd));
}

// Square root in Q[u], if one exists.
std::optional<MPoly> poly_sqrt(const MPoly& p) {
  if (p.is_zero()) return MPoly();
  const std::vector<Rational> c = univariate_coefficients(p, Var::u);
  const std::size_t d = c.size() - 1;
  if (d % 2 != 0) return std::nullopt;
  const std::size_t m = d / 2;
  const auto top = rational_sqrt(c[d]);
  if (!top) return std::nullopt;
  std::vector<Rational> s(m + 1);
  s[m] = *top;
  for (std::size_t k = m; k-- > 0;) {
    Rational acc = c[m + k];
    for (std::size_t i = k + 1; i < m; ++i) {
      const std::size_t j = m + k - i;
      if (j > k && j < m) acc -= s[i] * s[j];
    }
    s[k] = acc / (Rational(2) * s[m]);
  }
  MPoly root;
  for (std::size_t k = 0; k <= m; ++k) root += s[k] * var(Var::u, static_cast<unsigned>(k));
  if (!(root * root == p)) return std::nullopt;
  return root;
}

SurfClass zero_class(Eigen::Index n) {
  SurfClass z(n);
  for (Eigen::Index i = 0; i < n; ++i) z(i) = MPoly();
  return z;
}

}  // namespace

// ---------------------------------------------------------------------------

ConeData blowup_cone() {
  return {{"f", "f'"}, {curve_f(), curve_f_prime()}, {class_E(), class_E_prime()}, {"E", "E'"}};
}

DivisorPath threefold_path(const DivClass<Rational>& S) {
  if (S != class_H() && S != class_E())
    throw std::invalid_argument("threefold_path supports S = H or S = E only");
  const ConeData cone = blowup_cone();
  const MPoly u = var(Var::u);
  const DivClass<MPoly> D = lift(anticanonical()) - DivClass<MPoly>(lift(S(0)) * u, lift(S(1)) * u);

  // Pseudoeffective threshold: D in the basis of the effective generators.
  Mat<Rational> basis(2, 2);
  for (int j = 0; j < 2; ++j) basis.col(j) = cone.swept[static_cast<std::size_t>(j)];
  const Mat<Rational> binv = exact_inverse(basis);
  std::optional<Rational> tau;
  for (int i = 0; i < 2; ++i) {
    const MPoly coeff = D(0) * binv(i, 0) + D(1) * binv(i, 1);
    if (eval_u(coeff, 0).sign() < 0) throw std::domain_error("-K_X is not pseudoeffective");
    if (slope(coeff, Var::u).sign() >= 0) continue;
    const Rational root = as_constant(solve_affine(coeff, Var::u), "effective threshold");
    if (!tau || root < *tau) tau = root;
  }
  if (!tau) throw std::domain_error("path is unbounded");

  DivisorPath path;
  path.surface = S;
  path.tau = *tau;
  std::vector<std::size_t> support;
  Rational cur(0);
  while (cur < *tau) {
    // N = sum c_j swept_j with P.gamma_k = 0 on the support.
    const auto k = static_cast<Eigen::Index>(support.size());
    std::vector<MPoly> c(support.size());
    if (k > 0) {
      Mat<Rational> m(k, k);
      for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index b = 0; b < k; ++b)
          m(a, b) = curve_pair(cone.swept[support[static_cast<std::size_t>(b)]],
                               cone.curves[support[static_cast<std::size_t>(a)]]);
      const Mat<Rational> minv = exact_inverse(m);
      for (Eigen::Index b = 0; b < k; ++b)
        for (Eigen::Index a = 0; a < k; ++a)
          c[static_cast<std::size_t>(b)] +=
              curve_pair(D, cone.curves[support[static_cast<std::size_t>(a)]]) * minv(b, a);
    }
    PathPiece piece;
    piece.lo = cur;
    piece.N = div_class<MPoly>(MPoly(), MPoly());
    for (std::size_t j = 0; j < support.size(); ++j) {
      const auto& g = cone.swept[support[j]];
      piece.N += DivClass<MPoly>(c[j] * g(0), c[j] * g(1));
      piece.n_coeffs[cone.swept_names[support[j]]] = c[j];
    }
    piece.P = D - piece.N;

    Rational next = *tau;
    std::vector<std::size_t> entering;
    for (std::size_t i = 0; i < cone.curves.size(); ++i) {
      if (std::find(support.begin(), support.end(), i) != support.end()) continue;
      const MPoly p = curve_pair(piece.P, cone.curves[i]);
      if (slope(p, Var::u).sign() >= 0) continue;
      const Rational root = as_constant(solve_affine(p, Var::u), "nef boundary");
      if (root <= cur) continue;
      if (root < next) {
        next = root;
        entering = {i};
      } else if (root == next && next < *tau) {
        entering.push_back(i);
      }
    }
    piece.hi = next;
    for (const Rational& x : {piece.lo, piece.hi}) {
      for (const auto& gamma : cone.curves)
        if (eval_u(curve_pair(piece.P, gamma), x).sign() < 0)
          throw std::domain_error("positive part fails to be nef");
      for (const auto& cj : c)
        if (eval_u(cj, x).sign() < 0) throw std::domain_error("negative part has a negative coefficient");
    }
    path.pieces.push_back(std::move(piece));
    support.insert(support.end(), entering.begin(), entering.end());
    cur = next;
  }
  return path;
}

// ---------------------------------------------------------------------------

int CurveConfig::index(const std::string& curve) const {
  const auto it = std::find(curves.begin(), curves.end(), curve);
  if (it == curves.end()) throw std::out_of_range("no curve named " + curve + " in " + name);
  return static_cast<int>(it - curves.begin());
}

CurveConfig dp4_config() {
  CurveConfig cfg;
  cfg.name = "dp4";
  cfg.curves = {"C1", "C2", "Z1", "Z2"};
  cfg.gram.resize(4, 4);
  cfg.gram << 0, 1, 2, 1,
              1, 0, 1, 2,
              2, 1, 0, 1,
              1, 2, 1, 0;
  return cfg;
}

CurveConfig blow_up_point(const CurveConfig& cfg, const std::vector<int>& mult,
                          const std::string& exceptional, const std::string& name) {
  const auto n = cfg.gram.rows();
  if (static_cast<Eigen::Index>(mult.size()) != n) throw std::invalid_argument("multiplicity list size");
  CurveConfig out;
  out.name = name;
  for (const auto& c : cfg.curves) out.curves.push_back(c + "~");
  out.curves.push_back(exceptional);
  out.gram.resize(n + 1, n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j)
      out.gram(i, j) = cfg.gram(i, j) - Rational(mult[static_cast<std::size_t>(i)] * mult[static_cast<std::size_t>(j)]);
    out.gram(i, n) = out.gram(n, i) = Rational(mult[static_cast<std::size_t>(i)]);
  }
  out.gram(n, n) = Rational(-1);
  return out;
}

CurveConfig dp4_blowup_config() {
  CurveConfig cfg = blow_up_point(dp4_config(), {1, 1, 1, 1}, "G", "dp4-blowup");
  cfg.incidence["O-on-curve"] = {cfg.index("C1~"), cfg.index("G")};
  cfg.incidence["O-generic"] = {cfg.index("G")};
  return cfg;
}

CurveConfig hirzebruch_config(int n) {
  check_hirzebruch_index(n);
  CurveConfig cfg;
  cfg.name = "hirzebruch-" + std::to_string(n);
  cfg.curves = {"s", "f"};
  cfg.gram.resize(2, 2);
  cfg.gram << Rational(-n), Rational(1), Rational(1), Rational(0);
  return cfg;
}

CurveConfig named_config(const std::string& name) {
  if (name == "dp4") return dp4_config();
  if (name == "dp4-blowup") return dp4_blowup_config();
  const std::string prefix = "hirzebruch-";
  if (name.rfind(prefix, 0) == 0) return hirzebruch_config(std::stoi(name.substr(prefix.size())));
  throw std::invalid_argument("unknown configuration " + name);
}

MPoly surf_dot(const SurfClass& a, const SurfClass& b, const Mat<Rational>& gram) {
  MPoly acc;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < b.size(); ++j)
      if (!gram(i, j).is_zero() && !b(j).is_zero()) acc += a(i) * b(j) * gram(i, j);
  }
  return acc;
}

MPoly surf_dot_curve(const SurfClass& a, int curve, const Mat<Rational>& gram) {
  MPoly acc;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!gram(i, curve).is_zero()) acc += a(i) * gram(i, curve);
  return acc;
}

SurfClass h_surface_restriction(int piece) {
  const MPoly u = var(Var::u);
  SurfClass c = zero_class(4);
  if (piece == 0) {
    const MPoly a = (MPoly(3) - 2 * u) * Rational(1, 2);
    c << a, a, MPoly(Rational(1, 2)), MPoly(Rational(1, 2));
  } else if (piece == 1) {
    const MPoly a = MPoly(3) - 2 * u;
    c << a, MPoly(), a, MPoly();
  } else {
    throw std::out_of_range("path piece index");
  }
  return c;
}

SurfClass pullback_minus_vG(const SurfClass& cls, const std::vector<int>& mult) {
  const auto n = cls.size();
  SurfClass out = zero_class(n + 1);
  MPoly g = -var(Var::v);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i) = cls(i);
    g += cls(i) * Rational(mult[static_cast<std::size_t>(i)]);
  }
  out(n) = g;
  return out;
}

bool negative_definite(const Mat<Rational>& gram) {
  for (Eigen::Index k = 1; k <= gram.rows(); ++k) {
    const Rational d = bareiss_det(Mat<Rational>(gram.topLeftCorner(k, k)));
    if (d.sign() != (k % 2 == 0 ? 1 : -1)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

void require_affine_uv(const MPoly& p, const char* what) {
  for (Var x : p.variables())
    if (x != Var::u && x != Var::v)
      throw std::domain_error(std::string(what) + " involves a variable other than u, v");
  if (p.total_degree() > 1) throw std::domain_error(std::string(what) + " is not affine: " + p.str());
}

std::vector<Point> strip_vertices(const Rational& u_lo, const Rational& u_hi, const MPoly& lo,
                                  const MPoly& hi) {
  std::vector<Point> pts;
  for (const Rational& u : {u_lo, u_hi})
    for (const MPoly* b : {&lo, &hi}) pts.push_back({{Var::u, u}, {Var::v, eval_u(*b, u)}});
  return pts;
}

bool nonneg_at_vertices(const MPoly& p, const std::vector<Point>& pts) {
  require_affine_uv(p, "sign-checked function");
  return std::all_of(pts.begin(), pts.end(), [&](const Point& q) { return p.evaluate(q).sign() >= 0; });
}

bool nonneg_on_interval(const MPoly& p, const Rational& lo, const Rational& hi) {
  const std::vector<Rational> c = p.is_zero() ? std::vector<Rational>{} : univariate_coefficients(p, Var::u);
  if (c.size() > 3) throw std::domain_error("interval positivity only for degree <= 2");
  auto at = [&](const Rational& x) {
    Rational acc(0), pw(1);
    for (const auto& ci : c) { acc += ci * pw; pw *= x; }
    return acc;
  };
  if (at(lo).sign() < 0 || at(hi).sign() < 0) return false;
  if (c.size() == 3 && c[2].sign() > 0) {
    const Rational x = -c[1] / (Rational(2) * c[2]);
    if (lo < x && x < hi && at(x).sign() < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

SurfaceChambers surface_chambers(const SurfClass& cls, const CurveConfig& cfg, const Rational& u_lo,
                                 const Rational& u_hi) {
  const auto nc = cfg.gram.rows();
  if (cls.size() != nc) throw std::invalid_argument("class length does not match configuration");
  for (Eigen::Index i = 0; i < nc; ++i) require_affine_uv(cls(i), "class coefficient");
  if (!(u_lo <= u_hi)) throw std::invalid_argument("empty u-interval");

  const Rational u_mid = (u_lo + u_hi) * Rational(1, 2);
  SurfaceChambers out;
  out.u_lo = u_lo;
  out.u_hi = u_hi;
  out.cls = cls;

  std::vector<int> support;
  MPoly v_lo;
  for (int round = 0; round <= nc; ++round) {
    Chamber ch;
    ch.v_lo = v_lo;
    ch.support = support;
    ch.N = zero_class(nc);
    if (!support.empty()) {
      const auto k = static_cast<Eigen::Index>(support.size());
      Mat<Rational> g(k, k);
      for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index b = 0; b < k; ++b)
          g(a, b) = cfg.gram(support[static_cast<std::size_t>(a)], support[static_cast<std::size_t>(b)]);
      if (!negative_definite(g)) throw std::domain_error("support Gram matrix is not negative definite");
      const Mat<Rational> ginv = exact_inverse(g);
      for (Eigen::Index a = 0; a < k; ++a) {
        MPoly x;
        for (Eigen::Index b = 0; b < k; ++b)
          x += surf_dot_curve(cls, support[static_cast<std::size_t>(b)], cfg.gram) * ginv(a, b);
        ch.N(support[static_cast<std::size_t>(a)]) = x;
      }
    }
    ch.P = cls - ch.N;

    // Candidate upper ends: sign changes of P.C_i and roots of P^2.
    struct Candidate {
      MPoly value;
      int curve;  // -1 for a root of P^2
    };
    std::vector<Candidate> cands;
    for (int i = 0; i < nc; ++i) {
      if (std::find(support.begin(), support.end(), i) != support.end()) continue;
      const MPoly p = surf_dot_curve(ch.P, i, cfg.gram);
      require_affine_uv(p, "curve pairing");
      if (slope(p, Var::v).sign() >= 0) continue;
      cands.push_back({solve_affine(p, Var::v), i});
    }
    const MPoly sq = surf_dot(ch.P, ch.P, cfg.gram);
    const auto qc = sq.coefficients(Var::v);
    if (qc.size() > 3) throw std::domain_error("P^2 is not quadratic in v");
    const Rational c2 = qc.size() == 3 ? as_constant(qc[2], "v^2 coefficient of P^2") : Rational(0);
    bool rational_roots = false;
    if (!c2.is_zero()) {
      const MPoly c1 = qc.size() > 1 ? qc[1] : MPoly();
      const MPoly disc = c1 * c1 - qc[0] * c2 * Rational(4);
      if (const auto s = poly_sqrt(disc)) {
        rational_roots = true;
        const Rational inv = (Rational(2) * c2).inverse();
        for (const MPoly& r : {(-c1 + *s) * inv, (-c1 - *s) * inv}) {
          if (r.total_degree() <= 1) cands.push_back({r, -1});
        }
      }
    } else if (qc.size() == 2) {
      rational_roots = true;
      cands.push_back({solve_affine(sq, Var::v), -1});
    }
    std::vector<Candidate> live;
    for (auto& c : cands)
      if (eval_u(c.value, u_mid) > eval_u(v_lo, u_mid)) live.push_back(c);
    if (live.empty()) throw std::domain_error("no chamber boundary found");
    const Candidate* best = &live.front();
    for (const auto& c : live)
      if (eval_u(c.value, u_mid) < eval_u(best->value, u_mid)) best = &c;
    for (const auto& c : live)
      for (const Rational& x : {u_lo, u_hi})
        if (eval_u(best->value, x) > eval_u(c.value, x))
          throw std::domain_error("chamber boundaries cross inside the u-interval");
    ch.v_hi = best->value;

    bool terminal = false;
    std::vector<int> entering;
    for (const auto& c : live) {
      if (!(c.value == best->value)) continue;
      if (c.curve < 0) terminal = true;
      else entering.push_back(c.curve);
    }
    if (!terminal && !rational_roots) {
      // P^2 concave in v and nonnegative at both ends: no earlier threshold.
      if (c2.sign() > 0 || !nonneg_on_interval(sq.substitute({{Var::v, v_lo}}), u_lo, u_hi) ||
          !nonneg_on_interval(sq.substitute({{Var::v, ch.v_hi}}), u_lo, u_hi))
        throw std::domain_error("cannot certify positivity of P^2 inside the chamber");
    }

    const auto verts = strip_vertices(u_lo, u_hi, ch.v_lo, ch.v_hi);
    for (int i = 0; i < nc; ++i) {
      const MPoly p = surf_dot_curve(ch.P, i, cfg.gram);
      const bool in_support = std::find(support.begin(), support.end(), i) != support.end();
      if (in_support ? !p.is_zero() : !nonneg_at_vertices(p, verts))
        throw std::domain_error("positive part check failed on curve " + cfg.curves[static_cast<std::size_t>(i)]);
      if (!nonneg_at_vertices(ch.N(i), verts)) throw std::domain_error("negative part has negative coefficient");
    }
    out.chambers.push_back(ch);
    if (terminal) {
      out.threshold = ch.v_hi;
      return out;
    }
    v_lo = ch.v_hi;
    support.insert(support.end(), entering.begin(), entering.end());
    std::sort(support.begin(), support.end());
  }
  throw std::domain_error("chamber search did not terminate");
}

std::vector<ChamberSquare> chamber_squares(const SurfaceChambers& ch, const CurveConfig& cfg,
                                           int designated_curve) {
  std::vector<ChamberSquare> out;
  for (const auto& c : ch.chambers)
    out.push_back({surf_dot(c.P, c.P, cfg.gram), surf_dot_curve(c.P, designated_curve, cfg.gram)});
  return out;
}

// ---------------------------------------------------------------------------

std::vector<VolumeRegion> hirzebruch_vol(const MPoly& a, const MPoly& b, int n) {
  if (n < 0) throw std::invalid_argument("negative Hirzebruch index");
  std::vector<VolumeRegion> out;
  out.push_back({"a<0", {}, {-a}, MPoly()});
  out.push_back({"b<0", {}, {-b}, MPoly()});
  out.push_back({"nef", {a, b - a * Rational(n)}, {}, a * a * Rational(-n) + a * b * Rational(2)});
  if (n > 0) out.push_back({"zariski", {a, b}, {a * Rational(n) - b}, b * b * Rational(1, n)});
  return out;
}

Rational hirzebruch_vol(const Rational& a, const Rational& b, int n) {
  if (n < 0) throw std::invalid_argument("negative Hirzebruch index");
  if (a.sign() < 0 || b.sign() < 0) return Rational(0);
  if (b >= a * Rational(n)) return Rational(-n) * a * a + Rational(2) * a * b;
  return b * b / Rational(n);
}

}  // namespace fano
