#include "fano/normal_form.hpp"

#include "fano/eval.hpp"
#include "fano/linalg.hpp"

#include <sstream>

namespace fano {

namespace {

using Coeffs = QuadricCoeffs<AlgElem>;

MPoly sv(int i) { return var(s_var(i)); }

bool zero(const AlgElem& a) { return decide_zero(a); }

std::map<Var, AlgElem> bindings(const Coeffs& s) {
  std::map<Var, AlgElem> out;
  for (int i = 0; i < 6; ++i) out[s_var(i)] = s(i);
  return out;
}

/// Row i of an action matrix applied to s, as a polynomial in the parameter.
UPoly<AlgElem> row_poly(const Eigen::Matrix<MPoly, 6, 6>& r, Var v, const Coeffs& s, int i) {
  std::vector<AlgElem> coeffs;
  for (int j = 0; j < 6; ++j) {
    if (s(j).is_zero()) continue;
    const auto cj = univariate_coefficients(r(i, j), v);
    if (coeffs.size() < cj.size()) coeffs.resize(cj.size(), AlgElem(0));
    for (std::size_t k = 0; k < cj.size(); ++k)
      if (!cj[k].is_zero()) coeffs[k] += s(j) * AlgElem(cj[k]);
  }
  return UPoly<AlgElem>(std::move(coeffs));
}

// Generic symbolic data with s1 = 0 for the combined move lower(c) then
// upper(b). Here s3' is affine in b and s1' is cubic.
struct S3Data {
  MPoly a, b, g1;  // s3' = b * B + A; g1 = (sum s1'_k (-A)^k B^(3-k)) / B
};

/// Eliminates b from (s1', s3') given s3' affine in b: returns (A, B, g1).
std::array<MPoly, 3> eliminate_b(const MPoly& cubic, const MPoly& affine) {
  const auto lin = affine.coefficients(Var::b);
  if (lin.size() != 2) throw std::logic_error("s3' is not affine in b");
  const auto cub = cubic.coefficients(Var::b);
  MPoly g;
  MPoly minus_a_pow(1);
  for (std::size_t k = 0; k < cub.size(); ++k) {
    g += cub[k] * minus_a_pow * pow(lin[1], static_cast<unsigned>(cub.size() - 1 - k));
    minus_a_pow *= -lin[0];
  }
  return {lin[0], lin[1], exact_divide(g, lin[1])};
}

const S3Data& s3_data() {
  static const S3Data data = [] {
    QuadricCoeffs<MPoly> sym = symbolic_coeffs();
    sym(1) = MPoly(0);
    const auto u = pullback_upper(pullback_lower(sym, var(Var::c)), var(Var::b));
    const auto [a, b, g1] = eliminate_b(u(1), u(3));
    return S3Data{a, b, g1};
  }();
  return data;
}

struct State {
  ExtensionContext& ctx;
  Coeffs s;
  Witness w;
  std::vector<std::string> trace;

  void apply(Move::Kind kind, const AlgElem& param = AlgElem(0)) {
    Move m{kind, param};
    switch (kind) {
      case Move::Kind::lower: s = pullback_lower(s, param); break;
      case Move::Kind::upper: s = pullback_upper(s, param); break;
      default: s = apply_move(s, m); break;
    }
    w.moves.push_back(std::move(m));
  }
  void require_zero(int i, const char* where) const {
    if (!zero(s(i))) throw std::logic_error(std::string(where) + ": s" + std::to_string(i) + " did not vanish");
  }
};

void eliminate_s1(State& st) {
  const Coeffs& s = st.s;
  if (!zero(s(2)) || !zero(s(3)) || !zero(s(4))) {
    const auto p = row_poly(upper_action_matrix(), Var::b, s, 1);
    const AlgElem b = st.ctx.adjoin_root(p);
    st.trace.push_back("eliminate_s1: upper unipotent, b a root of " + p.str("b"));
    st.apply(Move::Kind::upper, b);
  } else {
    const auto p = row_poly(lower_action_matrix(), Var::c, s, 1);
    const AlgElem c = st.ctx.adjoin_root(p);
    st.trace.push_back("eliminate_s1: lower unipotent, c = " + describe(c));
    st.apply(Move::Kind::lower, c);
  }
  st.require_zero(1, "eliminate_s1");
}

void reduce_front_zero(State& st) {
  if (zero(st.s(5))) throw std::logic_error("reduce_front_zero: s5 = 0 on a smooth quadric");
  st.apply(Move::Kind::cstar, st.s(3) / st.s(5));
  st.apply(Move::Kind::iota);
  st.trace.push_back("reduce_front_zero: scale s3 = s5, apply iota");
  if (!zero(st.s(2))) {
    const AlgElem b = st.ctx.adjoin_root(row_poly(upper_action_matrix(), Var::b, st.s, 1));
    st.trace.push_back("reduce_front_zero: b = " + describe(b) + " clears s1");
    st.apply(Move::Kind::upper, b);
    st.require_zero(1, "reduce_front_zero");
  } else {
    const AlgElem b = st.ctx.adjoin_root(row_poly(upper_action_matrix(), Var::b, st.s, 0));
    st.trace.push_back("reduce_front_zero: b = " + describe(b) + " clears s0");
    st.apply(Move::Kind::upper, b);
    st.require_zero(0, "reduce_front_zero");
  }
}

void eliminate_s3(State& st) {
  const S3Data& d = s3_data();
  auto vals = bindings(st.s);
  const auto g1 = to_upoly(d.g1, Var::c, vals);
  const AlgElem c = st.ctx.adjoin_root(g1);
  vals[Var::c] = c;
  const AlgElem b = -evaluate_poly(d.a, vals) / evaluate_poly(d.b, vals);
  st.trace.push_back("eliminate_s3: c a root of " + g1.str("c") + ", b = -A(c)/B(c)");
  st.apply(Move::Kind::lower, c);
  st.apply(Move::Kind::upper, b);
  st.require_zero(1, "eliminate_s3");
  st.require_zero(3, "eliminate_s3");
}

// h = 0: a common root c of A and B clears s3 and s4 under lower(c) alone;
// iota then moves the zeros to s0, s1.
void h_zero_path(State& st) {
  const S3Data& d = s3_data();
  const auto vals = bindings(st.s);
  const auto g = gcd(to_upoly(d.a, Var::c, vals), to_upoly(d.b, Var::c, vals));
  if (g.degree() < 1) throw std::logic_error("h_zero_path: trivial gcd although h vanishes");
  const AlgElem c = st.ctx.adjoin_root(g);
  st.trace.push_back("h_zero_path: c a common root, gcd " + g.str("c") + "; apply iota");
  st.apply(Move::Kind::lower, c);
  st.require_zero(3, "h_zero_path");
  st.require_zero(4, "h_zero_path");
  st.apply(Move::Kind::iota);
}

// Nondegeneracy expression in terms of lambda and mu^2.
AlgElem constraint_value(int number, const AlgElem& l, const AlgElem& mu_sq) {
  switch (number) {
    case 1: return (mu_sq - AlgElem(3)) * (mu_sq - AlgElem(4));
    case 2:
      return (l - AlgElem(3)) * (AlgElem(3) * l * l - mu_sq - AlgElem(6) * l - AlgElem(9)) *
             (AlgElem(4) * l * l - mu_sq);
    case 4: return l * (l + AlgElem(1)) * (l - AlgElem(3));
    case 3:
    case 5: return AlgElem(1);
    default: throw std::invalid_argument("case number must be 1..5");
  }
}

// Labels are read off before the final scaling where possible: lambda is
// scale invariant and mu is t^2 times a quantity of the smaller tower, so
// every zero test stays below the radical.
CaseLabel finalize(State& st) {
  CaseLabel label;
  AlgElem mu_sq(0);
  const bool z0 = zero(st.s(0)), z4 = zero(st.s(4));
  if (!z0 && !z4) {
    const Coeffs pre = st.s;
    const AlgElem r = pre(4) / pre(0);
    const AlgElem t = st.ctx.adjoin_radical(r, 4);
    st.apply(Move::Kind::cstar, t);
    st.trace.push_back("finalize: scale s0 = s4 by " + describe(t));
    AlgElem q;
    if (zero(pre(2))) {
      if (zero(pre(5))) throw std::logic_error("finalize: s5 = 0 on a smooth quadric");
      label.number = 1;
      q = pre(0) / pre(5);
    } else {
      label.number = 2;
      const AlgElem inv2 = pre(2).inverse();
      label.lambda = AlgElem(3) * pre(5) * inv2;
      q = AlgElem(3) * pre(0) * inv2;
    }
    label.mu = t * t * q;
    mu_sq = r * q * q;
  } else if (z0 && z4) {
    const Coeffs& s = st.s;
    if (zero(s(2))) {
      label.number = 1;
    } else {
      label.number = 2;
      label.lambda = AlgElem(3) * s(5) / s(2);
    }
    label.mu = AlgElem(0);
  } else {
    if (z0) {
      st.apply(Move::Kind::iota);
      st.trace.push_back("finalize: iota moves s4 to s0");
    }
    const Coeffs pre = st.s;
    if (zero(pre(2))) {
      st.apply(Move::Kind::cstar, st.ctx.adjoin_radical(pre(5) / pre(0), 2));
      label.number = 3;
    } else {
      st.apply(Move::Kind::cstar, st.ctx.adjoin_radical(pre(2) / (AlgElem(3) * pre(0)), 2));
      label.number = 4;
      label.lambda = AlgElem(3) * pre(5) / pre(2);
    }
  }
  // mu is either the literal 0 or t^2 times a quotient of certified nonzero values
  if (label.number <= 2)
    label.git = label.mu->is_zero() ? GitStatus::polystable : GitStatus::stable;
  else
    label.git = GitStatus::strictly_semistable;
  if (zero(constraint_value(label.number, label.lambda.value_or(AlgElem(0)), mu_sq)))
    throw std::logic_error("normal form violates its nondegeneracy constraint");
  return label;
}

// Symbolic Hessian evaluated term by term, skipping terms that meet a zero
// coefficient; normal forms have at most four nonzero entries.
AlgElem sparse_hessian(const Coeffs& s) {
  static const MPoly hess = hessian_det(symbolic_coeffs());
  AlgElem total(0);
  for (const auto& [m, c] : hess.terms()) {
    AlgElem term(c);
    bool vanishes = false;
    for (int i = 0; i < 6 && !vanishes; ++i) {
      const unsigned e = m.exp[static_cast<std::size_t>(s_var(i))];
      if (e == 0) continue;
      if (s(i).is_zero()) vanishes = true;
      else
        for (unsigned k = 0; k < e; ++k) term = term * s(i);
    }
    if (!vanishes) total = total + term;
  }
  return total;
}

Classification run(const QuadricCoeffs<Rational>& input, const BranchPlan& plan) {
  ExtensionContext ctx(plan);
  State st{ctx, to_coeffs<AlgElem>(input), {}, {}};
  const MPoly h = h_homogeneous();
  for (int step = 0; step < 16; ++step) {
    const Coeffs& s = st.s;
    CaseLabel label;
    bool done = false;
    if (!zero(s(1))) {
      if (zero(s(0)) && zero(s(2)) && zero(s(3)) && zero(s(4))) {
        st.apply(Move::Kind::cstar, s(5) / s(1));
        st.trace.push_back("eliminate_s1: only s1, s5 remain; scale to f1 + f5");
        label.number = 5;
        label.git = git_status(5, std::nullopt);
        if (!projectively_equal(st.s, normal_form_coeffs(label)))
          throw std::logic_error("scaling did not reach f1 + f5");
        done = true;
      } else {
        eliminate_s1(st);
      }
    } else if (zero(s(3))) {
      label = finalize(st);
      done = true;
    } else if (zero(s(0))) {
      reduce_front_zero(st);
    } else if (!zero(evaluate_poly(h, bindings(s)))) {
      eliminate_s3(st);
    } else {
      h_zero_path(st);
    }
    if (done) {
      Classification out;
      out.input = input;
      st.w.tower = ctx.tower();
      out.witness = std::move(st.w);
      out.label = std::move(label);
      out.normal_form = normal_form_coeffs(out.label);
      out.trace = std::move(st.trace);
      return out;
    }
  }
  throw std::logic_error("classification did not terminate");
}

}  // namespace

std::string to_string(GitStatus g) {
  switch (g) {
    case GitStatus::polystable: return "polystable";
    case GitStatus::strictly_semistable: return "strictly-semistable";
    case GitStatus::stable: return "stable";
  }
  return "?";
}

QuadricCoeffs<AlgElem> normal_form_coeffs(const CaseLabel& label) {
  const AlgElem mu = label.mu.value_or(AlgElem(0));
  const AlgElem lambda = label.lambda.value_or(AlgElem(0));
  Coeffs s = Coeffs::Constant(AlgElem(0));
  switch (label.number) {
    case 1: s << mu, 0, 0, 0, mu, 1; break;
    case 2: s << mu, 0, 3, 0, mu, lambda; break;
    case 3: s << 1, 0, 0, 0, 0, 1; break;
    case 4: s << 1, 0, 3, 0, 0, lambda; break;
    case 5: s << 0, 1, 0, 0, 0, 1; break;
    default: throw std::invalid_argument("case number must be 1..5");
  }
  return s;
}

AlgElem case_constraint(const CaseLabel& label) {
  const AlgElem mu = label.mu.value_or(AlgElem(0));
  return constraint_value(label.number, label.lambda.value_or(AlgElem(0)), mu * mu);
}

GitStatus git_status(int case_number, const std::optional<AlgElem>& mu) {
  switch (case_number) {
    case 1:
    case 2: return (mu && !decide_zero(*mu)) ? GitStatus::stable : GitStatus::polystable;
    case 3:
    case 4:
    case 5: return GitStatus::strictly_semistable;
    default: throw std::invalid_argument("case number must be 1..5");
  }
}

std::string Move::str() const {
  switch (kind) {
    case Kind::lower: return "lower(c = " + describe(param) + ")";
    case Kind::upper: return "upper(b = " + describe(param) + ")";
    case Kind::iota: return "iota";
    case Kind::tau: return "tau";
    case Kind::cstar: return "cstar(" + describe(param) + ")";
  }
  return "?";
}

QuadricCoeffs<AlgElem> apply_move(const QuadricCoeffs<AlgElem>& s, const Move& m) {
  switch (m.kind) {
    case Move::Kind::lower: return pullback(s, SL2<AlgElem>::lower(m.param));
    case Move::Kind::upper: return pullback(s, SL2<AlgElem>::upper(m.param));
    case Move::Kind::iota: return involution_act(s, Involution::iota);
    case Move::Kind::tau: return involution_act(s, Involution::tau);
    case Move::Kind::cstar: return cstar_act(s, m.param);
  }
  throw std::invalid_argument("unknown move");
}

QuadricCoeffs<AlgElem> replay(const QuadricCoeffs<Rational>& input, const Witness& w) {
  Coeffs s = to_coeffs<AlgElem>(input);
  for (const Move& m : w.moves) s = apply_move(s, m);
  return s;
}

bool verify_witness(const Classification& c) {
  return projectively_equal(replay(c.input, c.witness), normal_form_coeffs(c.label));
}

Classification classify(const QuadricCoeffs<Rational>& s) {
  if (hessian_det(s).is_zero()) throw SingularQuadric();
  int attempts = 0;
  Classification out = explore_branches([&](const BranchPlan& plan) {
    ++attempts;
    return run(s, plan);
  });
  out.branches_tried = attempts;
  if (!verify_witness(out)) throw std::logic_error("witness replay does not reproduce the normal form");
  if (decide_zero(sparse_hessian(normal_form_coeffs(out.label)))) throw std::logic_error("normal form is singular");
  return out;
}

MPoly h_homogeneous() {
  return 256 * pow(sv(2), 4) * sv(4) - 128 * sv(0) * sv(2) * sv(2) * sv(4) * sv(4) -
         64 * pow(sv(2), 3) * sv(3) * sv(3) + 16 * sv(0) * sv(0) * pow(sv(4), 3) +
         144 * sv(0) * sv(2) * sv(3) * sv(3) * sv(4) - 27 * sv(0) * pow(sv(3), 4);
}

const EliminationPolynomials& elimination_polynomials() {
  static const EliminationPolynomials e = [] {
    QuadricCoeffs<MPoly> sym = symbolic_coeffs();
    sym(0) = MPoly(1);
    sym(1) = MPoly(0);
    sym(3) = MPoly(1);
    const MPoly b = var(Var::b), c = var(Var::c);
    const auto u = pullback(pullback(sym, SL2<MPoly>::lower(c)), SL2<MPoly>::upper(b));
    EliminationPolynomials out;
    out.s1_prime = u(1);
    out.s3_prime = u(3);
    out.s4_prime = u(4);
    const auto [a, lead, g1] = eliminate_b(u(1), u(3));
    out.g1 = g1;
    out.g2 = lead;
    out.resultant_g1_g2 = resultant(out.g1, out.g2, Var::c);
    out.b_free_combination = out.s3_prime - 2 * b * out.s4_prime;
    out.resultant_lemma_pair = resultant(out.s4_prime, out.b_free_combination, Var::c);
    return out;
  }();
  return e;
}

std::pair<MPoly, MPoly> degeneration_identity(const QuadricCoeffs<MPoly>& s) {
  if (!s(3).is_zero() || !s(4).is_zero() || s(5) != MPoly(1))
    throw std::invalid_argument("degeneration identity needs s0 f0 + s1 f1 + s2 f2 + f5");
  const MPoly l = var(Var::lambda);
  const auto& f = basis_forms();
  MPoly q;
  for (int k = 0; k < 6; ++k) q += s(k) * f[static_cast<std::size_t>(k)];
  std::map<Var, MPoly> bind;
  for (int i = 0; i < 5; ++i) bind[x_var(i)] = pow(l, static_cast<unsigned>(i)) * var(x_var(i));
  const MPoly lhs = q.substitute(bind);
  const MPoly rhs = pow(l, 4) * (f[5] + s(2) * f[2] + l * s(1) * f[1] + l * l * s(0) * f[0]);
  return {lhs, rhs};
}

Case1Locus case1_smoothness_locus() {
  const MPoly mu = var(Var::mu);
  QuadricCoeffs<MPoly> s;
  s << mu, 0, 0, 0, mu, 1;
  Case1Locus out;
  out.hessian = hessian_det(s);
  out.stated = 8 * (mu * mu - 3) * (mu * mu - 4);
  // same roots: each divides the other up to a constant
  try {
    const MPoly q = exact_divide(out.hessian, out.stated);
    out.agrees = q.is_constant() && !q.is_zero();
  } catch (const std::domain_error&) {
    out.agrees = false;
  }
  return out;
}

std::string describe(const AlgElem& a) {
  if (a.is_rational()) return a.to_rational().str();
  std::ostringstream os;
  os << a.str() << " where";
  bool first = true;
  for (const MPoly& m : a.tower()->moduli()) {
    os << (first ? " " : ", ") << m.str() << " = 0";
    first = false;
  }
  return os.str();
}

}  // namespace fano
