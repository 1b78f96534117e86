#include "fano/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace fano {

namespace {

MPoly join_top(const UPoly<AlgElem>& p, int level) {
  const Var r = root_var(level);
  MPoly out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out += p.coeffs()[i].rep() * var(r, static_cast<unsigned>(i));
  return out;
}

}  // namespace

const TowerPtr& Tower::rationals() {
  static const TowerPtr root(new Tower());
  return root;
}

// Integer arithmetic on coefficient arrays laid out as in AlgElem.
struct DenseOps {
  using Z = std::vector<mpz_class>;

  static bool zero_block(const mpz_class* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(a[i]) != 0) return false;
    return true;
  }

  // out = a * b in the integral tower; moduli are monic so no denominators
  static void mul(const Tower* t, const mpz_class* a, const mpz_class* b, mpz_class* out) {
    if (t->level_ == 0) {
      mpz_mul(out[0].get_mpz_t(), a[0].get_mpz_t(), b[0].get_mpz_t());
      return;
    }
    const Tower* par = t->parent_.get();
    const std::size_t d = t->degree_, n = par->total_;
    Z prod((2 * d - 1) * n);
    std::vector<char> an(d), bn(d);
    for (std::size_t i = 0; i < d; ++i) {
      an[i] = !zero_block(a + i * n, n);
      bn[i] = !zero_block(b + i * n, n);
    }
    Z tmp(n);
    for (std::size_t i = 0; i < d; ++i) {
      if (!an[i]) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (!bn[j]) continue;
        mpz_class* dst = prod.data() + (i + j) * n;
        if (n == 1) {
          mpz_addmul(dst->get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        } else {
          mul(par, a + i * n, b + j * n, tmp.data());
          for (std::size_t k = 0; k < n; ++k) mpz_add(dst[k].get_mpz_t(), dst[k].get_mpz_t(), tmp[k].get_mpz_t());
        }
      }
    }
    for (std::size_t i = 2 * d - 2; i >= d; --i) {
      const mpz_class* c = prod.data() + i * n;
      if (zero_block(c, n)) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (!t->mod_nonzero_[j]) continue;
        const Z& m = t->dense_mod_[j];
        mpz_class* dst = prod.data() + (i - d + j) * n;
        if (n == 1) {
          mpz_submul(dst->get_mpz_t(), c->get_mpz_t(), m[0].get_mpz_t());
        } else {
          mul(par, c, m.data(), tmp.data());
          for (std::size_t k = 0; k < n; ++k) mpz_sub(dst[k].get_mpz_t(), dst[k].get_mpz_t(), tmp[k].get_mpz_t());
        }
      }
    }
    for (std::size_t k = 0; k < d * n; ++k) out[k].swap(prod[k]);
  }

  static Z padded(const Z& v, std::size_t n) {
    if (v.size() == n) return v;
    Z out(n);
    const std::size_t k = std::min(n, v.size());
    for (std::size_t i = k; i < v.size(); ++i)
      if (sgn(v[i]) != 0) throw std::logic_error("element does not fit the requested tower level");
    std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), out.begin());
    return out;
  }

  static const Tower* at_level(const Tower* t, int level) {
    while (t->level_ > level) t = t->parent_.get();
    return t;
  }

  // Chain from level 1 up to t.
  static std::vector<const Tower*> chain(const Tower* t) {
    std::vector<const Tower*> out;
    for (; t->level_ > 0; t = t->parent_.get()) out.push_back(t);
    std::reverse(out.begin(), out.end());
    return out;
  }

  // r_level = y_level / D as an element of `t`
  static AlgElem generator(const TowerPtr& t, int level) {
    const Tower* node = at_level(t.get(), level);
    Z y(t->total_);
    if (node->degree_ >= 2) {
      y[node->parent_->total_] = 1;
    } else {
      const Z m = padded(node->dense_mod_[0], t->total_);
      for (std::size_t i = 0; i < m.size(); ++i) y[i] = -m[i];
    }
    return AlgElem(t, std::move(y), node->scale_);
  }

  // Clears denominators of rational y-coordinates.
  static AlgElem from_rationals(const TowerPtr& t, const std::vector<Rational>& q) {
    mpz_class den = 1;
    for (const Rational& x : q)
      if (!x.is_zero()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.value().get_den_mpz_t());
    Z num(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
      if (!q[i].is_zero()) num[i] = q[i].value().get_num() * (den / q[i].value().get_den());
    return AlgElem(t, std::move(num), std::move(den));
  }

  static AlgElem from_mpoly(const TowerPtr& t, const MPoly& p) {
    const auto levels = chain(t.get());
    std::vector<Rational> direct(t->total_);
    AlgElem rest(0);
    std::vector<unsigned> e(levels.size() + 1);
    for (const auto& [m, c] : p.terms()) {
      std::fill(e.begin(), e.end(), 0u);
      for (std::size_t i = 0; i < kVarCount; ++i) {
        if (m.exp[i] == 0) continue;
        const int lvl = root_level(static_cast<Var>(i));
        if (lvl == 0 || lvl > t->level_)
          throw std::invalid_argument("element uses variables outside its tower: " + p.str());
        e[static_cast<std::size_t>(lvl)] = m.exp[i];
      }
      bool fits = true;
      std::size_t index = 0;
      mpz_class scale = 1;
      for (const Tower* node : levels) {
        const unsigned ek = e[static_cast<std::size_t>(node->level_)];
        if (ek >= node->degree_) fits = false;
        index += ek * node->parent_->total_;
        if (ek != 0) {
          mpz_class pw;
          mpz_pow_ui(pw.get_mpz_t(), node->scale_.get_mpz_t(), ek);
          scale *= pw;
        }
      }
      if (fits) {
        direct[index] += c / Rational(mpq_class(scale));
        continue;
      }
      AlgElem term(c);
      for (const Tower* node : levels) {
        const unsigned ek = e[static_cast<std::size_t>(node->level_)];
        if (ek != 0) term = term * pow(generator(t, node->level_), ek);
      }
      rest = rest + term;
    }
    return from_rationals(t, direct) + rest;
  }

  static MPoly to_mpoly(const Tower* t, const Z& num, const mpz_class& den) {
    const auto levels = chain(t);
    MPoly out;
    for (std::size_t idx = 0; idx < num.size(); ++idx) {
      if (sgn(num[idx]) == 0) continue;
      mpz_class scale = 1;
      MPoly mono(1);
      std::size_t rest = idx;
      for (const Tower* node : levels) {
        const unsigned e = static_cast<unsigned>(rest % node->degree_);
        rest /= node->degree_;
        if (e == 0) continue;
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), node->scale_.get_mpz_t(), e);
        scale *= pw;
        mono *= var(root_var(node->level_), e);
      }
      out += Rational(mpq_class(num[idx] * scale, den)) * mono;
    }
    return out;
  }

  // Element of `node` with the given coefficients in its top y-generator.
  static AlgElem join(const UPoly<AlgElem>& p, const TowerPtr& node) {
    const std::size_t n = node->parent()->total_degree();
    if (p.coeffs().size() > node->degree()) throw std::logic_error("join: degree exceeds the level degree");
    mpz_class den = 1;
    for (const AlgElem& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den_.get_mpz_t());
    Z v(node->total_degree());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      const AlgElem& c = p.coeffs()[i];
      const mpz_class f = den / c.den_;
      const Z cn = padded(c.num_, n);
      for (std::size_t k = 0; k < n; ++k) v[i * n + k] = cn[k] * f;
    }
    return AlgElem(node, std::move(v), std::move(den));
  }

  // The same polynomial in the top r-generator, made monic.
  static MPoly to_r_monic(const UPoly<AlgElem>& p, const Tower& node) {
    const Var r = root_var(node.level_);
    MPoly out;
    mpz_class pw = 1;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      out += p.coeffs()[i].rep() * Rational(mpq_class(pw)) * var(r, static_cast<unsigned>(i));
      pw *= node.scale_;
    }
    const auto coeffs = out.coefficients(r);
    const MPoly& lead = coeffs.back();
    if (!lead.is_constant()) throw std::logic_error("to_r_monic: leading coefficient is not a constant");
    return out * lead.constant_term().inverse();
  }
};

TowerPtr Tower::extend(const TowerPtr& parent, MPoly modulus) {
  const int level = parent->level_ + 1;
  if (level > kMaxTowerLevel) throw std::runtime_error("extension tower is too deep");
  const Var r = root_var(level);
  if (modulus.max_root_level() != level) throw std::invalid_argument("modulus must involve the new generator");
  modulus = parent->reduce(std::move(modulus));
  const auto coeffs = modulus.coefficients(r);
  if (!(coeffs.back() == MPoly(1))) throw std::invalid_argument("modulus must be monic in the new generator");
  auto node = std::shared_ptr<Tower>(new Tower());
  node->parent_ = parent;
  node->level_ = level;
  node->degree_ = static_cast<unsigned>(coeffs.size() - 1);
  node->total_ = parent->total_ * node->degree_;
  std::vector<AlgElem> c;
  for (std::size_t j = 0; j + 1 < coeffs.size(); ++j) {
    c.push_back(DenseOps::from_mpoly(parent, coeffs[j]));
    mpz_lcm(node->scale_.get_mpz_t(), node->scale_.get_mpz_t(), c.back().den_.get_mpz_t());
  }
  // y^d + sum c_j D^(d-j) y^j with every den_j dividing D
  for (std::size_t j = 0; j < c.size(); ++j) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), node->scale_.get_mpz_t(), node->degree_ - j);
    f /= c[j].den_;
    std::vector<mpz_class> m = DenseOps::padded(c[j].num_, parent->total_);
    for (auto& x : m) x *= f;
    node->mod_nonzero_.push_back(!DenseOps::zero_block(m.data(), m.size()));
    node->dense_mod_.push_back(std::move(m));
  }
  node->modulus_ = std::move(modulus);
  return node;
}

TowerPtr Tower::ancestor(const TowerPtr& self, int level) const {
  if (level > level_ || level < 0) throw std::out_of_range("tower ancestor level");
  TowerPtr t = self;
  while (t->level_ > level) t = t->parent_;
  return t;
}

bool Tower::extends(const Tower& other) const {
  const Tower* t = this;
  while (t->level_ > other.level_) t = t->parent_.get();
  return t == &other;
}

MPoly Tower::reduce(MPoly p) const {
  for (const Tower* t = this; t->level_ > 0; t = t->parent_.get()) {
    const Var r = root_var(t->level_);
    if (p.degree(r) >= t->degree_) p = divide_in(p, t->modulus_, r).second;
  }
  return p;
}

std::vector<MPoly> Tower::moduli() const {
  std::vector<MPoly> out;
  for (const Tower* t = this; t->level_ > 0; t = t->parent_.get()) out.push_back(t->modulus_);
  std::reverse(out.begin(), out.end());
  return out;
}

ZeroDivisorSplit::ZeroDivisorSplit(int lvl, MPoly f, MPoly g)
    : level(lvl), factor(std::move(f)), cofactor(std::move(g)) {
  message_ = "zero divisor at level " + std::to_string(level) + ": modulus splits as (" + factor.str() + ")*(" +
             cofactor.str() + ")";
}

AlgElem::AlgElem(TowerPtr tower, std::vector<mpz_class> num, mpz_class den)
    : tower_(std::move(tower)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void AlgElem::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  bool any = false;
  for (const auto& x : num_) {
    if (sgn(x) == 0) continue;
    any = true;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (!any) {
    den_ = 1;
    return;
  }
  for (auto& x : num_)
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

AlgElem::AlgElem(TowerPtr tower, const MPoly& rep) : AlgElem(DenseOps::from_mpoly(tower, rep)) {}

AlgElem AlgElem::generator(const TowerPtr& tower) {
  if (tower->level() == 0) throw std::invalid_argument("the rationals have no generator");
  return DenseOps::generator(tower, tower->level());
}

MPoly AlgElem::rep() const { return DenseOps::to_mpoly(tower_.get(), num_, den_); }

bool AlgElem::is_zero() const { return DenseOps::zero_block(num_.data(), num_.size()); }

bool AlgElem::is_rational() const { return DenseOps::zero_block(num_.data() + 1, num_.size() - 1); }

Rational AlgElem::to_rational() const {
  if (!is_rational()) throw std::domain_error("element is not rational: " + str());
  return Rational(mpq_class(num_[0], den_));
}

const TowerPtr& common_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return a;
  const bool a_deeper = a->level() >= b->level();
  const TowerPtr& deep = a_deeper ? a : b;
  const TowerPtr& shallow = a_deeper ? b : a;
  if (!deep->extends(*shallow)) throw std::logic_error("elements from incompatible extension towers");
  return deep;
}

AlgElem AlgElem::operator-() const {
  std::vector<mpz_class> v(num_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -num_[i];
  AlgElem out(tower_, {}, 1);
  out.num_ = std::move(v);
  out.den_ = den_;
  return out;
}

AlgElem AlgElem::add(const AlgElem& a, const AlgElem& b, int sign) {
  const TowerPtr& t = common_tower(a.tower_, b.tower_);
  std::vector<mpz_class> v = DenseOps::padded(a.num_, t->total_degree());
  if (a.den_ == b.den_) {
    for (std::size_t i = 0; i < b.num_.size(); ++i) {
      if (sgn(b.num_[i]) == 0) continue;
      if (sign > 0) v[i] += b.num_[i];
      else v[i] -= b.num_[i];
    }
    return AlgElem(t, std::move(v), a.den_);
  }
  for (auto& x : v)
    if (sgn(x) != 0) x *= b.den_;
  for (std::size_t i = 0; i < b.num_.size(); ++i) {
    if (sgn(b.num_[i]) == 0) continue;
    if (sign > 0) mpz_addmul(v[i].get_mpz_t(), b.num_[i].get_mpz_t(), a.den_.get_mpz_t());
    else mpz_submul(v[i].get_mpz_t(), b.num_[i].get_mpz_t(), a.den_.get_mpz_t());
  }
  return AlgElem(t, std::move(v), a.den_ * b.den_);
}


AlgElem operator+(const AlgElem& a, const AlgElem& b) { return AlgElem::add(a, b, 1); }
AlgElem operator-(const AlgElem& a, const AlgElem& b) { return AlgElem::add(a, b, -1); }

bool operator==(const AlgElem& a, const AlgElem& b) {
  if (a.den_ != b.den_) return false;
  const std::size_t n = std::max(a.num_.size(), b.num_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const bool ia = i < a.num_.size(), ib = i < b.num_.size();
    if (ia && ib) {
      if (a.num_[i] != b.num_[i]) return false;
    } else if (sgn(ia ? a.num_[i] : b.num_[i]) != 0) {
      return false;
    }
  }
  return true;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
  const TowerPtr& t = common_tower(a.tower_, b.tower_);
  const std::size_t n = t->total_degree();
  const auto scaled = [&t, n](const AlgElem& v, const AlgElem& q) {
    std::vector<mpz_class> out(n);
    if (sgn(q.num_[0]) != 0)
      for (std::size_t i = 0; i < v.num_.size(); ++i)
        if (sgn(v.num_[i]) != 0) out[i] = v.num_[i] * q.num_[0];
    return AlgElem(t, std::move(out), v.den_ * q.den_);
  };
  if (a.is_rational()) return scaled(b, a);
  if (b.is_rational()) return scaled(a, b);
  std::vector<mpz_class> out(n);
  if (a.num_.size() == n && b.num_.size() == n) {
    DenseOps::mul(t.get(), a.num_.data(), b.num_.data(), out.data());
  } else {
    const auto pa = DenseOps::padded(a.num_, n), pb = DenseOps::padded(b.num_, n);
    DenseOps::mul(t.get(), pa.data(), pb.data(), out.data());
  }
  return AlgElem(t, std::move(out), a.den_ * b.den_);
}

UPoly<AlgElem> split_top(const AlgElem& a, const TowerPtr& tower) {
  if (tower->level() == 0) throw std::invalid_argument("split_top over the rationals");
  const std::vector<mpz_class> v = DenseOps::padded(a.num_, tower->total_degree());
  const std::size_t n = tower->parent()->total_degree();
  std::vector<AlgElem> out;
  out.reserve(tower->degree());
  for (std::size_t i = 0; i < tower->degree(); ++i)
    out.push_back(AlgElem(tower->parent(),
                          std::vector<mpz_class>(v.begin() + static_cast<std::ptrdiff_t>(i * n),
                                                 v.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)),
                          a.den_));
  return UPoly<AlgElem>(std::move(out));
}

AlgElem AlgElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero algebraic element");
  std::size_t last = num_.size() - 1;
  while (sgn(num_[last]) == 0) --last;
  TowerPtr node = tower_;
  while (node->level() > 0 && node->parent()->total_degree() > last) node = node->parent();
  if (node->level() == 0) return AlgElem(to_rational().inverse());
  const int level = node->level();
  // work in the y-generator of `node`
  const UPoly<AlgElem> a = split_top(*this, node);
  std::vector<AlgElem> mc;
  for (const auto& c : node->dense_mod_) mc.push_back(AlgElem(node->parent(), c, 1));
  mc.emplace_back(1);
  const UPoly<AlgElem> modulus(std::move(mc));
  auto [g, s] = half_xgcd(a, modulus);
  if (g.degree() > 0) {
    const UPoly<AlgElem> cofactor = divrem(modulus, g).first.monic();
    throw ZeroDivisorSplit(level, DenseOps::to_r_monic(g, *node), DenseOps::to_r_monic(cofactor, *node));
  }
  return DenseOps::join(s, node);
}

AlgElem pow(const AlgElem& a, unsigned k) {
  AlgElem result(1);
  AlgElem base = a;
  while (k != 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k != 0) base = base * base;
  }
  return result;
}

bool decide_zero(const AlgElem& a) {
  if (a.is_zero()) return true;
  (void)a.inverse();
  return false;
}

ExtensionContext::ExtensionContext(BranchPlan plan) : plan_(std::move(plan)), tower_(Tower::rationals()) {}

AlgElem ExtensionContext::adjoin_root(const UPoly<AlgElem>& p) {
  if (p.degree() < 1) throw std::invalid_argument("adjoin_root: polynomial has no roots");
  const int level = tower_->level() + 1;
  MPoly modulus;
  if (auto it = plan_.fixed.find(level); it != plan_.fixed.end()) {
    modulus = it->second;
  } else {
    const UPoly<AlgElem> sf = squarefree_part(p);
    if (sf.degree() == 1) return -sf.coeff(0);
    modulus = join_top(sf, level);
  }
  tower_ = Tower::extend(tower_, std::move(modulus));
  AlgElem root = AlgElem::generator(tower_);
  if (!p(root).is_zero()) throw std::logic_error("adjoined root does not satisfy its polynomial");
  return root;
}

AlgElem ExtensionContext::adjoin_radical(const AlgElem& r, unsigned k) {
  if (k == 0) throw std::invalid_argument("adjoin_radical: zero index");
  if (r.is_rational()) {
    if (auto q = exact_root(r.to_rational(), k)) return AlgElem(*q);
  }
  if (decide_zero(r)) throw std::domain_error("adjoin_radical of zero");
  // t^k - r is squarefree once r is invertible, so skip the gcd
  const int level = tower_->level() + 1;
  const Var x = root_var(level);
  MPoly modulus;
  if (auto it = plan_.fixed.find(level); it != plan_.fixed.end()) modulus = it->second;
  else modulus = var(x, k) - r.rep();
  tower_ = Tower::extend(tower_, std::move(modulus));
  return AlgElem::generator(tower_);
}

namespace detail {

std::vector<BranchPlan> split_plans(const BranchPlan& plan, const ZeroDivisorSplit& split) {
  BranchPlan base;
  for (const auto& [level, modulus] : plan.fixed)
    if (level < split.level) base.fixed.emplace(level, modulus);
  std::vector<MPoly> factors{split.factor, split.cofactor};
  const Var r = root_var(split.level);
  std::sort(factors.begin(), factors.end(), [r](const MPoly& a, const MPoly& b) {
    if (a.degree(r) != b.degree(r)) return a.degree(r) < b.degree(r);
    return a.str() < b.str();
  });
  std::vector<BranchPlan> out;
  for (auto& f : factors) {
    BranchPlan child = base;
    child.fixed[split.level] = std::move(f);
    out.push_back(std::move(child));
  }
  return out;
}

}  // namespace detail

}  // namespace fano
