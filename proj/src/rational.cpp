#include "fano/rational.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fano {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) throw std::invalid_argument("empty rational literal");

  const auto slash = body.find('/');
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw std::invalid_argument("malformed rational literal '" + std::string(body) + "'");

  std::string num_text(num);
  if (num_text.front() == '+') num_text.erase(0, 1);
  mpz_class n(num_text, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("rational literal with zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(r), Canonical{});
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational");
  return Rational(mpq_class(a.q_ / b.q_), Rational::Canonical{});
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Rational result(1);
  Rational b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e != 0) b *= b;
  }
  return result;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::string decimal_string(const Rational& r, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << r.to_double();
  return os.str();
}

}  // namespace fano

namespace fano {

std::optional<Rational> exact_root(const Rational& r, unsigned k) {
  if (k == 0) throw std::invalid_argument("exact_root: zero index");
  if (r.sign() < 0 && k % 2 == 0) return std::nullopt;
  auto root_of = [k](mpz_class z) -> std::optional<mpz_class> {
    const bool negative = z < 0;
    if (negative) z = -z;
    mpz_class out;
    if (mpz_root(out.get_mpz_t(), z.get_mpz_t(), k) == 0) return std::nullopt;
    return negative ? mpz_class(-out) : out;
  };
  auto num = root_of(r.numerator());
  auto den = root_of(r.denominator());
  if (!num || !den) return std::nullopt;
  return Rational(mpq_class(*num, *den));
}

}  // namespace fano
