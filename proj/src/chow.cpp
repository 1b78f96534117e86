#include "fano/chow.hpp"

#include "fano/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace fano {

int deg_normal_bundle(const BlowupData& data) {
  return 2 * data.curve_genus - 2 + data.anticanonical_index * data.curve_degree;
}

IntersectionTable intersection_table(const BlowupData& data) {
  return {Rational(data.quadric_degree), Rational(0), Rational(-data.curve_degree),
          Rational(-deg_normal_bundle(data))};
}

DivClass<Rational> class_H() { return div_class<Rational>(1, 0); }
DivClass<Rational> class_E() { return div_class<Rational>(0, 1); }
DivClass<Rational> class_H_prime() { return div_class<Rational>(2, -1); }
DivClass<Rational> class_E_prime() { return div_class<Rational>(3, -2); }
DivClass<Rational> anticanonical() { return div_class<Rational>(3, -1); }

CurveClass curve_f() {
  CurveClass c;
  c << Rational(0), Rational(-1);
  return c;
}

CurveClass curve_f_prime() {
  Mat<Rational> a(2, 2);
  a << class_H_prime()(0), class_H_prime()(1), class_E_prime()(0), class_E_prime()(1);
  Eigen::Matrix<Rational, Eigen::Dynamic, 1> rhs(2);
  rhs << Rational(0), Rational(-1);
  const Eigen::Matrix<Rational, Eigen::Dynamic, 1> sol = exact_inverse(a) * rhs;
  CurveClass c;
  c << sol(0), sol(1);
  return c;
}

void check_hirzebruch_index(int n) {
  if (n != 0 && n != 2 && n != 4 && n != 6)
    throw std::invalid_argument("Hirzebruch index must be one of 0, 2, 4, 6; got " + std::to_string(n));
}

std::string format_div(const DivClass<Rational>& d) {
  std::ostringstream os;
  os << "(" << d(0) << ")H + (" << d(1) << ")E";
  return os.str();
}

}  // namespace fano
