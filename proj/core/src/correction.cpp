#include "afdweno/correction.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace afdweno {

namespace {

using boost::multiprecision::cpp_rational;

void check_order(int order) {
  if (order != 3 && order != 5 && order != 7 && order != 9)
    throw UsageError("unsupported scheme order " + std::to_string(order));
}

cpp_rational factorial(int n) {
  cpp_rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// (1/2)^m - (-1/2)^m: zero for even m, 2^(1-m) for odd m.
cpp_rational half_difference(int m) {
  if (m % 2 == 0) return 0;
  cpp_rational r = 1;
  for (int k = 1; k < m; ++k) r /= 2;
  return r;
}

}  // namespace

std::string ExactRational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

CorrectionCoefficients derive_correction_coefficients(int order) {
  check_order(order);
  // F_num = f + sum_{k=1}^{p} a_k f^(k). The centred difference of F_num
  // carries f^(n)(0) with weight h(n)/n! + sum_{k<n} a_k h(n-k)/(n-k)!,
  // h(m) = (1/2)^m - (-1/2)^m. Zero weights for n = 2..p+1 give a unit lower
  // triangular system in a_1..a_p.
  const int p = order - 1;
  std::vector<cpp_rational> a(p + 1, cpp_rational(0));
  for (int n = 2; n <= p + 1; ++n) {
    cpp_rational rhs = -half_difference(n) / factorial(n);
    for (int k = 1; k < n - 1; ++k) rhs -= a[k] * half_difference(n - k) / factorial(n - k);
    a[n - 1] = rhs;  // coefficient of a_{n-1} is h(1)/1! = 1
  }
  CorrectionCoefficients out;
  out.order = order;
  for (int j = 0; j < out.count(); ++j) {
    const cpp_rational& r = a[2 * j + 2];
    out.c[j].num = boost::multiprecision::numerator(r).convert_to<long long>();
    out.c[j].den = boost::multiprecision::denominator(r).convert_to<long long>();
  }
  return out;
}

CorrectionCoefficients correction_coefficients(int order) {
  check_order(order);
  static constexpr std::array<ExactRational, 4> kTable = {
      {{-1, 24}, {7, 5760}, {-31, 967680}, {127, 154828800}}};
  CorrectionCoefficients out;
  out.order = order;
  for (int j = 0; j < out.count(); ++j) out.c[j] = kTable[j];
  return out;
}

double numerical_flux(double f_star, const BoundaryDerivativeStack& s, int order) {
  check_order(order);
  constexpr double c2 = -1.0 / 24.0, c4 = 7.0 / 5760.0, c6 = -31.0 / 967680.0,
                   c8 = 127.0 / 154828800.0;
  double f = f_star + c2 * s.d1;
  if (order >= 5) f += c4 * s.d3;
  if (order >= 7) f += c6 * s.d5;
  if (order >= 9) f += c8 * s.d7;
  return f;
}

}  // namespace afdweno
