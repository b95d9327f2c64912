#include "asmtree/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "asmtree/combinat.hpp"
#include "asmtree/formulas.hpp"

namespace asmtree::series {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  coeffs_.assign(order + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients, int order) : coeffs_(std::move(coefficients)) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  coeffs_.resize(order + 1, Rational(0));
}

PowerSeries PowerSeries::constant(const Rational& c, int order) { return monomial(c, 0, order); }

PowerSeries PowerSeries::monomial(const Rational& c, int degree, int order) {
  PowerSeries s(order);
  if (degree >= 0 && degree <= order) s.coeffs_[degree] = c;
  return s;
}

Rational PowerSeries::coeff(int k) const {
  if (k < 0 || k > order()) return 0;
  return coeffs_[k];
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int k = 0; k <= order; ++k)
    if (a.coeffs_[k] != b.coeffs_[k]) return false;
  return true;
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (a.coeff(0) == 0) throw std::domain_error("reciprocal: zero constant term");
  const int order = a.order();
  const Rational inv = 1 / a.coeff(0);
  std::vector<Rational> b(order + 1);
  b[0] = inv;
  for (int k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += a.coeff(i) * b[k - i];
    b[k] = -inv * acc;
  }
  return PowerSeries(std::move(b), order);
}

PowerSeries sqrt(const PowerSeries& a) {
  if (a.coeff(0) != 1) throw std::domain_error("sqrt: constant term must be 1");
  const int order = a.order();
  std::vector<Rational> b(order + 1);
  b[0] = 1;
  // [x^k] b^2 = 2 b_k + sum_{0<i<k} b_i b_{k-i}
  for (int k = 1; k <= order; ++k) {
    Rational acc = a.coeff(k);
    for (int i = 1; i < k; ++i) acc -= b[i] * b[k - i];
    b[k] = acc / 2;
  }
  return PowerSeries(std::move(b), order);
}

PowerSeries exp(const PowerSeries& a) {
  if (a.coeff(0) != 0) throw std::domain_error("exp: constant term must be 0");
  const int order = a.order();
  std::vector<Rational> b(order + 1);
  b[0] = 1;
  // b' = a' b  =>  k b_k = sum_{i=1..k} i a_i b_{k-i}
  for (int k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += Rational(i) * a.coeff(i) * b[k - i];
    b[k] = acc / k;
  }
  return PowerSeries(std::move(b), order);
}

PowerSeries compose_poly(const PowerSeries& a, const PowerSeries& p) {
  if (p.coeff(0) != 0) throw std::domain_error("compose_poly: inner polynomial must vanish at 0");
  const int order = a.order();
  const PowerSeries inner(p.coefficients(), order);
  // Horner: (((a_N) p + a_{N-1}) p + ...) + a_0
  PowerSeries out = PowerSeries::constant(a.coeff(order), order);
  for (int k = order - 1; k >= 0; --k) out = out * inner + PowerSeries::constant(a.coeff(k), order);
  return out;
}

namespace {

PowerSeries discriminant_root(int order) {
  // sqrt(1 - 6x + x^2)
  return sqrt(PowerSeries({1, -6, 1}, order));
}

}  // namespace

PowerSeries egf_fubini(int order) {
  if (order < 1) throw std::invalid_argument("egf_fubini: order must be >= 1");
  // (e^x - 1) / (2 - e^x). The often-quoted x / (2 - e^x) has k! [x^k] =
  // k * fubini(k - 1) instead.
  const auto ex = exp(PowerSeries::x(order));
  const auto one = PowerSeries::constant(1, order);
  return (ex - one) * reciprocal(PowerSeries::constant(2, order) - ex);
}

PowerSeries ogf_super_catalan(int order) {
  if (order < 1) throw std::invalid_argument("ogf_super_catalan: order must be >= 1");
  const auto numerator = PowerSeries({1, 1}, order) - discriminant_root(order);
  return numerator * Rational(1, 4);
}

PowerSeries ogf_connected_cycle(int order) {
  if (order < 1) throw std::invalid_argument("ogf_connected_cycle: order must be >= 1");
  const auto x = PowerSeries::x(order);
  const auto s = discriminant_root(order);
  const auto numerator = PowerSeries({0, 1, 1}, order) - x * s;
  return numerator * reciprocal(s * Rational(4)) + x;
}

PowerSeries egf_td_cycle(int order) {
  if (order < 1) throw std::invalid_argument("egf_td_cycle: order must be >= 1");
  const auto x = PowerSeries::x(order);
  const auto e = exp(x);
  const auto one = PowerSeries::constant(1, order);
  const auto numerator = x - x * e + e - one;
  return numerator * reciprocal(PowerSeries::constant(2, order) - e);
}

std::vector<Rational> egf_scaled(const PowerSeries& a) {
  std::vector<Rational> out;
  Rational fact = 1;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) fact *= k;
    out.push_back(a.coeff(k) * fact);
  }
  return out;
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

FunctionalEquationCheck check_path_functional_equation(std::span<const Natural> coeffs, int order) {
  if (order < 1) throw std::invalid_argument("functional equation check: order must be >= 1");
  std::vector<Rational> p(order + 1, Rational(0));
  for (int k = 1; k <= order && k - 1 < static_cast<int>(coeffs.size()); ++k) {
    p[k] = Rational(coeffs[k - 1].backend());
  }
  const PowerSeries series(std::move(p), order);
  const PowerSeries shifted = compose_poly(series, PowerSeries({0, 1, 1}, order));
  FunctionalEquationCheck result;
  result.residual = series * Rational(2) - shifted - PowerSeries::x(order);
  for (int k = 0; k <= order; ++k) {
    if (result.residual.coeff(k) != 0) {
      result.first_mismatch = k;
      break;
    }
  }
  result.ok = !result.first_mismatch.has_value();
  return result;
}

FunctionalEquationCheck check_td_path_functional_eq(int order) {
  std::vector<Natural> coeffs;
  for (int k = 1; k <= order; ++k) coeffs.push_back(formulas::td_edge_path(k));
  return check_path_functional_equation(coeffs, order);
}

std::string format_rational(const Rational& r) {
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

std::string dump_coefficients(std::span<const Rational> coeffs, int first) {
  std::ostringstream os;
  for (int k = std::max(first, 0); k < static_cast<int>(coeffs.size()); ++k) {
    os << k << '\t' << format_rational(coeffs[k]) << '\n';
  }
  return os.str();
}

}  // namespace asmtree::series
