#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "asmtree/natural.hpp"

namespace asmtree::series {

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Formal power series truncated after x^order, exact rational coefficients.
/// Binary operations produce the smaller of the two orders.
class PowerSeries {
public:
  explicit PowerSeries(int order);
  /// Missing coefficients are zero; extra ones are dropped.
  PowerSeries(std::vector<Rational> coefficients, int order);

  static PowerSeries constant(const Rational& c, int order);
  static PowerSeries monomial(const Rational& c, int degree, int order);
  static PowerSeries x(int order) { return monomial(1, 1, order); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k; zero for k outside [0, order].
  Rational coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
  PowerSeries operator-() const;

  /// Coefficientwise equality up to the shared order.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

private:
  std::vector<Rational> coeffs_;
};

/// Throws std::domain_error when the constant term is zero.
PowerSeries reciprocal(const PowerSeries& a);
/// Square root with constant term 1; throws std::domain_error otherwise.
PowerSeries sqrt(const PowerSeries& a);
/// exp(a) for a with zero constant term; throws std::domain_error otherwise.
PowerSeries exp(const PowerSeries& a);
/// a(p(x)) truncated to a.order(). p is read as the polynomial given by its
/// stored coefficients and must have p(0) = 0 (std::domain_error otherwise).
PowerSeries compose_poly(const PowerSeries& a, const PowerSeries& p);

// Generating functions of the counting sequences.

/// (e^x - 1) / (2 - e^x); k! [x^k] = fubini(k) for k >= 1.
PowerSeries egf_fubini(int order);
/// (1 + x - sqrt(1 - 6x + x^2)) / 4; [x^k] = super_catalan(k).
PowerSeries ogf_super_catalan(int order);
/// (x^2 + x - x s) / (4 s) + x with s = sqrt(1 - 6x + x^2);
/// [x^k] = connected_cycle(k) for k >= 3.
PowerSeries ogf_connected_cycle(int order);
/// (x - x e^x + e^x - 1) / (2 - e^x); k! [x^k] = td_connected_cycle(k).
PowerSeries egf_td_cycle(int order);

/// k! [x^k] for k = 0..order.
std::vector<Rational> egf_scaled(const PowerSeries& a);
bool is_integer(const Rational& r);

struct FunctionalEquationCheck {
  bool ok = false;
  std::optional<int> first_mismatch;  // smallest k with a nonzero residual
  PowerSeries residual{0};            // 2P(x) - P(x + x^2) - x
};

/// Checks 2 P(x) - P(x + x^2) = x through x^order for P(x) = sum p_k x^k,
/// where coeffs[k-1] = p_k for k = 1..order (missing entries read as 0).
FunctionalEquationCheck check_path_functional_equation(std::span<const Natural> coeffs, int order);
/// The same check with p_k = td_edge_path(k).
FunctionalEquationCheck check_td_path_functional_eq(int order);

/// One line per coefficient from `first` on: "k<TAB>num/den", with "/den"
/// omitted when the denominator is 1.
std::string dump_coefficients(std::span<const Rational> coeffs, int first = 0);
std::string format_rational(const Rational& r);

}  // namespace asmtree::series
