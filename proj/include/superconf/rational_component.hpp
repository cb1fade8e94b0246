#pragma once

#include <string>

#include "superconf/component_function.hpp"

namespace superconf {

// Quotient num/den of component functions with an even denominator whose body
// polynomial is not identically zero. Such denominators are non-zero-divisors
// in Lambda_L[z], so equality by cross-multiplication is an equivalence.
//
// Values are kept normalized: the denominator is a monic polynomial with
// scalar coefficients sharing no factor with the numerator.
class RationalComponent {
 public:
  RationalComponent(int generator_count, Parity parity);
  // NOLINTNEXTLINE(google-explicit-constructor)
  RationalComponent(ComponentFunction num);
  // Throws "not invertible as function" for odd or body-zero denominators.
  RationalComponent(ComponentFunction num, ComponentFunction den);

  int generator_count() const { return num_.generator_count(); }
  Parity parity() const { return num_.parity(); }
  const ComponentFunction& numerator() const { return num_; }
  const ComponentFunction& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // epsilon of the value is identically zero.
  bool body_is_zero() const { return num_.body_is_zero(); }

  RationalComponent derivative() const;
  // this(inner(z)); inner must be an even polynomial.
  RationalComponent compose(const ComponentFunction& inner) const;
  RationalComponent grade_involution() const;
  // 1/this; requires an even value with nonzero body polynomial.
  RationalComponent reciprocal() const;

  RationalComponent operator-() const;
  friend RationalComponent operator+(const RationalComponent& a,
                                     const RationalComponent& b);
  friend RationalComponent operator-(const RationalComponent& a,
                                     const RationalComponent& b);
  friend RationalComponent operator*(const RationalComponent& a,
                                     const RationalComponent& b);
  friend RationalComponent operator/(const RationalComponent& a,
                                     const RationalComponent& b);
  // n1*d2 == n2*d1 as polynomials.
  friend bool operator==(const RationalComponent& a, const RationalComponent& b);

  std::string to_string() const;

 private:
  struct Normalized {};
  RationalComponent(ComponentFunction num, ComponentFunction den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize();

  ComponentFunction num_;
  ComponentFunction den_;
};

}  // namespace superconf
