#pragma once

#include <string>
#include <vector>

#include "superconf/grassmann.hpp"

namespace superconf {

// Polynomial sum_k c_k z^k in the even coordinate z with Grassmann
// coefficients of a declared parity. Models f, g (even) and psi, chi (odd).
// Trailing zero coefficients are trimmed; the zero polynomial has degree -1.
class ComponentFunction {
 public:
  ComponentFunction(int generator_count, Parity parity);
  ComponentFunction(int generator_count, Parity parity,
                    std::vector<GrassmannNumber> coeffs);

  static ComponentFunction constant(const GrassmannNumber& c, Parity parity);
  // The identity function z.
  static ComponentFunction identity(int generator_count);
  // c * z^k
  static ComponentFunction monomial(const GrassmannNumber& c, int k,
                                    Parity parity);

  int generator_count() const { return generator_count_; }
  Parity parity() const { return parity_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<GrassmannNumber>& coefficients() const { return coeffs_; }
  // Zero beyond the degree.
  GrassmannNumber coefficient(int k) const;

  // True iff every coefficient has zero body: epsilon(p) is identically zero.
  bool body_is_zero() const;
  ComponentFunction body_polynomial() const;
  ComponentFunction soul_polynomial() const;
  // True iff every coefficient is a pure scalar.
  bool is_body_only() const;

  ComponentFunction derivative() const;
  // Antiderivative with constant term c0; c0 must match the parity.
  ComponentFunction antiderivative(const GrassmannNumber& c0) const;
  // this(inner(z)); inner must be even.
  ComponentFunction compose(const ComponentFunction& inner) const;
  // Value at an even Grassmann point.
  GrassmannNumber evaluate(const GrassmannNumber& z) const;

  ComponentFunction grade_involution() const;

  ComponentFunction operator-() const;
  ComponentFunction& operator+=(const ComponentFunction& o);
  ComponentFunction& operator-=(const ComponentFunction& o);
  ComponentFunction& operator*=(const GaussianRational& s);

  friend ComponentFunction operator+(ComponentFunction a,
                                     const ComponentFunction& b) {
    return a += b;
  }
  friend ComponentFunction operator-(ComponentFunction a,
                                     const ComponentFunction& b) {
    return a -= b;
  }
  friend ComponentFunction operator*(const ComponentFunction& a,
                                     const ComponentFunction& b);
  friend ComponentFunction operator*(const GrassmannNumber& c,
                                     const ComponentFunction& p);
  friend ComponentFunction operator*(ComponentFunction p,
                                     const GaussianRational& s) {
    return p *= s;
  }
  // Same parity and coefficients. Two zero polynomials of different declared
  // parity compare equal.
  friend bool operator==(const ComponentFunction& a, const ComponentFunction& b);

  std::string to_string() const;

 private:
  void trim();
  void check_compatible(const ComponentFunction& o) const;
  void add_scaled(const ComponentFunction& o, bool subtract);

  int generator_count_;
  Parity parity_;
  std::vector<GrassmannNumber> coeffs_;
};

}  // namespace superconf
