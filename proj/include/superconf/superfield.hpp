#pragma once

#include <string>

#include "superconf/rational_component.hpp"

namespace superconf {

// a(z) + theta * b(z): a function on C^{1|1}. theta is always written to the
// left of b, and d/dtheta is a left derivative.
class Superfield {
 public:
  Superfield(int generator_count, Parity parity);
  Superfield(RationalComponent a, RationalComponent b);

  static Superfield even_constant(const GrassmannNumber& c);
  // theta itself.
  static Superfield theta(int generator_count);
  // z itself.
  static Superfield z(int generator_count);

  int generator_count() const { return a_.generator_count(); }
  const RationalComponent& a() const { return a_; }
  const RationalComponent& b() const { return b_; }
  // Even or Odd when parity(a) != parity(b); Mixed otherwise.
  Parity parity() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  // The theta-free part has identically zero body, so the whole value is
  // nilpotent.
  bool is_pure_soul() const { return a_.body_is_zero(); }

  Superfield grade_involution() const;

  Superfield operator-() const { return {-a_, -b_}; }
  friend Superfield operator+(const Superfield& x, const Superfield& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend Superfield operator-(const Superfield& x, const Superfield& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  // Graded product: a1 a2 + theta (b1 a2 + (-1)^{|a1|} a1 b2).
  friend Superfield operator*(const Superfield& x, const Superfield& y);
  // x * y^{-1} for even y whose theta-free part is invertible as a function.
  friend Superfield operator/(const Superfield& x, const Superfield& y);
  friend bool operator==(const Superfield& x, const Superfield& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  RationalComponent a_;
  RationalComponent b_;
};

// d/dz: a' + theta b'.
Superfield partial_z(const Superfield& f);
// Left d/dtheta: b.
Superfield partial_theta(const Superfield& f);
// D = d/dtheta + theta d/dz: b + theta a'.
Superfield superderivative(const Superfield& f);
// Multiplicative inverse of an even superfield: a^{-1} - theta b a^{-2}.
Superfield reciprocal(const Superfield& f);

}  // namespace superconf
