#include "superconf/superfield.hpp"

#include "superconf/error.hpp"

namespace superconf {

namespace {

ComponentFunction unit(int generator_count) {
  return ComponentFunction::constant(
      GrassmannNumber(generator_count, GaussianRational(1)), Parity::Even);
}

}  // namespace

Superfield::Superfield(int generator_count, Parity parity)
    : a_(generator_count, parity), b_(generator_count, flip(parity)) {
  if (parity == Parity::Mixed) {
    throw Error(Errc::Parity, "parity: zero superfield needs a definite parity");
  }
}

Superfield::Superfield(RationalComponent a, RationalComponent b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.generator_count() != b_.generator_count()) {
    throw Error(Errc::AlgebraMismatch, "algebra mismatch in superfield");
  }
}

Superfield Superfield::even_constant(const GrassmannNumber& c) {
  return {RationalComponent(ComponentFunction::constant(c, Parity::Even)),
          RationalComponent(c.generator_count(), Parity::Odd)};
}

Superfield Superfield::theta(int generator_count) {
  return {RationalComponent(generator_count, Parity::Odd),
          RationalComponent(unit(generator_count))};
}

Superfield Superfield::z(int generator_count) {
  return {RationalComponent(ComponentFunction::identity(generator_count)),
          RationalComponent(generator_count, Parity::Odd)};
}

Parity Superfield::parity() const {
  if (a_.parity() == b_.parity()) return Parity::Mixed;
  return a_.parity();
}

Superfield Superfield::grade_involution() const {
  // theta is odd, so the theta-part picks up the opposite sign.
  return {a_.grade_involution(), -b_.grade_involution()};
}

Superfield operator*(const Superfield& x, const Superfield& y) {
#ifdef SUPERCONF_MUTATE_GRADED_SIGN
  const RationalComponent& moved = x.a_;
#else
  const RationalComponent moved = x.a_.grade_involution();
#endif
  return {x.a_ * y.a_, x.b_ * y.a_ + moved * y.b_};
}

Superfield reciprocal(const Superfield& f) {
  if (f.a().parity() != Parity::Even || f.a().is_zero()) {
    throw Error(Errc::NotInvertibleAsFunction,
                "not invertible as function: divisor is not even");
  }
  const RationalComponent inv = f.a().reciprocal();
  return {inv, -(f.b() * inv * inv)};
}

Superfield operator/(const Superfield& x, const Superfield& y) {
  return x * reciprocal(y);
}

std::string Superfield::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  return a_.to_string() + " + θ·{" + b_.to_string() + "}";
}

Superfield partial_z(const Superfield& f) {
  return {f.a().derivative(), f.b().derivative()};
}

Superfield partial_theta(const Superfield& f) {
  return {f.b(), RationalComponent(f.generator_count(), flip(f.b().parity()))};
}

Superfield superderivative(const Superfield& f) {
  return {f.b(), f.a().derivative()};
}

}  // namespace superconf
