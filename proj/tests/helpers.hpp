#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "superconf/transform.hpp"

namespace superconf::test {

inline GaussianRational q(long n, long d = 1) { return GaussianRational::from_parts(n, d); }

// theta_i1 theta_i2 ... with 1-based indices, times c.
inline GrassmannNumber mono(int L, std::initializer_list<int> gens, GaussianRational c = 1) {
  GrassmannNumber out(L, std::move(c));
  for (int k : gens) out = out * GrassmannNumber::generator(L, k);
  return out;
}

inline GrassmannNumber scalar(int L, GaussianRational c) { return GrassmannNumber(L, std::move(c)); }

// sum_k coeffs[k] z^k
inline ComponentFunction poly(int L, Parity parity, std::vector<GrassmannNumber> coeffs) {
  return {L, parity, std::move(coeffs)};
}

inline ComponentFunction zero(int L, Parity parity) { return {L, parity}; }

inline ComponentFunction one(int L) {
  return ComponentFunction::constant(scalar(L, 1), Parity::Even);
}

inline Superfield sf(const ComponentFunction& a, const ComponentFunction& b) {
  return {RationalComponent(a), RationalComponent(b)};
}

// z~ = z + theta theta_1, theta~ = theta_1 + theta.
inline SATransform susy_translation(int L, int k = 1) {
  const GrassmannNumber t = GrassmannNumber::generator(L, k);
  return {ComponentFunction::identity(L), ComponentFunction::constant(t, Parity::Odd),
          ComponentFunction::constant(t, Parity::Odd), one(L)};
}

// g = 1, psi = theta_1 z, f = 0, chi = -theta_1 z.
inline SATransform tpt_example(int L) {
  const GrassmannNumber t1 = GrassmannNumber::generator(L, 1);
  return {zero(L, Parity::Even), poly(L, Parity::Odd, {GrassmannNumber(L), -t1}),
          poly(L, Parity::Odd, {GrassmannNumber(L), t1}), one(L)};
}

// f = 0, chi = 0, psi = theta_1 z, g = 0.
inline SATransform deg_example(int L) {
  const GrassmannNumber t1 = GrassmannNumber::generator(L, 1);
  return {zero(L, Parity::Even), zero(L, Parity::Odd),
          poly(L, Parity::Odd, {GrassmannNumber(L), t1}), zero(L, Parity::Even)};
}

}  // namespace superconf::test
