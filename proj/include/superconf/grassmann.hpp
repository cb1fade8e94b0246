#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superconf/gaussian_rational.hpp"

namespace superconf {

// Subset of generators; bit k stands for theta_{k+1}.
using Mask = std::uint32_t;

enum class Parity { Even, Odd, Mixed };

inline Parity operator^(Parity a, Parity b) {
  if (a == Parity::Mixed || b == Parity::Mixed) return Parity::Mixed;
  return a == b ? Parity::Even : Parity::Odd;
}

inline Parity flip(Parity p) {
  if (p == Parity::Mixed) return p;
  return p == Parity::Even ? Parity::Odd : Parity::Even;
}

const char* to_string(Parity p);

// Sign of e_s * e_t = sign * e_{s|t} for disjoint s, t: the parity of the
// number of transpositions needed to sort the concatenated generators.
int reorder_sign(Mask s, Mask t);

// Element of the Grassmann algebra Lambda_L over Q(i), stored as a sparse
// list of (mask, coefficient) pairs sorted by mask with no zero coefficients.
class GrassmannNumber {
 public:
  struct Term {
    Mask mask;
    GaussianRational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  static constexpr int kMaxGenerators = 24;

  explicit GrassmannNumber(int generator_count = 0);
  GrassmannNumber(int generator_count, GaussianRational scalar);

  // Sorts, merges duplicate masks, drops zeros. Throws on masks outside L.
  static GrassmannNumber from_terms(int generator_count,
                                    std::vector<Term> terms);
  // theta_k for k in [1, L].
  static GrassmannNumber generator(int generator_count, int k);

  int generator_count() const { return generator_count_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GaussianRational body() const;
  GrassmannNumber soul() const;
  // Zero is both even and odd.
  bool is_even() const;
  bool is_odd() const;
  Parity parity() const;

  // Negates odd-degree terms: x -> (-1)^{|x|} x for homogeneous x.
  GrassmannNumber grade_involution() const;
  GrassmannNumber even_part() const;
  GrassmannNumber odd_part() const;

  GrassmannNumber operator-() const;
  GrassmannNumber& operator+=(const GrassmannNumber& o);
  GrassmannNumber& operator-=(const GrassmannNumber& o);
  GrassmannNumber& operator*=(const GaussianRational& s);

  // this += a * b (Grassmann product), avoiding the intermediate value.
  void add_product(const GrassmannNumber& a, const GrassmannNumber& b);
  // sum_k a_k * b_k in one accumulation pass.
  using Factors = std::pair<const GrassmannNumber*, const GrassmannNumber*>;
  static GrassmannNumber sum_of_products(int generator_count,
                                         std::span<const Factors> pairs);

  friend GrassmannNumber operator+(GrassmannNumber a, const GrassmannNumber& b) {
    return a += b;
  }
  friend GrassmannNumber operator-(GrassmannNumber a, const GrassmannNumber& b) {
    return a -= b;
  }
  friend GrassmannNumber operator*(const GrassmannNumber& a,
                                   const GrassmannNumber& b);
  friend GrassmannNumber operator*(GrassmannNumber a, const GaussianRational& s) {
    return a *= s;
  }
  friend GrassmannNumber operator*(const GaussianRational& s, GrassmannNumber a) {
    return a *= s;
  }
  friend bool operator==(const GrassmannNumber& a, const GrassmannNumber& b);

  std::string to_string() const;

 private:
  void check_same_algebra(const GrassmannNumber& o) const;
  void merge(const GrassmannNumber& o, bool subtract);

  int generator_count_ = 0;
  std::vector<Term> terms_;
};

// Inverse of an even element with nonzero body, via the finite Neumann series
// body^{-1} * sum_k (-soul/body)^k.
GrassmannNumber invert(const GrassmannNumber& x);

// (body, soul) with body + soul == x.
std::pair<GrassmannNumber, GrassmannNumber> body_soul(const GrassmannNumber& x);

// Deterministic homogeneous element drawn from `rng`. Numerators lie in
// [-bound, bound], denominators in [1, bound].
GrassmannNumber random_grassmann(Parity parity, int generator_count,
                                 std::mt19937_64& rng, int bound);
GrassmannNumber random_grassmann(Parity parity, int generator_count,
                                 std::uint64_t seed, int bound);

}  // namespace superconf
