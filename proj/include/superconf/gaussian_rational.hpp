#pragma once

#include <gmpxx.h>

#include <string>

#include "superconf/rational.hpp"

namespace superconf {

// Exact element of Q(i). Both parts are canonical rationals, so equality is
// structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(const mpq_class& re, const mpq_class& im = 0);
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  // num/den pairs; throws std::domain_error on a zero denominator.
  static GaussianRational from_parts(const mpz_class& re_num,
                                     const mpz_class& re_den,
                                     const mpz_class& im_num = 0,
                                     const mpz_class& im_den = 1);

  mpq_class re() const { return re_.to_mpq(); }
  mpq_class im() const { return im_.to_mpq(); }
  const Rational& re_part() const { return re_; }
  const Rational& im_part() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  // this += a * b without a temporary GaussianRational.
  void add_product(const GaussianRational& a, const GaussianRational& b);
  void sub_product(const GaussianRational& a, const GaussianRational& b);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // "3/2", "-i", "1/2+3i"
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace superconf
