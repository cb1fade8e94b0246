#include "superconf/gaussian_rational.hpp"

#include <stdexcept>

namespace superconf {

namespace {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::domain_error("zero denominator");
  return Rational(mpq_class(num, den));
}

}  // namespace

GaussianRational::GaussianRational(const mpq_class& re, const mpq_class& im)
    : re_(re), im_(im) {}

GaussianRational GaussianRational::from_parts(const mpz_class& re_num,
                                              const mpz_class& re_den,
                                              const mpz_class& im_num,
                                              const mpz_class& im_den) {
  return {make_rational(re_num, re_den), make_rational(im_num, im_den)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_real()) return {Rational(1) / re_, Rational()};
  const Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ /= o.re_;
    if (!im_.is_zero()) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

void GaussianRational::add_product(const GaussianRational& a,
                                   const GaussianRational& b) {
  re_.add_product(a.re_, b.re_);
  if (a.is_real() && b.is_real()) return;
  re_.add_product(a.im_, b.im_, true);
  im_.add_product(a.re_, b.im_);
  im_.add_product(a.im_, b.re_);
}

void GaussianRational::sub_product(const GaussianRational& a,
                                   const GaussianRational& b) {
  re_.add_product(a.re_, b.re_, true);
  if (a.is_real() && b.is_real()) return;
  re_.add_product(a.im_, b.im_);
  im_.add_product(a.re_, b.im_, true);
  im_.add_product(a.im_, b.re_, true);
}

std::string GaussianRational::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (!re_.is_zero()) out = re_.to_string();
  if (!im_.is_zero()) {
    if (!out.empty() && im_.sign() > 0) out += "+";
    if (im_ == Rational(1)) {
      out += "i";
    } else if (im_ == Rational(-1)) {
      out += "-i";
    } else {
      out += im_.to_string() + "i";
    }
  }
  return out;
}

}  // namespace superconf
