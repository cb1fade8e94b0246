#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>

namespace superconf {

// Exact rational with an inline fast path. A value whose reduced numerator
// and denominator both fit in kSmallLimit is always held inline; anything
// larger lives in a canonical mpq. The form is therefore a function of the
// value and equality stays structural.
class Rational {
 public:
  static constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

  Rational() = default;
  Rational(long n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n >= kSmallLimit || n <= -kSmallLimit) set_big(mpq_class(n));
  }
  explicit Rational(const mpq_class& q) { set_big(q); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_small() const { return !big_; }
  // Valid only when is_small(); den() > 0 and gcd(num, den) = 1.
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  mpq_class to_mpq() const;
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  // Throws std::domain_error on a zero divisor.
  Rational& operator/=(const Rational& o);
  // this += a * b (or -=); integer operands skip every gcd.
  void add_product(const Rational& a, const Rational& b, bool subtract = false);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  // Canonicalizes and demotes to the inline form when it fits.
  void set_big(mpq_class q);
  // n/d with d > 0 and gcd(n, d) = 1.
  void set_reduced_wide(__int128 n, __int128 d);
  // this += c/d for an inline operand.
  void add_small(std::int64_t c, std::int64_t d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace superconf
