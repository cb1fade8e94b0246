#include "superconf/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace superconf {

namespace {

using u128 = unsigned __int128;

u128 magnitude(__int128 x) { return x < 0 ? -static_cast<u128>(x) : static_cast<u128>(x); }

mpz_class to_mpz(__int128 x) {
  const u128 m = magnitude(x);
  mpz_class hi(static_cast<unsigned long>(m >> 64));
  mpz_class out = (hi << 64) + mpz_class(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  if (x < 0) out = -out;
  return out;
}

bool fits(u128 m) { return m < static_cast<u128>(Rational::kSmallLimit); }

}  // namespace

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpz_set_si(mpq_numref(q.get_mpq_t()), num_);
  mpz_set_si(mpq_denref(q.get_mpq_t()), den_);
  return q;
}

void Rational::set_big(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  if (big_) {
    *big_ = std::move(q);
  } else {
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

void Rational::set_reduced_wide(__int128 n, __int128 d) {
  if (fits(magnitude(n)) && fits(static_cast<u128>(d))) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q;
  q.get_num() = to_mpz(n);
  q.get_den() = to_mpz(d);
  big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::operator-() const {
  Rational out;
  if (big_) {
    out.big_ = std::make_unique<mpq_class>(-*big_);
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

void Rational::add_small(std::int64_t c, std::int64_t d) {
  if (den_ == 1 && d == 1) {
    set_reduced_wide(static_cast<__int128>(num_) + c, 1);
    return;
  }
  // Henrici: only the gcd of the denominators can cancel.
  const std::int64_t g = std::gcd(den_, d);
  if (g == 1) {
    set_reduced_wide(static_cast<__int128>(num_) * d + static_cast<__int128>(c) * den_,
                     static_cast<__int128>(den_) * d);
    return;
  }
  const __int128 t =
      static_cast<__int128>(num_) * (d / g) + static_cast<__int128>(c) * (den_ / g);
  if (t == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  const std::int64_t g2 = std::gcd(static_cast<std::int64_t>(t % g), g);
  set_reduced_wide(t / g2, static_cast<__int128>(den_ / g) * (d / g2));
}

Rational& Rational::operator+=(const Rational& o) {
  if (big_ || o.big_) {
    set_big(to_mpq() + o.to_mpq());
  } else {
    add_small(o.num_, o.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (big_ || o.big_) {
    set_big(to_mpq() - o.to_mpq());
  } else {
    add_small(-o.num_, o.den_);
  }
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (big_ || o.big_) {
    set_big(to_mpq() * o.to_mpq());
    return *this;
  }
  if (num_ == 0 || o.num_ == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  set_reduced_wide(static_cast<__int128>(num_ / g1) * (o.num_ / g2),
                   static_cast<__int128>(den_ / g2) * (o.den_ / g1));
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b, bool subtract) {
  if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    const __int128 p = static_cast<__int128>(a.num_) * b.num_;
    set_reduced_wide(subtract ? num_ - p : num_ + p, 1);
    return;
  }
  if (subtract) {
    *this -= a * b;
  } else {
    *this += a * b;
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (big_ || o.big_) {
    set_big(to_mpq() / o.to_mpq());
    return *this;
  }
  Rational inv;
  inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
  inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
  return *this *= inv;
}

std::string Rational::to_string() const { return to_mpq().get_str(); }

}  // namespace superconf
