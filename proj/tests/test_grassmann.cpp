#include <doctest.h>

#include <bit>
#include <random>

#include "helpers.hpp"
#include "superconf/error.hpp"

using namespace superconf;
using namespace superconf::test;

TEST_CASE("rational inline form agrees with GMP across the overflow boundary") {
  std::mt19937_64 rng(11);
  auto draw = [&](int bits) -> long {
    const long mag = static_cast<long>(rng() >> (64 - bits));
    return (rng() & 1) ? -mag : mag;
  };
  for (int i = 0; i < 4000; ++i) {
    const int bits = 4 + static_cast<int>(rng() % 59);
    const long an = draw(bits), bn = draw(bits);
    const long ad = 1 + (draw(bits) & ((1L << 40) - 1)), bd = 1 + (draw(bits) & 0xffff);
    mpq_class ma(an, ad), mb(bn, bd);
    ma.canonicalize();
    mb.canonicalize();
    const Rational a(ma), b(mb);
    CHECK((a + b).to_mpq() == ma + mb);
    CHECK((a - b).to_mpq() == ma - mb);
    CHECK((a * b).to_mpq() == ma * mb);
    if (sgn(mb) != 0) CHECK((a / b).to_mpq() == ma / mb);
    Rational acc = a;
    acc.add_product(a, b);
    CHECK(acc.to_mpq() == ma + ma * mb);
    acc.add_product(a, b, true);
    CHECK(acc == a);
  }
}

TEST_CASE("rational demotes to the inline form so equality stays structural") {
  const Rational big(mpq_class(mpz_class(1) << 100));
  CHECK_FALSE(big.is_small());
  const Rational back = big - big + Rational(3);
  CHECK(back.is_small());
  CHECK(back == Rational(3));
  const Rational limit(Rational::kSmallLimit - 1);
  CHECK(limit.is_small());
  const Rational over = limit + Rational(1);
  CHECK_FALSE(over.is_small());
  CHECK(over - Rational(1) == limit);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("gaussian rationals") {
  const GaussianRational i(mpq_class(0), mpq_class(1));
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational z(mpq_class(3, 2), mpq_class(-2));
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK(z.to_string() == "3/2-2i");
  CHECK((z - z).is_zero());
  CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
}

TEST_CASE("generator products follow the reordering sign") {
  const int L = 2;
  const GrassmannNumber t1 = GrassmannNumber::generator(L, 1);
  const GrassmannNumber t2 = GrassmannNumber::generator(L, 2);
  const GrassmannNumber p = t1 * t2;
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms()[0].mask == 0b11);
  CHECK(p.terms()[0].coeff == GaussianRational(1));
  CHECK(t2 * t1 == -p);
  CHECK((t1 * t1).is_zero());
}

TEST_CASE("(2 + t1 t2)(1/2 - 1/4 t1 t2) = 1 and inversion") {
  const int L = 2;
  const GrassmannNumber x = scalar(L, 2) + mono(L, {1, 2});
  const GrassmannNumber y = scalar(L, q(1, 2)) - mono(L, {1, 2}, q(1, 4));
  CHECK(x * y == scalar(L, 1));
  CHECK(invert(x) == y);
  CHECK(invert(scalar(L, 1)) == scalar(L, 1));
  CHECK_THROWS_AS(invert(GrassmannNumber::generator(L, 1)), Error);
  try {
    (void)invert(GrassmannNumber::generator(L, 1));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Parity);
    CHECK(std::string(e.what()).find("not invertible") != std::string::npos);
  }
  try {
    (void)invert(mono(L, {1, 2}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInvertible);
    CHECK(std::string(e.what()).find("not invertible") == 0);
  }
}

TEST_CASE("body and soul") {
  const int L = 2;
  auto [b, s] = body_soul(scalar(L, 3) + mono(L, {1}, 5));
  CHECK(b == scalar(L, 3));
  CHECK(s == mono(L, {1}, 5));
  auto [b2, s2] = body_soul(mono(L, {1, 2}));
  CHECK(b2.is_zero());
  CHECK(s2 == mono(L, {1, 2}));
  auto [b3, s3] = body_soul(GrassmannNumber(L));
  CHECK(b3.is_zero());
  CHECK(s3.is_zero());
}

TEST_CASE("random elements respect parity and seeds") {
  CHECK(random_grassmann(Parity::Odd, 0, 1, 5).is_zero());
  CHECK(random_grassmann(Parity::Even, 2, 7, 5) == random_grassmann(Parity::Even, 2, 7, 5));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GrassmannNumber x = random_grassmann(Parity::Odd, 2, seed, 5);
    for (const auto& t : x.terms()) CHECK(std::popcount(t.mask) % 2 == 1);
  }
}

TEST_CASE("algebra mismatch is rejected") {
  CHECK_THROWS_AS(scalar(2, 1) + scalar(3, 1), Error);
  CHECK_THROWS_AS(GrassmannNumber::generator(2, 3), Error);
}
