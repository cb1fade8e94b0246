#include <doctest.h>

#include "helpers.hpp"
#include "superconf/error.hpp"
#include "superconf/sampling.hpp"

using namespace superconf;
using namespace superconf::test;

namespace {

constexpr int L = 3;

const GrassmannNumber t1 = GrassmannNumber::generator(L, 1);
const GrassmannNumber t2 = GrassmannNumber::generator(L, 2);
const GrassmannNumber t3 = GrassmannNumber::generator(L, 3);
const GrassmannNumber o = GrassmannNumber(L);

ComponentFunction even(std::vector<GrassmannNumber> c) { return poly(L, Parity::Even, std::move(c)); }
ComponentFunction odd(std::vector<GrassmannNumber> c) { return poly(L, Parity::Odd, std::move(c)); }
GrassmannNumber s(long n, long d = 1) { return scalar(L, q(n, d)); }
Superfield sf_one() { return sf(one(L), zero(L, Parity::Odd)); }
Superfield theta() { return Superfield::theta(L); }

SATransform identity() { return SATransform::identity(L); }

}  // namespace

TEST_CASE("apply") {
  const GrassmannNumber z0 = s(3) + t1 * t2;
  auto [z, th] = apply(identity(), z0, t1);
  CHECK(z == z0);
  CHECK(th == t1);
  auto [zs, ths] = apply(susy_translation(L), z0, t2);
  CHECK(zs == z0 + t2 * t1);
  CHECK(ths == t1 + t2);
  auto [zd, thd] = apply(deg_example(L), z0, t2);
  CHECK(zd.is_zero());
  CHECK(thd == t1 * z0);
  CHECK_THROWS_AS(apply(identity(), t1, t1), Error);
}

TEST_CASE("composition of SUSY translations adds the parameters") {
  const SATransform a = susy_translation(L, 1);
  const SATransform b = susy_translation(L, 2);
  const SATransform c = compose(b, a);
  CHECK(c.theta_image() == sf(odd({t1 + t2}), one(L)));
  CHECK(compose(a, identity()) == a);
  CHECK(compose(identity(), a) == a);
  // Substitution oracle.
  Sampler sampler({L, 3, 5}, 3, 0);
  for (int i = 0; i < 10; ++i) {
    const GrassmannNumber z0 = sampler.grassmann(Parity::Even);
    const GrassmannNumber th0 = sampler.grassmann(Parity::Odd);
    auto [z1, th1] = apply(a, z0, th0);
    auto [z2, th2] = apply(b, z1, th1);
    auto [zc, thc] = apply(c, z0, th0);
    CHECK(z2 == zc);
    CHECK(th2 == thc);
  }
}

TEST_CASE("composition is associative") {
  const SampleParams params{L, 2, 4};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Sampler sampler(params, seed, 1);
    const SATransform a = sampler.transform(TransformKind::General);
    const SATransform b = sampler.transform(TransformKind::General);
    const SATransform c = sampler.transform(TransformKind::General);
    CHECK(compose(c, compose(b, a)) == compose(compose(c, b), a));
  }
}

TEST_CASE("tangent matrices") {
  CHECK(tangent_matrix(identity()) == TangentMatrix::identity(L));
  CHECK(berezinian(tangent_matrix(susy_translation(L))) == sf_one());
  const TangentMatrix d = tangent_matrix(deg_example(L));
  CHECK(d.a.is_zero());
  CHECK(d.c.is_zero());
  CHECK(in_set(d, MatrixSet::D));
}

TEST_CASE("reduction conditions") {
  const ReductionConditions id = reduction_conditions(identity());
  CHECK(id.q == sf_one());
  CHECK(id.delta.is_zero());
  CHECK(id.delta0 == -theta());
  const ReductionConditions susy = reduction_conditions(susy_translation(L));
  CHECK(susy.delta.is_zero());
  CHECK(susy.q == sf_one());
  const ReductionConditions tpt = reduction_conditions(tpt_example(L));
  CHECK(tpt.q.is_zero());
  CHECK(tpt.delta0 == sf(odd({o, s(-2) * t1}), even({s(-1)})));
  CHECK(reduction_kind(susy_translation(L)) == ReductionKind::Superconformal);
  CHECK(reduction_kind(tpt_example(L)) == ReductionKind::TwistParity);
  CHECK(reduction_kind(deg_example(L)) == ReductionKind::Degenerate);
  for (const SATransform& t : {identity(), susy_translation(L), tpt_example(L), deg_example(L)}) {
    const ReductionConditions r = reduction_conditions(t);
    const ReductionConditions c = reduction_conditions_from_components(t);
    CHECK(r.q == c.q);
    CHECK(r.delta == c.delta);
    CHECK(r.delta0 == c.delta0);
  }
}

TEST_CASE("explicit Berezinian") {
  CHECK(berezinian_explicit(identity()) == sf_one());
  CHECK(berezinian_explicit(susy_translation(L)) == sf_one());
  const SATransform no_g(ComponentFunction::identity(L), zero(L, Parity::Odd), zero(L, Parity::Odd),
                         zero(L, Parity::Even));
  CHECK_THROWS_AS(berezinian_explicit(no_g), Error);
  try {
    (void)berezinian_explicit(no_g);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BerezinianDoesNotExist);
  }
}

TEST_CASE("Berezinian classes") {
  for (const ClassifyMode mode : {ClassifyMode::PaperLiteral, ClassifyMode::Derivative}) {
    CHECK(classify_berezinian(identity(), mode) == BerClass::Invertible);
  }
  const SATransform nil_f(even({t1 * t2, t2 * t3}), zero(L, Parity::Odd), zero(L, Parity::Odd),
                          one(L));
  CHECK(classify_berezinian(nil_f) == BerClass::Noninvertible);
  CHECK(classify_berezinian(nil_f, ClassifyMode::Derivative) == BerClass::Noninvertible);
  const SATransform nil_g(ComponentFunction::identity(L), zero(L, Parity::Odd),
                          zero(L, Parity::Odd), even({t1 * t2, t1 * t3}));
  CHECK(classify_berezinian(nil_g) == BerClass::Nonexistent);
  // The modes differ when f has a nonzero constant body but no linear body.
  const SATransform shifted(even({s(2)}), zero(L, Parity::Odd), zero(L, Parity::Odd), one(L));
  CHECK(classify_berezinian(shifted, ClassifyMode::PaperLiteral) == BerClass::Invertible);
  CHECK(classify_berezinian(shifted, ClassifyMode::Derivative) == BerClass::Noninvertible);
}

TEST_CASE("reduction builders") {
  const ReducedPair susy(one(L), odd({t1}), Spin::Superconformal);
  CHECK(build_reduced(susy) == susy_translation(L));
  const ReducedPair tpt(one(L), odd({o, t1}), Spin::TwistParity);
  CHECK(build_reduced(tpt) == tpt_example(L));
  const ReducedPair deg(zero(L, Parity::Even), odd({o, t1}), Spin::TwistParity);
  const SATransform d = build_reduced(deg);
  CHECK(d.f().is_zero());
  CHECK(d.chi().is_zero());
  CHECK(d.f().derivative() == d.psi().derivative() * d.psi());
  CHECK(reduction_kind(d) == ReductionKind::Degenerate);
}

TEST_CASE("star product") {
  const ReducedPair a(one(L), odd({t1}), Spin::Superconformal);
  const ReducedPair b(one(L), odd({t2}), Spin::Superconformal);
  const ReducedPair ab = star(a, b);
  CHECK(ab.spin == Spin::Superconformal);
  CHECK(ab.g == one(L));
  CHECK(ab.psi == odd({t1 + t2}));
  CHECK(build_reduced(ab) == compose(build_reduced(a), build_reduced(b)));
  const ReducedPair m(one(L), odd({o, t1}), Spin::TwistParity);
  const ReducedPair am = star(a, m);
  CHECK(am.spin == Spin::TwistParity);
  const SATransform composite = compose(build_reduced(a), build_reduced(m));
  CHECK(am.g == composite.g());
  CHECK(am.psi == composite.psi());
  CHECK_THROWS_AS(star(m, a), Error);
  try {
    (void)star(m, a);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UndefinedSpinProduct);
  }
}

TEST_CASE("reduced Berezinians") {
  CHECK(berezinian_superconformal(identity()) == sf_one());
  CHECK(berezinian_superconformal(susy_translation(L)) == sf_one());
  const SATransform scf = build_reduced(ReducedPair(even({s(1), s(1)}), odd({o, t1}),
                                                    Spin::Superconformal));
  CHECK(berezinian_superconformal(scf) == sf(even({s(1), s(1)}), odd({t1})));
  CHECK(berezinian(tangent_matrix(scf)) == berezinian_superconformal(scf));

  const TwistParityBerezinians b = berezinian_twist_parity(tpt_example(L));
  const Superfield expected = sf(zero(L, Parity::Even), odd({-t1}));  // -theta t1
  CHECK(b.quotient == expected);
  CHECK(b.derivative == expected);
  CHECK(b.superderived == expected);
  CHECK(berezinian(tangent_matrix(tpt_example(L))) == expected);
  CHECK(b.quotient.is_pure_soul());

  // psi = 0 and chi0 = 0: Delta0 = -theta g^2 and d theta~ = theta g' share a theta.
  const SATransform flat =
      build_reduced(ReducedPair(even({s(1), s(2)}), zero(L, Parity::Odd), Spin::TwistParity, o, o));
  const TwistParityBerezinians z = berezinian_twist_parity(flat);
  CHECK(z.quotient.is_zero());
  CHECK(z.derivative.is_zero());
  CHECK(z.superderived.is_zero());
  CHECK(berezinian(tangent_matrix(flat)).is_zero());
}

TEST_CASE("cocycles") {
  const SATransform susy = susy_translation(L);
  CHECK(cocycle_standard(susy_translation(L, 2), susy));
  CHECK(cocycle_standard(deg_example(L), deg_example(L)));
  CHECK(cocycle_mixed(deg_example(L), deg_example(L)));
  CHECK(cocycle_mixed(susy, tpt_example(L)));
  CHECK(reduction_kind(compose(susy, tpt_example(L))) == ReductionKind::TwistParity);
  CHECK(cocycle_mixed(identity(), tpt_example(L)));
  CHECK_THROWS_AS(cocycle_mixed(tpt_example(L), susy), Error);
}

TEST_CASE("sampled transforms have their advertised kind") {
  const SampleParams params{L, 3, 5};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(reduction_kind(random_transform(TransformKind::Superconformal, params, seed, 0)) !=
          ReductionKind::General);
    CHECK(delta_vanishes(random_transform(TransformKind::Superconformal, params, seed, 0)));
    CHECK(q_vanishes(random_transform(TransformKind::TwistParity, params, seed, 0)));
    const SATransform d = random_transform(TransformKind::Degenerate, params, seed, 0);
    CHECK(d.chi().is_zero());
    CHECK(d.g().is_zero());
    CHECK(d.f().derivative() == d.psi().derivative() * d.psi());
    CHECK(random_transform(TransformKind::General, params, seed, 4) ==
          random_transform(TransformKind::General, params, seed, 4));
  }
}
