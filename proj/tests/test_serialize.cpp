#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "superconf/error.hpp"
#include "superconf/sampling.hpp"
#include "superconf/serialize.hpp"

using namespace superconf;
using namespace superconf::test;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("scalar and Grassmann encodings") {
  CHECK(to_json(q(3, 4)).dump() == R"({"re":[3,4]})");
  const GaussianRational c(mpq_class(-1, 2), mpq_class(5));
  CHECK(to_json(c).dump() == R"({"re":[-1,2],"im":[5,1]})");
  const GaussianRational huge(mpq_class(mpz_class(1) << 70));
  CHECK(to_json(huge).dump() == R"({"re":["1180591620717411303424",1]})");
  CHECK(gaussian_from_json(to_json(huge)) == huge);
  const GrassmannNumber x = scalar(2, 3) + mono(2, {1, 2}, q(-1, 4));
  CHECK(to_json(x).dump() == R"([{"mask":0,"re":[3,1]},{"mask":3,"re":[-1,4]}])");
  CHECK(grassmann_from_json(to_json(x), 2) == x);
}

TEST_CASE("transforms and reports round-trip byte for byte") {
  const SampleParams params{4, 3, 5};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const TransformKind k : {TransformKind::General, TransformKind::Superconformal,
                                  TransformKind::TwistParity, TransformKind::Degenerate}) {
      const SATransform t = random_transform(k, params, seed, 9);
      const std::string text = dump(to_json(t));
      const SATransform back = transform_from_json(parse_json(text));
      CHECK(back == t);
      CHECK(dump(to_json(back)) == text);
    }
    Sampler s(params, seed, 2);
    const ReducedPair p = s.reduced(Spin::TwistParity);
    CHECK(reduced_pair_from_json(to_json(p)) == p);
  }
}

TEST_CASE("superfields keep their parity through JSON") {
  Sampler s({3, 2, 5}, 1, 1);
  for (int i = 0; i < 20; ++i) {
    const Superfield f = s.superfield(i % 2 ? Parity::Odd : Parity::Even, true);
    CHECK(superfield_from_json(to_json(f), 3) == f);
  }
}

TEST_CASE("parse errors name the offending location") {
  CHECK(error_of([] { (void)parse_json("{\"a\": [1, 2"); }).find("parse error at byte") == 0);
  const Json missing = parse_json(R"({"generator_count": 2, "f": [], "chi": [], "psi": []})");
  CHECK(error_of([&] { (void)transform_from_json(missing); }) ==
        "parse error at /: missing key \"g\"");
  const Json bad_mask = parse_json(
      R"({"generator_count": 2, "f": [], "chi": [], "psi": [[{"mask": 9, "re": [1, 1]}]], "g": []})");
  CHECK(error_of([&] { (void)transform_from_json(bad_mask); }) ==
        "parse error at /psi/0/0/mask: mask outside the generator range");
  const Json even_psi = parse_json(
      R"({"generator_count": 2, "f": [], "chi": [], "psi": [[{"mask": 3, "re": [1, 1]}]], "g": []})");
  CHECK(error_of([&] { (void)transform_from_json(even_psi); }) ==
        "parse error at /psi/0: expected an odd coefficient");
  const Json zero_den = parse_json(R"({"re": [1, 0]})");
  CHECK(error_of([&] { (void)gaussian_from_json(zero_den); }) ==
        "parse error at /re/1: zero denominator");
  const Json bad_spin =
      parse_json(R"({"generator_count": 2, "g": [], "psi": [], "spin": 0})");
  CHECK(error_of([&] { (void)reduced_pair_from_json(bad_spin); }) ==
        "parse error at /spin: spin must be +1 or -1");
  CHECK(error_of([&] { (void)transform_from_json(missing, "/outer"); }) ==
        "parse error at /outer: missing key \"g\"");
}
