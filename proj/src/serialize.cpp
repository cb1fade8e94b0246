#include "superconf/serialize.hpp"

#include <optional>

#include "superconf/error.hpp"

namespace superconf {

namespace {

Json integer_to_json(const mpz_class& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return Json(n.get_si());
  return Json(n.get_str());
}

Json rational_to_json(const mpq_class& q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

// A JSON value together with its path, for error messages.
struct Node {
  const Json& value;
  std::string path;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::Parse, "parse error at " + (path.empty() ? "/" : path) + ": " + what);
  }

  Node at(const char* key) const {
    if (!value.is_object()) fail("expected an object");
    auto it = value.find(key);
    if (it == value.end()) fail(std::string("missing key \"") + key + "\"");
    return {*it, path + "/" + key};
  }

  bool has(const char* key) const { return value.is_object() && value.contains(key); }

  Node at(std::size_t index) const {
    return {value[index], path + "/" + std::to_string(index)};
  }

  std::size_t array_size() const {
    if (!value.is_array()) fail("expected an array");
    return value.size();
  }

  mpz_class integer() const {
    if (value.is_number_integer()) {
      if (value.is_number_unsigned()) {
        return mpz_class(std::to_string(value.get<std::uint64_t>()));
      }
      return mpz_class(static_cast<long>(value.get<std::int64_t>()));
    }
    if (value.is_string()) {
      const std::string& s = value.get_ref<const std::string&>();
      mpz_class out;
      const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
      if (s.size() == start ||
          s.find_first_not_of("0123456789", start) != std::string::npos ||
          out.set_str(s, 10) != 0) {
        fail("expected a decimal integer string");
      }
      return out;
    }
    fail("expected an integer");
  }

  int small_integer(int lo, int hi) const {
    const mpz_class n = integer();
    if (n < lo || n > hi) {
      fail("integer out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return static_cast<int>(n.get_si());
  }

  mpq_class rational() const {
    if (array_size() != 2) fail("expected a [numerator, denominator] pair");
    const mpz_class num = at(std::size_t{0}).integer();
    const mpz_class den = at(std::size_t{1}).integer();
    if (den == 0) at(std::size_t{1}).fail("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
};

GaussianRational gaussian(const Node& n) {
  const mpq_class re = n.at("re").rational();
  const mpq_class im = n.has("im") ? n.at("im").rational() : mpq_class(0);
  return {re, im};
}

GrassmannNumber grassmann(const Node& n, int generator_count) {
  std::vector<GrassmannNumber::Term> terms;
  const std::size_t count = n.array_size();
  const long limit = (1L << generator_count) - 1;
  for (std::size_t i = 0; i < count; ++i) {
    const Node term = n.at(i);
    const Node mask = term.at("mask");
    const mpz_class m = mask.integer();
    if (m < 0 || m > limit) mask.fail("mask outside the generator range");
    terms.push_back({static_cast<Mask>(m.get_ui()), gaussian(term)});
  }
  return GrassmannNumber::from_terms(generator_count, std::move(terms));
}

ComponentFunction component(const Node& n, int generator_count, Parity parity) {
  std::vector<GrassmannNumber> coeffs;
  const std::size_t count = n.array_size();
  coeffs.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Node c = n.at(k);
    GrassmannNumber x = grassmann(c, generator_count);
    if (parity == Parity::Even && !x.is_even()) c.fail("expected an even coefficient");
    if (parity == Parity::Odd && !x.is_odd()) c.fail("expected an odd coefficient");
    coeffs.push_back(std::move(x));
  }
  return {generator_count, parity, std::move(coeffs)};
}

RationalComponent rational_component(const Node& n, int generator_count, Parity parity) {
  ComponentFunction num = component(n.at("num"), generator_count, parity);
  ComponentFunction den = component(n.at("den"), generator_count, Parity::Even);
  try {
    return {std::move(num), std::move(den)};
  } catch (const Error& e) {
    n.at("den").fail(e.what());
  }
}

int generator_count(const Node& n) {
  return n.at("generator_count").small_integer(0, GrassmannNumber::kMaxGenerators);
}

}  // namespace

Json to_json(const GaussianRational& x) {
  Json j = Json::object();
  j["re"] = rational_to_json(x.re());
  if (!x.is_real()) j["im"] = rational_to_json(x.im());
  return j;
}

Json to_json(const GrassmannNumber& x) {
  Json j = Json::array();
  for (const GrassmannNumber::Term& t : x.terms()) {
    Json term = Json::object();
    term["mask"] = t.mask;
    const Json coeff = to_json(t.coeff);
    for (const auto& [key, value] : coeff.items()) term[key] = value;
    j.push_back(std::move(term));
  }
  return j;
}

Json to_json(const ComponentFunction& p) {
  Json j = Json::array();
  for (const GrassmannNumber& c : p.coefficients()) j.push_back(to_json(c));
  return j;
}

Json to_json(const RationalComponent& r) {
  return Json{{"num", to_json(r.numerator())}, {"den", to_json(r.denominator())}};
}

Json to_json(const Superfield& f) {
  return Json{{"a", to_json(f.a())}, {"b", to_json(f.b())}};
}

Json to_json(const TangentMatrix& m) {
  return Json{{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"c", to_json(m.c)},
              {"d", to_json(m.d)}};
}

Json to_json(const SATransform& t) {
  return Json{{"generator_count", t.generator_count()},
              {"f", to_json(t.f())},
              {"chi", to_json(t.chi())},
              {"psi", to_json(t.psi())},
              {"g", to_json(t.g())}};
}

Json to_json(const ReducedPair& p) {
  return Json{{"generator_count", p.generator_count()},
              {"g", to_json(p.g)},
              {"psi", to_json(p.psi)},
              {"spin", static_cast<int>(p.spin)},
              {"f0", to_json(p.f0)},
              {"chi0", to_json(p.chi0)}};
}

GaussianRational gaussian_from_json(const Json& j) { return gaussian(Node{j, ""}); }

GrassmannNumber grassmann_from_json(const Json& j, int generator_count) {
  return grassmann(Node{j, ""}, generator_count);
}

ComponentFunction component_from_json(const Json& j, int generator_count,
                                      Parity parity) {
  return component(Node{j, ""}, generator_count, parity);
}

Superfield superfield_from_json(const Json& j, int generator_count) {
  const Node n{j, ""};
  const Node a = n.at("a");
  const Node b = n.at("b");
  // The first nonzero coefficient fixes the parity; zero parts take either.
  auto first_parity = [&](const Node& part) -> std::optional<Parity> {
    const Node num = part.at("num");
    for (std::size_t k = 0; k < num.array_size(); ++k) {
      const GrassmannNumber x = grassmann(num.at(k), generator_count);
      if (!x.is_zero()) return x.parity();
    }
    return std::nullopt;
  };
  Parity parity = Parity::Even;
  if (const auto p = first_parity(a)) {
    parity = *p;
  } else if (const auto q = first_parity(b)) {
    parity = flip(*q);
  }
  if (parity == Parity::Mixed) a.fail("superfield components must be homogeneous");
  return {rational_component(a, generator_count, parity),
          rational_component(b, generator_count, flip(parity))};
}

SATransform transform_from_json(const Json& j, const std::string& path) {
  const Node n{j, path};
  const int L = generator_count(n);
  return {component(n.at("f"), L, Parity::Even), component(n.at("chi"), L, Parity::Odd),
          component(n.at("psi"), L, Parity::Odd), component(n.at("g"), L, Parity::Even)};
}

ReducedPair reduced_pair_from_json(const Json& j) {
  const Node n{j, ""};
  const int L = generator_count(n);
  const Node spin_node = n.at("spin");
  const int spin = spin_node.small_integer(-1, 1);
  if (spin == 0) spin_node.fail("spin must be +1 or -1");
  GrassmannNumber f0(L);
  GrassmannNumber chi0(L);
  if (n.has("f0")) {
    const Node c = n.at("f0");
    f0 = grassmann(c, L);
    if (!f0.is_even()) c.fail("expected an even constant");
  }
  if (n.has("chi0")) {
    const Node c = n.at("chi0");
    chi0 = grassmann(c, L);
    if (!chi0.is_odd()) c.fail("expected an odd constant");
  }
  return {component(n.at("g"), L, Parity::Even), component(n.at("psi"), L, Parity::Odd),
          static_cast<Spin>(spin), std::move(f0), std::move(chi0)};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::Parse, "parse error at byte " + std::to_string(e.byte) + ": " +
                                 e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace superconf
