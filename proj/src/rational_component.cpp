#include "superconf/rational_component.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

#include "superconf/error.hpp"

namespace superconf {

namespace {

// Polynomial over Q(i); index = power of z.
using Scalars = std::vector<GaussianRational>;

void trim(Scalars& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Scalars& p) { return static_cast<int>(p.size()) - 1; }

Scalars bodies(const ComponentFunction& p) {
  Scalars out;
  out.reserve(p.coefficients().size());
  for (const GrassmannNumber& c : p.coefficients()) out.push_back(c.body());
  trim(out);
  return out;
}

ComponentFunction to_function(int generator_count, const Scalars& p) {
  std::vector<GrassmannNumber> coeffs;
  coeffs.reserve(p.size());
  for (const GaussianRational& c : p) coeffs.emplace_back(generator_count, c);
  return {generator_count, Parity::Even, std::move(coeffs)};
}

// The coefficient of each basis monomial e_mask, as a polynomial in z.
std::map<Mask, Scalars> mask_polynomials(const ComponentFunction& p) {
  std::map<Mask, Scalars> out;
  const auto& coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const GrassmannNumber::Term& t : coeffs[k].terms()) {
      Scalars& poly = out[t.mask];
      if (poly.size() <= k) poly.resize(k + 1);
      poly[k] = t.coeff;
    }
  }
  return out;
}

void make_monic(Scalars& p) {
  const GaussianRational inv = p.back().inverse();
  for (GaussianRational& c : p) c *= inv;
}

// a mod b
Scalars remainder(Scalars a, const Scalars& b) {
  const GaussianRational lead_inv = b.back().inverse();
  while (degree(a) >= degree(b)) {
    const GaussianRational q = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) a[shift + i].sub_product(q, b[i]);
    a.pop_back();
    trim(a);
  }
  return a;
}

// Monic gcd; both inputs nonzero.
Scalars gcd(Scalars a, Scalars b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    Scalars r = remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
    if (!b.empty() && degree(b) > 0) make_monic(b);
  }
  make_monic(a);
  return a;
}

// a / b where b divides a exactly and b is monic.
Scalars exact_quotient(Scalars a, const Scalars& b) {
  if (degree(b) == 0) return a;
  Scalars q(a.size() - b.size() + 1);
  while (degree(a) >= degree(b)) {
    const std::size_t shift = a.size() - b.size();
    const GaussianRational lead = a.back();
    q[shift] = lead;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) a[shift + i].sub_product(lead, b[i]);
    a.pop_back();
    trim(a);
  }
  return q;
}

// p / s for a Grassmann polynomial p and a monic scalar polynomial s that
// divides every mask polynomial of p.
ComponentFunction exact_quotient(const ComponentFunction& p, const Scalars& s) {
  if (degree(s) == 0 || p.is_zero()) return p;
  const int L = p.generator_count();
  std::vector<GrassmannNumber> rem = p.coefficients();
  std::vector<GrassmannNumber> q(rem.size() - s.size() + 1, GrassmannNumber(L));
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const std::size_t top = shift + s.size() - 1;
    const GrassmannNumber lead = rem[top];
    if (lead.is_zero()) continue;
    q[shift] = lead;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) rem[shift + i] -= lead * s[i];
  }
  return {L, p.parity(), std::move(q)};
}

// Multi-modular gcd. Each prime p = 1 mod 4 gives two embeddings of Z[i]
// into F_p (i -> r and i -> -r); together they recover the real and
// imaginary residues of every coefficient. A prime where some coefficient is
// not p-integral, or where the two embeddings disagree in degree, is skipped.
// Because the first polynomial is monic, every usable prime yields a gcd of
// degree at least the true one, and a reconstructed candidate that divides
// all inputs and attains the smallest modular degree is the gcd.
struct PrimeField {
  std::uint64_t p;
  std::uint64_t root;  // a square root of -1

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (; e > 0; e >>= 1, a = mul(a, a)) {
      if (e & 1) r = mul(r, a);
    }
    return r;
  }
  // a != 0 mod p.
  std::uint64_t inv(std::uint64_t a) const {
    __int128 r0 = p, r1 = a % p, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const __int128 q = r0 / r1;
      r0 -= q * r1;
      std::swap(r0, r1);
      t0 -= q * t1;
      std::swap(t0, t1);
    }
    return static_cast<std::uint64_t>(t0 < 0 ? t0 + p : t0);
  }
};

constexpr int kPrimeCount = 64;

const std::vector<PrimeField>& prime_fields() {
  static const std::vector<PrimeField> fields = [] {
    std::vector<PrimeField> out;
    mpz_class candidate = mpz_class(1) << 62;
    while (static_cast<int>(out.size()) < kPrimeCount) {
      mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
      if (mpz_fdiv_ui(candidate.get_mpz_t(), 4) != 1) continue;
      PrimeField f{candidate.get_ui(), 0};
      for (std::uint64_t c = 2;; ++c) {
        const std::uint64_t r = f.pow(c, (f.p - 1) / 4);
        if (f.mul(r, r) == f.p - 1) {
          f.root = r;
          break;
        }
      }
      out.push_back(f);
    }
    return out;
  }();
  return fields;
}

using Residues = std::vector<std::uint64_t>;

std::uint64_t residue(std::int64_t n, std::uint64_t p) {
  const std::uint64_t m = static_cast<std::uint64_t>(n < 0 ? -n : n) % p;
  return n < 0 && m != 0 ? p - m : m;
}

std::optional<std::uint64_t> reduce(const Rational& r, const PrimeField& f) {
  if (r.is_small()) {
    const std::uint64_t num = residue(r.num(), f.p);
    if (r.den() == 1) return num;
    const std::uint64_t den = residue(r.den(), f.p);
    if (den == 0) return std::nullopt;
    return f.mul(num, f.inv(den));
  }
  const mpq_class q = r.to_mpq();
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), f.p);
  if (den == 0) return std::nullopt;
  return f.mul(mpz_fdiv_ui(q.get_num_mpz_t(), f.p), f.inv(den));
}

std::optional<Residues> reduce(const Scalars& poly, const PrimeField& f,
                               std::uint64_t root) {
  Residues out;
  out.reserve(poly.size());
  for (const GaussianRational& c : poly) {
    const auto re = reduce(c.re_part(), f);
    const auto im = reduce(c.im_part(), f);
    if (!re || !im) return std::nullopt;
    out.push_back(f.add(*re, f.mul(*im, root)));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Monic gcd over F_p; empty when both inputs are zero.
Residues gcd_mod(Residues a, Residues b, const PrimeField& f) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t lead_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t q = f.mul(a.back(), lead_inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        a[shift + i] = f.sub(a[shift + i], f.mul(q, b[i]));
      }
      a.pop_back();
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t lead_inv = f.inv(a.back());
    for (std::uint64_t& c : a) c = f.mul(c, lead_inv);
  }
  return a;
}

std::optional<Residues> gcd_image(const Scalars& monic, const std::vector<Scalars>& others,
                                  const PrimeField& f, std::uint64_t root) {
  auto g = reduce(monic, f, root);
  if (!g) return std::nullopt;
  for (const Scalars& poly : others) {
    auto r = reduce(poly, f, root);
    if (!r) return std::nullopt;
    if (r->empty()) continue;
    g = gcd_mod(std::move(*g), std::move(*r), f);
    if (g->size() <= 1) break;
  }
  return g;
}

// n/d with |n|, d <= sqrt(m/2) and n = a d mod m.
std::optional<mpq_class> reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  if (out.get_den() != abs(t1)) return std::nullopt;
  return out;
}

bool divides(const Scalars& divisor, const Scalars& poly) {
  return poly.empty() || remainder(poly, divisor).empty();
}

// Monic gcd of a monic polynomial and a list of polynomials.
Scalars gcd_all(const Scalars& monic, const std::vector<Scalars>& others) {
  const auto& fields = prime_fields();
  std::size_t best = monic.size() + 1;
  std::vector<mpz_class> re, im;
  mpz_class modulus = 1;
  auto real = [](const Scalars& poly) {
    return std::all_of(poly.begin(), poly.end(),
                       [](const GaussianRational& c) { return c.is_real(); });
  };
  // Both embeddings agree on real input.
  const bool all_real = real(monic) && std::all_of(others.begin(), others.end(), real);
  for (const PrimeField& f : fields) {
    const auto u = gcd_image(monic, others, f, f.root);
    const auto v = all_real ? u : gcd_image(monic, others, f, f.p - f.root);
    if (!u || !v || u->size() != v->size()) continue;
    if (u->size() <= 1) return {GaussianRational(1)};
    if (u->size() > best) continue;
    if (u->size() < best) {
      best = u->size();
      re.assign(best, 0);
      im.assign(best, 0);
      modulus = 1;
    }
    // Residues of re and im modulo p, lifted into the running CRT solution.
    const std::uint64_t half = f.inv(2);
    const std::uint64_t half_root = f.inv(f.mul(2, f.root));
    const mpz_class p(static_cast<unsigned long>(f.p));
    const mpz_class m_inv = [&] {
      mpz_class out;
      mpz_class m_mod = modulus % p;
      mpz_invert(out.get_mpz_t(), m_mod.get_mpz_t(), p.get_mpz_t());
      return out;
    }();
    auto lift = [&](mpz_class& acc, std::uint64_t residue) {
      mpz_class diff = (mpz_class(static_cast<unsigned long>(residue)) - acc) % p;
      if (diff < 0) diff += p;
      acc += modulus * ((diff * m_inv) % p);
    };
    for (std::size_t k = 0; k < best; ++k) {
      lift(re[k], f.mul(f.add((*u)[k], (*v)[k]), half));
      lift(im[k], f.mul(f.sub((*u)[k], (*v)[k]), half_root));
    }
    modulus *= p;

    Scalars candidate;
    candidate.reserve(best);
    for (std::size_t k = 0; k < best; ++k) {
      const auto x = reconstruct(re[k], modulus);
      const auto y = reconstruct(im[k], modulus);
      if (!x || !y) break;
      candidate.emplace_back(*x, *y);
    }
    if (candidate.size() != best) continue;
    if (!divides(candidate, monic)) continue;
    bool all = true;
    for (const Scalars& poly : others) {
      if (!divides(candidate, poly)) {
        all = false;
        break;
      }
    }
    if (all) return candidate;
  }
  Scalars common = monic;
  for (const Scalars& poly : others) {
    if (poly.empty()) continue;
    common = gcd(std::move(common), poly);
    if (degree(common) == 0) break;
  }
  return common;
}

void check_denominator(const ComponentFunction& den) {
  if (den.parity() != Parity::Even && !den.is_zero()) {
    throw Error(Errc::NotInvertibleAsFunction,
                "not invertible as function: odd denominator");
  }
  if (den.body_is_zero()) {
    throw Error(Errc::NotInvertibleAsFunction,
                "not invertible as function: denominator body is identically zero");
  }
}

}  // namespace

RationalComponent::RationalComponent(int generator_count, Parity parity)
    : num_(generator_count, parity),
      den_(ComponentFunction::constant(
          GrassmannNumber(generator_count, GaussianRational(1)), Parity::Even)) {}

RationalComponent::RationalComponent(ComponentFunction num)
    : num_(std::move(num)),
      den_(ComponentFunction::constant(
          GrassmannNumber(num_.generator_count(), GaussianRational(1)),
          Parity::Even)) {}

RationalComponent::RationalComponent(ComponentFunction num, ComponentFunction den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.generator_count() != den_.generator_count()) {
    throw Error(Errc::AlgebraMismatch, "algebra mismatch in quotient");
  }
  check_denominator(den_);
  normalize();
}

void RationalComponent::normalize() {
  const int L = num_.generator_count();
  if (num_.is_zero()) {
    den_ = ComponentFunction::constant(GrassmannNumber(L, GaussianRational(1)),
                                       Parity::Even);
    return;
  }
  if (!den_.is_body_only()) {
    // (d_b + d_s) * sum_{k<=K} (-d_s)^k d_b^{K-k} = d_b^{K+1} once d_s^{K+1} = 0.
    const ComponentFunction body = den_.body_polynomial();
    const ComponentFunction soul = den_.soul_polynomial();
    std::vector<ComponentFunction> soul_powers{
        ComponentFunction::constant(GrassmannNumber(L, GaussianRational(1)),
                                    Parity::Even)};
    while (true) {
      ComponentFunction next = soul_powers.back() * soul;
      if (next.is_zero()) break;
      soul_powers.push_back(std::move(next));
    }
    ComponentFunction adjugate(L, Parity::Even);
    ComponentFunction body_power = soul_powers.front();
    for (std::size_t k = soul_powers.size(); k-- > 0;) {
      ComponentFunction term = soul_powers[k] * body_power;
      if (k % 2 == 1) term = -term;
      adjugate += term;
      body_power = body_power * body;
    }
    num_ = num_ * adjugate;
    den_ = body_power;
  }
  Scalars den = bodies(den_);
  const GaussianRational lead_inv = den.back().inverse();
  if (!(den.back() == GaussianRational(1))) {
    num_ *= lead_inv;
    make_monic(den);
  }
  if (degree(den) > 0) {
    std::vector<Scalars> polys;
    for (auto& [mask, poly] : mask_polynomials(num_)) polys.push_back(std::move(poly));
    const Scalars common = gcd_all(den, polys);
    if (degree(common) > 0) {
      num_ = exact_quotient(num_, common);
      den = exact_quotient(std::move(den), common);
    }
  }
  den_ = to_function(L, den);
}

RationalComponent RationalComponent::derivative() const {
  if (is_polynomial()) return RationalComponent(num_.derivative());
  ComponentFunction num = num_.derivative() * den_ - num_ * den_.derivative();
  RationalComponent out(std::move(num), den_ * den_, Normalized{});
  out.normalize();
  return out;
}

RationalComponent RationalComponent::compose(const ComponentFunction& inner) const {
  if (is_polynomial()) return RationalComponent(num_.compose(inner));
  return {num_.compose(inner), den_.compose(inner)};
}

RationalComponent RationalComponent::grade_involution() const {
  return {num_.grade_involution(), den_, Normalized{}};
}

RationalComponent RationalComponent::reciprocal() const {
  if (num_.parity() != Parity::Even || num_.is_zero()) {
    throw Error(Errc::NotInvertibleAsFunction,
                "not invertible as function: odd or zero divisor");
  }
  return {den_, num_};
}

RationalComponent RationalComponent::operator-() const {
  return {-num_, den_, Normalized{}};
}

namespace {

RationalComponent add_or_subtract(const RationalComponent& a,
                                  const RationalComponent& b, bool subtract) {
  const ComponentFunction& ad = a.denominator();
  const ComponentFunction& bd = b.denominator();
  auto combine = [subtract](const ComponentFunction& x, const ComponentFunction& y) {
    return subtract ? x - y : x + y;
  };
  if (ad == bd) {
    if (ad.degree() == 0) return RationalComponent(combine(a.numerator(), b.numerator()));
    return {combine(a.numerator(), b.numerator()), ad};
  }
  const int L = a.generator_count();
  const Scalars da = bodies(ad);
  const Scalars db = bodies(bd);
  const Scalars common = gcd_all(da, {db});
  const ComponentFunction ca = to_function(L, exact_quotient(db, common));
  const ComponentFunction cb = to_function(L, exact_quotient(da, common));
  return {combine(a.numerator() * ca, b.numerator() * cb), ad * ca};
}

}  // namespace

RationalComponent operator+(const RationalComponent& a, const RationalComponent& b) {
  return add_or_subtract(a, b, false);
}

RationalComponent operator-(const RationalComponent& a, const RationalComponent& b) {
  return add_or_subtract(a, b, true);
}

RationalComponent operator*(const RationalComponent& a, const RationalComponent& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    return RationalComponent(a.num_ * b.num_);
  }
  RationalComponent out(a.num_ * b.num_, a.den_ * b.den_,
                        RationalComponent::Normalized{});
  out.normalize();
  return out;
}

RationalComponent operator/(const RationalComponent& a, const RationalComponent& b) {
  return a * b.reciprocal();
}

bool operator==(const RationalComponent& a, const RationalComponent& b) {
  if (a.generator_count() != b.generator_count()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalComponent::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "[" + num_.to_string() + "] / [" + den_.to_string() + "]";
}

}  // namespace superconf
