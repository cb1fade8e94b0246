#include "superconf/transform.hpp"

#include "superconf/error.hpp"

namespace superconf {

namespace {

void require(const ComponentFunction& p, Parity parity, const char* name,
             int generator_count) {
  if (p.generator_count() != generator_count) {
    throw Error(Errc::AlgebraMismatch,
                std::string("algebra mismatch: component ") + name);
  }
  if (p.parity() != parity && !p.is_zero()) {
    throw Error(Errc::Parity, std::string("parity: component ") + name +
                                  " must be " + to_string(parity));
  }
}

// Re-declare a zero polynomial with the intended parity.
ComponentFunction with_parity(ComponentFunction p, Parity parity) {
  if (p.is_zero()) return {p.generator_count(), parity};
  return p;
}

RationalComponent rc(const ComponentFunction& p) { return RationalComponent(p); }

bool satisfies_q(ReductionKind k) {
  return k == ReductionKind::TwistParity || k == ReductionKind::Degenerate;
}

bool satisfies_delta(ReductionKind k) {
  return k == ReductionKind::Superconformal || k == ReductionKind::Degenerate;
}

}  // namespace

SATransform::SATransform(ComponentFunction f, ComponentFunction chi,
                         ComponentFunction psi, ComponentFunction g)
    : f_(with_parity(std::move(f), Parity::Even)),
      chi_(with_parity(std::move(chi), Parity::Odd)),
      psi_(with_parity(std::move(psi), Parity::Odd)),
      g_(with_parity(std::move(g), Parity::Even)) {
  const int L = f_.generator_count();
  require(f_, Parity::Even, "f", L);
  require(chi_, Parity::Odd, "chi", L);
  require(psi_, Parity::Odd, "psi", L);
  require(g_, Parity::Even, "g", L);
}

SATransform SATransform::identity(int generator_count) {
  return {ComponentFunction::identity(generator_count),
          ComponentFunction(generator_count, Parity::Odd),
          ComponentFunction(generator_count, Parity::Odd),
          ComponentFunction::constant(
              GrassmannNumber(generator_count, GaussianRational(1)), Parity::Even)};
}

Superfield SATransform::z_image() const { return {rc(f_), rc(chi_)}; }

Superfield SATransform::theta_image() const { return {rc(psi_), rc(g_)}; }

std::string SATransform::to_string() const {
  return "z~ = " + f_.to_string() + " + θ·{" + chi_.to_string() +
         "}, θ~ = " + psi_.to_string() + " + θ·{" + g_.to_string() + "}";
}

ReducedPair::ReducedPair(ComponentFunction g_, ComponentFunction psi_, Spin spin_)
    : ReducedPair(g_, psi_, spin_, GrassmannNumber(g_.generator_count()),
                  GrassmannNumber(g_.generator_count())) {}

ReducedPair::ReducedPair(ComponentFunction g_, ComponentFunction psi_, Spin spin_,
                         GrassmannNumber f0_, GrassmannNumber chi0_)
    : g(with_parity(std::move(g_), Parity::Even)),
      psi(with_parity(std::move(psi_), Parity::Odd)),
      spin(spin_),
      f0(std::move(f0_)),
      chi0(std::move(chi0_)) {
  const int L = g.generator_count();
  require(g, Parity::Even, "g", L);
  require(psi, Parity::Odd, "psi", L);
  if (f0.generator_count() != L || chi0.generator_count() != L) {
    throw Error(Errc::AlgebraMismatch, "algebra mismatch: integration constant");
  }
  if (!f0.is_even() || !chi0.is_odd()) {
    throw Error(Errc::Parity, "parity: f0 must be even and chi0 odd");
  }
  if (spin != Spin::Superconformal && spin != Spin::TwistParity) {
    throw Error(Errc::InvalidConfig, "reduction spin must be +1 or -1");
  }
}

const char* to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::General:
      return "GENERAL";
    case ReductionKind::Superconformal:
      return "SCF";
    case ReductionKind::TwistParity:
      return "TPT";
    case ReductionKind::Degenerate:
      return "DEG";
  }
  return "?";
}

const char* to_string(BerClass c) {
  switch (c) {
    case BerClass::Invertible:
      return "INVERTIBLE";
    case BerClass::Noninvertible:
      return "NONINVERTIBLE";
    case BerClass::Nonexistent:
      return "NONEXISTENT";
  }
  return "?";
}

const char* to_string(ClassifyMode m) {
  return m == ClassifyMode::PaperLiteral ? "paper-literal" : "derivative";
}

const char* to_string(MatrixSet s) {
  switch (s) {
    case MatrixSet::A:
      return "A";
    case MatrixSet::S:
      return "S";
    case MatrixSet::T:
      return "T";
    case MatrixSet::D:
      return "D";
  }
  return "?";
}

std::pair<GrassmannNumber, GrassmannNumber> apply(const SATransform& t,
                                                  const GrassmannNumber& z,
                                                  const GrassmannNumber& th) {
  if (!z.is_even()) throw Error(Errc::Parity, "parity: z must be even");
  if (!th.is_odd()) throw Error(Errc::Parity, "parity: theta must be odd");
  if (z.generator_count() != t.generator_count() ||
      th.generator_count() != t.generator_count()) {
    throw Error(Errc::AlgebraMismatch, "algebra mismatch: evaluation point");
  }
  return {t.f().evaluate(z) + th * t.chi().evaluate(z),
          t.psi().evaluate(z) + th * t.g().evaluate(z)};
}

SATransform compose(const SATransform& outer, const SATransform& inner) {
  const ComponentFunction& f1 = inner.f();
  const ComponentFunction& chi1 = inner.chi();
  const ComponentFunction& psi1 = inner.psi();
  const ComponentFunction& g1 = inner.g();
  const ComponentFunction psi1_chi1 = psi1 * chi1;

  const ComponentFunction chi2_f1 = outer.chi().compose(f1);
  const ComponentFunction g2_f1 = outer.g().compose(f1);

  ComponentFunction f = outer.f().compose(f1) + psi1 * chi2_f1;
  ComponentFunction chi = chi1 * outer.f().derivative().compose(f1) + g1 * chi2_f1 -
                          psi1_chi1 * outer.chi().derivative().compose(f1);
  ComponentFunction psi = outer.psi().compose(f1) + psi1 * g2_f1;
  ComponentFunction g = chi1 * outer.psi().derivative().compose(f1) + g1 * g2_f1 -
                        psi1_chi1 * outer.g().derivative().compose(f1);
  return {std::move(f), std::move(chi), std::move(psi), std::move(g)};
}

namespace {

// x(z~) as a superfield on the source: x(f) + theta chi x'(f).
Superfield pull_component(const RationalComponent& x, const SATransform& t) {
  return {x.compose(t.f()), rc(t.chi()) * x.derivative().compose(t.f())};
}

}  // namespace

Superfield pullback(const Superfield& f, const SATransform& t) {
  return pull_component(f.a(), t) + t.theta_image() * pull_component(f.b(), t);
}

TangentMatrix pullback(const TangentMatrix& m, const SATransform& t) {
  return {pullback(m.a, t), pullback(m.b, t), pullback(m.c, t), pullback(m.d, t)};
}

TangentMatrix tangent_matrix(const SATransform& t) {
  const Superfield z = t.z_image();
  const Superfield th = t.theta_image();
  const Superfield d_th = partial_z(th);
  const Superfield sd_th = superderivative(th);
  return {partial_z(z) - d_th * th, d_th, superderivative(z) - sd_th * th, sd_th};
}

ReductionConditions reduction_conditions(const SATransform& t) {
  const Superfield z = t.z_image();
  const Superfield th = t.theta_image();
  return {partial_z(z) - partial_z(th) * th,
          superderivative(z) - superderivative(th) * th,
          partial_theta(z) - partial_theta(th) * th};
}

ReductionConditions reduction_conditions_from_components(const SATransform& t) {
  const ComponentFunction& f = t.f();
  const ComponentFunction& chi = t.chi();
  const ComponentFunction& psi = t.psi();
  const ComponentFunction& g = t.g();
  const ComponentFunction dpsi_psi = psi.derivative() * psi;
  const ComponentFunction chi_minus = chi - g * psi;
  const ComponentFunction g2 = g * g;
  return {
      Superfield(rc(f.derivative() - dpsi_psi),
                 rc(chi.derivative() + psi.derivative() * g - g.derivative() * psi)),
      Superfield(rc(chi_minus), rc(f.derivative() - g2 - dpsi_psi)),
      Superfield(rc(chi_minus), rc(-g2)),
  };
}

Superfield berezinian_explicit(const SATransform& t) {
  if (t.g().body_is_zero()) {
    throw Error(Errc::BerezinianDoesNotExist,
                "Berezinian does not exist: body of g is identically zero");
  }
  const RationalComponent g(t.g());
  const RationalComponent chi(t.chi());
  const RationalComponent even = RationalComponent(t.f().derivative()) / g +
                                 RationalComponent(t.chi() * t.psi().derivative()) /
                                     RationalComponent(t.g() * t.g());
  return {even, (chi / g).derivative()};
}

BerClass classify_berezinian(const SATransform& t, ClassifyMode mode) {
  if (t.g().body_is_zero()) return BerClass::Nonexistent;
  const bool f_body_zero = mode == ClassifyMode::PaperLiteral
                               ? t.f().body_is_zero()
                               : t.f().derivative().body_is_zero();
  return f_body_zero ? BerClass::Noninvertible : BerClass::Invertible;
}

bool delta_vanishes(const SATransform& t) {
  const ComponentFunction& psi = t.psi();
  const ComponentFunction& g = t.g();
  return t.chi() == g * psi && t.f().derivative() == g * g + psi.derivative() * psi;
}

bool q_vanishes(const SATransform& t) {
  const ComponentFunction& psi = t.psi();
  const ComponentFunction& g = t.g();
  const ComponentFunction dpsi = psi.derivative();
  return t.f().derivative() == dpsi * psi &&
         t.chi().derivative() == g.derivative() * psi - dpsi * g;
}

ReductionKind reduction_kind(const SATransform& t) {
  const bool q_zero = q_vanishes(t);
  const bool delta_zero = delta_vanishes(t);
  if (q_zero && delta_zero) return ReductionKind::Degenerate;
  if (delta_zero) return ReductionKind::Superconformal;
  if (q_zero) return ReductionKind::TwistParity;
  return ReductionKind::General;
}

SATransform build_reduced(const ReducedPair& p) {
  const ComponentFunction dpsi_psi = p.psi.derivative() * p.psi;
  if (p.spin == Spin::Superconformal) {
    return {(dpsi_psi + p.g * p.g).antiderivative(p.f0), p.g * p.psi, p.psi, p.g};
  }
  const ComponentFunction dchi = p.g.derivative() * p.psi - p.g * p.psi.derivative();
  return {dpsi_psi.antiderivative(p.f0), dchi.antiderivative(p.chi0), p.psi, p.g};
}

ReducedPair star(const ReducedPair& left, const ReducedPair& right) {
  if (left.spin != Spin::Superconformal) {
    throw Error(Errc::UndefinedSpinProduct,
                "undefined spin product: the left factor must have spin +1");
  }
  const int L = left.generator_count();
  if (right.generator_count() != L) {
    throw Error(Errc::AlgebraMismatch, "algebra mismatch in star product");
  }
  const SATransform outer = build_reduced(left);
  const SATransform inner = build_reduced(right);
  const ComponentFunction& f = inner.f();
  const ComponentFunction& chi = inner.chi();
  const ComponentFunction& h = left.g;
  const ComponentFunction& phi = left.psi;
  const ComponentFunction& g = right.g;
  const ComponentFunction& psi = right.psi;

  const ComponentFunction h_f = h.compose(f);
  ComponentFunction g_new = g * h_f + chi * psi * h.derivative().compose(f) +
                            chi * phi.derivative().compose(f);
  ComponentFunction psi_new = phi.compose(f) + psi * h_f;

  // Integration constants of the composite, evaluated at z = 0.
  const GrassmannNumber zero(L);
  const GrassmannNumber f1 = f.evaluate(zero);
  const GrassmannNumber chi1 = chi.evaluate(zero);
  const GrassmannNumber psi1 = psi.evaluate(zero);
  const GrassmannNumber g1 = g.evaluate(zero);
  const GrassmannNumber chi2 = outer.chi().evaluate(f1);
  GrassmannNumber f0 = outer.f().evaluate(f1) + psi1 * chi2;
  GrassmannNumber chi0(L);
  if (right.spin == Spin::TwistParity) {
    chi0 = chi1 * outer.f().derivative().evaluate(f1) + g1 * chi2 -
           psi1 * chi1 * outer.chi().derivative().evaluate(f1);
  }
  return {std::move(g_new), std::move(psi_new), right.spin, std::move(f0),
          std::move(chi0)};
}

TangentMatrix project_matrix(const SATransform& t, MatrixProjection which) {
  const int L = t.generator_count();
  const Superfield even_zero(L, Parity::Even);
  const Superfield odd_zero(L, Parity::Odd);
  TangentMatrix m = tangent_matrix(t);
  switch (which) {
    case MatrixProjection::S:
      m.c = odd_zero;
      break;
    case MatrixProjection::T:
      m.a = even_zero;
      break;
    case MatrixProjection::D:
      m.a = even_zero;
      m.c = odd_zero;
      break;
    case MatrixProjection::SCf:
      m.a = m.d * m.d;
      m.c = odd_zero;
      break;
    case MatrixProjection::TPt:
      m.a = even_zero;
      m.c = reduction_conditions(t).delta0;
      break;
  }
  return m;
}

bool in_set(const TangentMatrix& m, MatrixSet set) {
  switch (set) {
    case MatrixSet::A:
      return true;
    case MatrixSet::S:
      return m.c.is_zero();
    case MatrixSet::T:
      return m.a.is_zero();
    case MatrixSet::D:
      return m.a.is_zero() && m.c.is_zero();
  }
  return false;
}

Superfield berezinian_superconformal(const SATransform& t) {
  if (!satisfies_delta(reduction_kind(t))) {
    throw Error(Errc::NotSuperconformal, "not superconformal: Delta is not zero");
  }
  return superderivative(t.theta_image());
}

TwistParityBerezinians berezinian_twist_parity(const SATransform& t) {
  if (!satisfies_q(reduction_kind(t))) {
    throw Error(Errc::NotTwistParity, "not twist-parity: Q is not zero");
  }
  if (t.g().body_is_zero()) {
    throw Error(Errc::BerezinianDoesNotExist,
                "Berezinian does not exist: body of g is identically zero");
  }
  const int L = t.generator_count();
  const Superfield th = t.theta_image();
  const Superfield sd_th = superderivative(th);
  const Superfield d_th = partial_z(th);
  const Superfield delta0 = reduction_conditions(t).delta0;
  const Superfield two = Superfield::even_constant(GrassmannNumber(L, GaussianRational(2)));
  return {
      delta0 * d_th / (sd_th * sd_th),
      partial_z(delta0) * delta0 / (two * sd_th * sd_th * sd_th),
      superderivative(superderivative(t.z_image()) / sd_th),
  };
}

bool cocycle_standard(const SATransform& outer, const SATransform& inner) {
  const Superfield lhs = superderivative(compose(outer, inner).theta_image());
  const Superfield rhs = superderivative(inner.theta_image()) *
                         pullback(superderivative(outer.theta_image()), inner);
  return lhs == rhs;
}

bool cocycle_mixed(const SATransform& scf, const SATransform& tpt) {
  if (!satisfies_delta(reduction_kind(scf))) {
    throw Error(Errc::KindMismatch, "kind mismatch: first argument is not superconformal");
  }
  if (!satisfies_q(reduction_kind(tpt))) {
    throw Error(Errc::KindMismatch, "kind mismatch: second argument is not twist-parity");
  }
  const SATransform composite = compose(scf, tpt);
  const Superfield lhs = partial_z(composite.theta_image());
  const Superfield rhs = partial_z(tpt.theta_image()) *
                         pullback(superderivative(scf.theta_image()), tpt);
  return lhs == rhs && reduction_conditions(composite).q.is_zero();
}

}  // namespace superconf
