#include "superconf/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <thread>

#include "superconf/error.hpp"

namespace superconf {

namespace {

// One random instance of a check. Claims decide the trial; observations
// are only tallied.
class Trial {
 public:
  Trial(Sampler& sampler, long index) : s(sampler), index_(index) {}

  Sampler& s;

  int L() const { return s.generator_count(); }

  void input(const std::string& key, Json value) { inputs_[key] = std::move(value); }

  void claim(const std::string& name, bool holds) {
    tally(name, holds);
    if (!holds) {
      ok_ = false;
      failed_.push_back(name);
    }
  }

  void observe(const std::string& name, bool holds) { tally(name, holds); }

  void raise(const std::string& what) {
    ok_ = false;
    error_ = what;
  }

  bool ok() const { return ok_; }
  const std::vector<std::pair<std::string, std::pair<long, long>>>& tallies() const {
    return tallies_;
  }

  Json counterexample() const {
    Json j = Json::object();
    j["trial"] = index_;
    j["failed"] = failed_;
    if (!error_.empty()) j["error"] = error_;
    j["inputs"] = inputs_;
    return j;
  }

 private:
  void tally(const std::string& name, bool holds) {
    auto it = std::find_if(tallies_.begin(), tallies_.end(),
                           [&](const auto& e) { return e.first == name; });
    if (it == tallies_.end()) {
      tallies_.push_back({name, {0, 0}});
      it = tallies_.end() - 1;
    }
    ++it->second.first;
    if (!holds) ++it->second.second;
  }

  long index_;
  bool ok_ = true;
  std::string error_;
  Json inputs_ = Json::object();
  std::vector<std::string> failed_;
  std::vector<std::pair<std::string, std::pair<long, long>>> tallies_;
};

using TrialFn = std::function<void(Trial&)>;

struct CheckDef {
  CheckInfo info;
  TrialFn run;
  // Optional post-processing of the merged result.
  std::function<void(CheckResult&)> summarize;
  // Random stream owner; checks sharing a stream see the same instances.
  const char* stream = nullptr;
};

Superfield constant(int L, long value) {
  return Superfield::even_constant(GrassmannNumber(L, GaussianRational(value)));
}

bool is_scf(const SATransform& t) { return delta_vanishes(t); }
bool is_tpt(const SATransform& t) { return q_vanishes(t); }

TransformKind transform_kind(MatrixSet set) {
  switch (set) {
    case MatrixSet::A:
      return TransformKind::General;
    case MatrixSet::S:
      return TransformKind::Superconformal;
    case MatrixSet::T:
      return TransformKind::TwistParity;
    case MatrixSet::D:
      return TransformKind::Degenerate;
  }
  return TransformKind::General;
}

TangentMatrix chain_rule(const SATransform& outer, const SATransform& inner) {
  return tangent_matrix(inner) * pullback(tangent_matrix(outer), inner);
}

SATransform draw(Trial& t, TransformKind kind, const std::string& key) {
  SATransform out = t.s.transform(kind);
  t.input(key, to_json(out));
  return out;
}

Superfield draw_superfield(Trial& t, Parity parity, const std::string& key) {
  Superfield out = t.s.superfield(parity, t.s.coin());
  t.input(key, to_json(out));
  return out;
}

Parity random_parity(Sampler& s) { return s.coin() ? Parity::Odd : Parity::Even; }

// ---------------------------------------------------------------------------
// Algebra and calculus.

void algebra_axioms(Trial& t) {
  Sampler& s = t.s;
  const Parity px = random_parity(s), py = random_parity(s), pz = random_parity(s);
  const GrassmannNumber x = s.grassmann(px), y = s.grassmann(py), z = s.grassmann(pz);
  t.input("x", to_json(x));
  t.input("y", to_json(y));
  t.input("z", to_json(z));
  t.claim("associativity", (x * y) * z == x * (y * z));
  t.claim("left distributivity", x * (y + z) == x * y + x * z);
  t.claim("right distributivity", (x + y) * z == x * z + y * z);
  const bool both_odd = px == Parity::Odd && py == Parity::Odd;
  t.claim("graded commutativity", x * y == (both_odd ? -(y * x) : y * x));
  t.claim("body morphism",
          (x * y).body() == x.body() * y.body() && (x + y).body() == x.body() + y.body());
  GrassmannNumber w = s.grassmann(Parity::Even);
  while (w.body().is_zero()) {
    s.count_redraw();
    w = s.grassmann(Parity::Even);
  }
  t.input("w", to_json(w));
  const GrassmannNumber one(t.L(), GaussianRational(1));
  const GrassmannNumber w_inv = invert(w);
  t.claim("inversion", w * w_inv == one && w_inv * w == one);
}

void d_squared(Trial& t) {
  const Superfield f = draw_superfield(t, random_parity(t.s), "F");
  t.claim("D^2 = d/dz", superderivative(superderivative(f)) == partial_z(f));
}

void graded_leibniz(Trial& t) {
  const Parity pf = random_parity(t.s);
  const Superfield f = draw_superfield(t, pf, "F");
  const Superfield g = draw_superfield(t, random_parity(t.s), "G");
  const Superfield lhs = superderivative(f * g);
  const Superfield first = superderivative(f) * g;
  const Superfield second = f * superderivative(g);
  t.claim("graded Leibniz",
          lhs == (pf == Parity::Odd ? first - second : first + second));
}

void quotient_rule(Trial& t) {
  Sampler& s = t.s;
  const ComponentFunction num = s.component(random_parity(s));
  const ComponentFunction den = s.invertible_component();
  t.input("num", to_json(num));
  t.input("den", to_json(den));
  const RationalComponent r(num, den);
  t.claim("derivative",
          r.derivative() * RationalComponent(den * den) ==
              RationalComponent(num.derivative() * den - num * den.derivative()));
  t.claim("cancellation", r * RationalComponent(den) == RationalComponent(num));

  const Superfield f = draw_superfield(t, random_parity(s), "F");
  Superfield g = s.superfield(Parity::Even, s.coin());
  while (g.a().body_is_zero()) {
    s.count_redraw();
    g = s.superfield(Parity::Even, s.coin());
  }
  t.input("G", to_json(g));
  t.claim("superfield quotient", (f / g) * g == f);
}

// ---------------------------------------------------------------------------
// Berezinians and structural relations.

void ber_addition(Trial& t) {
  const SATransform x = draw(t, TransformKind::GeneralBerExists, "T");
  t.claim("Ber P_A = Ber P_S + Ber P_T",
          berezinian(tangent_matrix(x)) ==
              berezinian(project_matrix(x, MatrixProjection::S)) +
                  berezinian(project_matrix(x, MatrixProjection::T)));
}

void ber_explicit(Trial& t) {
  const SATransform x = draw(t, TransformKind::GeneralBerExists, "T");
  t.claim("explicit = matrix", berezinian_explicit(x) == berezinian(tangent_matrix(x)));
}

void q_minus_ddelta(Trial& t) {
  const SATransform x = draw(t, TransformKind::General, "T");
  const ReductionConditions r = reduction_conditions(x);
  const Superfield sd = superderivative(x.theta_image());
  t.claim("Q - D Delta = (D theta~)^2", r.q - superderivative(r.delta) == sd * sd);
}

void delta_split(Trial& t) {
  const SATransform x = draw(t, TransformKind::General, "T");
  const ReductionConditions r = reduction_conditions(x);
  t.claim("Delta = Delta0 + theta Q",
          r.delta == r.delta0 + Superfield::theta(t.L()) * r.q);
  const ReductionConditions c = reduction_conditions_from_components(x);
  t.claim("component forms", r.q == c.q && r.delta == c.delta && r.delta0 == c.delta0);
}

void eq_q(Trial& t) {
  const SATransform x = draw(t, TransformKind::Superconformal, "T");
  const Superfield sd = superderivative(x.theta_image());
  t.claim("Q = (D theta~)^2 on Delta = 0", reduction_conditions(x).q == sd * sd);
}

void eq_dl(Trial& t) {
  const SATransform x = draw(t, TransformKind::TwistParity, "T");
  const ReductionConditions r = reduction_conditions(x);
  t.claim("Delta = Delta0 on Q = 0", r.delta == r.delta0);
}

void d_delta0(Trial& t) {
  const SATransform x = draw(t, TransformKind::TwistParity, "T");
  const Superfield sd = superderivative(x.theta_image());
  t.claim("D Delta0 = -(D theta~)^2",
          superderivative(reduction_conditions(x).delta0) == -(sd * sd));
}

void partial_delta0(Trial& t) {
  const SATransform x = draw(t, TransformKind::TwistParity, "T");
  const Superfield th = x.theta_image();
  t.claim("d Delta0 = -2 D theta~ d theta~",
          partial_z(reduction_conditions(x).delta0) ==
              -(constant(t.L(), 2) * superderivative(th) * partial_z(th)));
}

// The two relations above with the Q terms that vanish on Q = 0 restored.
void structural_general(Trial& t) {
  const SATransform x = draw(t, TransformKind::General, "T");
  const ReductionConditions r = reduction_conditions(x);
  const Superfield th = x.theta_image();
  const Superfield sd = superderivative(th);
  t.claim("D Delta0 = -(D theta~)^2 + theta DQ",
          superderivative(r.delta0) ==
              -(sd * sd) + Superfield::theta(t.L()) * superderivative(r.q));
  t.claim("d Delta0 = -2 D theta~ d theta~ + d_theta Q",
          partial_z(r.delta0) ==
              -(constant(t.L(), 2) * sd * partial_z(th)) + partial_theta(r.q));
}

void d_delta0_general(Trial& t) {
  const SATransform x = draw(t, TransformKind::General, "T");
  const ReductionConditions r = reduction_conditions(x);
  const Superfield th = x.theta_image();
  const Superfield sd = superderivative(th);
  t.claim("D Delta0 = -(D theta~)^2", superderivative(r.delta0) == -(sd * sd));
  t.claim("d Delta0 = -2 D theta~ d theta~",
          partial_z(r.delta0) == -(constant(t.L(), 2) * sd * partial_z(th)));
}

void ber_scf(Trial& t) {
  const SATransform x = draw(t, TransformKind::SuperconformalBerExists, "T");
  t.claim("Ber P_A = D theta~",
          berezinian(tangent_matrix(x)) == berezinian_superconformal(x));
}

void ber_tpt_three_forms(Trial& t) {
  const SATransform x = draw(t, TransformKind::TwistParityBerExists, "T");
  const TwistParityBerezinians b = berezinian_twist_parity(x);
  t.claim("quotient = derivative form", b.quotient == b.derivative);
  t.claim("derivative form = D(Dz~/D theta~)", b.derivative == b.superderived);
}

void ber_tpt_nilpotent(Trial& t) {
  const SATransform x = draw(t, TransformKind::TwistParityBerExists, "T");
  const TwistParityBerezinians b = berezinian_twist_parity(x);
  t.claim("pure soul", b.quotient.is_pure_soul() && b.derivative.is_pure_soul() &&
                           b.superderived.is_pure_soul());
}

void eq_bu(Trial& t) {
  const SATransform scf = draw(t, TransformKind::SuperconformalBerExists, "T_scf");
  t.claim("SCf: Ber P_A = Ber P_SCf",
          berezinian(tangent_matrix(scf)) ==
              berezinian(project_matrix(scf, MatrixProjection::SCf)));
  const SATransform tpt = draw(t, TransformKind::TwistParityBerExists, "T_tpt");
  t.claim("TPt: Ber P_A = Ber P_TPt",
          berezinian(tangent_matrix(tpt)) ==
              berezinian(project_matrix(tpt, MatrixProjection::TPt)));
  const SATransform any = draw(t, TransformKind::GeneralBerExists, "T");
  t.claim("Ber P_D = 0", berezinian(project_matrix(any, MatrixProjection::D)).is_zero());
}

// ---------------------------------------------------------------------------
// Products, operators and reductions.

void chain_rule_check(Trial& t) {
  const SATransform t1 = draw(t, TransformKind::General, "T1");
  const SATransform t2 = draw(t, TransformKind::General, "T2");
  t.claim("P(T2 T1) = P(T1) (P(T2) o T1)", tangent_matrix(compose(t2, t1)) == chain_rule(t2, t1));
}

void ber_multiplicative(Trial& t) {
  const SATransform t1 = draw(t, TransformKind::GeneralBerExists, "T1");
  const SATransform t2 = draw(t, TransformKind::GeneralBerExists, "T2");
  const TangentMatrix m = tangent_matrix(t1);
  const TangentMatrix n = tangent_matrix(t2);
  // Both lower-right bodies are nonzero, so all three Berezinians exist.
  t.claim("Ber(MN) = Ber(M) Ber(N)", berezinian(m * n) == berezinian(m) * berezinian(n));
}

void parity_twist(Trial& t) {
  const SATransform scf = draw(t, TransformKind::Superconformal, "T_scf");
  const SATransform tpt = draw(t, TransformKind::TwistParity, "T_tpt");
  // Polynomial F: a rational F can have a pole along the image of a map
  // whose body is constant.
  const Superfield f = t.s.superfield(random_parity(t.s), false);
  t.input("F", to_json(f));
  const Superfield df = superderivative(f);
  t.claim("SCf: D(F o T) = D theta~ (DF o T)",
          superderivative(pullback(f, scf)) ==
              superderivative(scf.theta_image()) * pullback(df, scf));
  t.claim("TPt: d(F o T) = d theta~ (DF o T)",
          partial_z(pullback(f, tpt)) == partial_z(tpt.theta_image()) * pullback(df, tpt));
}

void reduced_satisfy_condition(Trial& t) {
  const ReducedPair plus = t.s.reduced(Spin::Superconformal);
  const ReducedPair minus = t.s.reduced(Spin::TwistParity);
  t.input("plus", to_json(plus));
  t.input("minus", to_json(minus));
  t.claim("spin +1: Delta = 0", is_scf(build_reduced(plus)));
  t.claim("spin -1: Q = 0", is_tpt(build_reduced(minus)));
}

void tpt_noninvertible(Trial& t) {
  const ReducedPair minus = t.s.reduced(Spin::TwistParity);
  t.input("minus", to_json(minus));
  t.claim("spin -1: body(f') = 0", build_reduced(minus).f().derivative().body_is_zero());
}

void star_vs_compose(Trial& t) {
  const ReducedPair left = t.s.reduced(Spin::Superconformal);
  t.input("left", to_json(left));
  for (const Spin spin : {Spin::Superconformal, Spin::TwistParity}) {
    const ReducedPair right = t.s.reduced(spin);
    const std::string tag = spin == Spin::Superconformal ? "(+1)*(+1)" : "(+1)*(-1)";
    t.input(spin == Spin::Superconformal ? "right_plus" : "right_minus", to_json(right));
    const ReducedPair product = star(left, right);
    const SATransform composite = compose(build_reduced(left), build_reduced(right));
    t.claim(tag + ": (g, psi)", product.g == composite.g() && product.psi == composite.psi());
    t.claim(tag + ": whole transform", build_reduced(product) == composite);
  }
}

void spin_rule(Trial& t) {
  const ReducedPair left = t.s.reduced(Spin::Superconformal);
  const ReducedPair plus = t.s.reduced(Spin::Superconformal);
  const ReducedPair minus = t.s.reduced(Spin::TwistParity);
  t.input("left", to_json(left));
  t.input("right_plus", to_json(plus));
  t.input("right_minus", to_json(minus));
  const SATransform outer = build_reduced(left);
  t.claim("(+1)*(+1) = (+1)", star(left, plus).spin == Spin::Superconformal &&
                                  is_scf(compose(outer, build_reduced(plus))));
  t.claim("(+1)*(-1) = (-1)", star(left, minus).spin == Spin::TwistParity &&
                                  is_tpt(compose(outer, build_reduced(minus))));
  bool raised = false;
  try {
    (void)star(minus, plus);
  } catch (const Error& e) {
    raised = e.code() == Errc::UndefinedSpinProduct;
  }
  t.claim("(-1)*(.) undefined", raised);
}

void deg_star_second_row(Trial& t) {
  const ReducedPair left = t.s.degenerate_pair();
  const ReducedPair right = t.s.degenerate_pair();
  t.input("left", to_json(left));
  t.input("right", to_json(right));
  const SATransform inner = build_reduced(right);
  const SATransform composite = compose(build_reduced(left), inner);
  const ComponentFunction second_row =
      left.psi.compose(inner.f()) + right.psi * left.g.compose(inner.f());
  t.claim("composite psi = phi o f + psi (h o f)", composite.psi() == second_row);
  t.claim("composite g = 0", composite.g().is_zero());
  const ReducedPair product = star(left, right);
  t.claim("star agrees", product.psi == second_row && product.g.is_zero());
  t.claim("composite is Deg", reduction_kind(composite) == ReductionKind::Degenerate);
}

// ---------------------------------------------------------------------------
// Cocycles and closures.

void cocycle_standard_check(Trial& t) {
  const SATransform t1 = draw(t, TransformKind::Superconformal, "T1");
  const SATransform t2 = draw(t, TransformKind::Superconformal, "T2");
  t.claim("D theta~~ = D theta~ (D~ theta~~ o T1)", cocycle_standard(t2, t1));
}

void cocycle_standard_generic(Trial& t) {
  const SATransform t1 = draw(t, TransformKind::General, "T1");
  const SATransform t2 = draw(t, TransformKind::General, "T2");
  t.claim("D theta~~ = D theta~ (D~ theta~~ o T1)", cocycle_standard(t2, t1));
}

void cocycle_mixed_check(Trial& t) {
  const SATransform tpt = draw(t, TransformKind::TwistParity, "T1_tpt");
  const SATransform scf = draw(t, TransformKind::Superconformal, "T2_scf");
  t.claim("d theta~~ = d theta~ (D~ theta~~ o T1), composite Q = 0",
          cocycle_mixed(scf, tpt));
}

void deg_both_cocycles(Trial& t) {
  const SATransform t1 = draw(t, TransformKind::Degenerate, "T1");
  const SATransform t2 = draw(t, TransformKind::Degenerate, "T2");
  t.claim("standard", cocycle_standard(t2, t1));
  t.claim("mixed", cocycle_mixed(t2, t1));
}

struct ClosureClaim {
  MatrixSet first;
  MatrixSet second;
  bool asserted_first_map_first;
};

const std::vector<ClosureClaim>& closure_claims() {
  static const std::vector<ClosureClaim> claims = {
      {MatrixSet::S, MatrixSet::S, true},  {MatrixSet::T, MatrixSet::S, true},
      {MatrixSet::D, MatrixSet::D, true},  {MatrixSet::D, MatrixSet::A, false},
      {MatrixSet::D, MatrixSet::S, false}, {MatrixSet::D, MatrixSet::T, false},
  };
  return claims;
}

std::string closure_name(const ClosureClaim& c, const char* convention) {
  return std::string("P_") + to_string(c.first) + " P_" + to_string(c.second) + " in P_" +
         to_string(c.first) + " [" + convention + "]";
}

void shape_closures(Trial& t) {
  // One random claim per trial; both conventions on the same draws.
  const auto& claims = closure_claims();
  const ClosureClaim& c = claims[static_cast<std::size_t>(t.s.uniform(claims.size()))];
  const SATransform a = draw(t, transform_kind(c.first), "T_first_set");
  const SATransform b = draw(t, transform_kind(c.second), "T_second_set");
  const bool fmf = in_set(chain_rule(b, a), c.first);
  const bool omf = in_set(chain_rule(a, b), c.first);
  if (c.asserted_first_map_first) {
    t.claim(closure_name(c, "first-map-first"), fmf);
  } else {
    t.observe(closure_name(c, "first-map-first"), fmf);
  }
  t.observe(closure_name(c, "outer-map-first"), omf);
}

void summarize_closures(CheckResult& r) {
  Json holds = Json::object();
  for (const ClosureClaim& c : closure_claims()) {
    Json conventions = Json::array();
    for (const char* convention : {"first-map-first", "outer-map-first"}) {
      const std::string key = closure_name(c, convention);
      if (r.details.contains(key) && r.details[key]["failed"] == 0) {
        conventions.push_back(convention);
      }
    }
    holds[std::string("P_") + to_string(c.first) + " P_" + to_string(c.second)] =
        conventions;
  }
  r.details["holds_in"] = holds;
}

void tpt_subsemigroup_rate(Trial& t) {
  const SATransform t1 = draw(t, TransformKind::TwistParity, "T1");
  const SATransform t2 = draw(t, TransformKind::TwistParity, "T2");
  t.claim("TPt o TPt has Q = 0", is_tpt(compose(t2, t1)));
}

void det_addition(Trial& t) {
  const GaussianRational a = t.s.scalar(), b = t.s.scalar(), c = t.s.scalar(),
                         d = t.s.scalar();
  t.input("matrix", Json::array({Json::array({to_json(a), to_json(b)}),
                                 Json::array({to_json(c), to_json(d)})}));
  const DeterminantSplit split = determinant_split(a, b, c, d);
  // Permutation expansion as an independent determinant.
  const GaussianRational m[2][2] = {{a, b}, {c, d}};
  GaussianRational leibniz(0);
  leibniz += m[0][0] * m[1][1];
  leibniz -= m[0][1] * m[1][0];
  t.claim("det = det diag + det antidiag",
          split.full == leibniz && split.full == split.diagonal + split.antidiagonal);
}

void compose_vs_apply(Trial& t) {
  const SATransform t1 = draw(t, TransformKind::General, "T1");
  const SATransform t2 = draw(t, TransformKind::General, "T2");
  const GrassmannNumber z = t.s.grassmann(Parity::Even);
  const GrassmannNumber th = t.s.grassmann(Parity::Odd);
  t.input("z", to_json(z));
  t.input("theta", to_json(th));
  const auto [z1, th1] = apply(t1, z, th);
  t.claim("(T2 T1)(p) = T2(T1(p))", apply(compose(t2, t1), z, th) == apply(t2, z1, th1));
}

constexpr CheckRole kAssert = CheckRole::Assertive;
constexpr CheckRole kMeasure = CheckRole::Measure;

const std::vector<CheckDef>& definitions() {
  static const std::vector<CheckDef> defs = {
      {{"algebra-axioms", "(xy)z = x(yz), x(y+z) = xy + xz, xy = (-1)^{|x||y|} yx, eps(xy) = eps(x) eps(y), x x^-1 = 1", kAssert}, algebra_axioms, {}},
      {{"d-squared", "D^2 = d/dz", kAssert}, d_squared, {}},
      {{"graded-leibniz", "D(FG) = (DF) G + (-1)^{|F|} F (DG)", kAssert}, graded_leibniz, {}},
      {{"quotient-rule", "(n/d)' d^2 = n'd - nd', (F/G) G = F", kAssert}, quotient_rule, {}},
      {{"ber-addition", "Ber P_A = Ber P_S + Ber P_T", kAssert}, ber_addition, {}},
      {{"ber-explicit-vs-matrix", "Ber P_A = f'/g + chi psi'/g^2 + theta (chi/g)'", kAssert}, ber_explicit, {}, "ber-addition"},
      {{"q-minus-ddelta", "Q - D Delta = (D theta~)^2", kAssert}, q_minus_ddelta, {}},
      {{"delta-split", "Delta = Delta0 + theta Q", kAssert}, delta_split, {}},
      {{"eq-q", "Q|_{Delta=0} = (D theta~)^2", kAssert}, eq_q, {}},
      {{"eq-dl", "Delta|_{Q=0} = Delta0", kAssert}, eq_dl, {}},
      {{"d-delta0", "D Delta0 = -(D theta~)^2 (Q = 0)", kAssert}, d_delta0, {}},
      {{"partial-delta0", "d Delta0 = -2 D theta~ d theta~ (Q = 0)", kAssert}, partial_delta0, {}},
      {{"structural-general", "D Delta0 = -(D theta~)^2 + theta DQ, d Delta0 = -2 D theta~ d theta~ + d_theta Q", kAssert}, structural_general, {}},
      {{"d-delta0-general", "D Delta0 = -(D theta~)^2, d Delta0 = -2 D theta~ d theta~ (all transforms)", kMeasure}, d_delta0_general, {}},
      {{"ber-scf", "Ber P_SCf = D theta~", kAssert}, ber_scf, {}},
      {{"ber-tpt-three-forms", "Delta0 d theta~/(D theta~)^2 = d Delta0 Delta0/(2 (D theta~)^3) = D(Dz~/D theta~)", kAssert}, ber_tpt_three_forms, {}},
      {{"ber-tpt-nilpotent", "eps(Ber P_TPt) = 0", kAssert}, ber_tpt_nilpotent, {}},
      {{"eq-bu", "Ber P_A = Ber P_SCf (SCf), Ber P_A = Ber P_TPt (TPt), Ber P_D = 0", kAssert}, eq_bu, {}},
      {{"chain-rule", "P(T2 T1) = P(T1) (P(T2) o T1)", kAssert}, chain_rule_check, {}},
      {{"ber-multiplicative", "Ber(MN) = Ber(M) Ber(N)", kAssert}, ber_multiplicative, {}},
      {{"parity-twist", "D(F o T) = D theta~ (D~F o T) (SCf), d(F o T) = d theta~ (D~F o T) (TPt)", kAssert}, parity_twist, {}},
      {{"reduced-satisfy-condition", "f_n' = psi' psi + (1+n)/2 g^2, chi_n' = g' psi + n g psi'", kAssert}, reduced_satisfy_condition, {}},
      {{"tpt-noninvertible", "f_{-1}' = psi' psi is nilpotent", kAssert}, tpt_noninvertible, {}},
      {{"star-vs-compose", "(h, phi)_n * (g, psi)_m = (g h o f_m + chi_m psi h' o f_m + chi_m phi' o f_m, phi o f_m + psi h o f_m)", kAssert}, star_vs_compose, {}},
      {{"spin-rule", "(+1)*(+1) = (+1), (+1)*(-1) = (-1)", kAssert}, spin_rule, {}},
      {{"deg-star-second-row", "Deg: theta~ = phi o f + psi h o f", kAssert}, deg_star_second_row, {}},
      {{"cocycle-standard", "D theta~~ = D theta~ D~ theta~~ (SCf o SCf)", kAssert}, cocycle_standard_check, {}},
      {{"cocycle-standard-generic", "D theta~~ = D theta~ D~ theta~~ (any pair)", kMeasure}, cocycle_standard_generic, {}},
      {{"cocycle-mixed", "d theta~~ = d theta~ D~ theta~~ (SCf o TPt)", kAssert}, cocycle_mixed_check, {}},
      {{"deg-both-cocycles", "D theta~~ = D theta~ D~ theta~~ and d theta~~ = d theta~ D~ theta~~ (Deg o Deg)", kAssert}, deg_both_cocycles, {}},
      {{"shape-closures", "P_S P_S in P_S, P_T P_S in P_T, P_D P_D in P_D; P_D P_A, P_D P_S, P_D P_T in P_D", kAssert}, shape_closures, summarize_closures},
      {{"tpt-subsemigroup-rate", "TPt o TPt in TPt", kMeasure}, tpt_subsemigroup_rate, {}},
      {{"det-addition-footnote", "det P = det P_diag + det P_antidiag", kAssert}, det_addition, {}},
      {{"compose-vs-apply", "(T2 o T1)(z, theta) = T2(T1(z, theta))", kAssert}, compose_vs_apply, {}},
  };
  return defs;
}

const CheckDef& definition(const std::string& name) {
  for (const CheckDef& d : definitions()) {
    if (d.info.name == name) return d;
  }
  std::string names;
  for (const CheckDef& d : definitions()) names += (names.empty() ? "" : ", ") + d.info.name;
  throw Error(Errc::UnknownCheck, "unknown check \"" + name + "\"; available: " + names);
}

// Checks that never draw odd functions.
bool scalar_only(const std::string& name) {
  return name == "algebra-axioms" || name == "det-addition-footnote";
}

CheckResult run_range(const CheckDef& def, const CheckConfig& config, long begin,
                      long end) {
  CheckResult r;
  r.name = def.info.name;
  r.anchor = def.info.anchor;
  r.role = def.info.role;
  const std::uint64_t stream_base =
      mix_seed(stable_hash(def.stream ? def.stream : def.info.name.c_str()));
  std::vector<std::pair<std::string, std::pair<long, long>>> tallies;
  for (long i = begin; i < end; ++i) {
    Sampler sampler(config.sample_params(), config.seed,
                    stream_base ^ static_cast<std::uint64_t>(i));
    Trial trial(sampler, i);
    try {
      def.run(trial);
    } catch (const std::exception& e) {
      trial.raise(e.what());
    }
    ++r.trials;
    r.redraws += sampler.redraws();
    if (trial.ok()) {
      ++r.passes;
    } else {
      ++r.failures;
      if (!r.counterexample_trial) {
        r.counterexample_trial = i;
        r.counterexample = trial.counterexample();
      }
    }
    for (const auto& [name, counts] : trial.tallies()) {
      auto it = std::find_if(tallies.begin(), tallies.end(),
                             [&](const auto& e) { return e.first == name; });
      if (it == tallies.end()) {
        tallies.push_back({name, counts});
      } else {
        it->second.first += counts.first;
        it->second.second += counts.second;
      }
    }
  }
  for (const auto& [name, counts] : tallies) {
    r.details[name] = Json{{"checked", counts.first}, {"failed", counts.second}};
  }
  return r;
}

}  // namespace

void CheckResult::merge(const CheckResult& other) {
  trials += other.trials;
  passes += other.passes;
  failures += other.failures;
  redraws += other.redraws;
  millis += other.millis;
  if (other.counterexample_trial &&
      (!counterexample_trial || *other.counterexample_trial < *counterexample_trial)) {
    counterexample_trial = other.counterexample_trial;
    counterexample = other.counterexample;
  }
  for (const auto& [key, value] : other.details.items()) {
    if (!details.contains(key)) {
      details[key] = value;
    } else if (value.is_object() && value.contains("checked")) {
      details[key]["checked"] = details[key]["checked"].get<long>() + value["checked"].get<long>();
      details[key]["failed"] = details[key]["failed"].get<long>() + value["failed"].get<long>();
    }
  }
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const CheckDef& d : definitions()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> CheckConfig::selected() const {
  if (suite.empty() || (suite.size() == 1 && suite[0] == "all")) {
    std::vector<std::string> out;
    for (const CheckInfo& info : check_registry()) out.push_back(info.name);
    return out;
  }
  return suite;
}

void CheckConfig::validate() const {
  if (trials < 1) throw Error(Errc::InvalidConfig, "invalid config: trials must be >= 1");
  if (threads < 1) throw Error(Errc::InvalidConfig, "invalid config: threads must be >= 1");
  if (max_degree < 0) {
    throw Error(Errc::InvalidConfig, "invalid config: max degree must be >= 0");
  }
  if (coefficient_bound < 1) {
    throw Error(Errc::InvalidConfig, "invalid config: coefficient bound must be >= 1");
  }
  if (generator_count < 0 || generator_count > GrassmannNumber::kMaxGenerators) {
    throw Error(Errc::InvalidConfig,
                "invalid config: generator count must lie in [0, " +
                    std::to_string(GrassmannNumber::kMaxGenerators) + "]");
  }
  for (const std::string& name : selected()) {
    (void)definition(name);
    if (generator_count < 2 && !scalar_only(name)) {
      throw Error(Errc::InvalidConfig, "invalid config: check \"" + name +
                                           "\" involves odd functions and needs at "
                                           "least 2 generators");
    }
  }
}

CheckResult run_check(const std::string& name, const CheckConfig& config) {
  const CheckDef& def = definition(name);
  const auto start = std::chrono::steady_clock::now();
  const int workers =
      static_cast<int>(std::min<long>(config.threads, config.trials));
  CheckResult result;
  if (workers <= 1) {
    result = run_range(def, config, 0, config.trials);
  } else {
    std::vector<CheckResult> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const long begin = config.trials * w / workers;
      const long end = config.trials * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        parts[static_cast<std::size_t>(w)] = run_range(def, config, begin, end);
      });
    }
    for (std::thread& th : pool) th.join();
    result = std::move(parts[0]);
    for (std::size_t w = 1; w < parts.size(); ++w) result.merge(parts[w]);
  }
  if (def.summarize) def.summarize(result);
  result.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return result;
}

CheckReport run_suite(const CheckConfig& config) {
  config.validate();
  CheckReport report;
  report.config = config;
  for (const std::string& name : config.selected()) {
    report.checks.push_back(run_check(name, config));
  }
  return report;
}

bool CheckReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.ok(); });
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ShapeClosureResult shape_closure(MatrixSet first, MatrixSet second, long trials,
                                 std::uint64_t seed, SampleParams params) {
  ShapeClosureResult out;
  out.first = first;
  out.second = second;
  const std::uint64_t stream_base = mix_seed(stable_hash("shape-closure")) ^
                                    (static_cast<std::uint64_t>(first) << 8) ^
                                    static_cast<std::uint64_t>(second);
  for (long i = 0; i < trials; ++i) {
    Sampler s(params, seed, stream_base ^ (static_cast<std::uint64_t>(i) << 16));
    const SATransform a = s.transform(transform_kind(first));
    const SATransform b = s.transform(transform_kind(second));
    ++out.trials;
    if (!in_set(chain_rule(b, a), first)) {
      if (out.first_map_first_failures++ == 0) {
        out.first_map_first_counterexample = Json{{"T1", to_json(a)}, {"T2", to_json(b)}};
      }
    }
    if (!in_set(chain_rule(a, b), first)) {
      if (out.outer_map_first_failures++ == 0) {
        out.outer_map_first_counterexample = Json{{"T1", to_json(b)}, {"T2", to_json(a)}};
      }
    }
  }
  return out;
}

Json report_to_json(const CheckReport& report, bool with_timing) {
  const CheckConfig& c = report.config;
  Json config = Json::object();
  config["generator_count"] = c.generator_count;
  config["max_degree"] = c.max_degree;
  config["coefficient_bound"] = c.coefficient_bound;
  config["trials"] = c.trials;
  config["seed"] = c.seed;
  config["suite"] = c.selected();
  Json checks = Json::array();
  for (const CheckResult& r : report.checks) {
    Json j = Json::object();
    j["name"] = r.name;
    j["anchor"] = r.anchor;
    j["role"] = r.role == CheckRole::Assertive ? "assertive" : "measure";
    j["trials"] = r.trials;
    j["passes"] = r.passes;
    j["failures"] = r.failures;
    j["redraws"] = r.redraws;
    j["counterexample"] = r.counterexample_trial ? r.counterexample : Json(nullptr);
    j["details"] = r.details;
    if (with_timing) j["millis"] = static_cast<long>(r.millis + 0.5);
    checks.push_back(std::move(j));
  }
  Json out = Json::object();
  out["config"] = std::move(config);
  out["ok"] = report.ok();
  out["checks"] = std::move(checks);
  return out;
}

std::string report_to_text(const CheckReport& report, bool with_timing) {
  std::string out;
  for (const CheckResult& r : report.checks) {
    const char* status = r.role == CheckRole::Measure ? "MEASURE"
                         : r.failures == 0            ? "PASS"
                                                      : "FAIL";
    char line[512];
    std::snprintf(line, sizeof line, "%-7s %-26s %ld/%ld passed, %ld redrawn", status,
                  r.name.c_str(), r.passes, r.trials, r.redraws);
    out += line;
    if (with_timing) {
      std::snprintf(line, sizeof line, ", %.0f ms", r.millis);
      out += line;
    }
    out += "  [" + r.anchor + "]";
    if (r.counterexample_trial) {
      out += "  first failure at trial " + std::to_string(*r.counterexample_trial);
    }
    out += "\n";
  }
  return out;
}

}  // namespace superconf
