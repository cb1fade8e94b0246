#pragma once

#include <string>
#include <utility>

#include "superconf/supermatrix.hpp"

namespace superconf {

// Superanalytic map (z, theta) -> (f + theta chi, psi + theta g) with f, g
// even and chi, psi odd, all over one Lambda_L.
class SATransform {
 public:
  SATransform(ComponentFunction f, ComponentFunction chi, ComponentFunction psi,
              ComponentFunction g);

  static SATransform identity(int generator_count);

  int generator_count() const { return f_.generator_count(); }
  const ComponentFunction& f() const { return f_; }
  const ComponentFunction& chi() const { return chi_; }
  const ComponentFunction& psi() const { return psi_; }
  const ComponentFunction& g() const { return g_; }

  // The image coordinates as superfields on the source.
  Superfield z_image() const;
  Superfield theta_image() const;

  friend bool operator==(const SATransform&, const SATransform&) = default;
  std::string to_string() const;

 private:
  ComponentFunction f_;
  ComponentFunction chi_;
  ComponentFunction psi_;
  ComponentFunction g_;
};

enum class Spin : int { Superconformal = 1, TwistParity = -1 };

// Unified parametrization by (g, psi) plus a reduction spin. The integration
// constants fix f(0) and, for spin -1, chi(0).
struct ReducedPair {
  ComponentFunction g;
  ComponentFunction psi;
  Spin spin = Spin::Superconformal;
  GrassmannNumber f0;
  GrassmannNumber chi0;

  ReducedPair(ComponentFunction g, ComponentFunction psi, Spin spin);
  ReducedPair(ComponentFunction g, ComponentFunction psi, Spin spin,
              GrassmannNumber f0, GrassmannNumber chi0);

  int generator_count() const { return g.generator_count(); }
  friend bool operator==(const ReducedPair&, const ReducedPair&) = default;
};

enum class ReductionKind { General, Superconformal, TwistParity, Degenerate };
enum class BerClass { Invertible, Noninvertible, Nonexistent };
enum class ClassifyMode { PaperLiteral, Derivative };
enum class MatrixProjection { S, T, D, SCf, TPt };
// Shape sets of tangent matrices: P_A (any), P_S (lower-left zero),
// P_T (upper-left zero), P_D (left column zero).
enum class MatrixSet { A, S, T, D };

const char* to_string(ReductionKind k);
const char* to_string(BerClass c);
const char* to_string(ClassifyMode m);
const char* to_string(MatrixSet s);

// (f(z) + th chi(z), psi(z) + th g(z)) at a point.
std::pair<GrassmannNumber, GrassmannNumber> apply(const SATransform& t,
                                                  const GrassmannNumber& z,
                                                  const GrassmannNumber& th);

// outer after inner (inner acts first).
SATransform compose(const SATransform& outer, const SATransform& inner);

// F(z~, theta~) for F on the target of t.
Superfield pullback(const Superfield& f, const SATransform& t);
TangentMatrix pullback(const TangentMatrix& m, const SATransform& t);

// ((dz~ - dtheta~ theta~, dtheta~), (Dz~ - Dtheta~ theta~, Dtheta~)).
TangentMatrix tangent_matrix(const SATransform& t);

struct ReductionConditions {
  Superfield q;       // dz~ - dtheta~ theta~
  Superfield delta;   // Dz~ - Dtheta~ theta~
  Superfield delta0;  // d_theta z~ - d_theta theta~ theta~
};
ReductionConditions reduction_conditions(const SATransform& t);
// Same quantities from the closed component formulas.
ReductionConditions reduction_conditions_from_components(const SATransform& t);

// f'/g + chi psi'/g^2 + theta (chi/g)'.
Superfield berezinian_explicit(const SATransform& t);

BerClass classify_berezinian(const SATransform& t,
                             ClassifyMode mode = ClassifyMode::PaperLiteral);
// Delta = 0 and Q = 0, tested through the component formulas.
bool delta_vanishes(const SATransform& t);
bool q_vanishes(const SATransform& t);
ReductionKind reduction_kind(const SATransform& t);

SATransform build_reduced(const ReducedPair& p);

// (h, phi)_{+1} * (g, psi)_m. The result carries spin m and the integration
// constants of the composite, so build_reduced(star(l, r)) equals
// compose(build_reduced(l), build_reduced(r)).
ReducedPair star(const ReducedPair& left, const ReducedPair& right);

TangentMatrix project_matrix(const SATransform& t, MatrixProjection which);
bool in_set(const TangentMatrix& m, MatrixSet set);

// D theta~; defined even when its body vanishes.
Superfield berezinian_superconformal(const SATransform& t);

struct TwistParityBerezinians {
  Superfield quotient;       // Delta0 dtheta~ / (Dtheta~)^2
  Superfield derivative;     // dDelta0 Delta0 / (2 (Dtheta~)^3)
  Superfield superderived;   // D(Dz~ / Dtheta~)
};
TwistParityBerezinians berezinian_twist_parity(const SATransform& t);

// D(theta~ of outer∘inner) == Dtheta~(inner) * pullback(Dtheta~(outer)).
bool cocycle_standard(const SATransform& outer, const SATransform& inner);
// d(theta~ of scf∘tpt) == dtheta~(tpt) * pullback(Dtheta~(scf)), and the
// composite satisfies Q == 0.
bool cocycle_mixed(const SATransform& scf, const SATransform& tpt);

}  // namespace superconf
