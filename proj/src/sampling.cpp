#include "superconf/sampling.hpp"

namespace superconf {

namespace {

constexpr int kMaxRedraws = 1000;

}  // namespace

const char* to_string(TransformKind k) {
  switch (k) {
    case TransformKind::General:
      return "general";
    case TransformKind::GeneralBerExists:
      return "general-ber-exists";
    case TransformKind::GeneralBerAbsent:
      return "general-ber-absent";
    case TransformKind::Superconformal:
      return "scf";
    case TransformKind::SuperconformalBerExists:
      return "scf-ber-exists";
    case TransformKind::TwistParity:
      return "tpt";
    case TransformKind::TwistParityBerExists:
      return "tpt-ber-exists";
    case TransformKind::Degenerate:
      return "deg";
  }
  return "?";
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stable_hash(const char* text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char* p = text; *p != '\0'; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Sampler::Sampler(SampleParams params, std::uint64_t seed, std::uint64_t stream)
    : params_(params), rng_(mix_seed(seed ^ mix_seed(stream))) {}

GrassmannNumber Sampler::grassmann(Parity parity) {
  return random_grassmann(parity, params_.generator_count, rng_,
                          params_.coefficient_bound);
}

GaussianRational Sampler::scalar() {
  return grassmann(Parity::Even).body();
}

ComponentFunction Sampler::component(Parity parity) {
  const int degree =
      static_cast<int>(uniform(static_cast<std::uint64_t>(params_.max_degree) + 1));
  std::vector<GrassmannNumber> coeffs;
  coeffs.reserve(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) coeffs.push_back(grassmann(parity));
  return {params_.generator_count, parity, std::move(coeffs)};
}

ComponentFunction Sampler::invertible_component() {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    ComponentFunction p = component(Parity::Even);
    if (!p.body_is_zero()) return p;
    ++redraws_;
  }
  // Practically unreachable; keeps the precondition unconditional.
  return ComponentFunction::constant(
      GrassmannNumber(params_.generator_count, GaussianRational(1)), Parity::Even);
}

ComponentFunction Sampler::soul_component(Parity parity) {
  return component(parity).soul_polynomial();
}

RationalComponent Sampler::rational(Parity parity, bool rational) {
  ComponentFunction num = component(parity);
  if (!rational) return RationalComponent(std::move(num));
  return {std::move(num), invertible_component()};
}

Superfield Sampler::superfield(Parity parity, bool rational) {
  RationalComponent a = this->rational(parity, rational);
  RationalComponent b = this->rational(flip(parity), rational);
  return {std::move(a), std::move(b)};
}

ReducedPair Sampler::reduced(Spin spin, bool invertible_g) {
  ComponentFunction g = invertible_g ? invertible_component() : component(Parity::Even);
  ComponentFunction psi = component(Parity::Odd);
  GrassmannNumber f0 = grassmann(Parity::Even);
  GrassmannNumber chi0 = spin == Spin::TwistParity
                             ? grassmann(Parity::Odd)
                             : GrassmannNumber(params_.generator_count);
  return {std::move(g), std::move(psi), spin, std::move(f0), std::move(chi0)};
}

ReducedPair Sampler::degenerate_pair() {
  const int L = params_.generator_count;
  ComponentFunction psi = component(Parity::Odd);
  GrassmannNumber f0 = grassmann(Parity::Even);
  return {ComponentFunction(L, Parity::Even), std::move(psi), Spin::Superconformal,
          std::move(f0), GrassmannNumber(L)};
}

SATransform Sampler::transform(TransformKind kind) {
  switch (kind) {
    case TransformKind::General:
    case TransformKind::GeneralBerExists:
    case TransformKind::GeneralBerAbsent: {
      ComponentFunction f = component(Parity::Even);
      ComponentFunction chi = component(Parity::Odd);
      ComponentFunction psi = component(Parity::Odd);
      ComponentFunction g = kind == TransformKind::GeneralBerExists
                                ? invertible_component()
                            : kind == TransformKind::GeneralBerAbsent
                                ? soul_component(Parity::Even)
                                : component(Parity::Even);
      return {std::move(f), std::move(chi), std::move(psi), std::move(g)};
    }
    case TransformKind::Superconformal:
      return build_reduced(reduced(Spin::Superconformal));
    case TransformKind::SuperconformalBerExists:
      return build_reduced(reduced(Spin::Superconformal, true));
    case TransformKind::TwistParity:
      return build_reduced(reduced(Spin::TwistParity));
    case TransformKind::TwistParityBerExists:
      return build_reduced(reduced(Spin::TwistParity, true));
    case TransformKind::Degenerate:
      return build_reduced(degenerate_pair());
  }
  return SATransform::identity(params_.generator_count);
}

SATransform random_transform(TransformKind kind, const SampleParams& params,
                             std::uint64_t seed, std::uint64_t stream) {
  Sampler sampler(params, seed, stream);
  return sampler.transform(kind);
}

}  // namespace superconf
