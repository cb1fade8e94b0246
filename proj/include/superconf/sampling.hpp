#pragma once

#include <cstdint>
#include <random>

#include "superconf/transform.hpp"

namespace superconf {

struct SampleParams {
  int generator_count = 4;
  int max_degree = 3;
  int coefficient_bound = 5;
};

enum class TransformKind {
  General,
  GeneralBerExists,   // epsilon(g) not identically zero
  GeneralBerAbsent,   // epsilon(g) identically zero
  Superconformal,
  SuperconformalBerExists,
  TwistParity,
  TwistParityBerExists,
  Degenerate,
};

const char* to_string(TransformKind k);

// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t x);
// Stable FNV-1a hash of a check name.
std::uint64_t stable_hash(const char* text);

// Deterministic instance generator for one (seed, stream) pair. Draws that
// violate a requested precondition are rejected and redrawn; the number of
// rejections is tracked.
class Sampler {
 public:
  Sampler(SampleParams params, std::uint64_t seed, std::uint64_t stream);

  const SampleParams& params() const { return params_; }
  int generator_count() const { return params_.generator_count; }
  std::mt19937_64& rng() { return rng_; }
  long redraws() const { return redraws_; }
  void count_redraw() { ++redraws_; }

  std::uint64_t uniform(std::uint64_t n) { return rng_() % n; }
  bool coin() { return uniform(2) == 1; }

  GrassmannNumber grassmann(Parity parity);
  GaussianRational scalar();
  // Degree uniform in [0, max_degree].
  ComponentFunction component(Parity parity);
  // Even polynomial whose body polynomial is not identically zero.
  ComponentFunction invertible_component();
  // Polynomial with identically zero body.
  ComponentFunction soul_component(Parity parity);
  // Polynomial, or a quotient by an invertible even polynomial when
  // `rational` is set.
  RationalComponent rational(Parity parity, bool rational);
  Superfield superfield(Parity parity, bool rational);

  ReducedPair reduced(Spin spin, bool invertible_g = false);
  ReducedPair degenerate_pair();
  SATransform transform(TransformKind kind);

 private:
  SampleParams params_;
  std::mt19937_64 rng_;
  long redraws_ = 0;
};

// One draw from a fresh Sampler at (seed, stream).
SATransform random_transform(TransformKind kind, const SampleParams& params,
                             std::uint64_t seed, std::uint64_t stream);

}  // namespace superconf
