#pragma once

#include <string>

#include "superconf/superfield.hpp"

namespace superconf {

// 2x2 supermatrix ((a, b), (c, d)) with even diagonal and odd off-diagonal
// entries. Acts on the column (d/dz, D).
struct TangentMatrix {
  Superfield a;
  Superfield b;
  Superfield c;
  Superfield d;

  static TangentMatrix identity(int generator_count);

  int generator_count() const { return a.generator_count(); }
  // Diagonal even, off-diagonal odd. Zero entries qualify for either parity.
  bool has_block_parity() const;

  friend bool operator==(const TangentMatrix&, const TangentMatrix&) = default;
  std::string to_string() const;
};

// Ordinary matrix product with graded entry products, order preserved.
TangentMatrix operator*(const TangentMatrix& m, const TangentMatrix& n);

// a/d + c b/d^2. Throws "Berezinian does not exist" when d is not invertible
// as a function.
Superfield berezinian(const TangentMatrix& m);

// Determinant of a commuting 2x2 matrix, and its split into the diagonal and
// antidiagonal parts.
struct DeterminantSplit {
  GaussianRational full;
  GaussianRational diagonal;
  GaussianRational antidiagonal;
};
DeterminantSplit determinant_split(const GaussianRational& a,
                                   const GaussianRational& b,
                                   const GaussianRational& c,
                                   const GaussianRational& d);

}  // namespace superconf
