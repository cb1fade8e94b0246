#include "superconf/supermatrix.hpp"

#include "superconf/error.hpp"

namespace superconf {

namespace {

bool has_parity(const Superfield& f, Parity p) {
  return f.is_zero() || f.parity() == p;
}

}  // namespace

TangentMatrix TangentMatrix::identity(int generator_count) {
  const Superfield one =
      Superfield::even_constant(GrassmannNumber(generator_count, GaussianRational(1)));
  const Superfield odd_zero(generator_count, Parity::Odd);
  return {one, odd_zero, odd_zero, one};
}

bool TangentMatrix::has_block_parity() const {
  return has_parity(a, Parity::Even) && has_parity(b, Parity::Odd) &&
         has_parity(c, Parity::Odd) && has_parity(d, Parity::Even);
}

std::string TangentMatrix::to_string() const {
  return "((" + a.to_string() + ", " + b.to_string() + "), (" + c.to_string() +
         ", " + d.to_string() + "))";
}

TangentMatrix operator*(const TangentMatrix& m, const TangentMatrix& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Superfield berezinian(const TangentMatrix& m) {
  if (m.d.a().parity() != Parity::Even || m.d.a().body_is_zero()) {
    throw Error(Errc::BerezinianDoesNotExist,
                "Berezinian does not exist: lower-right entry is not invertible");
  }
  const Superfield d_inv = reciprocal(m.d);
  return m.a * d_inv + m.c * m.b * d_inv * d_inv;
}

DeterminantSplit determinant_split(const GaussianRational& a,
                                   const GaussianRational& b,
                                   const GaussianRational& c,
                                   const GaussianRational& d) {
  return {a * d - b * c, a * d - GaussianRational(0) * GaussianRational(0),
          GaussianRational(0) * GaussianRational(0) - b * c};
}

}  // namespace superconf
