#include "superconf/component_function.hpp"

#include <algorithm>

#include "superconf/error.hpp"

namespace superconf {

namespace {

bool matches(const GrassmannNumber& c, Parity parity) {
  return parity == Parity::Even ? c.is_even() : c.is_odd();
}

}  // namespace

ComponentFunction::ComponentFunction(int generator_count, Parity parity)
    : generator_count_(generator_count), parity_(parity) {
  if (parity == Parity::Mixed) {
    throw Error(Errc::Parity, "parity: component functions are homogeneous");
  }
}

ComponentFunction::ComponentFunction(int generator_count, Parity parity,
                                     std::vector<GrassmannNumber> coeffs)
    : ComponentFunction(generator_count, parity) {
  for (const GrassmannNumber& c : coeffs) {
    if (c.generator_count() != generator_count) {
      throw Error(Errc::AlgebraMismatch, "algebra mismatch in coefficient");
    }
    if (!matches(c, parity)) {
      throw Error(Errc::Parity, std::string("parity: coefficient ") +
                                    c.to_string() + " is not " +
                                    superconf::to_string(parity));
    }
  }
  coeffs_ = std::move(coeffs);
  trim();
}

ComponentFunction ComponentFunction::constant(const GrassmannNumber& c,
                                              Parity parity) {
  return {c.generator_count(), parity, {c}};
}

ComponentFunction ComponentFunction::identity(int generator_count) {
  return {generator_count,
          Parity::Even,
          {GrassmannNumber(generator_count),
           GrassmannNumber(generator_count, GaussianRational(1))}};
}

ComponentFunction ComponentFunction::monomial(const GrassmannNumber& c, int k,
                                              Parity parity) {
  std::vector<GrassmannNumber> coeffs(static_cast<std::size_t>(k) + 1,
                                      GrassmannNumber(c.generator_count()));
  coeffs.back() = c;
  return {c.generator_count(), parity, std::move(coeffs)};
}

void ComponentFunction::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GrassmannNumber ComponentFunction::coefficient(int k) const {
  if (k < 0 || k > degree()) return GrassmannNumber(generator_count_);
  return coeffs_[static_cast<std::size_t>(k)];
}

bool ComponentFunction::body_is_zero() const {
  for (const GrassmannNumber& c : coeffs_) {
    if (!c.body().is_zero()) return false;
  }
  return true;
}

ComponentFunction ComponentFunction::body_polynomial() const {
  ComponentFunction out(generator_count_, parity_);
  out.coeffs_.reserve(coeffs_.size());
  for (const GrassmannNumber& c : coeffs_) {
    out.coeffs_.emplace_back(generator_count_, c.body());
  }
  out.trim();
  return out;
}

ComponentFunction ComponentFunction::soul_polynomial() const {
  ComponentFunction out(generator_count_, parity_);
  out.coeffs_.reserve(coeffs_.size());
  for (const GrassmannNumber& c : coeffs_) out.coeffs_.push_back(c.soul());
  out.trim();
  return out;
}

bool ComponentFunction::is_body_only() const {
  for (const GrassmannNumber& c : coeffs_) {
    const auto terms = c.terms();
    if (terms.size() > 1 || (terms.size() == 1 && terms[0].mask != 0)) {
      return false;
    }
  }
  return true;
}

ComponentFunction ComponentFunction::derivative() const {
  ComponentFunction out(generator_count_, parity_);
  if (coeffs_.size() <= 1) return out;
  out.coeffs_.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.coeffs_.push_back(coeffs_[k] * GaussianRational(static_cast<long>(k)));
  }
  out.trim();
  return out;
}

ComponentFunction ComponentFunction::antiderivative(
    const GrassmannNumber& c0) const {
  if (c0.generator_count() != generator_count_) {
    throw Error(Errc::AlgebraMismatch, "algebra mismatch in integration constant");
  }
  if (!matches(c0, parity_)) {
    throw Error(Errc::Parity, "parity: integration constant does not match");
  }
  ComponentFunction out(generator_count_, parity_);
  out.coeffs_.reserve(coeffs_.size() + 1);
  out.coeffs_.push_back(c0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out.coeffs_.push_back(coeffs_[k] *
                          GaussianRational(mpq_class(1, static_cast<long>(k + 1))));
  }
  out.trim();
  return out;
}

ComponentFunction ComponentFunction::compose(
    const ComponentFunction& inner) const {
  if (inner.parity_ != Parity::Even && !inner.is_zero()) {
    throw Error(Errc::CompositionArgument,
                "composition requires even argument");
  }
  check_compatible(inner);
  ComponentFunction out(generator_count_, parity_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out = out * inner;
    out.parity_ = parity_;
    out += constant(*it, parity_);
  }
  return out;
}

GrassmannNumber ComponentFunction::evaluate(const GrassmannNumber& z) const {
  if (!z.is_even()) {
    throw Error(Errc::CompositionArgument, "composition requires even argument");
  }
  if (z.generator_count() != generator_count_) {
    throw Error(Errc::AlgebraMismatch, "algebra mismatch in evaluation point");
  }
  GrassmannNumber acc(generator_count_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z;
    acc += *it;
  }
  return acc;
}

ComponentFunction ComponentFunction::grade_involution() const {
  ComponentFunction out(*this);
  for (GrassmannNumber& c : out.coeffs_) c = c.grade_involution();
  return out;
}

ComponentFunction ComponentFunction::operator-() const {
  ComponentFunction out(*this);
  for (GrassmannNumber& c : out.coeffs_) c = -c;
  return out;
}

void ComponentFunction::check_compatible(const ComponentFunction& o) const {
  if (generator_count_ != o.generator_count_) {
    throw Error(Errc::AlgebraMismatch,
                "algebra mismatch: L=" + std::to_string(generator_count_) +
                    " vs L=" + std::to_string(o.generator_count_));
  }
}

void ComponentFunction::add_scaled(const ComponentFunction& o, bool subtract) {
  check_compatible(o);
  if (o.is_zero()) return;
  if (parity_ != o.parity_) {
    if (!is_zero()) {
      throw Error(Errc::Parity, "parity: adding even and odd component functions");
    }
    parity_ = o.parity_;
  }
  if (coeffs_.size() < o.coeffs_.size()) {
    coeffs_.resize(o.coeffs_.size(), GrassmannNumber(generator_count_));
  }
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    if (subtract) {
      coeffs_[k] -= o.coeffs_[k];
    } else {
      coeffs_[k] += o.coeffs_[k];
    }
  }
  trim();
}

ComponentFunction& ComponentFunction::operator+=(const ComponentFunction& o) {
  add_scaled(o, false);
  return *this;
}

ComponentFunction& ComponentFunction::operator-=(const ComponentFunction& o) {
  add_scaled(o, true);
  return *this;
}

ComponentFunction& ComponentFunction::operator*=(const GaussianRational& s) {
  for (GrassmannNumber& c : coeffs_) c *= s;
  trim();
  return *this;
}

ComponentFunction operator*(const ComponentFunction& a,
                            const ComponentFunction& b) {
  a.check_compatible(b);
  ComponentFunction out(a.generator_count_, a.parity_ ^ b.parity_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t n = a.coeffs_.size();
  const std::size_t m = b.coeffs_.size();
  out.coeffs_.reserve(n + m - 1);
  std::vector<GrassmannNumber::Factors> pairs;
  pairs.reserve(std::min(n, m));
  for (std::size_t k = 0; k + 1 < n + m; ++k) {
    pairs.clear();
    const std::size_t lo = k >= m ? k - m + 1 : 0;
    for (std::size_t i = lo; i < n && i <= k; ++i) {
      pairs.emplace_back(&a.coeffs_[i], &b.coeffs_[k - i]);
    }
    out.coeffs_.push_back(GrassmannNumber::sum_of_products(a.generator_count_, pairs));
  }
  out.trim();
  return out;
}

ComponentFunction operator*(const GrassmannNumber& c,
                            const ComponentFunction& p) {
  const Parity cp = c.is_zero() ? Parity::Even : c.parity();
  if (cp == Parity::Mixed) {
    throw Error(Errc::Parity, "parity: scaling by an inhomogeneous element");
  }
  ComponentFunction out(p.generator_count_, cp ^ p.parity_);
  out.coeffs_.reserve(p.coeffs_.size());
  for (const GrassmannNumber& x : p.coeffs_) out.coeffs_.push_back(c * x);
  out.trim();
  return out;
}

bool operator==(const ComponentFunction& a, const ComponentFunction& b) {
  if (a.generator_count_ != b.generator_count_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.parity_ == b.parity_ && a.coeffs_ == b.coeffs_;
}

std::string ComponentFunction::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k == 1) out += "z";
    if (k > 1) out += "z^" + std::to_string(k);
  }
  return out;
}

}  // namespace superconf
