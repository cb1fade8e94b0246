#include "superconf/grassmann.hpp"

#include <algorithm>
#include <bit>

#include "superconf/error.hpp"

namespace superconf {

namespace {

bool odd_mask(Mask m) { return (std::popcount(m) & 1) != 0; }

// Dense scratch accumulator indexed by mask. Entries stay allocated between
// uses; only touched entries are reset.
class Accumulator {
 public:
  void reset(int generator_count) {
    const std::size_t size = std::size_t{1} << generator_count;
    if (slots_.size() < size) {
      slots_.resize(size);
      used_.resize(size, false);
    }
    for (Mask m : touched_) used_[m] = false;
    touched_.clear();
  }

  GaussianRational& slot(Mask m) {
    if (!used_[m]) {
      used_[m] = true;
      slots_[m] = GaussianRational();
      touched_.push_back(m);
    }
    return slots_[m];
  }

  std::vector<GrassmannNumber::Term> drain() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<GrassmannNumber::Term> out;
    out.reserve(touched_.size());
    for (Mask m : touched_) {
      used_[m] = false;
      if (!slots_[m].is_zero()) out.push_back({m, slots_[m]});
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<GaussianRational> slots_;
  std::vector<bool> used_;
  std::vector<Mask> touched_;
};

Accumulator& scratch() {
  thread_local Accumulator acc;
  return acc;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

const char* to_string(Parity p) {
  switch (p) {
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
    case Parity::Mixed:
      return "mixed";
  }
  return "?";
}

int reorder_sign(Mask s, Mask t) {
  int swaps = 0;
  for (Mask rest = t; rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    swaps += std::popcount(s >> (bit + 1));
  }
  return (swaps & 1) != 0 ? -1 : 1;
}

GrassmannNumber::GrassmannNumber(int generator_count)
    : generator_count_(generator_count) {
  if (generator_count < 0 || generator_count > kMaxGenerators) {
    throw Error(Errc::InvalidConfig, "generator count out of range");
  }
}

GrassmannNumber::GrassmannNumber(int generator_count, GaussianRational scalar)
    : GrassmannNumber(generator_count) {
  if (!scalar.is_zero()) terms_.push_back({0, std::move(scalar)});
}

GrassmannNumber GrassmannNumber::from_terms(int generator_count,
                                            std::vector<Term> terms) {
  GrassmannNumber out(generator_count);
  const Mask limit = Mask{1} << generator_count;
  for (const Term& t : terms) {
    if (t.mask >= limit) {
      throw Error(Errc::AlgebraMismatch,
                  "algebra mismatch: mask " + std::to_string(t.mask) +
                      " uses generators beyond L=" +
                      std::to_string(generator_count));
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.mask < b.mask; });
  for (Term& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mask == t.mask) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

GrassmannNumber GrassmannNumber::generator(int generator_count, int k) {
  if (k < 1 || k > generator_count) {
    throw Error(Errc::AlgebraMismatch,
                "algebra mismatch: generator index out of range");
  }
  GrassmannNumber out(generator_count);
  out.terms_.push_back({Mask{1} << (k - 1), GaussianRational(1)});
  return out;
}

GaussianRational GrassmannNumber::body() const {
  if (!terms_.empty() && terms_.front().mask == 0) return terms_.front().coeff;
  return {};
}

GrassmannNumber GrassmannNumber::soul() const {
  GrassmannNumber out(generator_count_);
  for (const Term& t : terms_) {
    if (t.mask != 0) out.terms_.push_back(t);
  }
  return out;
}

bool GrassmannNumber::is_even() const {
  return std::none_of(terms_.begin(), terms_.end(),
                      [](const Term& t) { return odd_mask(t.mask); });
}

bool GrassmannNumber::is_odd() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return odd_mask(t.mask); });
}

Parity GrassmannNumber::parity() const {
  if (is_even()) return Parity::Even;
  if (is_odd()) return Parity::Odd;
  return Parity::Mixed;
}

GrassmannNumber GrassmannNumber::grade_involution() const {
  GrassmannNumber out(*this);
  for (Term& t : out.terms_) {
    if (odd_mask(t.mask)) t.coeff = -t.coeff;
  }
  return out;
}

GrassmannNumber GrassmannNumber::even_part() const {
  GrassmannNumber out(generator_count_);
  for (const Term& t : terms_) {
    if (!odd_mask(t.mask)) out.terms_.push_back(t);
  }
  return out;
}

GrassmannNumber GrassmannNumber::odd_part() const {
  GrassmannNumber out(generator_count_);
  for (const Term& t : terms_) {
    if (odd_mask(t.mask)) out.terms_.push_back(t);
  }
  return out;
}

GrassmannNumber GrassmannNumber::operator-() const {
  GrassmannNumber out(*this);
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

void GrassmannNumber::check_same_algebra(const GrassmannNumber& o) const {
  if (generator_count_ != o.generator_count_) {
    throw Error(Errc::AlgebraMismatch,
                "algebra mismatch: L=" + std::to_string(generator_count_) +
                    " vs L=" + std::to_string(o.generator_count_));
  }
}

void GrassmannNumber::merge(const GrassmannNumber& o, bool subtract) {
  check_same_algebra(o);
  if (o.terms_.empty()) return;
  if (&o == this) {
    const GrassmannNumber copy(o);
    merge(copy, subtract);
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mask < b->mask)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mask < a->mask) {
      out.push_back({b->mask, subtract ? -b->coeff : b->coeff});
      ++b;
    } else {
      if (subtract) {
        a->coeff -= b->coeff;
      } else {
        a->coeff += b->coeff;
      }
      if (!a->coeff.is_zero()) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

GrassmannNumber& GrassmannNumber::operator+=(const GrassmannNumber& o) {
  merge(o, false);
  return *this;
}

GrassmannNumber& GrassmannNumber::operator-=(const GrassmannNumber& o) {
  merge(o, true);
  return *this;
}

GrassmannNumber& GrassmannNumber::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= s;
  return *this;
}

void GrassmannNumber::add_product(const GrassmannNumber& a,
                                  const GrassmannNumber& b) {
  check_same_algebra(a);
  check_same_algebra(b);
  if (a.terms_.empty() || b.terms_.empty()) return;
  Accumulator& acc = scratch();
  acc.reset(generator_count_);
  for (const Term& t : terms_) acc.slot(t.mask) += t.coeff;
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) {
      if ((x.mask & y.mask) != 0) continue;
      GaussianRational& slot = acc.slot(x.mask | y.mask);
      if (reorder_sign(x.mask, y.mask) > 0) {
        slot.add_product(x.coeff, y.coeff);
      } else {
        slot.sub_product(x.coeff, y.coeff);
      }
    }
  }
  terms_ = acc.drain();
}

GrassmannNumber GrassmannNumber::sum_of_products(int generator_count,
                                                 std::span<const Factors> pairs) {
  GrassmannNumber out(generator_count);
  Accumulator& acc = scratch();
  acc.reset(generator_count);
  for (const auto& [a, b] : pairs) {
    out.check_same_algebra(*a);
    out.check_same_algebra(*b);
    for (const Term& x : a->terms_) {
      for (const Term& y : b->terms_) {
        if ((x.mask & y.mask) != 0) continue;
        GaussianRational& slot = acc.slot(x.mask | y.mask);
        if (reorder_sign(x.mask, y.mask) > 0) {
          slot.add_product(x.coeff, y.coeff);
        } else {
          slot.sub_product(x.coeff, y.coeff);
        }
      }
    }
  }
  out.terms_ = acc.drain();
  return out;
}

GrassmannNumber operator*(const GrassmannNumber& a, const GrassmannNumber& b) {
  a.check_same_algebra(b);
  GrassmannNumber out(a.generator_count_);
  out.add_product(a, b);
  return out;
}

bool operator==(const GrassmannNumber& a, const GrassmannNumber& b) {
  return a.generator_count_ == b.generator_count_ && a.terms_ == b.terms_;
}

std::string GrassmannNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    std::string c = t.coeff.to_string();
    const bool compound = !t.coeff.is_real() && !t.coeff.re_part().is_zero();
    if (compound) c = "(" + c + ")";
    if (!out.empty() && c.front() != '-') out += "+";
    if (t.mask == 0) {
      out += c;
      continue;
    }
    if (c == "1") {
      c.clear();
    } else if (c == "-1") {
      c = "-";
    }
    out += c;
    for (int k = 0; k < GrassmannNumber::kMaxGenerators; ++k) {
      if ((t.mask >> k) & 1U) out += "θ" + std::to_string(k + 1);
    }
  }
  return out;
}

GrassmannNumber invert(const GrassmannNumber& x) {
  if (!x.is_even()) throw Error(Errc::Parity, "parity: an odd element is not invertible");
  const GaussianRational body = x.body();
  if (body.is_zero()) {
    throw Error(Errc::NotInvertible, "not invertible: zero body");
  }
  const GaussianRational body_inv = body.inverse();
  // ratio = -soul/body is nilpotent of order <= L/2 + 1.
  const GrassmannNumber ratio = x.soul() * (-body_inv);
  GrassmannNumber sum(x.generator_count(), GaussianRational(1));
  GrassmannNumber power = sum;
  for (int k = 1; k <= x.generator_count(); ++k) {
    power = power * ratio;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * body_inv;
}

std::pair<GrassmannNumber, GrassmannNumber> body_soul(const GrassmannNumber& x) {
  return {GrassmannNumber(x.generator_count(), x.body()), x.soul()};
}

GrassmannNumber random_grassmann(Parity parity, int generator_count,
                                 std::mt19937_64& rng, int bound) {
  if (parity == Parity::Mixed) {
    return random_grassmann(Parity::Even, generator_count, rng, bound) +
           random_grassmann(Parity::Odd, generator_count, rng, bound);
  }
  if (bound < 1) throw Error(Errc::InvalidConfig, "coefficient bound must be >= 1");
  const bool want_odd = parity == Parity::Odd;
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  std::vector<GrassmannNumber::Term> terms;
  const Mask limit = Mask{1} << generator_count;
  for (Mask m = 0; m < limit; ++m) {
    if (odd_mask(m) != want_odd) continue;
    // Bodies are drawn more often than soul terms.
    if (draw(rng, 4) >= (m == 0 ? 3U : 2U)) continue;
    const long re_num = static_cast<long>(draw(rng, span)) - bound;
    const long re_den = static_cast<long>(draw(rng, bound)) + 1;
    long im_num = 0;
    long im_den = 1;
    if (draw(rng, 4) == 0) {
      im_num = static_cast<long>(draw(rng, span)) - bound;
      im_den = static_cast<long>(draw(rng, bound)) + 1;
    }
    terms.push_back(
        {m, GaussianRational::from_parts(re_num, re_den, im_num, im_den)});
  }
  return GrassmannNumber::from_terms(generator_count, std::move(terms));
}

GrassmannNumber random_grassmann(Parity parity, int generator_count,
                                 std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  return random_grassmann(parity, generator_count, rng, bound);
}

}  // namespace superconf
