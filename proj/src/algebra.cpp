#include "decim/algebra.hpp"

#include <stdexcept>

namespace decim {

namespace {

constexpr std::size_t kVarCount = 5;
constexpr std::size_t kZ = static_cast<std::size_t>(Var::Z);

MultiPoly mono(std::uint32_t x1, std::uint32_t x2, std::uint32_t y1, std::uint32_t y2,
               std::uint32_t z, int coeff = 1) {
  return MultiPoly::monomial(Exponents{x1, x2, y1, y2, z}, Rational(coeff));
}

MultiPoly one() { return MultiPoly::constant(1); }

MultiPoly truncate_z(const MultiPoly& p, std::uint32_t z_max) {
  MultiPoly out;
  for (const auto& [exps, coeff] : p.terms()) {
    if (exps[Var::Z] <= z_max) out += MultiPoly::monomial(exps, coeff);
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(Rational value) {
  MultiPoly p;
  p.add_term(Exponents{}, value);
  return p;
}

MultiPoly MultiPoly::variable(Var v) {
  Exponents exps;
  exps.e[static_cast<std::size_t>(v)] = 1;
  return monomial(exps, Rational(1));
}

MultiPoly MultiPoly::monomial(Exponents exps, Rational coeff) {
  MultiPoly p;
  p.add_term(exps, coeff);
  return p;
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (coeff == 0) return;
  const auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, -coeff);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  for (const auto& [le, lc] : lhs.terms_) {
    for (const auto& [re, rc] : rhs.terms_) {
      Exponents exps;
      for (std::size_t i = 0; i < kVarCount; ++i) exps.e[i] = le.e[i] + re.e[i];
      out.add_term(exps, lc * rc);
    }
  }
  return out;
}

MultiPoly operator*(const MultiPoly& lhs, const Rational& scalar) {
  MultiPoly out;
  if (scalar == 0) return out;
  for (const auto& [exps, coeff] : lhs.terms_) out.add_term(exps, coeff * scalar);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [exps, coeff] : terms_) out.add_term(exps, -coeff);
  return out;
}

MultiPoly MultiPoly::pow(std::uint32_t n) const {
  MultiPoly result = MultiPoly::constant(1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    if (n >>= 1) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(Var v) const {
  const std::size_t idx = static_cast<std::size_t>(v);
  MultiPoly out;
  for (const auto& [exps, coeff] : terms_) {
    if (exps.e[idx] == 0) continue;
    Exponents d = exps;
    --d.e[idx];
    out.add_term(d, coeff * Rational(exps.e[idx]));
  }
  return out;
}

MultiPoly MultiPoly::euler(VarBlock block) const {
  const std::size_t first = block == VarBlock::X ? 0 : 2;
  MultiPoly out;
  for (const auto& [exps, coeff] : terms_) {
    const std::uint32_t block_degree = exps.e[first] + exps.e[first + 1];
    if (block_degree == 0) continue;
    out.add_term(exps, coeff * Rational(block_degree));
  }
  return out;
}

std::vector<Rational> MultiPoly::substitute_xy(const std::array<Rational, 4>& values) const {
  std::vector<Rational> out;
  for (const auto& [exps, coeff] : terms_) {
    Rational value = coeff;
    for (std::size_t i = 0; i < 4; ++i) value *= rational_pow(values[i], exps.e[i]);
    if (value == 0) continue;
    const std::uint32_t zdeg = exps.e[kZ];
    if (out.size() <= zdeg) out.resize(zdeg + 1, Rational(0));
    out[zdeg] += value;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr std::array<const char*, 5> kNames{"x1", "x2", "y1", "y2", "z"};
  std::string out;
  for (const auto& [exps, coeff] : terms_) {
    std::string term;
    bool has_vars = false;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (exps.e[i] == 0) continue;
      if (has_vars) term += '*';
      term += kNames[i];
      if (exps.e[i] > 1) term += '^' + std::to_string(exps.e[i]);
      has_vars = true;
    }
    const Rational magnitude = coeff < 0 ? Rational(-coeff) : coeff;
    std::string number;
    if (!has_vars || magnitude != 1) {
      number = format_rational(magnitude);
      if (has_vars) number += '*';
    }
    if (out.empty()) {
      if (coeff < 0) out += '-';
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    out += number + term;
  }
  return out;
}

MultiRational::MultiRational(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
}

MultiRational operator+(const MultiRational& lhs, const MultiRational& rhs) {
  return MultiRational(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

MultiRational operator*(const MultiRational& lhs, const MultiRational& rhs) {
  return MultiRational(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
}

MultiRational MultiRational::operator-() const { return MultiRational(-num_, den_); }

MultiRational MultiRational::euler(VarBlock block) const {
  return MultiRational(num_.euler(block) * den_ - num_ * den_.euler(block), den_ * den_);
}

bool MultiRational::semantically_equal(const MultiRational& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

UniSeries::UniSeries(std::vector<Rational> num, std::vector<Rational> den)
    : num_(std::move(num)), den_(std::move(den)) {
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  while (!den_.empty() && den_.back() == 0) den_.pop_back();
  if (den_.empty()) throw std::domain_error("zero denominator");
  if (den_[0] == 0) throw std::domain_error("no power series at this point");
  if (den_[0] != 1) {
    const Rational scale = den_[0];
    for (Rational& c : num_) c /= scale;
    for (Rational& c : den_) c /= scale;
  }
}

void UniSeries::extend_coefficients(std::vector<Rational>& cache, std::uint64_t up_to) const {
  for (std::uint64_t n = cache.size(); n <= up_to; ++n) {
    Rational c = n < num_.size() ? num_[n] : Rational(0);
    const std::uint64_t max_k = std::min<std::uint64_t>(n, den_.size() - 1);
    for (std::uint64_t k = 1; k <= max_k; ++k) c -= den_[k] * cache[n - k];
    cache.push_back(std::move(c));
  }
}

std::vector<Rational> UniSeries::coefficients(std::uint64_t up_to) const {
  std::vector<Rational> out;
  out.reserve(up_to + 1);
  extend_coefficients(out, up_to);
  return out;
}

Rational UniSeries::coefficient(std::uint64_t n) const { return coefficients(n).back(); }

UniSeries UniSeries::operator*(const UniSeries& other) const {
  return UniSeries(convolve(num_, other.num_), convolve(den_, other.den_));
}

bool UniSeries::semantically_equal(const UniSeries& other) const {
  return convolve(num_, other.den_) == convolve(other.num_, den_);
}

std::vector<Rational> convolve(const std::vector<Rational>& lhs,
                               const std::vector<Rational>& rhs) {
  if (lhs.empty() || rhs.empty()) return {};
  std::vector<Rational> out(lhs.size() + rhs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

MultiRational g_omega(OmegaClass cls) {
  // Shared denominator factors of the closed forms.
  const MultiPoly geo_x2 = one() - mono(0, 1, 0, 0, 2);            // 1 - x2 z^2
  const MultiPoly geo_x2y2 = one() - mono(0, 1, 0, 1, 2);          // 1 - x2 y2 z^2
  const MultiPoly geo_free = one() - mono(1, 0, 0, 0, 1) - mono(0, 1, 0, 0, 2);
  switch (cls) {
    case OmegaClass::Omega1:
      return MultiRational(mono(1, 0, 0, 0, 1), geo_x2 * geo_x2y2);
    case OmegaClass::Omega2:
      return MultiRational(mono(2, 0, 0, 0, 2), geo_free * geo_x2 * geo_x2y2);
    case OmegaClass::Omega3:
      return MultiRational(mono(1, 1, 0, 0, 3) * (one() + mono(0, 0, 1, 0, 0) - mono(0, 1, 0, 1, 2)),
                           geo_free * geo_x2 * geo_x2y2);
    case OmegaClass::Omega4:
      // Cyclic parts 2^m at modulus 2m, plus the odd-m modulus-m family.
      return MultiRational(mono(0, 1, 0, 0, 2) * (one() + mono(0, 0, 1, 0, 0) - mono(0, 1, 0, 1, 2)),
                           geo_x2 * geo_x2y2) +
             MultiRational(mono(0, 1, 0, 0, 1), one() - mono(0, 2, 0, 0, 2));
  }
  throw std::logic_error("unknown class");
}

MultiRational g_master() {
  const MultiPoly num = mono(1, 0, 0, 0, 1) + mono(0, 1, 0, 0, 2) + mono(0, 1, 1, 0, 2) -
                        mono(0, 2, 0, 1, 4);
  const MultiPoly den = (one() - mono(0, 1, 0, 1, 2)) *
                        (one() - mono(1, 0, 0, 0, 1) - mono(0, 1, 0, 0, 2));
  return MultiRational(num, den) +
         MultiRational(mono(0, 1, 0, 0, 1), one() - mono(0, 2, 0, 0, 2));
}

MultiRational g_master_class_sum() {
  return g_omega(OmegaClass::Omega1) + g_omega(OmegaClass::Omega2) +
         g_omega(OmegaClass::Omega3) + g_omega(OmegaClass::Omega4);
}

UniSeries evaluate(const MultiRational& f, std::pair<Rational, Rational> x,
                   std::pair<Rational, Rational> y) {
  const std::array<Rational, 4> values{x.first, x.second, y.first, y.second};
  return UniSeries(f.num().substitute_xy(values), f.den().substitute_xy(values));
}

std::map<Exponents, Rational> expand_z_truncated(const MultiRational& f, std::uint32_t z_max) {
  const Rational d0 = f.den().coefficient(Exponents{});
  if (d0 == 0) throw std::domain_error("no power series at this point");

  // den = d0 (1 - r) with every term of r carrying a positive z power,
  // so 1/den = (1 + r + r^2 + ...) / d0 terminates under z truncation.
  MultiPoly r = MultiPoly::constant(d0) - f.den();
  r = r * Rational(Rational(1) / d0);
  for (const auto& [exps, coeff] : r.terms()) {
    if (exps[Var::Z] == 0)
      throw std::domain_error("expansion needs z-positive denominator terms");
  }

  MultiPoly inverse = one();
  MultiPoly power = one();
  for (std::uint32_t k = 1; k <= z_max; ++k) {
    power = truncate_z(power * r, z_max);
    if (power.is_zero()) break;
    inverse += power;
  }

  MultiPoly series = truncate_z(f.num() * inverse, z_max) * Rational(Rational(1) / d0);
  return series.terms();
}

}  // namespace decim
