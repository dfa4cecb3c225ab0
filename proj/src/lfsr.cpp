#include "decim/lfsr.hpp"

#include <bit>
#include <stdexcept>

namespace decim {

unsigned Gf2Poly::degree() const {
  if (mask == 0) throw std::domain_error("zero polynomial");
  return 63u - static_cast<unsigned>(std::countl_zero(mask));
}

namespace gf2 {

std::uint64_t multiply(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  while (b != 0) {
    if (b & 1) out ^= a;
    a <<= 1;
    b >>= 1;
  }
  return out;
}

std::uint64_t reduce(std::uint64_t value, std::uint64_t modulus) {
  const int md = 63 - std::countl_zero(modulus);
  while (true) {
    const int vd = 63 - std::countl_zero(value | 1);
    if (value == 0 || vd < md) return value;
    value ^= modulus << (vd - md);
  }
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  return reduce(multiply(a, b), modulus);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  std::uint64_t result = reduce(1, modulus);
  base = reduce(base, modulus);
  while (exponent != 0) {
    if (exponent & 1) result = mulmod(result, base, modulus);
    base = mulmod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

}  // namespace gf2

bool is_primitive(const Gf2Poly& poly) {
  const unsigned k = poly.degree();
  if (k < 1 || k > kMaxPrimitiveDegree) throw std::domain_error("degree out of supported range");
  const std::uint64_t order = (std::uint64_t{1} << k) - 1;
  if (gf2::powmod(2, order, poly.mask) != 1) return false;

  std::uint64_t n = order;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    if (gf2::powmod(2, order / q, poly.mask) == 1) return false;
  }
  if (n > 1 && gf2::powmod(2, order / n, poly.mask) == 1) return false;
  return true;
}

Gf2Poly first_primitive(unsigned degree) {
  if (degree < 1 || degree > kMaxPrimitiveDegree)
    throw std::domain_error("degree out of supported range");
  const std::uint64_t lead = std::uint64_t{1} << degree;
  for (std::uint64_t low = 1; low < lead; low += 2) {
    const Gf2Poly candidate{lead | low};
    if (is_primitive(candidate)) return candidate;
  }
  throw std::logic_error("no primitive polynomial found");
}

std::vector<int> sigma_stream(const LfsrSpec& spec, std::size_t n) {
  const unsigned k = spec.poly.degree();
  if (!spec.poly.constant_term()) throw std::domain_error("polynomial constant term must be 1");
  if (spec.fill == 0) throw std::domain_error("zero fill");
  const std::uint64_t lead = std::uint64_t{1} << k;
  if (spec.fill >= lead) throw std::invalid_argument("fill wider than the register");

  const std::uint64_t taps = spec.poly.mask & (lead - 1);
  std::uint64_t state = spec.fill;
  std::vector<int> bits;
  bits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    bits.push_back(static_cast<int>(state & 1));
    const std::uint64_t feedback = std::popcount(state & taps) & 1u;
    state = (state >> 1) | (feedback << (k - 1));
  }
  return bits;
}

StepWord rueppel_word(const std::vector<int>& bits) {
  std::vector<Step> steps;
  steps.reserve(bits.size());
  for (const int b : bits) steps.push_back(b == 0 ? 1 : 2);
  return StepWord(std::move(steps));
}

RueppelResult rueppel_mu(const Gf2Poly& poly, std::uint64_t fill) {
  if (!is_primitive(poly)) throw std::domain_error("hypothesis violated");
  const unsigned k = poly.degree();
  const std::uint64_t modulus = (std::uint64_t{1} << k) - 1;
  // The register clocks itself: the bit at the current cycle position picks
  // the step (0 -> 1 clock, 1 -> 2 clocks), so skipped bits never drive a
  // step. Position j holds the j-th output bit for the given fill.
  const StepWord table = rueppel_word(sigma_stream({poly, fill}, modulus));
  const StepWord word = state_driven_word(modulus, table.steps(), 0, modulus);
  RueppelResult result;
  result.degree = k;
  result.modulus = modulus;
  result.pair = lambda_mu(word, modulus);
  result.expected_mu = 2 * modulus / 3;
  return result;
}

}  // namespace decim
