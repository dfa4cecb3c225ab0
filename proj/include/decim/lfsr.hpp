#pragma once

#include <cstdint>
#include <vector>

#include "decim/decimation.hpp"

namespace decim {

// Polynomial over GF(2) as a coefficient bitmask; bit i is the coefficient
// of x^i, so the degree is the index of the highest set bit.
struct Gf2Poly {
  std::uint64_t mask = 0;

  unsigned degree() const;
  bool constant_term() const { return (mask & 1) != 0; }
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
};

namespace gf2 {

std::uint64_t multiply(std::uint64_t a, std::uint64_t b);
std::uint64_t reduce(std::uint64_t value, std::uint64_t modulus);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

}  // namespace gf2

inline constexpr unsigned kMaxPrimitiveDegree = 24;

// True iff x generates the full multiplicative group mod poly, i.e. the order
// of x is 2^k - 1. That already forces irreducibility, so no separate factor
// test is needed. Degrees 1..24 only.
bool is_primitive(const Gf2Poly& poly);

// Smallest-mask primitive polynomial of the given degree.
Gf2Poly first_primitive(unsigned degree);

struct LfsrSpec {
  Gf2Poly poly;
  std::uint64_t fill = 0;
};

// Fibonacci register: state bit i holds sigma_{t+i}, output is bit 0, and the
// feedback bit is the parity of state AND the nonleading coefficients.
std::vector<int> sigma_stream(const LfsrSpec& spec, std::size_t n);

// Letterwise 0 -> 1, 1 -> 2.
StepWord rueppel_word(const std::vector<int>& bits);

struct RueppelResult {
  unsigned degree = 0;
  std::uint64_t modulus = 0;
  PeriodPair pair;
  std::uint64_t expected_mu = 0;
};

// Self-clocking register over the cycle of T = 2^k - 1 positions: the output
// bit at the current position advances the clock by 1 (bit 0) or 2 (bit 1).
// Reports (lambda, mu) of the resulting state orbit; mu = floor(2T/3) for
// every primitive polynomial and nonzero fill.
RueppelResult rueppel_mu(const Gf2Poly& poly, std::uint64_t fill);

}  // namespace decim
