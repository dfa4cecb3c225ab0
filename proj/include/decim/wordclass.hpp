#pragma once

#include "decim/decimation.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace decim {

// The four regular-pattern classes partitioning nonempty words over {1,2}:
//   Omega1 = 2*1,  Omega2 = {1,2}*1 2*1,  Omega3 = {1,2}*1 2 2*,  Omega4 = 2 2*.
enum class OmegaClass { Omega1, Omega2, Omega3, Omega4 };

std::string_view omega_name(OmegaClass cls);

// Number of (cyclic part, prefix) configurations with fixed letter counts:
// n1/n2 ones and twos in the cyclic part, m1/m2 in the prefix, modulus t.
struct ConfigCount {
  std::uint64_t n1 = 0, n2 = 0, m1 = 0, m2 = 0;
  std::uint64_t modulus = 0;
  std::uint64_t count = 0;
};

// (n1, n2, m1, m2, t); matches the exponent layout x1 x2 y1 y2 z.
using ConfigKey = std::array<std::uint32_t, 5>;

// All t >= 1 with t | w(a) and the partial-sum residues
// 0, a_0, a_0+a_1, ..., a_0+...+a_{l-2} pairwise distinct mod t. Ascending.
std::vector<std::uint64_t> admissible_moduli(const StepWord& cyclic_part);

// The full prefix set B(a) at an admissible modulus, including the empty
// word. b belongs iff the prefix residues -b_{l-1}, -b_{l-1}-b_{l-2}, ...
// and the partial-sum residues of `a` are pairwise distinct mod t; this is
// exactly the condition that b a a a ... has preperiod l(b) and period l(a).
// Ordered by length, then lexicographically.
std::vector<StepWord> prefix_set(const StepWord& cyclic_part, std::uint64_t modulus);

OmegaClass classify(const StepWord& cyclic_part);

// Brute-force count: enumerates every word with the given letter counts and
// every prefix at the given modulus. Correctness oracle, not a fast path.
ConfigCount count_configs(std::uint64_t n1, std::uint64_t n2, std::uint64_t m1,
                          std::uint64_t m2, std::uint64_t modulus);

// Every configuration with modulus <= max_modulus, bucketed by letter counts.
// Optionally restricted to one class of cyclic parts. Complete because an
// admissible modulus t forces l(a) <= t.
std::map<ConfigKey, std::uint64_t> enumerate_configs(
    std::uint32_t max_modulus, std::optional<OmegaClass> only_class = std::nullopt);

}  // namespace decim
