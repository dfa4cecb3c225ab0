#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace decim {

using Step = std::uint64_t;

// Preperiod and period of an eventually periodic sequence.
struct PeriodPair {
  std::uint64_t lambda = 0;
  std::uint64_t mu = 1;
  bool operator==(const PeriodPair&) const = default;
};

// Finite word of decimation steps over {q, 2q} for a declared base q >= 1.
// The plain alphabet {1,2} is base 1.
class StepWord {
 public:
  StepWord() = default;  // empty word, base 1
  explicit StepWord(std::vector<Step> steps, Step base = 1);

  // "2212221" -> letters over {1,2}, base 1.
  static StepWord from_digits(std::string_view text);
  // "3,6,3" -> scaled letters; base inferred as the smallest letter unless given.
  static StepWord from_csv(std::string_view text, Step base = 0);

  const std::vector<Step>& steps() const { return steps_; }
  Step base() const { return base_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  // Digits for base 1, comma-separated integers otherwise.
  std::string to_string() const;

  bool operator==(const StepWord&) const = default;

 private:
  std::vector<Step> steps_;
  Step base_ = 1;
};

// One decimated orbit of the full-cycle generator S -> S+1 (mod T).
// `states` runs from the initial state to the first repeated state inclusive.
struct GeneratorRun {
  std::uint64_t modulus = 1;
  std::uint64_t initial_state = 0;
  std::vector<std::uint64_t> states;
  PeriodPair period_pair;
};

// Lazy letter source: nullopt when exhausted.
using StepSource = std::function<std::optional<Step>()>;

namespace detail {

// Walks prefix-sum residues u_0=0, u_j=(s_0+...+s_{j-1}) mod T and stops at
// the first residue seen twice; lambda = first visit time, mu = gap.
// Guaranteed to stop within T letters (T+1 residues cannot be distinct).
template <typename NextFn>
PeriodPair find_first_repeat(NextFn&& next, std::uint64_t modulus) {
  std::vector<std::int64_t> first_seen(modulus, -1);
  first_seen[0] = 0;
  std::uint64_t residue = 0;
  for (std::uint64_t j = 1; j <= modulus; ++j) {
    std::optional<Step> step = next();
    if (!step) throw std::domain_error("insufficient word");
    residue = (residue + *step) % modulus;
    if (first_seen[residue] >= 0) {
      const auto lambda = static_cast<std::uint64_t>(first_seen[residue]);
      return {lambda, j - lambda};
    }
    first_seen[residue] = static_cast<std::int64_t>(j);
  }
  throw std::logic_error("prefix-sum walk failed to repeat");  // unreachable
}

void check_modulus_and_word(const StepWord& word, std::uint64_t modulus);

}  // namespace detail

// (lambda, mu) of the word at the given modulus: the first window of letters
// whose sum is divisible by T, with no earlier divisible window.
PeriodPair lambda_mu(const StepWord& word, std::uint64_t modulus);

// Same, but the word repeats cyclically (so any nonempty word suffices).
PeriodPair lambda_mu_cyclic(const StepWord& word, std::uint64_t modulus);

// Same over a lazy source with a declared scaling base.
PeriodPair lambda_mu_stream(const StepSource& next, std::uint64_t modulus, Step base = 1);

// Iterates S_{t+1} = S_t + s_t (mod T) from `initial_state` until a state
// repeats. The resulting (preperiod, period) equals lambda_mu on the word.
GeneratorRun simulate_orbit(std::uint64_t modulus, std::uint64_t initial_state,
                            const StepWord& word);

// Emits s_t = d(S_t) along the orbit of the state-driven rule
// S_{t+1} = S_t + d(S_t) (mod T), truncated to max_len letters.
StepWord state_driven_word(std::uint64_t modulus, const std::vector<Step>& decimation,
                           std::uint64_t initial_state, std::uint64_t max_len);

// Letterwise scaling c -> factor*c; preserves (lambda, mu) for any modulus
// coprime to the factor.
StepWord scale_word(const StepWord& word, Step factor);

}  // namespace decim
