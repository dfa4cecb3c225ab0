#include "decim/decimation.hpp"

#include <algorithm>
#include <numeric>

namespace decim {

StepWord::StepWord(std::vector<Step> steps, Step base) : steps_(std::move(steps)), base_(base) {
  if (base_ == 0) throw std::invalid_argument("base must be positive");
  for (const Step s : steps_) {
    if (s != base_ && s != 2 * base_)
      throw std::invalid_argument("step word letters must be q or 2q");
  }
}

StepWord StepWord::from_digits(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (const char c : text) {
    if (c != '1' && c != '2')
      throw std::invalid_argument("digit word letters must be 1 or 2");
    steps.push_back(c == '1' ? 1 : 2);
  }
  return StepWord(std::move(steps), 1);
}

StepWord StepWord::from_csv(std::string_view text, Step base) {
  std::vector<Step> steps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view field = text.substr(pos, comma - pos);
    if (field.empty()) throw std::invalid_argument("empty field in step list");
    Step value = 0;
    for (const char c : field) {
      if (c < '0' || c > '9') throw std::invalid_argument("invalid step value");
      value = value * 10 + static_cast<Step>(c - '0');
    }
    steps.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  if (base == 0) base = *std::min_element(steps.begin(), steps.end());
  return StepWord(std::move(steps), base);
}

std::string StepWord::to_string() const {
  std::string out;
  if (base_ == 1) {
    for (const Step s : steps_) out += (s == 1 ? '1' : '2');
    return out;
  }
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(steps_[i]);
  }
  return out;
}

namespace detail {

void check_modulus_and_word(const StepWord& word, std::uint64_t modulus) {
  if (modulus == 0) throw std::domain_error("modulus must be positive");
  if (word.empty()) throw std::domain_error("empty word");
  if (std::gcd(word.base(), modulus) != 1) throw std::domain_error("scaling not coprime");
}

}  // namespace detail

PeriodPair lambda_mu(const StepWord& word, std::uint64_t modulus) {
  detail::check_modulus_and_word(word, modulus);
  std::size_t pos = 0;
  return detail::find_first_repeat(
      [&]() -> std::optional<Step> {
        if (pos >= word.size()) return std::nullopt;
        return word.steps()[pos++];
      },
      modulus);
}

PeriodPair lambda_mu_cyclic(const StepWord& word, std::uint64_t modulus) {
  detail::check_modulus_and_word(word, modulus);
  std::size_t pos = 0;
  return detail::find_first_repeat(
      [&]() -> std::optional<Step> {
        const Step s = word.steps()[pos];
        pos = (pos + 1) % word.size();
        return s;
      },
      modulus);
}

PeriodPair lambda_mu_stream(const StepSource& next, std::uint64_t modulus, Step base) {
  if (modulus == 0) throw std::domain_error("modulus must be positive");
  if (base == 0 || std::gcd(base, modulus) != 1) throw std::domain_error("scaling not coprime");
  return detail::find_first_repeat(next, modulus);
}

GeneratorRun simulate_orbit(std::uint64_t modulus, std::uint64_t initial_state,
                            const StepWord& word) {
  detail::check_modulus_and_word(word, modulus);
  if (initial_state >= modulus) throw std::domain_error("initial state out of range");

  GeneratorRun run;
  run.modulus = modulus;
  run.initial_state = initial_state;

  std::vector<std::int64_t> first_seen(modulus, -1);
  std::uint64_t state = initial_state;
  run.states.push_back(state);
  first_seen[state] = 0;
  for (std::uint64_t t = 1; t <= modulus; ++t) {
    if (t - 1 >= word.size()) throw std::domain_error("insufficient word");
    state = (state + word.steps()[t - 1]) % modulus;
    run.states.push_back(state);
    if (first_seen[state] >= 0) {
      const auto lambda = static_cast<std::uint64_t>(first_seen[state]);
      run.period_pair = {lambda, t - lambda};
      return run;
    }
    first_seen[state] = static_cast<std::int64_t>(t);
  }
  throw std::logic_error("orbit failed to repeat");  // unreachable
}

StepWord state_driven_word(std::uint64_t modulus, const std::vector<Step>& decimation,
                           std::uint64_t initial_state, std::uint64_t max_len) {
  if (modulus == 0) throw std::domain_error("modulus must be positive");
  if (decimation.size() != modulus)
    throw std::invalid_argument("decimation table must cover all states");
  for (const Step d : decimation) {
    if (d != 1 && d != 2) throw std::invalid_argument("decimation values must be 1 or 2");
  }
  if (initial_state >= modulus) throw std::domain_error("initial state out of range");
  if (max_len < modulus) throw std::domain_error("word too short to guarantee collision");

  std::vector<Step> letters;
  letters.reserve(max_len);
  std::uint64_t state = initial_state;
  for (std::uint64_t t = 0; t < max_len; ++t) {
    const Step d = decimation[state];
    letters.push_back(d);
    state = (state + d) % modulus;
  }
  return StepWord(std::move(letters), 1);
}

StepWord scale_word(const StepWord& word, Step factor) {
  if (factor == 0) throw std::invalid_argument("scaling factor must be positive");
  std::vector<Step> scaled;
  scaled.reserve(word.size());
  for (const Step s : word.steps()) scaled.push_back(s * factor);
  return StepWord(std::move(scaled), word.base() * factor);
}

}  // namespace decim
