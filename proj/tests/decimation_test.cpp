#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "decim/decimation.hpp"

using decim::PeriodPair;
using decim::Step;
using decim::StepWord;

namespace {

// Independent oracle: scan window sums directly. The answer is the first
// end position j carrying a window s_i..s_{j-1} whose sum is divisible by T.
PeriodPair window_sum_oracle(const StepWord& word, std::uint64_t modulus) {
  const auto& s = word.steps();
  for (std::size_t j = 1; j <= s.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      std::uint64_t sum = 0;
      for (std::size_t k = i; k < j; ++k) sum += s[k];
      if (sum % modulus == 0) return {i, j - i};
    }
  }
  throw std::runtime_error("oracle found no divisible window");
}

StepWord word_from_bits(std::uint64_t bits, std::size_t len) {
  std::vector<Step> steps(len);
  for (std::size_t i = 0; i < len; ++i) steps[i] = ((bits >> i) & 1) ? 2 : 1;
  return StepWord(std::move(steps), 1);
}

StepWord random_word(std::mt19937_64& rng, std::size_t len) {
  std::vector<Step> steps(len);
  for (auto& s : steps) s = (rng() & 1) ? 2 : 1;
  return StepWord(std::move(steps), 1);
}

}  // namespace

TEST_CASE("worked period example") {
  CHECK(decim::lambda_mu(StepWord::from_digits("2212221"), 8) == PeriodPair{2, 5});
  CHECK(decim::lambda_mu(StepWord::from_digits("2212221"), 1) == PeriodPair{0, 1});
  CHECK(decim::lambda_mu(StepWord::from_digits("2212221"), 2) == PeriodPair{0, 1});
  CHECK(decim::lambda_mu(StepWord::from_digits("2"), 1) == PeriodPair{0, 1});
  CHECK(decim::lambda_mu(StepWord::from_digits("12"), 2) == PeriodPair{1, 1});
}

TEST_CASE("all-ones word walks the full cycle") {
  for (std::uint64_t t = 1; t <= 20; ++t) {
    const StepWord word(std::vector<Step>(t, 1), 1);
    CHECK(decim::lambda_mu(word, t) == PeriodPair{0, t});
  }
}

TEST_CASE("lambda_mu matches the window-sum oracle exhaustively") {
  for (std::uint64_t t = 1; t <= 12; ++t) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
      const StepWord word = word_from_bits(bits, t);
      const PeriodPair pair = decim::lambda_mu(word, t);
      CHECK(pair == window_sum_oracle(word, t));
      CHECK(pair.lambda + pair.mu <= t);
      CHECK(pair.mu >= 1);
    }
  }
}

TEST_CASE("word letters beyond the first repeat are ignored") {
  const PeriodPair expected = decim::lambda_mu(StepWord::from_digits("2212221"), 8);
  CHECK(decim::lambda_mu(StepWord::from_digits("221222112121"), 8) == expected);
}

TEST_CASE("orbit simulation reproduces the word computation") {
  SUBCASE("documented runs") {
    const decim::GeneratorRun run = decim::simulate_orbit(8, 0, StepWord::from_digits("2212221"));
    CHECK(run.states == std::vector<std::uint64_t>{0, 2, 4, 5, 7, 1, 3, 4});
    CHECK(run.period_pair == PeriodPair{2, 5});

    const decim::GeneratorRun r2 = decim::simulate_orbit(5, 3, StepWord::from_digits("11111"));
    CHECK(r2.states == std::vector<std::uint64_t>{3, 4, 0, 1, 2, 3});
    CHECK(r2.period_pair == PeriodPair{0, 5});

    CHECK(decim::simulate_orbit(1, 0, StepWord::from_digits("12")).period_pair ==
          PeriodPair{0, 1});
  }

  SUBCASE("random words at every modulus up to 64, any start state") {
    std::mt19937_64 rng(20240817);
    for (std::uint64_t t = 1; t <= 64; ++t) {
      for (int rep = 0; rep < 4; ++rep) {
        const StepWord word = random_word(rng, t);
        const PeriodPair expected = decim::lambda_mu(word, t);
        const std::uint64_t s0 = rng() % t;
        const decim::GeneratorRun run = decim::simulate_orbit(t, s0, word);
        CHECK(run.period_pair == expected);
        CHECK(run.initial_state == s0);
        for (std::size_t i = 0; i + 1 < run.states.size(); ++i)
          CHECK(run.states[i + 1] == (run.states[i] + word.steps()[i]) % t);
      }
    }
  }
}

TEST_CASE("state-driven words agree with their own orbit") {
  CHECK(decim::state_driven_word(3, {1, 1, 1}, 0, 3).to_string() == "111");

  const StepWord all2 = decim::state_driven_word(4, {2, 2, 2, 2}, 0, 4);
  CHECK(all2.to_string() == "2222");
  CHECK(decim::lambda_mu(all2, 4) == PeriodPair{0, 2});

  std::vector<Step> parity(8);
  for (std::size_t s = 0; s < 8; ++s) parity[s] = (s % 2 == 0) ? 2 : 1;
  const StepWord word = decim::state_driven_word(8, parity, 0, 8);
  CHECK(decim::lambda_mu(word, 8) == decim::simulate_orbit(8, 0, word).period_pair);

  std::mt19937_64 rng(7);
  for (std::uint64_t t = 1; t <= 32; ++t) {
    std::vector<Step> table(t);
    for (auto& d : table) d = (rng() & 1) ? 2 : 1;
    const std::uint64_t s0 = rng() % t;
    const StepWord w = decim::state_driven_word(t, table, s0, t);
    CHECK(decim::lambda_mu(w, t) == decim::simulate_orbit(t, s0, w).period_pair);
  }
}

TEST_CASE("letterwise scaling preserves the period pair") {
  CHECK(decim::scale_word(StepWord::from_digits("121"), 3).to_string() == "3,6,3");
  CHECK(decim::scale_word(StepWord::from_digits("12"), 1) == StepWord::from_digits("12"));
  CHECK(decim::lambda_mu(decim::scale_word(StepWord::from_digits("2212221"), 3), 8) ==
        PeriodPair{2, 5});

  std::mt19937_64 rng(99);
  for (const Step q : {Step{3}, Step{5}, Step{7}}) {
    for (int rep = 0; rep < 40; ++rep) {
      std::uint64_t t = 1 + rng() % 40;
      while (std::gcd(q, t) != 1) t = 1 + rng() % 40;
      const StepWord word = random_word(rng, t);
      CHECK(decim::lambda_mu(decim::scale_word(word, q), t) == decim::lambda_mu(word, t));
    }
  }
}

TEST_CASE("a purely periodic word stays purely periodic under rotation") {
  for (std::uint64_t t = 1; t <= 10; ++t) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
      const StepWord word = word_from_bits(bits, t);
      const PeriodPair pair = decim::lambda_mu(word, t);
      if (pair.lambda != 0) continue;
      std::vector<Step> cycle(word.steps().begin(),
                              word.steps().begin() + static_cast<std::ptrdiff_t>(pair.mu));
      std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
      CHECK(decim::lambda_mu_cyclic(StepWord(cycle, 1), t) == PeriodPair{0, pair.mu});
    }
  }
}

TEST_CASE("cyclic and stream variants") {
  CHECK(decim::lambda_mu_cyclic(StepWord::from_digits("2"), 2) == PeriodPair{0, 1});
  CHECK(decim::lambda_mu_cyclic(StepWord::from_digits("21"), 9) == PeriodPair{0, 6});

  std::size_t pos = 0;
  const std::string letters = "2212221";
  const decim::StepSource source = [&]() -> std::optional<Step> {
    if (pos >= letters.size()) return std::nullopt;
    return letters[pos++] == '1' ? Step{1} : Step{2};
  };
  CHECK(decim::lambda_mu_stream(source, 8) == PeriodPair{2, 5});
}

TEST_CASE("word parsing and serialization") {
  CHECK(StepWord::from_digits("2212221").to_string() == "2212221");
  CHECK(StepWord::from_csv("3,6,3").base() == 3);
  CHECK(StepWord::from_csv("3,6,3").to_string() == "3,6,3");
  CHECK(StepWord::from_csv("4,2,2").base() == 2);
  CHECK(StepWord::from_csv("6,3", 3) == decim::scale_word(StepWord::from_digits("21"), 3));
  CHECK(StepWord().empty());

  CHECK_THROWS_AS(StepWord::from_digits("103"), std::invalid_argument);
  CHECK_THROWS_AS(StepWord::from_csv("3,5"), std::invalid_argument);
  CHECK_THROWS_AS(StepWord::from_csv("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(StepWord({1, 3}, 1), std::invalid_argument);
  CHECK_THROWS_AS(StepWord({2, 4}, 0), std::invalid_argument);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_WITH_AS(decim::lambda_mu(StepWord(), 5), "empty word", std::domain_error);
  CHECK_THROWS_WITH_AS(decim::lambda_mu(StepWord::from_digits("12"), 0),
                       "modulus must be positive", std::domain_error);
  CHECK_THROWS_WITH_AS(decim::lambda_mu(StepWord::from_csv("2,4"), 4), "scaling not coprime",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(decim::lambda_mu(StepWord::from_digits("11"), 5), "insufficient word",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(decim::simulate_orbit(4, 4, StepWord::from_digits("1111")),
                       "initial state out of range", std::domain_error);
  CHECK_THROWS_WITH_AS(decim::state_driven_word(4, {1, 1, 1, 1}, 0, 3),
                       "word too short to guarantee collision", std::domain_error);
  CHECK_THROWS_AS(decim::state_driven_word(3, {1, 1}, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(decim::state_driven_word(3, {1, 3, 1}, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(decim::scale_word(StepWord::from_digits("12"), 0), std::invalid_argument);
}
