#pragma once

#include "decim/algebra.hpp"
#include "decim/decimation.hpp"
#include "decim/rational.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

namespace decim {

// Probability of drawing step 2; step 1 has probability 1-p. Strictly
// interior, with a denominator cap so exact arithmetic stays tractable.
class StepProbability {
 public:
  static constexpr std::uint64_t kDefaultMaxDenominator = 1'000'000;

  explicit StepProbability(Rational p,
                           std::uint64_t max_denominator = kDefaultMaxDenominator);

  const Rational& value() const { return p_; }
  Rational complement() const { return Rational(1) - p_; }
  double as_double() const { return p_.convert_to<double>(); }

 private:
  Rational p_;
};

enum class MomentEngine { Closed, Exact, Brute, MonteCarlo };

std::string_view engine_name(MomentEngine engine);

struct ExactMomentValues {
  Rational e_lambda, var_lambda, e_mu, var_mu;
};

struct SampleMomentValues {
  double e_lambda = 0, var_lambda = 0, e_mu = 0, var_mu = 0;
  std::optional<double> se_lambda, se_mu;  // absent for a single sample
};

struct MomentReport {
  MomentEngine engine = MomentEngine::Exact;
  std::uint64_t modulus = 1;
  std::optional<Rational> p_rational;  // absent when Monte Carlo ran on a float
  double p_value = 0;
  std::variant<ExactMomentValues, SampleMomentValues> values;
  std::uint64_t sample_count = 0;  // Monte Carlo only
  std::uint64_t seed = 0;          // Monte Carlo only

  const ExactMomentValues& exact() const { return std::get<ExactMomentValues>(values); }
  const SampleMomentValues& sample() const { return std::get<SampleMomentValues>(values); }
};

// Leading terms of the limit theorem only; the exponentially small
// remainders are excluded (tests quantify the gap).
MomentReport closed_form(const StepProbability& p, std::uint64_t modulus);

// Moments by exact [z^T] extraction from the Euler-weighted master
// generating function. Exact rationals for any T >= 1.
MomentReport exact_moments(const StepProbability& p, std::uint64_t modulus);

constexpr std::uint64_t kBruteForceMaxModulus = 14;

// Independent oracle: enumerates every prefix-sum trajectory to its first
// residue repeat, weighting by word probability. Exponential in T.
MomentReport brute_force(const StepProbability& p, std::uint64_t modulus);

struct MonteCarloOptions {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

// Sampling estimate with standard errors. Deterministic for a fixed seed and
// independent of the worker count: work is split into fixed chunks whose
// substreams derive from (seed, chunk index), and per-chunk integer sums are
// combined order-independently.
MomentReport monte_carlo(const StepProbability& p, std::uint64_t modulus,
                         const MonteCarloOptions& options);
MomentReport monte_carlo(double p, std::uint64_t modulus, const MonteCarloOptions& options);

// Shares one evaluation of the Euler-weighted series across many T values;
// coefficient extraction is incremental in T, so ascending sweeps are cheap.
class ExactMomentEngine {
 public:
  explicit ExactMomentEngine(StepProbability p);
  MomentReport report(std::uint64_t modulus);

 private:
  StepProbability p_;
  UniSeries ey_, ey2_, ex_, ex2_;
  std::vector<Rational> cey_, cey2_, cex_, cex2_;
};

// [z^T] G(pi, pi, z): total probability over configurations at modulus T.
Rational normalization_coefficient(const StepProbability& p, std::uint64_t modulus);
bool normalization_holds(const StepProbability& p, std::uint64_t max_modulus);

// Euler-weighted master functions, computed once: E_y G, E_y^2 G, E_x G, E_x^2 G.
struct MasterMomentFunctions {
  MultiRational ey, ey2, ex, ex2;
};
const MasterMomentFunctions& master_moment_functions();

}  // namespace decim
