#include "decim/moments.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace decim {

StepProbability::StepProbability(Rational p, std::uint64_t max_denominator) : p_(std::move(p)) {
  if (p_ <= 0 || p_ >= 1) throw std::domain_error("p must satisfy 0 < p < 1");
  if (denominator(p_) > max_denominator)
    throw std::domain_error("p denominator exceeds the configured limit");
}

std::string_view engine_name(MomentEngine engine) {
  switch (engine) {
    case MomentEngine::Closed: return "closed";
    case MomentEngine::Exact: return "exact";
    case MomentEngine::Brute: return "brute";
    case MomentEngine::MonteCarlo: return "mc";
  }
  throw std::logic_error("unknown engine");
}

namespace {

MomentReport make_exact_report(MomentEngine engine, const StepProbability& p,
                               std::uint64_t modulus, ExactMomentValues values) {
  MomentReport report;
  report.engine = engine;
  report.modulus = modulus;
  report.p_rational = p.value();
  report.p_value = p.as_double();
  report.values = std::move(values);
  return report;
}

}  // namespace

MomentReport closed_form(const StepProbability& p, std::uint64_t modulus) {
  if (modulus == 0) throw std::domain_error("modulus must be positive");
  const Rational pv = p.value();
  const Rational q = 1 - pv;
  const Rational one_plus = 1 + pv;
  ExactMomentValues values;
  values.e_lambda = pv / (q * one_plus * one_plus);
  values.e_mu = Rational(modulus) / one_plus;
  values.var_lambda = (pv + rational_pow(pv, 3) + rational_pow(pv, 4)) /
                      (q * q * rational_pow(one_plus, 4));
  values.var_mu = Rational(modulus) * pv * q / rational_pow(one_plus, 3);
  return make_exact_report(MomentEngine::Closed, p, modulus, std::move(values));
}

const MasterMomentFunctions& master_moment_functions() {
  static const MasterMomentFunctions cached = [] {
    const MultiRational g = g_master();
    MasterMomentFunctions f{g.euler(VarBlock::Y), MultiRational{}, g.euler(VarBlock::X),
                            MultiRational{}};
    f.ey2 = f.ey.euler(VarBlock::Y);
    f.ex2 = f.ex.euler(VarBlock::X);
    return f;
  }();
  return cached;
}

ExactMomentEngine::ExactMomentEngine(StepProbability p)
    : p_(std::move(p)),
      ey_(evaluate(master_moment_functions().ey, {p_.complement(), p_.value()},
                   {p_.complement(), p_.value()})),
      ey2_(evaluate(master_moment_functions().ey2, {p_.complement(), p_.value()},
                    {p_.complement(), p_.value()})),
      ex_(evaluate(master_moment_functions().ex, {p_.complement(), p_.value()},
                   {p_.complement(), p_.value()})),
      ex2_(evaluate(master_moment_functions().ex2, {p_.complement(), p_.value()},
                    {p_.complement(), p_.value()})) {}

MomentReport ExactMomentEngine::report(std::uint64_t modulus) {
  if (modulus == 0) throw std::domain_error("modulus must be positive");
  ey_.extend_coefficients(cey_, modulus);
  ey2_.extend_coefficients(cey2_, modulus);
  ex_.extend_coefficients(cex_, modulus);
  ex2_.extend_coefficients(cex2_, modulus);
  ExactMomentValues values;
  values.e_lambda = cey_[modulus];
  values.var_lambda = cey2_[modulus] - values.e_lambda * values.e_lambda;
  values.e_mu = cex_[modulus];
  values.var_mu = cex2_[modulus] - values.e_mu * values.e_mu;
  return make_exact_report(MomentEngine::Exact, p_, modulus, std::move(values));
}

MomentReport exact_moments(const StepProbability& p, std::uint64_t modulus) {
  return ExactMomentEngine(p).report(modulus);
}

Rational normalization_coefficient(const StepProbability& p, std::uint64_t modulus) {
  if (modulus == 0) throw std::domain_error("modulus must be positive");
  const UniSeries series =
      evaluate(g_master(), {p.complement(), p.value()}, {p.complement(), p.value()});
  return series.coefficient(modulus);
}

bool normalization_holds(const StepProbability& p, std::uint64_t max_modulus) {
  const UniSeries series =
      evaluate(g_master(), {p.complement(), p.value()}, {p.complement(), p.value()});
  const auto coeffs = series.coefficients(max_modulus);
  for (std::uint64_t t = 1; t <= max_modulus; ++t) {
    if (coeffs[t] != 1) return false;
  }
  return true;
}

namespace {

struct BruteAccumulator {
  Rational total, e_lambda, e_lambda2, e_mu, e_mu2;
};

// Depth-first over the binary step tree; a branch terminates at its first
// repeated prefix-sum residue, which happens by depth T.
void brute_walk(std::uint64_t modulus, const Rational& p1, const Rational& p2,
                std::vector<std::int64_t>& first_seen, std::uint64_t residue, std::uint64_t time,
                const Rational& weight, BruteAccumulator& acc) {
  for (const Step c : {Step{1}, Step{2}}) {
    const std::uint64_t next = (residue + c) % modulus;
    const Rational w = weight * (c == 1 ? p1 : p2);
    if (first_seen[next] >= 0) {
      const auto lambda = static_cast<std::uint64_t>(first_seen[next]);
      const std::uint64_t mu = time + 1 - lambda;
      acc.total += w;
      acc.e_lambda += w * Rational(lambda);
      acc.e_lambda2 += w * Rational(lambda) * Rational(lambda);
      acc.e_mu += w * Rational(mu);
      acc.e_mu2 += w * Rational(mu) * Rational(mu);
    } else {
      first_seen[next] = static_cast<std::int64_t>(time + 1);
      brute_walk(modulus, p1, p2, first_seen, next, time + 1, w, acc);
      first_seen[next] = -1;
    }
  }
}

}  // namespace

MomentReport brute_force(const StepProbability& p, std::uint64_t modulus) {
  if (modulus == 0) throw std::domain_error("modulus must be positive");
  if (modulus > kBruteForceMaxModulus) throw std::domain_error("oracle scale exceeded");

  BruteAccumulator acc;
  std::vector<std::int64_t> first_seen(modulus, -1);
  first_seen[0] = 0;
  brute_walk(modulus, p.complement(), p.value(), first_seen, 0, 0, Rational(1), acc);
  if (acc.total != 1) throw std::logic_error("trajectory probabilities do not sum to 1");

  ExactMomentValues values;
  values.e_lambda = acc.e_lambda;
  values.var_lambda = acc.e_lambda2 - acc.e_lambda * acc.e_lambda;
  values.e_mu = acc.e_mu;
  values.var_mu = acc.e_mu2 - acc.e_mu * acc.e_mu;
  MomentReport report = make_exact_report(MomentEngine::Brute, p, modulus, std::move(values));
  return report;
}

namespace {

constexpr std::uint64_t kMonteCarloChunks = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct ChunkSums {
  std::uint64_t lambda = 0, lambda2 = 0, mu = 0, mu2 = 0;
};

// One word: draw letters until a prefix-sum residue repeats. The stamp
// buffer avoids clearing the visited array between words.
PeriodPair sample_word(std::mt19937_64& rng, std::uint64_t threshold, std::uint64_t modulus,
                       std::vector<std::uint64_t>& stamp, std::vector<std::uint64_t>& seen_at,
                       std::uint64_t word_id) {
  stamp[0] = word_id;
  seen_at[0] = 0;
  std::uint64_t residue = 0;
  for (std::uint64_t j = 1;; ++j) {
    const Step c = rng() < threshold ? 2 : 1;
    residue += c;
    if (residue >= modulus) residue -= modulus;
    if (stamp[residue] == word_id) return {seen_at[residue], j - seen_at[residue]};
    stamp[residue] = word_id;
    seen_at[residue] = j;
  }
}

MomentReport monte_carlo_impl(std::optional<Rational> p_exact, double p_value,
                              std::uint64_t threshold, std::uint64_t modulus,
                              const MonteCarloOptions& options) {
  if (modulus == 0) throw std::domain_error("modulus must be positive");
  if (options.samples == 0) throw std::domain_error("sample count must be positive");

  const std::uint64_t n = options.samples;
  const std::uint64_t chunks = std::min<std::uint64_t>(kMonteCarloChunks, n);
  std::vector<ChunkSums> sums(chunks);

  auto run_chunk = [&](std::uint64_t chunk) {
    const std::uint64_t begin = chunk * (n / chunks) + std::min(chunk, n % chunks);
    const std::uint64_t end = begin + n / chunks + (chunk < n % chunks ? 1 : 0);
    std::mt19937_64 rng(splitmix64(options.seed ^ splitmix64(chunk + 1)));
    std::vector<std::uint64_t> stamp(modulus, 0), seen_at(modulus, 0);
    ChunkSums local;
    for (std::uint64_t i = begin; i < end; ++i) {
      const PeriodPair pair = sample_word(rng, threshold, modulus, stamp, seen_at, i + 1);
      local.lambda += pair.lambda;
      local.lambda2 += pair.lambda * pair.lambda;
      local.mu += pair.mu;
      local.mu2 += pair.mu * pair.mu;
    }
    sums[chunk] = local;
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) run_chunk(chunk);
  } else {
    std::atomic<std::uint64_t> next_chunk{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(workers, static_cast<unsigned>(chunks));
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t chunk = next_chunk.fetch_add(1); chunk < chunks;
             chunk = next_chunk.fetch_add(1))
          run_chunk(chunk);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  ChunkSums total;
  for (const ChunkSums& s : sums) {
    total.lambda += s.lambda;
    total.lambda2 += s.lambda2;
    total.mu += s.mu;
    total.mu2 += s.mu2;
  }

  const double nd = static_cast<double>(n);
  SampleMomentValues values;
  values.e_lambda = static_cast<double>(total.lambda) / nd;
  values.e_mu = static_cast<double>(total.mu) / nd;
  if (n > 1) {
    values.var_lambda =
        (static_cast<double>(total.lambda2) - nd * values.e_lambda * values.e_lambda) / (nd - 1);
    values.var_mu = (static_cast<double>(total.mu2) - nd * values.e_mu * values.e_mu) / (nd - 1);
    values.se_lambda = std::sqrt(values.var_lambda / nd);
    values.se_mu = std::sqrt(values.var_mu / nd);
  }

  MomentReport report;
  report.engine = MomentEngine::MonteCarlo;
  report.modulus = modulus;
  report.p_rational = std::move(p_exact);
  report.p_value = p_value;
  report.values = values;
  report.sample_count = n;
  report.seed = options.seed;
  return report;
}

}  // namespace

MomentReport monte_carlo(const StepProbability& p, std::uint64_t modulus,
                         const MonteCarloOptions& options) {
  // floor(p * 2^64) as the acceptance threshold for "step 2".
  const BigInt scaled = (numerator(p.value()) << 64) / denominator(p.value());
  return monte_carlo_impl(p.value(), p.as_double(), scaled.convert_to<std::uint64_t>(), modulus,
                          options);
}

MomentReport monte_carlo(double p, std::uint64_t modulus, const MonteCarloOptions& options) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("p must satisfy 0 < p < 1");
  const double scaled = std::ldexp(p, 64);
  const std::uint64_t threshold =
      scaled >= 0x1p64 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(scaled);
  return monte_carlo_impl(std::nullopt, p, threshold, modulus, options);
}

}  // namespace decim
