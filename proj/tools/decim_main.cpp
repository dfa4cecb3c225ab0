#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "decim/algebra.hpp"
#include "decim/decimation.hpp"
#include "decim/lfsr.hpp"
#include "decim/moments.hpp"
#include "decim/rational.hpp"
#include "decim/report_json.hpp"
#include "decim/wordclass.hpp"

namespace {

using decim::StepWord;
using nlohmann::ordered_json;

// Digit strings are base-1 words; anything with commas is a scaled word.
StepWord parse_word(const std::string& text) {
  if (text.find(',') != std::string::npos) return StepWord::from_csv(text);
  return StepWord::from_digits(text);
}

// Accepts 0b101, 0x2d, 0755, or decimal.
std::uint64_t parse_bits(const std::string& text) {
  std::size_t pos = 0;
  std::uint64_t value = 0;
  if (text.starts_with("0b") || text.starts_with("0B")) {
    value = std::stoull(text.substr(2), &pos, 2);
    pos += 2;
  } else {
    value = std::stoull(text, &pos, 0);
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in '" + text + "'");
  return value;
}

struct MomentCli {
  std::string p_text;
  std::uint64_t t = 0;
  std::uint64_t t_from = 0;
  std::uint64_t t_to = 0;
  std::string format = "json";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 1;

  CLI::Option* t_opt = nullptr;
  CLI::Option* from_opt = nullptr;
  CLI::Option* to_opt = nullptr;
};

void add_moment_flags(CLI::App* sub, MomentCli& opts) {
  sub->add_option("--p", opts.p_text, "probability of step 2, as a/b")->required();
  opts.t_opt = sub->add_option("--t", opts.t, "modulus T");
  opts.from_opt = sub->add_option("--t-from", opts.t_from, "sweep start (inclusive)");
  opts.to_opt = sub->add_option("--t-to", opts.t_to, "sweep end (inclusive)");
  sub->add_option("--format", opts.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void run_moments(decim::MomentEngine engine, const MomentCli& opts) {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  if (opts.t_opt->count() > 0) {
    if (opts.from_opt->count() > 0 || opts.to_opt->count() > 0)
      throw std::invalid_argument("--t conflicts with --t-from/--t-to");
    lo = hi = opts.t;
  } else if (opts.from_opt->count() > 0 && opts.to_opt->count() > 0) {
    lo = opts.t_from;
    hi = opts.t_to;
    if (lo > hi) throw std::invalid_argument("--t-from exceeds --t-to");
  } else {
    throw std::invalid_argument("provide --t or both --t-from and --t-to");
  }

  // Exact engines demand a rational p; mc falls back to a float literal.
  std::optional<decim::StepProbability> exact_p;
  std::optional<double> float_p;
  std::optional<decim::Rational> parsed;
  try {
    parsed = decim::parse_rational(opts.p_text);
  } catch (const std::invalid_argument&) {
  }
  if (parsed) {
    exact_p.emplace(*parsed);
  } else if (engine == decim::MomentEngine::MonteCarlo) {
    std::size_t pos = 0;
    const double value = std::stod(opts.p_text, &pos);
    if (pos != opts.p_text.size()) throw std::invalid_argument("bad probability literal");
    float_p = value;
  } else {
    throw std::invalid_argument("this engine needs an exact rational p (a/b)");
  }

  const bool csv = opts.format == "csv";
  if (csv) std::cout << decim::kMomentCsvHeader << std::endl;

  std::optional<decim::ExactMomentEngine> incremental;
  if (engine == decim::MomentEngine::Exact) incremental.emplace(*exact_p);

  for (std::uint64_t t = lo; t <= hi; ++t) {
    decim::MomentReport report;
    switch (engine) {
      case decim::MomentEngine::Closed:
        report = decim::closed_form(*exact_p, t);
        break;
      case decim::MomentEngine::Exact:
        report = incremental->report(t);
        break;
      case decim::MomentEngine::Brute:
        report = decim::brute_force(*exact_p, t);
        break;
      case decim::MomentEngine::MonteCarlo: {
        const decim::MonteCarloOptions mc{opts.samples, opts.seed, opts.workers};
        report = exact_p ? decim::monte_carlo(*exact_p, t, mc)
                         : decim::monte_carlo(*float_p, t, mc);
        break;
      }
    }
    if (csv) {
      std::cout << decim::moment_report_csv_row(report) << std::endl;
    } else {
      std::cout << decim::moment_report_json(report, /*include_engine=*/false) << std::endl;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preperiod/period analysis of {1,2}-step self-decimated generators"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string word_text;
  std::uint64_t modulus = 0;
  std::uint64_t scale = 1;
  std::uint64_t s0 = 0;

  CLI::App* lambda_mu = app.add_subcommand("lambda-mu", "preperiod and period of a step word");
  lambda_mu->add_option("--word", word_text, "step word, e.g. 2212221 or 3,6,3")->required();
  lambda_mu->add_option("--modulus", modulus, "state count T")->required();
  lambda_mu->add_option("--scale", scale, "multiply every letter by this factor");
  lambda_mu->callback([&] {
    StepWord word = parse_word(word_text);
    if (scale != 1) word = decim::scale_word(word, scale);
    const decim::PeriodPair pair = decim::lambda_mu(word, modulus);
    ordered_json out;
    out["lambda"] = pair.lambda;
    out["mu"] = pair.mu;
    std::cout << out << std::endl;
  });

  CLI::App* orbit = app.add_subcommand("orbit", "decimated state orbit to its first repeat");
  orbit->add_option("--word", word_text, "step word")->required();
  orbit->add_option("--modulus", modulus, "state count T")->required();
  orbit->add_option("--s0", s0, "initial state");
  orbit->callback([&] {
    const decim::GeneratorRun run = decim::simulate_orbit(modulus, s0, parse_word(word_text));
    ordered_json out;
    out["T"] = run.modulus;
    out["s0"] = run.initial_state;
    out["states"] = run.states;
    out["lambda"] = run.period_pair.lambda;
    out["mu"] = run.period_pair.mu;
    std::cout << out << std::endl;
  });

  CLI::App* classify = app.add_subcommand("classify", "pattern class of a cyclic part");
  classify->add_option("--word", word_text, "word over {1,2}")->required();
  classify->callback([&] {
    const StepWord word = parse_word(word_text);
    ordered_json out;
    out["word"] = word.to_string();
    out["class"] = decim::omega_name(decim::classify(word));
    out["moduli"] = decim::admissible_moduli(word);
    std::cout << out << std::endl;
  });

  CLI::App* prefixes = app.add_subcommand("prefixes", "admissible prefixes of a cyclic part");
  prefixes->add_option("--cyclic-part", word_text, "word over {1,2}")->required();
  prefixes->add_option("--modulus", modulus, "admissible modulus")->required();
  prefixes->callback([&] {
    ordered_json out = ordered_json::array();
    for (const StepWord& b : decim::prefix_set(parse_word(word_text), modulus))
      out.push_back(b.to_string());
    std::cout << out << std::endl;
  });

  std::uint64_t n1 = 0, n2 = 0, m1 = 0, m2 = 0;
  CLI::App* count = app.add_subcommand("count", "configurations with fixed letter counts");
  count->add_option("--n1", n1, "ones in the cyclic part")->required();
  count->add_option("--n2", n2, "twos in the cyclic part")->required();
  count->add_option("--m1", m1, "ones in the prefix")->required();
  count->add_option("--m2", m2, "twos in the prefix")->required();
  count->add_option("--t", modulus, "modulus")->required();
  count->callback([&] {
    const decim::ConfigCount c = decim::count_configs(n1, n2, m1, m2, modulus);
    ordered_json out;
    out["n1"] = c.n1;
    out["n2"] = c.n2;
    out["m1"] = c.m1;
    out["m2"] = c.m2;
    out["t"] = c.modulus;
    out["count"] = c.count;
    std::cout << out << std::endl;
  });

  MomentCli exact_opts, closed_opts, brute_opts, mc_opts;
  CLI::App* exact = app.add_subcommand("exact", "exact moments by coefficient extraction");
  add_moment_flags(exact, exact_opts);
  exact->callback([&] { run_moments(decim::MomentEngine::Exact, exact_opts); });

  CLI::App* closed = app.add_subcommand("closed", "limit-theorem leading terms");
  add_moment_flags(closed, closed_opts);
  closed->callback([&] { run_moments(decim::MomentEngine::Closed, closed_opts); });

  CLI::App* brute = app.add_subcommand("brute", "trajectory-enumeration oracle (small T)");
  add_moment_flags(brute, brute_opts);
  brute->callback([&] { run_moments(decim::MomentEngine::Brute, brute_opts); });

  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo moment estimates");
  add_moment_flags(mc, mc_opts);
  mc->add_option("--n", mc_opts.samples, "sample count");
  mc->add_option("--seed", mc_opts.seed, "RNG seed");
  mc->add_option("--workers", mc_opts.workers, "worker threads");
  mc->callback([&] { run_moments(decim::MomentEngine::MonteCarlo, mc_opts); });

  std::string poly_text, fill_text;
  CLI::App* rueppel = app.add_subcommand("rueppel", "LFSR-driven decimation period check");
  rueppel->add_option("--poly", poly_text, "characteristic polynomial bitmask, e.g. 0b1011")
      ->required();
  rueppel->add_option("--fill", fill_text, "nonzero initial state, e.g. 0b001")->required();
  rueppel->callback([&] {
    const decim::RueppelResult result =
        decim::rueppel_mu(decim::Gf2Poly{parse_bits(poly_text)}, parse_bits(fill_text));
    std::cout << decim::rueppel_result_json(result) << std::endl;
  });

  std::string p_text;
  std::uint64_t t_max = 200;
  CLI::App* normalize = app.add_subcommand("normalize-check",
                                           "verify unit total probability per modulus");
  normalize->add_option("--p", p_text, "probability of step 2, as a/b")->required();
  normalize->add_option("--t-max", t_max, "largest modulus to check");
  normalize->callback([&] {
    const decim::StepProbability p{decim::parse_rational(p_text)};
    const decim::UniSeries series = decim::evaluate(
        decim::g_master(), {p.complement(), p.value()}, {p.complement(), p.value()});
    const std::vector<decim::Rational> coeffs = series.coefficients(t_max);
    std::optional<std::uint64_t> first_bad;
    for (std::uint64_t t = 1; t <= t_max; ++t) {
      if (coeffs[t] != 1) {
        first_bad = t;
        break;
      }
    }
    ordered_json out;
    out["p"] = decim::format_rational(p.value());
    out["t_max"] = t_max;
    out["ok"] = !first_bad.has_value();
    if (first_bad) {
      out["first_bad_t"] = *first_bad;
      exit_code = 1;
    }
    std::cout << out << std::endl;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return exit_code;
}
