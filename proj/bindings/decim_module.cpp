#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "decim/algebra.hpp"
#include "decim/decimation.hpp"
#include "decim/lfsr.hpp"
#include "decim/moments.hpp"
#include "decim/rational.hpp"
#include "decim/wordclass.hpp"

namespace py = pybind11;

namespace {

decim::StepWord parse_word(const std::string& text) {
  if (text.find(',') != std::string::npos) return decim::StepWord::from_csv(text);
  return decim::StepWord::from_digits(text);
}

py::object to_fraction(const decim::Rational& r) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(decim::format_rational(r));
}

// str() of ints and fractions.Fraction is already "a" or "a/b".
decim::StepProbability parse_probability(const py::object& p) {
  return decim::StepProbability(decim::parse_rational(py::str(p).cast<std::string>()));
}

py::dict report_dict(const decim::MomentReport& report) {
  py::dict out;
  out["engine"] = std::string(decim::engine_name(report.engine));
  out["T"] = report.modulus;
  if (report.p_rational) {
    out["p"] = to_fraction(*report.p_rational);
  } else {
    out["p"] = report.p_value;
  }
  if (const auto* exact = std::get_if<decim::ExactMomentValues>(&report.values)) {
    out["e_lambda"] = to_fraction(exact->e_lambda);
    out["var_lambda"] = to_fraction(exact->var_lambda);
    out["e_mu"] = to_fraction(exact->e_mu);
    out["var_mu"] = to_fraction(exact->var_mu);
  } else {
    const decim::SampleMomentValues& sample = report.sample();
    out["e_lambda"] = sample.e_lambda;
    out["var_lambda"] = sample.var_lambda;
    out["e_mu"] = sample.e_mu;
    out["var_mu"] = sample.var_mu;
    out["se_lambda"] = sample.se_lambda ? py::cast(*sample.se_lambda) : py::none();
    out["se_mu"] = sample.se_mu ? py::cast(*sample.se_mu) : py::none();
    out["n"] = report.sample_count;
    out["seed"] = report.seed;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_decim, m) {
  m.doc() = "Preperiod/period analysis of {1,2}-step self-decimated generators";

  m.def(
      "lambda_mu",
      [](const std::string& word, std::uint64_t modulus, std::uint64_t scale) {
        decim::StepWord w = parse_word(word);
        if (scale != 1) w = decim::scale_word(w, scale);
        const decim::PeriodPair pair = decim::lambda_mu(w, modulus);
        return py::make_tuple(pair.lambda, pair.mu);
      },
      py::arg("word"), py::arg("modulus"), py::arg("scale") = 1,
      "Preperiod and period of the step word at the given modulus.");

  m.def(
      "simulate_orbit",
      [](std::uint64_t modulus, std::uint64_t s0, const std::string& word) {
        const decim::GeneratorRun run = decim::simulate_orbit(modulus, s0, parse_word(word));
        py::dict out;
        out["T"] = run.modulus;
        out["s0"] = run.initial_state;
        out["states"] = run.states;
        out["lambda"] = run.period_pair.lambda;
        out["mu"] = run.period_pair.mu;
        return out;
      },
      py::arg("modulus"), py::arg("s0"), py::arg("word"),
      "Decimated orbit of S -> S + step (mod T) up to its first repeated state.");

  m.def(
      "classify",
      [](const std::string& word) {
        return std::string(decim::omega_name(decim::classify(parse_word(word))));
      },
      py::arg("word"), "Pattern class (Omega1..Omega4) of a cyclic part.");

  m.def(
      "admissible_moduli",
      [](const std::string& word) { return decim::admissible_moduli(parse_word(word)); },
      py::arg("word"), "All moduli at which the word can serve as a cyclic part.");

  m.def(
      "prefix_set",
      [](const std::string& word, std::uint64_t modulus) {
        std::vector<std::string> out;
        for (const decim::StepWord& b : decim::prefix_set(parse_word(word), modulus))
          out.push_back(b.to_string());
        return out;
      },
      py::arg("word"), py::arg("modulus"),
      "Every admissible prefix of the cyclic part, shortest first.");

  m.def(
      "count_configs",
      [](std::uint64_t n1, std::uint64_t n2, std::uint64_t m1, std::uint64_t m2,
         std::uint64_t t) { return decim::count_configs(n1, n2, m1, m2, t).count; },
      py::arg("n1"), py::arg("n2"), py::arg("m1"), py::arg("m2"), py::arg("t"),
      "Number of (cyclic part, prefix) configurations with these letter counts.");

  m.def(
      "closed_moments",
      [](const py::object& p, std::uint64_t modulus) {
        return report_dict(decim::closed_form(parse_probability(p), modulus));
      },
      py::arg("p"), py::arg("t"), "Limit-theorem leading terms as exact fractions.");

  m.def(
      "exact_moments",
      [](const py::object& p, std::uint64_t modulus) {
        return report_dict(decim::exact_moments(parse_probability(p), modulus));
      },
      py::arg("p"), py::arg("t"), "Exact moments by coefficient extraction.");

  m.def(
      "brute_force_moments",
      [](const py::object& p, std::uint64_t modulus) {
        return report_dict(decim::brute_force(parse_probability(p), modulus));
      },
      py::arg("p"), py::arg("t"), "Trajectory-enumeration oracle; T capped at 14.");

  m.def(
      "monte_carlo_moments",
      [](const py::object& p, std::uint64_t modulus, std::uint64_t n, std::uint64_t seed,
         unsigned workers) {
        const decim::MonteCarloOptions options{n, seed, workers};
        try {
          return report_dict(decim::monte_carlo(parse_probability(p), modulus, options));
        } catch (const std::invalid_argument&) {
          return report_dict(decim::monte_carlo(p.cast<double>(), modulus, options));
        }
      },
      py::arg("p"), py::arg("t"), py::arg("n") = 100000, py::arg("seed") = 1,
      py::arg("workers") = 1,
      "Seeded sampling estimate; deterministic and worker-count independent.");

  m.def(
      "rueppel_mu",
      [](std::uint64_t poly, std::uint64_t fill) {
        const decim::RueppelResult r = decim::rueppel_mu(decim::Gf2Poly{poly}, fill);
        py::dict out;
        out["k"] = r.degree;
        out["T"] = r.modulus;
        out["lambda"] = r.pair.lambda;
        out["mu"] = r.pair.mu;
        out["expected_mu"] = r.expected_mu;
        return out;
      },
      py::arg("poly"), py::arg("fill"),
      "Period of the LFSR-driven decimation word against floor(2T/3).");

  m.def(
      "is_primitive",
      [](std::uint64_t poly) { return decim::is_primitive(decim::Gf2Poly{poly}); },
      py::arg("poly"), "Primitivity of a GF(2) polynomial given as a bitmask.");

  m.def(
      "normalization_ok",
      [](const py::object& p, std::uint64_t t_max) {
        return decim::normalization_holds(parse_probability(p), t_max);
      },
      py::arg("p"), py::arg("t_max") = 200,
      "Whether every modulus up to t_max carries total probability exactly 1.");
}
