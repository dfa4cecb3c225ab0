#include "decim/report_json.hpp"

#include <charconv>
#include <sstream>

namespace decim {

namespace {

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string format_probability(const MomentReport& report) {
  return report.p_rational ? format_rational(*report.p_rational)
                           : format_double(report.p_value);
}

}  // namespace

nlohmann::ordered_json moment_report_json(const MomentReport& report, bool include_engine) {
  nlohmann::ordered_json out;
  if (include_engine) out["engine"] = engine_name(report.engine);
  out["T"] = report.modulus;
  if (report.p_rational) {
    out["p"] = format_rational(*report.p_rational);
  } else {
    out["p"] = report.p_value;
  }
  if (const auto* exact = std::get_if<ExactMomentValues>(&report.values)) {
    out["e_lambda"] = format_rational(exact->e_lambda);
    out["var_lambda"] = format_rational(exact->var_lambda);
    out["e_mu"] = format_rational(exact->e_mu);
    out["var_mu"] = format_rational(exact->var_mu);
  } else {
    const SampleMomentValues& sample = report.sample();
    out["e_lambda"] = sample.e_lambda;
    out["var_lambda"] = sample.var_lambda;
    out["e_mu"] = sample.e_mu;
    out["var_mu"] = sample.var_mu;
    if (sample.se_lambda) out["se_lambda"] = *sample.se_lambda;
    if (sample.se_mu) out["se_mu"] = *sample.se_mu;
    out["n"] = report.sample_count;
    out["seed"] = report.seed;
  }
  return out;
}

std::string moment_report_csv_row(const MomentReport& report) {
  std::ostringstream row;
  row << engine_name(report.engine) << ',' << report.modulus << ',' << format_probability(report);
  if (const auto* exact = std::get_if<ExactMomentValues>(&report.values)) {
    row << ',' << format_rational(exact->e_lambda) << ',' << format_rational(exact->var_lambda)
        << ',' << format_rational(exact->e_mu) << ',' << format_rational(exact->var_mu) << ",,";
  } else {
    const SampleMomentValues& sample = report.sample();
    row << ',' << format_double(sample.e_lambda) << ',' << format_double(sample.var_lambda) << ','
        << format_double(sample.e_mu) << ',' << format_double(sample.var_mu) << ',';
    if (sample.se_lambda) row << format_double(*sample.se_lambda);
    row << ',';
    if (sample.se_mu) row << format_double(*sample.se_mu);
  }
  return row.str();
}

nlohmann::ordered_json rueppel_result_json(const RueppelResult& result) {
  nlohmann::ordered_json out;
  out["k"] = result.degree;
  out["T"] = result.modulus;
  out["lambda"] = result.pair.lambda;
  out["mu"] = result.pair.mu;
  out["expected_mu"] = result.expected_mu;
  return out;
}

}  // namespace decim
