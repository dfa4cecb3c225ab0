#pragma once

#include <string>

#include "decim/lfsr.hpp"
#include "decim/moments.hpp"

#include "json.hpp"

namespace decim {

inline constexpr const char* kMomentCsvHeader =
    "engine,T,p,e_lambda,var_lambda,e_mu,var_mu,se_lambda,se_mu";

// Rationals are serialized as "num/den" strings ("/den" omitted for
// integers) so values round-trip exactly.
nlohmann::ordered_json moment_report_json(const MomentReport& report, bool include_engine = true);
std::string moment_report_csv_row(const MomentReport& report);

nlohmann::ordered_json rueppel_result_json(const RueppelResult& result);

}  // namespace decim
