#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "apcore/qseries.hpp"

namespace apcore::cli {

enum ExitCode : int { Success = 0, Refuted = 1, UsageError = 2 };

/// Header `n,coefficient`, then one row per exponent 0..trunc.
void write_csv(std::ostream& os, const TruncatedSeries& series);

/// {"schema": 1, "meta": meta, "rows": [[n, c], ...]}. Coefficients that do
/// not fit in 64 bits are written as decimal strings.
nlohmann::json series_json(const TruncatedSeries& series, nlohmann::json meta);

/// Entry point shared by the executable and the tests. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace apcore::cli
