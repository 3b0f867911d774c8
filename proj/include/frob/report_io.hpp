#pragma once

#include <string>
#include <vector>

#include "frob/run_config.hpp"
#include "frob/socle.hpp"

namespace frob {

/// Exact decimal when num/den terminates within 12 fractional digits,
/// truncated at 12 digits otherwise.
std::string format_ratio(std::int64_t num, std::int64_t den);

std::string csv_table(const std::vector<ThresholdReport>& reports);
std::string markdown_table(const std::vector<ThresholdReport>& reports);
std::string json_table(const std::vector<ThresholdReport>& reports);

std::string render_table(const std::vector<ThresholdReport>& reports, OutputFormat format);

/// Writes to the path, or to stdout when the path is empty. Throws IoError.
void write_table(const std::vector<ThresholdReport>& reports, OutputFormat format,
                 const std::string& path);

}  // namespace frob
