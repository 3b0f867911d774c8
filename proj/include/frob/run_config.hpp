#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frob/socle.hpp"

namespace frob {

/// Bad user input (flags, config file, environment overrides).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Output path problems.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class OutputFormat { csv, json, markdown };

OutputFormat output_format_from_name(const std::string& name);

struct FamilyRequest {
    Family family;
    std::vector<std::pair<std::size_t, std::size_t>> sizes;  // (m, n) pairs
};

/// Scan configuration. Assembled from defaults, then a key = value config
/// file, then the FROBTHRESH_THREADS / FROBTHRESH_MEM_CAP environment
/// overrides, then command-line flags (flags win).
struct RunConfig {
    std::vector<FamilyRequest> families;
    std::vector<std::uint32_t> primes{2};
    unsigned s_max = 1;
    unsigned threads = 1;
    std::size_t mem_cap = std::size_t{4} * 1024 * 1024 * 1024;
    OutputFormat format = OutputFormat::csv;
    std::string output_path;  // empty: stdout

    void validate() const;  // throws UsageError
    std::vector<FamilySpec> expand_jobs() const;  // sorted by (family, m, n, p, s)
};

/// "family:size,size;family:size" where size is "n" or "mxn".
std::vector<FamilyRequest> parse_families(const std::string& text);
std::vector<std::uint32_t> parse_primes(const std::string& text);

void apply_config_file(RunConfig& config, const std::string& path);
void apply_environment(RunConfig& config);

}  // namespace frob
