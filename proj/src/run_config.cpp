#include "frob/run_config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <tuple>

namespace frob {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string::size_type pos = 0;
    while (pos <= s.size()) {
        const auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("bad " + what + ": '" + text + "'");
    try {
        return std::stoull(t);
    } catch (const std::exception&) {
        throw UsageError("bad " + what + ": '" + text + "'");
    }
}

}  // namespace

OutputFormat output_format_from_name(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    if (name == "markdown") return OutputFormat::markdown;
    throw UsageError("unknown output format '" + name + "' (csv, json, markdown)");
}

std::vector<FamilyRequest> parse_families(const std::string& text) {
    std::vector<FamilyRequest> out;
    for (const std::string& raw : split(text, ';')) {
        const std::string entry = trim(raw);
        if (entry.empty()) continue;
        const auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw UsageError("family entry '" + entry + "' needs the form name:size[,size...]");
        const std::string name = trim(entry.substr(0, colon));
        const auto fam = family_from_name(name);
        if (!fam) throw UsageError("unknown family '" + name + "'");
        FamilyRequest req{*fam, {}};
        for (const std::string& raw_size : split(entry.substr(colon + 1), ',')) {
            const std::string size = trim(raw_size);
            if (size.empty()) throw UsageError("empty size in family entry '" + entry + "'");
            const auto x = size.find('x');
            if (x != std::string::npos) {
                const auto m = static_cast<std::size_t>(parse_u64(size.substr(0, x), "size"));
                const auto n = static_cast<std::size_t>(parse_u64(size.substr(x + 1), "size"));
                req.sizes.emplace_back(m, n);
                continue;
            }
            const auto dash = size.find('-');
            std::size_t lo, hi;
            if (dash == std::string::npos) {
                lo = hi = static_cast<std::size_t>(parse_u64(size, "size"));
            } else {
                lo = static_cast<std::size_t>(parse_u64(size.substr(0, dash), "size"));
                hi = static_cast<std::size_t>(parse_u64(size.substr(dash + 1), "size"));
                if (lo > hi) throw UsageError("empty size range '" + size + "'");
            }
            for (std::size_t n = lo; n <= hi; ++n) req.sizes.emplace_back(n, n);
        }
        out.push_back(std::move(req));
    }
    return out;
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
    std::vector<std::uint32_t> out;
    for (const std::string& raw : split(text, ',')) {
        const std::string t = trim(raw);
        if (t.empty()) continue;
        const std::uint64_t p = parse_u64(t, "prime");
        if (p >= (1u << 16) || !is_prime(static_cast<std::uint32_t>(p)))
            throw UsageError("'" + t + "' is not a prime below 2^16");
        out.push_back(static_cast<std::uint32_t>(p));
    }
    if (out.empty()) throw UsageError("prime list is empty");
    return out;
}

void RunConfig::validate() const {
    if (primes.empty()) throw UsageError("prime list is empty");
    for (std::uint32_t p : primes)
        if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    if (s_max < 1) throw UsageError("s_max must be at least 1");
    if (threads < 1) throw UsageError("thread count must be at least 1");
    if (mem_cap < std::size_t{64} * 1024 * 1024)
        throw UsageError("memory cap must be at least 64 MiB");
}

std::vector<FamilySpec> RunConfig::expand_jobs() const {
    std::vector<FamilySpec> jobs;
    for (const FamilyRequest& req : families)
        for (const auto& [m, n] : req.sizes)
            for (std::uint32_t p : primes)
                for (unsigned s = 1; s <= s_max; ++s) {
                    try {
                        jobs.push_back(make_spec(req.family, m, n, p, s));
                    } catch (const std::invalid_argument& e) {
                        throw UsageError(e.what());
                    }
                }
    std::sort(jobs.begin(), jobs.end(), [](const FamilySpec& a, const FamilySpec& b) {
        return std::tuple(static_cast<int>(a.family), a.m, a.n, a.p, a.s) <
               std::tuple(static_cast<int>(b.family), b.m, b.n, b.p, b.s);
    });
    return jobs;
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(lineno) + " is not 'key = value'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key == "families")
            config.families = parse_families(value);
        else if (key == "primes")
            config.primes = parse_primes(value);
        else if (key == "s_max")
            config.s_max = static_cast<unsigned>(parse_u64(value, "s_max"));
        else if (key == "threads")
            config.threads = static_cast<unsigned>(parse_u64(value, "threads"));
        else if (key == "mem_cap")
            config.mem_cap = static_cast<std::size_t>(parse_u64(value, "mem_cap"));
        else if (key == "format")
            config.format = output_format_from_name(value);
        else if (key == "output")
            config.output_path = value;
        else
            throw UsageError("unknown config key '" + key + "'");
    }
}

void apply_environment(RunConfig& config) {
    if (const char* t = std::getenv("FROBTHRESH_THREADS")) {
        config.threads = static_cast<unsigned>(parse_u64(t, "FROBTHRESH_THREADS"));
        if (config.threads < 1) throw UsageError("FROBTHRESH_THREADS must be at least 1");
    }
    if (const char* c = std::getenv("FROBTHRESH_MEM_CAP")) {
        config.mem_cap = static_cast<std::size_t>(parse_u64(c, "FROBTHRESH_MEM_CAP"));
        if (config.mem_cap < std::size_t{64} * 1024 * 1024)
            throw UsageError("FROBTHRESH_MEM_CAP must be at least 64 MiB");
    }
}

}  // namespace frob
