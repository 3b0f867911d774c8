#include "frob/report_io.hpp"

#include <fstream>
#include <iostream>

#include <json.hpp>

namespace frob {

namespace {

constexpr const char* kColumns =
    "family,m,n,p,s,q,v,indeg_ann,v_over_q,lower_bound,theorem_c,upper_bound_vq,bounds_ok,wall_ms";

struct Cells {
    std::string family, m, n, p, s, q, v, indeg, ratio, lower, theorem, upper, ok, wall;
};

Cells row_cells(const ThresholdReport& r) {
    Cells c;
    c.family = family_name(r.spec.family);
    c.m = std::to_string(r.spec.m);
    c.n = std::to_string(r.spec.n);
    c.p = std::to_string(r.spec.p);
    c.s = std::to_string(r.spec.s);
    c.q = std::to_string(r.q);
    c.lower = std::to_string(r.lower_bound);
    c.theorem = format_ratio(r.theorem_c.num, r.theorem_c.den);
    c.upper = r.upper_bound_vq ? std::to_string(*r.upper_bound_vq) : "";
    c.wall = std::to_string(r.wall_ms);
    if (r.skipped) {
        c.ok = "skipped";
    } else {
        c.v = std::to_string(r.v);
        if (r.indeg_ann) c.indeg = std::to_string(*r.indeg_ann);
        c.ratio = format_ratio(r.v, r.q);
        c.ok = r.bounds_ok ? "true" : "false";
    }
    return c;
}

}  // namespace

std::string format_ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0) throw std::invalid_argument("ratio must be nonnegative");
    std::string out = std::to_string(num / den);
    std::int64_t rem = num % den;
    if (rem == 0) return out;
    out += '.';
    for (int digit = 0; digit < 12 && rem != 0; ++digit) {
        rem *= 10;
        out += static_cast<char>('0' + rem / den);
        rem %= den;
    }
    return out;
}

std::string csv_table(const std::vector<ThresholdReport>& reports) {
    std::string out = std::string(kColumns) + "\n";
    for (const ThresholdReport& r : reports) {
        const Cells c = row_cells(r);
        out += c.family + "," + c.m + "," + c.n + "," + c.p + "," + c.s + "," + c.q + "," + c.v +
               "," + c.indeg + "," + c.ratio + "," + c.lower + "," + c.theorem + "," + c.upper +
               "," + c.ok + "," + c.wall + "\n";
    }
    return out;
}

std::string markdown_table(const std::vector<ThresholdReport>& reports) {
    std::string out = "| family | m | n | p | s | q | v | indeg_ann | v_over_q | lower_bound | "
                      "theorem_c | upper_bound_vq | bounds_ok | wall_ms |\n";
    out += "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const ThresholdReport& r : reports) {
        const Cells c = row_cells(r);
        out += "| " + c.family + " | " + c.m + " | " + c.n + " | " + c.p + " | " + c.s + " | " +
               c.q + " | " + c.v + " | " + c.indeg + " | " + c.ratio + " | " + c.lower + " | " +
               c.theorem + " | " + c.upper + " | " + c.ok + " | " + c.wall + " |\n";
    }
    return out;
}

std::string json_table(const std::vector<ThresholdReport>& reports) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ThresholdReport& r : reports) {
        nlohmann::json row{
            {"family", family_name(r.spec.family)},
            {"m", r.spec.m},
            {"n", r.spec.n},
            {"p", r.spec.p},
            {"s", r.spec.s},
            {"q", r.q},
            {"skipped", r.skipped},
            {"lower_bound", r.lower_bound},
            {"theorem_c", format_ratio(r.theorem_c.num, r.theorem_c.den)},
            {"wall_ms", r.wall_ms},
        };
        row["upper_bound_vq"] =
            r.upper_bound_vq ? nlohmann::json(*r.upper_bound_vq) : nlohmann::json(nullptr);
        if (r.skipped) {
            row["skip_reason"] = r.skip_reason;
        } else {
            row["v"] = r.v;
            row["indeg_ann"] = r.indeg_ann ? nlohmann::json(*r.indeg_ann) : nlohmann::json(nullptr);
            row["v_over_q"] = format_ratio(r.v, r.q);
            row["bounds_ok"] = r.bounds_ok;
            nlohmann::json slices = nlohmann::json::array();
            for (const DegreeSlice& s : r.slice_dims)
                slices.push_back({{"d", s.d}, {"dim", s.dim}, {"rank", s.rank}});
            row["slice_dims"] = std::move(slices);
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", std::move(rows)}}.dump(2) + "\n";
}

std::string render_table(const std::vector<ThresholdReport>& reports, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: return csv_table(reports);
        case OutputFormat::json: return json_table(reports);
        case OutputFormat::markdown: return markdown_table(reports);
    }
    throw std::logic_error("unreachable");
}

void write_table(const std::vector<ThresholdReport>& reports, OutputFormat format,
                 const std::string& path) {
    const std::string text = render_table(reports, format);
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output path '" + path + "'");
    out << text;
    if (!out) throw IoError("write failed for output path '" + path + "'");
}

}  // namespace frob
