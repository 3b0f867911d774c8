// Command-line front end: socle degrees v_R(q) for the determinant and
// Pfaffian families over small prime fields, annihilator witnesses,
// degeneration tables, and weight combinatorics.

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frob/report_io.hpp"
#include "frob/run_config.hpp"
#include "frob/slice_basis.hpp"
#include "frob/socle.hpp"
#include "frob/weights.hpp"

namespace {

frob::Weight parse_weight(const std::string& text) {
    frob::Weight w;
    std::string::size_type pos = 0;
    while (pos <= text.size()) {
        const auto next = text.find(',', pos);
        const std::string part =
            next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
        try {
            w.push_back(std::stoll(part));
        } catch (const std::exception&) {
            throw frob::UsageError("bad weight entry '" + part + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (w.empty()) throw frob::UsageError("empty weight");
    return w;
}

std::string weight_to_string(const frob::Weight& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out;
}

frob::FamilySpec spec_from_args(const std::string& family_name,
                                const std::vector<std::size_t>& sizes, std::uint32_t p,
                                unsigned s) {
    const auto fam = frob::family_from_name(family_name);
    if (!fam) throw frob::UsageError("unknown family '" + family_name + "'");
    std::size_t m, n;
    if (sizes.size() == 1) {
        m = n = sizes[0];
    } else if (sizes.size() == 2) {
        m = sizes[0];
        n = sizes[1];
    } else {
        throw frob::UsageError("expected one or two size arguments");
    }
    try {
        return frob::make_spec(*fam, m, n, p, s);
    } catch (const std::invalid_argument& e) {
        throw frob::UsageError(e.what());
    }
}

int cmd_vr(const frob::FamilySpec& spec) {
    const auto reports = frob::threshold_table({spec}, 1);
    std::cout << frob::csv_table(reports);
    return reports[0].skipped ? 4 : 0;
}

int cmd_scan(const frob::RunConfig& config) {
    config.validate();
    frob::set_memory_cap(config.mem_cap);
    const auto reports = frob::threshold_table(config.expand_jobs(), config.threads);
    frob::write_table(reports, config.format, config.output_path);
    for (const auto& r : reports)
        if (r.skipped) return 4;
    return 0;
}

int cmd_annihilator(const frob::FamilySpec& spec) {
    if (!spec.hypersurface())
        throw frob::UsageError("annihilator reports need a hypersurface family "
                               "(generic, symmetric, pfaffian)");
    frob::VariableLayout layout = spec.family == frob::Family::generic
                                      ? frob::VariableLayout::generic(spec.m, spec.n)
                                  : spec.family == frob::Family::symmetric
                                      ? frob::VariableLayout::symmetric(spec.n)
                                      : frob::VariableLayout::skew(spec.n);
    const frob::ModularPolynomial f = frob::build_family_polynomial(layout, spec.p);
    const std::int64_t q = spec.q();
    const auto [indeg, witness] = frob::indeg_annihilator(f, spec.p, spec.s);

    std::cout << "family=" << frob::family_name(spec.family) << " m=" << spec.m << " n=" << spec.n
              << " p=" << spec.p << " s=" << spec.s << " q=" << q << "\n";
    std::cout << "indeg=" << indeg << "\n";
    std::cout << "witness=" << frob::to_string(witness, layout.labels()) << "\n";
    std::cout << "witness_nonzero=" << (witness.is_zero() ? "false" : "true") << "\n";
    std::cout << "witness_annihilates="
              << (frob::multiply(witness, f, static_cast<std::uint32_t>(q)).is_zero() ? "true"
                                                                                      : "false")
              << "\n";
    if (spec.family == frob::Family::symmetric && spec.p == 2) {
        const unsigned half = static_cast<unsigned>(q / 2);
        frob::ModularPolynomial g =
            frob::poly_pow(f, half - 1, static_cast<std::uint32_t>(q));
        g = frob::multiply_reduce(
            g, frob::Monomial::variable(f.vars(), 0, static_cast<std::uint8_t>(half)),
            static_cast<std::uint32_t>(q));
        const std::int64_t g_degree =
            static_cast<std::int64_t>(spec.n) * (q / 2 - 1) + q / 2;
        std::cout << "closed_form_degree=" << g_degree << "\n";
        std::cout << "closed_form_nonzero=" << (g.is_zero() ? "false" : "true") << "\n";
        std::cout << "closed_form_annihilates="
                  << (frob::multiply(g, f, static_cast<std::uint32_t>(q)).is_zero() ? "true"
                                                                                    : "false")
                  << "\n";
    }
    return 0;
}

int cmd_degenerate(std::size_t n, std::uint32_t p, unsigned s) {
    std::vector<std::uint16_t> ts;
    for (std::uint32_t t = 0; t < p; ++t) ts.push_back(static_cast<std::uint16_t>(t));
    frob::DegenerationReport rep;
    try {
        rep = frob::degenerate_pfaffian(n, p, s, ts);
    } catch (const std::invalid_argument& e) {
        throw frob::UsageError(e.what());
    }
    std::cout << "t,v\n";
    for (const auto& row : rep.rows) std::cout << row.t << "," << row.v << "\n";
    std::cout << "free_part=" << rep.v_free_part << "\n";
    std::cout << "determinantal_part=" << rep.v_determinantal_part << "\n";
    std::cout << "composed=" << rep.v_composed << "\n";
    std::cout << "direct_t0=" << rep.v_direct_t0 << "\n";
    std::cout << "constant_nonzero_t=" << (rep.constant_nonzero_t ? "true" : "false") << "\n";
    std::cout << "semicontinuous=" << (rep.semicontinuous ? "true" : "false") << "\n";
    std::cout << "additive_ok=" << (rep.additive_ok ? "true" : "false") << "\n";
    return 0;
}

int cmd_hilbert(std::size_t r, std::uint32_t q) {
    const auto series = frob::truncated_hilbert_series(r, q);
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << series[i];
    }
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"socle degrees of Frobenius-power quotients for determinantal and Pfaffian "
                 "hypersurface rings over F_p"};
    app.require_subcommand(1);
    std::function<int()> action;

    // vr
    std::string vr_family;
    std::vector<std::size_t> vr_sizes;
    std::uint32_t vr_p = 2;
    unsigned vr_s = 1;
    std::uint64_t vr_cap = 0;
    auto* vr = app.add_subcommand("vr", "compute one socle-degree report row");
    vr->add_option("family", vr_family, "generic | symmetric | pfaffian | maximal_minors | "
                                        "polynomial_ring")->required();
    vr->add_option("size", vr_sizes, "n, or m n")->required()->expected(1, 2);
    vr->add_option("--p", vr_p, "prime")->required();
    vr->add_option("--s", vr_s, "Frobenius exponent, q = p^s")->required();
    vr->add_option("--mem-cap", vr_cap, "memory cap in bytes");
    vr->callback([&] {
        action = [&]() -> int {
            frob::RunConfig env_only;
            frob::apply_environment(env_only);
            if (vr_cap && vr_cap < std::uint64_t{64} * 1024 * 1024)
                throw frob::UsageError("memory cap must be at least 64 MiB");
            frob::set_memory_cap(vr_cap ? vr_cap : env_only.mem_cap);
            return cmd_vr(spec_from_args(vr_family, vr_sizes, vr_p, vr_s));
        };
    });

    // scan
    std::string scan_config, scan_families, scan_primes, scan_format, scan_output;
    unsigned scan_smax = 0, scan_threads = 0;
    std::uint64_t scan_cap = 0;
    auto* scan = app.add_subcommand("scan", "emit a table of reports over family/prime ranges");
    scan->add_option("--config", scan_config, "key = value config file");
    scan->add_option("--families", scan_families, "e.g. 'symmetric:2,3;maximal_minors:3x2'");
    scan->add_option("--primes", scan_primes, "comma-separated primes");
    scan->add_option("--s-max", scan_smax, "run s = 1..s_max");
    scan->add_option("--threads", scan_threads, "worker threads");
    scan->add_option("--mem-cap", scan_cap, "memory cap in bytes");
    scan->add_option("--format", scan_format, "csv | json | markdown");
    scan->add_option("--output", scan_output, "output path (default stdout)");
    scan->callback([&] {
        action = [&]() -> int {
            frob::RunConfig config;
            if (!scan_config.empty()) frob::apply_config_file(config, scan_config);
            frob::apply_environment(config);
            if (!scan_families.empty()) config.families = frob::parse_families(scan_families);
            if (!scan_primes.empty()) config.primes = frob::parse_primes(scan_primes);
            if (scan_smax) config.s_max = scan_smax;
            if (scan_threads) config.threads = scan_threads;
            if (scan_cap) config.mem_cap = scan_cap;
            if (!scan_format.empty()) config.format = frob::output_format_from_name(scan_format);
            if (!scan_output.empty()) config.output_path = scan_output;
            return cmd_scan(config);
        };
    });

    // annihilator
    std::string ann_family;
    std::vector<std::size_t> ann_sizes;
    std::uint32_t ann_p = 2;
    unsigned ann_s = 1;
    auto* ann = app.add_subcommand("annihilator", "minimal-degree annihilator of the defining form");
    ann->add_option("family", ann_family, "generic | symmetric | pfaffian")->required();
    ann->add_option("size", ann_sizes, "n")->required()->expected(1, 2);
    ann->add_option("--p", ann_p, "prime")->required();
    ann->add_option("--s", ann_s, "Frobenius exponent")->required();
    ann->callback([&] {
        action = [&]() -> int {
            frob::RunConfig env_only;
            frob::apply_environment(env_only);
            frob::set_memory_cap(env_only.mem_cap);
            return cmd_annihilator(spec_from_args(ann_family, ann_sizes, ann_p, ann_s));
        };
    });

    // degenerate
    std::size_t deg_n = 4;
    std::uint32_t deg_p = 2;
    unsigned deg_s = 1;
    auto* deg = app.add_subcommand("degenerate", "Pfaffian block-scaling degeneration table");
    deg->add_option("n", deg_n, "even matrix size")->required();
    deg->add_option("--p", deg_p, "prime")->required();
    deg->add_option("--s", deg_s, "Frobenius exponent")->required();
    deg->callback([&] {
        action = [&]() -> int {
            frob::RunConfig env_only;
            frob::apply_environment(env_only);
            frob::set_memory_cap(env_only.mem_cap);
            return cmd_degenerate(deg_n, deg_p, deg_s);
        };
    });

    // weights
    auto* weights = app.add_subcommand("weights", "GL_n weight combinatorics");
    weights->require_subcommand(1);

    std::string wf_weight;
    auto* wf = weights->add_subcommand("fundamental", "fundamental-weight coordinates");
    wf->add_option("weight", wf_weight, "comma-separated entries")->required();
    wf->callback([&] {
        action = [&]() -> int {
            try {
                const auto a = frob::to_fundamental(parse_weight(wf_weight));
                std::cout << weight_to_string(a) << "\n";
            } catch (const std::domain_error& e) {
                throw frob::UsageError(e.what());
            }
            return 0;
        };
    });

    std::string wp_weight;
    std::uint32_t wp_p = 2;
    auto* wp = weights->add_subcommand("padic", "p-restricted layer decomposition");
    wp->add_option("weight", wp_weight, "partition")->required();
    wp->add_option("--p", wp_p, "prime")->required();
    wp->callback([&] {
        action = [&]() -> int {
            try {
                const auto dec = frob::p_adic_decompose(parse_weight(wp_weight), wp_p);
                std::string out;
                std::int64_t power = 1;
                for (std::size_t i = 0; i < dec.layers.size(); ++i, power *= wp_p) {
                    if (i) out += " + ";
                    if (i) out += std::to_string(power) + "*";
                    out += "(" + weight_to_string(dec.layers[i]) + ")";
                }
                std::cout << out << "\n";
            } catch (const std::domain_error& e) {
                throw frob::UsageError(e.what());
            }
            return 0;
        };
    });

    std::string we_weight;
    auto* we = weights->add_subcommand("euler", "Euler characteristic of a flag line bundle");
    we->add_option("weight", we_weight, "length-n weight")->required();
    we->callback([&] {
        action = [&]() -> int {
            const frob::Weight y = parse_weight(we_weight);
            const auto chi = frob::euler_characteristic(y, y.size());
            if (chi.zero)
                std::cout << "ZERO\n";
            else
                std::cout << "sign=" << chi.sign << " partition=" << weight_to_string(chi.mu)
                          << " dim=" << chi.dim << "\n";
            return 0;
        };
    });

    std::string ww_weight;
    std::int64_t ww_e = 0, ww_q = 2, ww_j = 0;
    std::size_t ww_n = 2;
    auto* ww = weights->add_subcommand("window", "cohomology vanishing hypothesis test");
    ww->add_option("weight", ww_weight, "partition with at most n-1 parts")->required();
    ww->add_option("--e", ww_e, "last weight entry")->required();
    ww->add_option("--n", ww_n, "flag size")->required();
    ww->add_option("--q", ww_q, "prime power")->required();
    ww->add_option("--j", ww_j, "vanishing range H^0..H^j")->required();
    ww->callback([&] {
        action = [&]() -> int {
            try {
                const bool inside =
                    frob::vanishing_window(parse_weight(ww_weight), ww_e, ww_n, ww_q, ww_j);
                std::cout << (inside ? "true" : "false") << "\n";
            } catch (const std::domain_error& e) {
                throw frob::UsageError(e.what());
            } catch (const std::invalid_argument& e) {
                throw frob::UsageError(e.what());
            }
            return 0;
        };
    });

    // hilbert
    std::size_t hb_r = 1;
    std::uint32_t hb_q = 2;
    auto* hb = app.add_subcommand("hilbert", "dimension series of the truncated ring");
    hb->add_option("r", hb_r, "variable count")->required();
    hb->add_option("q", hb_q, "level, exponents < q")->required();
    hb->callback([&] { action = [&]() -> int { return cmd_hilbert(hb_r, hb_q); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const frob::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const frob::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const frob::MemoryCapError& e) {
        std::cerr << "skipped: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
