#include "frob/socle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "frob/slice_basis.hpp"

namespace frob {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::int64_t checked_pow(std::uint32_t p, unsigned s) {
    std::int64_t q = 1;
    for (unsigned i = 0; i < s; ++i) {
        if (q > INT64_MAX / p) throw std::overflow_error("p^s exceeds 64 bits");
        q *= p;
    }
    return q;
}

void require_level_fits(std::int64_t q) {
    if (q > 256)
        throw std::invalid_argument("q = " + std::to_string(q) +
                                    " exceeds the byte-exponent cap of 256");
}

ModularPolynomial defining_form(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::generic:
            return build_family_polynomial(VariableLayout::generic(spec.m, spec.n), spec.p);
        case Family::symmetric:
            return build_family_polynomial(VariableLayout::symmetric(spec.n), spec.p);
        case Family::pfaffian:
            return build_family_polynomial(VariableLayout::skew(spec.n), spec.p);
        default:
            throw std::logic_error("family has no single defining form");
    }
}

std::int64_t symmetric_upper_bound(std::size_t n, std::int64_t q) {
    // floor of q(n^2-1)/2 - n(n-1)/2; the numerator is positive
    const std::int64_t nn = static_cast<std::int64_t>(n);
    return (q * (nn * nn - 1) - nn * (nn - 1)) / 2;
}

std::int64_t scan_start(const FamilySpec& spec, std::int64_t q) {
    const std::int64_t m = static_cast<std::int64_t>(spec.m);
    const std::int64_t n = static_cast<std::int64_t>(spec.n);
    switch (spec.family) {
        case Family::generic:
        case Family::maximal_minors:
            return (q - 1) * m * (n - 1);
        case Family::symmetric:
            return symmetric_upper_bound(spec.n, q);
        case Family::pfaffian:
            return (q - 1) * (n * n - 2 * n) / 2;
        case Family::polynomial_ring:
            return (q - 1) * n;
    }
    throw std::logic_error("unreachable");
}

void fill_family_bounds(ThresholdReport& rep) {
    const FamilySpec& spec = rep.spec;
    const std::int64_t q = rep.q;
    const std::int64_t m = static_cast<std::int64_t>(spec.m);
    const std::int64_t n = static_cast<std::int64_t>(spec.n);
    const std::int64_t r = static_cast<std::int64_t>(spec.var_count());

    switch (spec.family) {
        case Family::generic:
            rep.lower_bound = n * n - n;
            rep.theorem_c = {n * n - n, 1};
            rep.upper_bound_vq = (q - 1) * m * (n - 1);
            break;
        case Family::symmetric:
            rep.lower_bound = n * (n - 1) / 2;
            rep.theorem_c = {n * n - 1, 2};
            rep.upper_bound_vq = symmetric_upper_bound(spec.n, q);
            break;
        case Family::pfaffian:
            rep.lower_bound = (n * n - 2 * n) / 2;
            rep.theorem_c = {(n * n - 2 * n) / 2, 1};
            rep.upper_bound_vq = (q - 1) * (n * n - 2 * n) / 2;
            break;
        case Family::maximal_minors:
            rep.lower_bound = m * (n - 1);
            rep.theorem_c = {m * (n - 1), 1};
            rep.upper_bound_vq = (q - 1) * m * (n - 1);
            break;
        case Family::polynomial_ring:
            rep.lower_bound = n;
            rep.theorem_c = {n, 1};
            rep.upper_bound_vq = (q - 1) * n;
            break;
    }
    if (rep.skipped) return;

    bool ok = rep.v <= (q - 1) * r;
    if (rep.upper_bound_vq) ok = ok && rep.v <= *rep.upper_bound_vq;
    if (spec.family == Family::symmetric) {
        if (spec.p == 2)
            ok = ok && rep.v == symmetric_upper_bound(spec.n, q);
        else
            ok = ok && rep.v >= (n * n - 1) * (q - 1) / 2;
    }
    if (spec.family == Family::polynomial_ring) ok = ok && rep.v == (q - 1) * n;
    if (rep.indeg_ann) ok = ok && rep.v + *rep.indeg_ann == (q - 1) * r;
    rep.bounds_ok = ok;
}

// variable sits in one of the two diagonal m x m blocks of the 2m x 2m matrix
bool block_variable(const VariableLayout& skew, std::size_t var, std::size_t m) {
    const auto [i, j] = skew.cell(var);
    return (i < m && j < m) || (i >= m && j >= m);
}

ModularPolynomial specialize_blocks(const ModularPolynomial& pf, const VariableLayout& skew,
                                    std::size_t m, std::uint16_t t) {
    ModularPolynomial out(pf.modulus(), pf.vars());
    const std::uint32_t p = pf.modulus();
    for (const auto& [mono, c] : pf) {
        std::uint32_t scale = 1;
        for (std::size_t v = 0; v < mono.vars() && scale != 0; ++v) {
            if (mono.exp(v) == 0 || !block_variable(skew, v, m)) continue;
            for (std::uint8_t e = 0; e < mono.exp(v); ++e) scale = scale * t % p;
        }
        if (scale) out.add_term(mono, static_cast<std::int64_t>(scale) * c);
    }
    return out;
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::generic: return "generic";
        case Family::symmetric: return "symmetric";
        case Family::pfaffian: return "pfaffian";
        case Family::maximal_minors: return "maximal_minors";
        case Family::polynomial_ring: return "polynomial_ring";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::generic, Family::symmetric, Family::pfaffian, Family::maximal_minors,
                     Family::polynomial_ring})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

void FamilySpec::validate() const {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (s < 1) throw std::invalid_argument("Frobenius exponent s must be at least 1");
    switch (family) {
        case Family::generic:
            if (m != n)
                throw std::invalid_argument(
                    "the generic determinant family is square; use maximal_minors for m != n");
            if (n < 1 || n > 6) throw std::invalid_argument("generic size must be in [1, 6]");
            break;
        case Family::symmetric:
            if (m != n) throw std::invalid_argument("symmetric matrices are square");
            if (n < 1 || n > 6) throw std::invalid_argument("symmetric size must be in [1, 6]");
            break;
        case Family::pfaffian:
            if (m != n) throw std::invalid_argument("skew matrices are square");
            if (n % 2 != 0) throw std::invalid_argument("Pfaffian needs even size");
            if (n < 2 || n > 6) throw std::invalid_argument("Pfaffian size must be in {2, 4, 6}");
            break;
        case Family::maximal_minors:
            if (m < n || n < 1) throw std::invalid_argument("maximal_minors needs m >= n >= 1");
            if (n > 6) throw std::invalid_argument("minor size must be at most 6");
            if (m > 12) throw std::invalid_argument("row count must be at most 12");
            break;
        case Family::polynomial_ring:
            if (m != n || n < 1)
                throw std::invalid_argument("polynomial_ring takes one positive size r");
            break;
    }
}

std::int64_t FamilySpec::q() const { return checked_pow(p, s); }

std::size_t FamilySpec::var_count() const {
    switch (family) {
        case Family::generic:
        case Family::maximal_minors:
            return m * n;
        case Family::symmetric:
            return n * (n + 1) / 2;
        case Family::pfaffian:
            return n * (n - 1) / 2;
        case Family::polynomial_ring:
            return n;
    }
    return 0;
}

bool FamilySpec::hypersurface() const {
    return family == Family::generic || family == Family::symmetric ||
           family == Family::pfaffian;
}

std::int64_t FamilySpec::form_degree() const {
    switch (family) {
        case Family::generic:
        case Family::symmetric:
        case Family::maximal_minors:
            return static_cast<std::int64_t>(n);
        case Family::pfaffian:
            return static_cast<std::int64_t>(n) / 2;
        case Family::polynomial_ring:
            return 0;
    }
    return 0;
}

FamilySpec make_spec(Family family, std::size_t m, std::size_t n, std::uint32_t p, unsigned s) {
    FamilySpec spec{family, m, n, p, s};
    spec.validate();
    return spec;
}

std::pair<std::int64_t, ModularPolynomial> indeg_annihilator(const ModularPolynomial& f,
                                                             std::uint32_t p, unsigned s) {
    if (f.modulus() != p) throw std::invalid_argument("modulus mismatch");
    if (s < 1) throw std::invalid_argument("Frobenius exponent s must be at least 1");
    if (f.is_zero()) throw std::invalid_argument("degenerate input: the zero form");
    if (!f.is_homogeneous() || f.degree() < 1)
        throw std::invalid_argument("need a homogeneous form of positive degree");
    const std::int64_t q = checked_pow(p, s);
    require_level_fits(q);
    const std::size_t r = f.vars();
    const std::int64_t top = (q - 1) * static_cast<std::int64_t>(r);

    for (std::int64_t d = 0; d <= top; ++d) {
        const GfpMatrix map = mult_map_matrix(f, static_cast<std::uint32_t>(q), d);
        const auto kernel = map.kernel_basis();
        if (kernel.empty()) continue;

        const SliceBasis basis(r, static_cast<std::uint32_t>(q), d);
        ModularPolynomial witness(p, r);
        for (std::size_t j = 0; j < kernel[0].size(); ++j)
            if (kernel[0][j]) witness.add_term(basis[j], kernel[0][j]);
        if (witness.is_zero() || !multiply(witness, f, static_cast<std::uint32_t>(q)).is_zero())
            throw std::logic_error("kernel vector fails the annihilator check");
        return {d, witness};
    }
    throw std::logic_error("no annihilator up to the socle degree");
}

ThresholdReport v_hypersurface(const ModularPolynomial& f, std::uint32_t p, unsigned s,
                               std::int64_t start_hint) {
    const auto t0 = Clock::now();
    if (f.modulus() != p) throw std::invalid_argument("modulus mismatch");
    if (s < 1) throw std::invalid_argument("Frobenius exponent s must be at least 1");
    if (f.is_zero())
        throw std::invalid_argument("degenerate input: the zero form defines the ambient ring");
    if (!f.is_homogeneous() || f.degree() < 1)
        throw std::invalid_argument("need a homogeneous form of positive degree");

    const std::int64_t q = checked_pow(p, s);
    require_level_fits(q);
    const std::size_t r = f.vars();
    const std::int64_t k = f.degree();
    const std::int64_t top = (q - 1) * static_cast<std::int64_t>(r);
    std::int64_t start = (start_hint < 0 || start_hint > top) ? top : start_hint;

    ThresholdReport rep;
    rep.q = q;
    rep.v = -1;
    for (std::int64_t d = start; d >= 0; --d) {
        const std::int64_t dim = truncated_dimension(r, static_cast<std::uint32_t>(q), d);
        if (dim == 0) continue;
        const std::int64_t rank =
            d >= k ? static_cast<std::int64_t>(
                         mult_map_matrix(f, static_cast<std::uint32_t>(q), d - k).rank())
                   : 0;
        rep.slice_dims.push_back({d, dim, rank});
        if (rank < dim) {
            rep.v = d;
            break;
        }
    }
    if (rep.v < 0) throw std::logic_error("no nonzero graded component found");

    const auto [indeg, witness] = indeg_annihilator(f, p, s);
    (void)witness;
    rep.indeg_ann = indeg;
    if (rep.v + indeg != top)
        throw std::logic_error("socle degree and annihilator degree break the duality identity");
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

ThresholdReport v_determinantal(std::size_t m, std::size_t n, std::uint32_t p, unsigned s) {
    const auto t0 = Clock::now();
    const FamilySpec spec = make_spec(Family::maximal_minors, m, n, p, s);
    const std::int64_t q = spec.q();
    require_level_fits(q);
    const std::size_t r = spec.var_count();
    const std::int64_t top = (q - 1) * static_cast<std::int64_t>(r);
    const std::int64_t k = static_cast<std::int64_t>(n);

    const std::vector<ModularPolynomial> minors = maximal_minors(m, n, p);

    ThresholdReport rep;
    rep.spec = spec;
    rep.q = q;
    rep.v = -1;
    std::int64_t start = std::min(top, scan_start(spec, q));
    for (std::int64_t d = start; d >= 0; --d) {
        const std::int64_t dim = truncated_dimension(r, static_cast<std::uint32_t>(q), d);
        if (dim == 0) continue;
        std::int64_t rank = 0;
        if (d >= k) {
            const SliceBasis src(r, static_cast<std::uint32_t>(q), d - k);
            const SliceBasis tgt(r, static_cast<std::uint32_t>(q), d);
            require_budget(
                matrix_footprint_bytes(p, tgt.size(), minors.size() * src.size()),
                "degree-" + std::to_string(d) + " minor span (" + std::to_string(tgt.size()) +
                    "x" + std::to_string(minors.size() * src.size()) + " over F_" +
                    std::to_string(p) + ")");
            std::vector<std::vector<std::uint16_t>> columns;
            columns.reserve(minors.size() * src.size());
            for (const auto& g : minors)
                for (std::size_t u = 0; u < src.size(); ++u) {
                    const ModularPolynomial prod =
                        multiply_reduce(g, src[u], static_cast<std::uint32_t>(q));
                    std::vector<std::uint16_t> col(tgt.size(), 0);
                    for (const auto& [mono, c] : prod) {
                        const auto idx = tgt.index_of(mono);
                        if (!idx) throw std::logic_error("product missing from the target slice");
                        col[*idx] = c;
                    }
                    columns.push_back(std::move(col));
                }
            rank = static_cast<std::int64_t>(rank_of_column_stack(columns, p));
        }
        rep.slice_dims.push_back({d, dim, rank});
        if (rank < dim) {
            rep.v = d;
            break;
        }
    }
    if (rep.v < 0) throw std::logic_error("no nonzero graded component found");
    rep.wall_ms = elapsed_ms(t0);
    fill_family_bounds(rep);
    return rep;
}

ThresholdReport v_polynomial_ring(std::size_t r, std::uint32_t p, unsigned s) {
    const FamilySpec spec = make_spec(Family::polynomial_ring, r, r, p, s);
    ThresholdReport rep;
    rep.spec = spec;
    rep.q = spec.q();
    rep.v = (rep.q - 1) * static_cast<std::int64_t>(r);
    fill_family_bounds(rep);
    return rep;
}

ThresholdReport compute_report(const FamilySpec& spec) {
    spec.validate();
    if (spec.family == Family::polynomial_ring) return v_polynomial_ring(spec.n, spec.p, spec.s);
    if (spec.family == Family::maximal_minors)
        return v_determinantal(spec.m, spec.n, spec.p, spec.s);

    const auto t0 = Clock::now();
    const ModularPolynomial f = defining_form(spec);
    const std::int64_t q = spec.q();
    ThresholdReport rep = v_hypersurface(f, spec.p, spec.s, scan_start(spec, q));
    rep.spec = spec;
    rep.wall_ms = elapsed_ms(t0);
    fill_family_bounds(rep);
    return rep;
}

DegenerationReport degenerate_pfaffian(std::size_t n, std::uint32_t p, unsigned s,
                                       const std::vector<std::uint16_t>& t_values) {
    if (n % 2 != 0 || n < 2) throw std::invalid_argument("Pfaffian degeneration needs even n");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (s < 1) throw std::invalid_argument("Frobenius exponent s must be at least 1");

    std::vector<std::uint16_t> ts = t_values;
    for (std::uint16_t t : ts)
        if (t >= p) throw std::invalid_argument("t values must be residues in [0, p)");
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    if (ts.empty() || ts.front() != 0 || std::find(ts.begin(), ts.end(), 1) == ts.end())
        throw std::invalid_argument("t values must include 0 and 1");

    const std::size_t m = n / 2;
    const VariableLayout skew = VariableLayout::skew(n);
    const ModularPolynomial pf = build_family_polynomial(skew, p);
    const std::int64_t q = checked_pow(p, s);
    const std::int64_t hint = (q - 1) * static_cast<std::int64_t>(n * n - 2 * n) / 2;

    DegenerationReport out;
    out.n = n;
    out.p = p;
    out.s = s;
    out.q = q;

    // the two diagonal blocks kill m(m-1) variables at t = 0
    const std::int64_t free_vars = static_cast<std::int64_t>(m) * (m - 1);
    out.v_free_part = (q - 1) * free_vars;
    out.v_determinantal_part = v_determinantal(m, m, p, s).v;
    out.v_composed = out.v_free_part + out.v_determinantal_part;

    const ModularPolynomial f0 = specialize_blocks(pf, skew, m, 0);
    out.v_direct_t0 = v_hypersurface(f0, p, s, hint).v;
    out.additive_ok = out.v_direct_t0 == out.v_composed;

    std::optional<std::int64_t> v_nonzero;
    out.constant_nonzero_t = true;
    for (std::uint16_t t : ts) {
        if (t == 0) {
            out.rows.push_back({0, out.v_composed});
            continue;
        }
        const ModularPolynomial ft = specialize_blocks(pf, skew, m, t);
        const std::int64_t v = v_hypersurface(ft, p, s, hint).v;
        out.rows.push_back({t, v});
        if (v_nonzero && *v_nonzero != v) out.constant_nonzero_t = false;
        v_nonzero = v;
    }
    out.semicontinuous = v_nonzero && *v_nonzero <= out.rows.front().v;
    return out;
}

std::vector<ThresholdReport> threshold_table(const std::vector<FamilySpec>& specs,
                                             unsigned threads) {
    std::vector<ThresholdReport> out(specs.size());
    auto run_one = [&](std::size_t i) {
        ThresholdReport rep;
        rep.spec = specs[i];
        try {
            out[i] = compute_report(specs[i]);
            return;
        } catch (const std::exception& e) {
            rep.skipped = true;
            rep.skip_reason = e.what();
        }
        try {
            rep.q = specs[i].q();
            fill_family_bounds(rep);
        } catch (const std::exception&) {
        }
        out[i] = rep;
    };
    if (threads <= 1 || specs.size() <= 1) {
        for (std::size_t i = 0; i < specs.size(); ++i) run_one(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(threads, specs.size());
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1))
                run_one(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace frob
