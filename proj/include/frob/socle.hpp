#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frob/layout.hpp"
#include "frob/polynomial.hpp"

namespace frob {

enum class Family { generic, symmetric, pfaffian, maximal_minors, polynomial_ring };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// One requested computation: a ring family, its size, and the Frobenius
/// level q = p^s.
struct FamilySpec {
    Family family = Family::generic;
    std::size_t m = 0, n = 0;  // matrix dimensions; m = n = r for polynomial_ring
    std::uint32_t p = 2;
    unsigned s = 1;

    void validate() const;  // throws std::invalid_argument
    std::int64_t q() const;
    std::size_t var_count() const;
    bool hypersurface() const;
    std::int64_t form_degree() const;  // degree of the defining form (0 for polynomial_ring)
};

FamilySpec make_spec(Family family, std::size_t m, std::size_t n, std::uint32_t p, unsigned s);

struct DegreeSlice {
    std::int64_t d;
    std::int64_t dim;   // dim of the degree-d slice of the truncated ambient ring
    std::int64_t rank;  // rank of the examined span inside it
};

struct ExactRatio {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

struct ThresholdReport {
    FamilySpec spec;
    std::int64_t q = 0;
    bool skipped = false;
    std::string skip_reason;

    std::int64_t v = -1;
    std::optional<std::int64_t> indeg_ann;  // hypersurface families only
    std::int64_t lower_bound = 0;           // r - deg(f); the limit's proven floor
    ExactRatio theorem_c;                   // proven value of the limit
    std::optional<std::int64_t> upper_bound_vq;
    bool bounds_ok = false;
    std::vector<DegreeSlice> slice_dims;
    std::int64_t wall_ms = 0;
};

/// Largest d with a nonzero degree-d component in (S/<f> + m^[q]): scan down
/// from the given start (default (q-1)r) and stop at the first degree where
/// the multiplication map by f is not surjective. The report also carries the
/// annihilator initial degree, computed independently, and the two are checked
/// against v + indeg = (q-1)r.
ThresholdReport v_hypersurface(const ModularPolynomial& f, std::uint32_t p, unsigned s,
                               std::int64_t start_hint = -1);

/// Least degree t with a nonzero annihilator of f in the truncated ring,
/// together with the witness assembled from the first kernel basis vector.
std::pair<std::int64_t, ModularPolynomial> indeg_annihilator(const ModularPolynomial& f,
                                                             std::uint32_t p, unsigned s);

/// Socle degree for the ring cut out by the maximal minors of the generic
/// m x n matrix, computed degreewise from the span of minor * monomial.
ThresholdReport v_determinantal(std::size_t m, std::size_t n, std::uint32_t p, unsigned s);

ThresholdReport v_polynomial_ring(std::size_t r, std::uint32_t p, unsigned s);

/// Family dispatch: builds the defining form, picks the per-family scan start,
/// and fills the bound fields and their pass/fail aggregate.
ThresholdReport compute_report(const FamilySpec& spec);

struct DegenerationRow {
    std::uint16_t t;
    std::int64_t v;
};

struct DegenerationReport {
    std::size_t n = 0;
    std::uint32_t p = 2;
    unsigned s = 1;
    std::int64_t q = 0;
    std::vector<DegenerationRow> rows;  // ascending t; the t = 0 row carries the composed value
    std::int64_t v_free_part = 0;       // socle degree of the scaled-away polynomial factor
    std::int64_t v_determinantal_part = 0;
    std::int64_t v_composed = 0;
    std::int64_t v_direct_t0 = 0;  // from the specialized form over all variables
    bool constant_nonzero_t = false;
    bool semicontinuous = false;  // v(1) <= v(0)
    bool additive_ok = false;     // composed == direct
};

/// Specializes the Pfaffian family x_ij(t) per diagonal-block scaling for each
/// listed residue t and compares socle degrees: equal for all t != 0, and the
/// t = 0 value (obtained both directly and as polynomial-ring + determinantal
/// summands) can only be larger.
DegenerationReport degenerate_pfaffian(std::size_t n, std::uint32_t p, unsigned s,
                                       const std::vector<std::uint16_t>& t_values);

/// One report per spec, in the given order; jobs whose matrices would exceed
/// the memory cap come back marked skipped. threads > 1 runs jobs
/// concurrently, results stay in input order.
std::vector<ThresholdReport> threshold_table(const std::vector<FamilySpec>& specs,
                                             unsigned threads = 1);

}  // namespace frob
