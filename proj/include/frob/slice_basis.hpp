#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "frob/monomial.hpp"

namespace frob {

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Number of degree-d monomials in r variables with every exponent < q:
/// sum over i of (-1)^i C(r,i) C(d-iq+r-1, r-1), terms with d-iq >= 0.
std::int64_t truncated_dimension(std::size_t r, std::uint32_t q, std::int64_t d);

/// Coefficient list of ((1-t^q)/(1-t))^r, length (q-1)r + 1.
std::vector<std::int64_t> truncated_hilbert_series(std::size_t r, std::uint32_t q);

/// All monomials of total degree d in r variables with exponents <= q-1,
/// listed in decreasing graded reverse lexicographic order.
class SliceBasis {
public:
    SliceBasis(std::size_t r, std::uint32_t q, std::int64_t d);

    std::size_t size() const { return monomials_.size(); }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    std::optional<std::uint32_t> index_of(const Monomial& m) const;

    std::size_t var_count() const { return r_; }
    std::uint32_t level() const { return q_; }
    std::int64_t degree() const { return d_; }

private:
    std::size_t r_;
    std::uint32_t q_;
    std::int64_t d_;
    std::vector<Monomial> monomials_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

}  // namespace frob
