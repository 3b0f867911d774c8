#pragma once

#include <cstdint>
#include <vector>

namespace frob {

/// Integer weight (y_1, ..., y_n) for GL_n combinatorics.
using Weight = std::vector<std::int64_t>;

bool is_dominant(const Weight& y);
bool is_partition(const Weight& y);
std::int64_t weight_size(const Weight& y);

/// Coefficients over the fundamental weights: a_i = y_i - y_{i+1} for i < n,
/// a_n = y_n. Requires a dominant weight.
std::vector<std::int64_t> to_fundamental(const Weight& y);
Weight from_fundamental(const std::vector<std::int64_t>& a);

bool is_p_restricted(const Weight& y, std::uint32_t p);

struct PAdicDecomposition {
    std::uint32_t p;
    std::vector<Weight> layers;  // lambda = sum p^i * layers[i]
    bool tail_unrestricted;      // last layer absorbs the remainder
};

/// Unique expansion with every layer p-restricted (base-p digits of the
/// fundamental coordinates).
PAdicDecomposition p_adic_decompose(const Weight& lambda, std::uint32_t p);

/// Variant with layers 0..s-1 p-restricted and layer s an arbitrary partition
/// absorbing the remainder.
PAdicDecomposition p_adic_decompose_tail(const Weight& lambda, std::uint32_t p, unsigned s);

/// True when the simple module labeled lambda cannot occur in any tensor
/// product L_{p^s mu} (x) L_nu with nu a partition: equivalently, the s-th
/// tail layer of lambda has size strictly below |mu|. mu must be p-restricted.
bool occurrence_excluded(const Weight& lambda, const Weight& mu, unsigned s, std::uint32_t p);

/// Rank of the Schur module S_lambda of an n-dimensional space, by the
/// factorial dimension formula prod_{i<j} (l_i - l_j + j - i)/(j - i).
std::int64_t weyl_dimension(const Weight& lambda, std::size_t n);

struct EulerCharacteristic {
    bool zero = false;
    int sign = 1;                // (-1)^inversions when nonzero
    std::size_t inversions = 0;  // length of the sorting permutation
    Weight mu;                   // dominant weight after the shifted sort
    std::int64_t dim = 0;
};

/// Alternating sum of the cohomology of the flag-variety line bundle O(y),
/// valid in every characteristic: shift by rho = (n-1, ..., 0), report ZERO on
/// a repeated entry, otherwise sort with sign and unshift.
EulerCharacteristic euler_characteristic(const Weight& y, std::size_t n);

/// Hypothesis test |lambda| <= (n-1-j)q - 1 and e >= (1+j)q under which the
/// cohomology H^k of O(lambda_1, ..., lambda_{n-1}, e) vanishes for k <= j.
/// lambda is a partition with at most n-1 parts; q must be a prime power.
/// A false return carries no non-vanishing claim.
bool vanishing_window(const Weight& lambda, std::int64_t e, std::size_t n, std::int64_t q,
                      std::int64_t j);

}  // namespace frob
