#pragma once

// Independent reference computations used to pin expected values: plain
// scalar elimination, brute-force enumeration, tableau counting, exhaustive
// layer search, and full-range socle scans with no early exit.

#include <cstdint>
#include <functional>
#include <vector>

#include "frob/layout.hpp"
#include "frob/polynomial.hpp"
#include "frob/slice_basis.hpp"
#include "frob/socle.hpp"
#include "frob/weights.hpp"

namespace oracle {

// Textbook row reduction on 32-bit residues; no packing, no pivots reuse.
inline std::size_t naive_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
    if (rows.empty()) return 0;
    const std::size_t n_cols = rows[0].size();
    for (auto& row : rows)
        for (auto& x : row) x %= p;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_cols && rank < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rank]);
        // scale pivot row to 1 via brute-force inverse
        std::uint32_t inv = 1;
        for (std::uint32_t c = 1; c < p; ++c)
            if (c * rows[rank][col] % p == 1) {
                inv = c;
                break;
            }
        for (auto& x : rows[rank]) x = x * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const std::uint32_t f = p - rows[i][col];
            for (std::size_t j = 0; j < n_cols; ++j)
                rows[i][j] = (rows[i][j] + f * rows[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

// Count exponent tuples of total degree d with each entry < q by direct
// recursion, no closed form.
inline std::int64_t count_bounded_tuples(std::size_t r, std::uint32_t q, std::int64_t d) {
    if (r == 0) return d == 0 ? 1 : 0;
    std::int64_t total = 0;
    for (std::int64_t e = 0; e < q && e <= d; ++e)
        total += count_bounded_tuples(r - 1, q, d - e);
    return total;
}

// Semistandard tableaux of shape lambda with entries in 1..n: rows weakly
// increase, columns strictly increase.
inline std::int64_t ssyt_count(const std::vector<std::int64_t>& shape, std::size_t n) {
    std::vector<std::vector<std::int64_t>> fill(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) fill[i].assign(shape[i], 0);

    std::function<std::int64_t(std::size_t, std::size_t)> place =
        [&](std::size_t row, std::size_t col) -> std::int64_t {
        if (row == shape.size()) return 1;
        if (col == static_cast<std::size_t>(shape[row])) return place(row + 1, 0);
        std::int64_t lo = 1;
        if (col > 0) lo = std::max(lo, fill[row][col - 1]);
        if (row > 0) lo = std::max(lo, fill[row - 1][col] + 1);
        std::int64_t total = 0;
        for (std::int64_t v = lo; v <= static_cast<std::int64_t>(n); ++v) {
            fill[row][col] = v;
            total += place(row, col + 1);
        }
        fill[row][col] = 0;
        return total;
    };
    return place(0, 0);
}

// All partitions with at most max_parts parts and |lambda| <= max_size,
// including the empty one.
inline std::vector<frob::Weight> partitions_up_to(std::size_t max_parts, std::int64_t max_size) {
    std::vector<frob::Weight> out;
    frob::Weight cur(max_parts, 0);
    std::function<void(std::size_t, std::int64_t, std::int64_t)> gen =
        [&](std::size_t pos, std::int64_t remaining, std::int64_t cap) {
            if (pos == max_parts) {
                out.push_back(cur);
                return;
            }
            for (std::int64_t v = 0; v <= std::min(remaining, cap); ++v) {
                cur[pos] = v;
                gen(pos + 1, remaining - v, v);
            }
            cur[pos] = 0;
        };
    gen(0, max_size, max_size);
    return out;
}

// Count the ways to write lambda = sum_i p^i mu_i with every layer a
// p-restricted partition; records one witness layering.
inline std::int64_t count_restricted_layerings(const frob::Weight& lambda, std::uint32_t p,
                                               std::vector<frob::Weight>* witness = nullptr) {
    const std::size_t n = lambda.size();
    bool all_zero = true;
    for (auto v : lambda) all_zero = all_zero && v == 0;
    if (all_zero) {
        if (witness) witness->clear();
        return 1;
    }

    std::int64_t total = 0;
    frob::Weight mu(n, 0);
    std::function<void(std::size_t)> choose = [&](std::size_t pos) {
        if (pos == n) {
            if (!frob::is_p_restricted(mu, p)) return;
            frob::Weight rest(n);
            for (std::size_t i = 0; i < n; ++i) {
                const std::int64_t diff = lambda[i] - mu[i];
                if (diff < 0 || diff % p != 0) return;
                rest[i] = diff / p;
            }
            if (!frob::is_partition(rest)) return;
            std::vector<frob::Weight> tail;
            const std::int64_t sub = count_restricted_layerings(rest, p, witness ? &tail : nullptr);
            if (sub > 0 && witness && total == 0) {
                witness->clear();
                witness->push_back(mu);
                for (auto& w : tail) witness->push_back(w);
            }
            total += sub;
            return;
        }
        const std::int64_t hi = pos == 0 ? lambda[pos] : std::min(lambda[pos], mu[pos - 1]);
        for (std::int64_t v = 0; v <= hi; ++v) {
            mu[pos] = v;
            choose(pos + 1);
        }
        mu[pos] = 0;
    };
    choose(0);
    return total;
}

// Socle degree by checking every degree of the quotient, largest first wins;
// no start hints, no early exit.
inline std::int64_t exhaustive_v_hypersurface(const frob::ModularPolynomial& f, std::uint32_t p,
                                              unsigned s) {
    std::int64_t q = 1;
    for (unsigned i = 0; i < s; ++i) q *= p;
    const std::size_t r = f.vars();
    const std::int64_t k = f.degree();
    const std::int64_t top = (q - 1) * static_cast<std::int64_t>(r);
    std::int64_t v = -1;
    for (std::int64_t d = 0; d <= top; ++d) {
        const std::int64_t dim = frob::truncated_dimension(r, static_cast<std::uint32_t>(q), d);
        const std::int64_t rank =
            d >= k ? static_cast<std::int64_t>(
                         frob::mult_map_matrix(f, static_cast<std::uint32_t>(q), d - k).rank())
                   : 0;
        if (rank < dim) v = d;
    }
    return v;
}

inline std::int64_t exhaustive_v_determinantal(std::size_t m, std::size_t n, std::uint32_t p,
                                               unsigned s) {
    std::int64_t q = 1;
    for (unsigned i = 0; i < s; ++i) q *= p;
    const std::size_t r = m * n;
    const std::int64_t k = static_cast<std::int64_t>(n);
    const std::int64_t top = (q - 1) * static_cast<std::int64_t>(r);
    const auto minors = frob::maximal_minors(m, n, p);
    std::int64_t v = -1;
    for (std::int64_t d = 0; d <= top; ++d) {
        const std::int64_t dim = frob::truncated_dimension(r, static_cast<std::uint32_t>(q), d);
        if (dim == 0) continue;
        std::vector<std::vector<std::uint16_t>> columns;
        if (d >= k) {
            const frob::SliceBasis src(r, static_cast<std::uint32_t>(q), d - k);
            const frob::SliceBasis tgt(r, static_cast<std::uint32_t>(q), d);
            for (const auto& g : minors)
                for (std::size_t u = 0; u < src.size(); ++u) {
                    const auto prod = frob::multiply_reduce(g, src[u], static_cast<std::uint32_t>(q));
                    std::vector<std::uint16_t> col(tgt.size(), 0);
                    for (const auto& [mono, c] : prod) col[*tgt.index_of(mono)] = c;
                    columns.push_back(std::move(col));
                }
        }
        const std::int64_t rank =
            static_cast<std::int64_t>(frob::rank_of_column_stack(columns, p));
        if (rank < dim) v = d;
    }
    return v;
}

}  // namespace oracle
