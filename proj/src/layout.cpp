#include "frob/layout.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace frob {

namespace {

std::string cell_label(std::size_t i, std::size_t j) {
    return "x" + std::to_string(i + 1) + std::to_string(j + 1);
}

int permutation_sign(const std::vector<std::size_t>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// Determinant of a square symbolic matrix given by an entry callback; used for
// both whole layouts and minors.
ModularPolynomial expand_determinant(std::size_t n, std::size_t vars, std::uint32_t p,
                                     const std::vector<std::vector<VariableLayout::Entry>>& cells) {
    if (n > 6) throw std::invalid_argument("permutation expansion is limited to n <= 6");
    ModularPolynomial det(p, vars);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = permutation_sign(perm);
        std::vector<std::uint8_t> exps(vars, 0);
        bool zero = false;
        for (std::size_t i = 0; i < n && !zero; ++i) {
            const auto& e = cells[i][perm[i]];
            if (e.sign == 0)
                zero = true;
            else {
                sign *= e.sign;
                ++exps[e.var];
            }
        }
        if (!zero) det.add_term(Monomial(exps), sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

ModularPolynomial pfaffian_recurse(const std::vector<std::size_t>& rows,
                                   const VariableLayout& layout, std::uint32_t p) {
    ModularPolynomial out(p, layout.var_count());
    if (rows.empty()) {
        out.add_term(Monomial::one(layout.var_count()), 1);
        return out;
    }
    // pair the first remaining row with each later one; position t (2-based)
    // contributes sign (-1)^t
    for (std::size_t t = 1; t < rows.size(); ++t) {
        const auto e = layout.entry(rows[0], rows[t]);
        if (e.sign == 0) continue;
        std::vector<std::size_t> rest;
        rest.reserve(rows.size() - 2);
        for (std::size_t u = 1; u < rows.size(); ++u)
            if (u != t) rest.push_back(rows[u]);
        const ModularPolynomial sub = pfaffian_recurse(rest, layout, p);
        const int sign = ((t + 1) % 2 == 0 ? 1 : -1) * e.sign;
        const Monomial v = Monomial::variable(layout.var_count(), e.var);
        for (const auto& [m, c] : sub) {
            auto prod = m.times(v, 0);
            out.add_term(*prod, static_cast<std::int64_t>(sign) * c);
        }
    }
    return out;
}

}  // namespace

VariableLayout::VariableLayout(MatrixShape shape, std::size_t m, std::size_t n)
    : shape_(shape), m_(m), n_(n) {}

VariableLayout VariableLayout::generic(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
    VariableLayout l(MatrixShape::generic, m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            l.labels_.push_back(cell_label(i, j));
            l.cells_.emplace_back(i, j);
        }
    return l;
}

VariableLayout VariableLayout::symmetric(std::size_t n) {
    if (n < 1) throw std::invalid_argument("matrix dimensions must be positive");
    VariableLayout l(MatrixShape::symmetric, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            l.labels_.push_back(cell_label(i, j));
            l.cells_.emplace_back(i, j);
        }
    return l;
}

VariableLayout VariableLayout::skew(std::size_t n) {
    if (n < 2) throw std::invalid_argument("skew layout needs n >= 2");
    VariableLayout l(MatrixShape::skew, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            l.labels_.push_back(cell_label(i, j));
            l.cells_.emplace_back(i, j);
        }
    return l;
}

VariableLayout::Entry VariableLayout::entry(std::size_t i, std::size_t j) const {
    if (i >= m_ || j >= n_) throw std::out_of_range("cell outside the matrix");
    switch (shape_) {
        case MatrixShape::generic:
            return {1, i * n_ + j};
        case MatrixShape::symmetric: {
            const std::size_t a = std::min(i, j), b = std::max(i, j);
            // row-major upper triangle: row a starts after a*(2n-a+1)/2 entries
            const std::size_t base = a * (2 * n_ - a + 1) / 2;
            return {1, base + (b - a)};
        }
        case MatrixShape::skew: {
            if (i == j) return {0, 0};
            const std::size_t a = std::min(i, j), b = std::max(i, j);
            const std::size_t base = a * (2 * n_ - a - 1) / 2;
            return {i < j ? 1 : -1, base + (b - a - 1)};
        }
    }
    throw std::logic_error("unreachable");
}

ModularPolynomial determinant_polynomial(const VariableLayout& layout, std::uint32_t p) {
    if (layout.row_count() != layout.col_count())
        throw std::invalid_argument("determinant needs a square matrix");
    const std::size_t n = layout.row_count();
    std::vector<std::vector<VariableLayout::Entry>> cells(n, std::vector<VariableLayout::Entry>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cells[i][j] = layout.entry(i, j);
    return expand_determinant(n, layout.var_count(), p, cells);
}

ModularPolynomial pfaffian_polynomial(const VariableLayout& layout, std::uint32_t p) {
    if (layout.shape() != MatrixShape::skew)
        throw std::invalid_argument("Pfaffian needs a skew layout");
    const std::size_t n = layout.row_count();
    if (n % 2 != 0) throw std::invalid_argument("Pfaffian needs even size");
    std::vector<std::size_t> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    return pfaffian_recurse(rows, layout, p);
}

ModularPolynomial build_family_polynomial(const VariableLayout& layout, std::uint32_t p) {
    switch (layout.shape()) {
        case MatrixShape::generic:
        case MatrixShape::symmetric:
            return determinant_polynomial(layout, p);
        case MatrixShape::skew:
            return pfaffian_polynomial(layout, p);
    }
    throw std::logic_error("unreachable");
}

std::vector<ModularPolynomial> maximal_minors(std::size_t m, std::size_t n, std::uint32_t p) {
    if (m < n || n < 1) throw std::invalid_argument("need m >= n >= 1");
    const VariableLayout full = VariableLayout::generic(m, n);
    std::vector<ModularPolynomial> minors;

    std::vector<std::size_t> pick(n);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<std::vector<VariableLayout::Entry>> cells(n,
                                                              std::vector<VariableLayout::Entry>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) cells[i][j] = full.entry(pick[i], j);
        minors.push_back(expand_determinant(n, full.var_count(), p, cells));

        // next n-subset of {0..m-1} in lexicographic order
        std::size_t i = n;
        while (i-- > 0) {
            if (pick[i] + (n - i) < m) {
                ++pick[i];
                for (std::size_t j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return minors;
        }
    }
}

}  // namespace frob
