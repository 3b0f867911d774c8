#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frob/polynomial.hpp"

namespace frob {

enum class MatrixShape { generic, symmetric, skew };

/// Variable bookkeeping for a matrix of indeterminates. Generic matrices get
/// one variable per cell; symmetric matrices identify x_ji with x_ij and use
/// the upper triangle; skew matrices have zero diagonal, x_ji = -x_ij, and use
/// the strict upper triangle. Variables are ordered row-major.
class VariableLayout {
public:
    static VariableLayout generic(std::size_t m, std::size_t n);
    static VariableLayout symmetric(std::size_t n);
    static VariableLayout skew(std::size_t n);

    MatrixShape shape() const { return shape_; }
    std::size_t row_count() const { return m_; }
    std::size_t col_count() const { return n_; }
    std::size_t var_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    struct Entry {
        int sign;         // -1, 0, or +1
        std::size_t var;  // meaningful when sign != 0
    };
    Entry entry(std::size_t i, std::size_t j) const;  // 0-based cell
    std::pair<std::size_t, std::size_t> cell(std::size_t var) const { return cells_[var]; }

private:
    VariableLayout(MatrixShape shape, std::size_t m, std::size_t n);
    MatrixShape shape_;
    std::size_t m_, n_;
    std::vector<std::string> labels_;
    std::vector<std::pair<std::size_t, std::size_t>> cells_;
};

/// Determinant by full permutation expansion (square matrices, n <= 6), with
/// the layout's identification rules applied before coefficients are
/// collected mod p.
ModularPolynomial determinant_polynomial(const VariableLayout& layout, std::uint32_t p);

/// Pfaffian of a skew layout, by recursive first-row expansion normalized so
/// that Pf of the 2x2 block is the single variable x_12.
ModularPolynomial pfaffian_polynomial(const VariableLayout& layout, std::uint32_t p);

/// The defining form of each family: determinant for generic (square only) and
/// symmetric layouts, Pfaffian for skew layouts (even size required).
ModularPolynomial build_family_polynomial(const VariableLayout& layout, std::uint32_t p);

/// The n x n minors of the generic m x n matrix, one polynomial per n-subset
/// of rows, subsets in lexicographic order. All live in the full mn-variable
/// ring.
std::vector<ModularPolynomial> maximal_minors(std::size_t m, std::size_t n, std::uint32_t p);

}  // namespace frob
