#include "frob/gfp_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

namespace frob {

namespace {

std::atomic<std::size_t> g_memory_cap{std::size_t{4} * 1024 * 1024 * 1024};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // extended Euclid; a in [1, p), p prime
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

MemoryCapError::MemoryCapError(std::size_t estimated, std::size_t cap, const std::string& what_for)
    : std::runtime_error("memory cap exceeded: " + what_for + " needs about " +
                         std::to_string(estimated) + " bytes, cap is " + std::to_string(cap)),
      estimated_(estimated),
      cap_(cap) {}

std::size_t memory_cap() noexcept { return g_memory_cap.load(); }

void set_memory_cap(std::size_t bytes) noexcept { g_memory_cap.store(bytes); }

std::size_t matrix_footprint_bytes(std::uint32_t p, std::size_t rows, std::size_t cols) {
    const std::size_t limit = std::numeric_limits<std::size_t>::max();
    std::size_t per_row;
    if (p == 2) {
        per_row = (cols / 64 + (cols % 64 != 0 ? 1 : 0)) * 8;
    } else {
        if (cols > limit / 2) return limit;
        per_row = cols * 2;
    }
    if (per_row != 0 && rows > limit / per_row) return limit;
    return rows * per_row;
}

void require_budget(std::size_t bytes, const std::string& what_for) {
    const std::size_t cap = memory_cap();
    if (bytes > cap) throw MemoryCapError(bytes, cap, what_for);
}

bool is_prime(std::uint32_t x) noexcept {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (std::uint32_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

GfpMatrix::GfpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 16)) throw std::invalid_argument("modulus must be below 2^16");
    require_budget(matrix_footprint_bytes(p, rows, cols),
                   std::to_string(rows) + "x" + std::to_string(cols) + " matrix over F_" +
                       std::to_string(p));
    if (p_ == 2) {
        words_per_row_ = cols_ / 64 + (cols_ % 64 != 0 ? 1 : 0);
        bits_.assign(rows_ * words_per_row_, 0);
    } else {
        residues_.assign(rows_ * cols_, 0);
    }
}

GfpMatrix GfpMatrix::from_rows(std::uint32_t p,
                               const std::vector<std::vector<std::uint16_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    GfpMatrix m(p, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged row data");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

std::uint16_t GfpMatrix::at(std::size_t i, std::size_t j) const {
    if (p_ == 2) {
        return static_cast<std::uint16_t>((bits_[i * words_per_row_ + j / 64] >> (j % 64)) & 1u);
    }
    return residues_[i * cols_ + j];
}

void GfpMatrix::set(std::size_t i, std::size_t j, std::uint32_t value) {
    value %= p_;
    if (p_ == 2) {
        std::uint64_t& w = bits_[i * words_per_row_ + j / 64];
        const std::uint64_t mask = std::uint64_t{1} << (j % 64);
        w = value ? (w | mask) : (w & ~mask);
    } else {
        residues_[i * cols_ + j] = static_cast<std::uint16_t>(value);
    }
}

GfpMatrix GfpMatrix::transposed() const {
    GfpMatrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const std::uint16_t v = at(i, j);
            if (v) t.set(j, i, v);
        }
    return t;
}

void GfpMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    if (p_ == 2) {
        std::swap_ranges(bits_.begin() + a * words_per_row_,
                         bits_.begin() + (a + 1) * words_per_row_,
                         bits_.begin() + b * words_per_row_);
    } else {
        std::swap_ranges(residues_.begin() + a * cols_, residues_.begin() + (a + 1) * cols_,
                         residues_.begin() + b * cols_);
    }
}

void GfpMatrix::scale_row(std::size_t i, std::uint32_t c) {
    // p == 2 never needs scaling
    std::uint16_t* row = residues_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        row[j] = static_cast<std::uint16_t>((static_cast<std::uint32_t>(row[j]) * c) % p_);
}

void GfpMatrix::add_multiple_of_row(std::size_t dst, std::size_t src, std::uint32_t c) {
    std::uint16_t* d = residues_.data() + dst * cols_;
    const std::uint16_t* s = residues_.data() + src * cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
        // c*s[j] < 2^32 because p < 2^16
        const std::uint32_t v = (static_cast<std::uint32_t>(d[j]) + c * s[j]) % p_;
        d[j] = static_cast<std::uint16_t>(v);
    }
}

std::vector<std::size_t> GfpMatrix::rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t cur = 0;
    if (p_ == 2) {
        for (std::size_t col = 0; col < cols_ && cur < rows_; ++col) {
            const std::size_t word = col / 64;
            const std::uint64_t mask = std::uint64_t{1} << (col % 64);
            std::size_t sel = rows_;
            for (std::size_t i = cur; i < rows_; ++i) {
                if (bits_[i * words_per_row_ + word] & mask) {
                    sel = i;
                    break;
                }
            }
            if (sel == rows_) continue;
            swap_rows(sel, cur);
            const std::uint64_t* prow = bits_.data() + cur * words_per_row_;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == cur) continue;
                std::uint64_t* irow = bits_.data() + i * words_per_row_;
                if (irow[word] & mask) {
                    for (std::size_t w = word; w < words_per_row_; ++w) irow[w] ^= prow[w];
                }
            }
            pivots.push_back(col);
            ++cur;
        }
        return pivots;
    }
    for (std::size_t col = 0; col < cols_ && cur < rows_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t i = cur; i < rows_; ++i) {
            if (at(i, col) != 0) {
                sel = i;
                break;
            }
        }
        if (sel == rows_) continue;
        swap_rows(sel, cur);
        const std::uint32_t inv = inverse_mod(at(cur, col), p_);
        if (inv != 1) scale_row(cur, inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == cur) continue;
            const std::uint32_t v = at(i, col);
            if (v) add_multiple_of_row(i, cur, p_ - v);
        }
        pivots.push_back(col);
        ++cur;
    }
    return pivots;
}

std::size_t GfpMatrix::rank() const {
    GfpMatrix work = *this;
    return work.rref_in_place().size();
}

std::vector<std::vector<std::uint16_t>> GfpMatrix::kernel_basis() const {
    GfpMatrix work = *this;
    const std::vector<std::size_t> pivots = work.rref_in_place();

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint16_t>> basis;
    basis.reserve(cols_ - pivots.size());
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint16_t> v(cols_, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const std::uint16_t e = work.at(i, free_col);
            if (e) v[pivots[i]] = static_cast<std::uint16_t>((p_ - e) % p_);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank_of_column_stack(const std::vector<std::vector<std::uint16_t>>& columns,
                                 std::uint32_t p) {
    if (columns.empty()) return 0;
    const std::size_t len = columns[0].size();
    for (const auto& c : columns)
        if (c.size() != len)
            throw std::invalid_argument("dimension mismatch: column lengths differ");
    GfpMatrix m(p, len, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < len; ++i)
            if (columns[j][i]) m.set(i, j, columns[j][i]);
    return m.rank();
}

}  // namespace frob
