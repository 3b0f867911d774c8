#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace frob {

// Thrown instead of attempting an allocation that exceeds the configured cap.
// The message carries the estimate so callers can report why a job was skipped.
class MemoryCapError : public std::runtime_error {
public:
    MemoryCapError(std::size_t estimated, std::size_t cap, const std::string& what_for);
    std::size_t estimated_bytes() const { return estimated_; }
    std::size_t cap_bytes() const { return cap_; }

private:
    std::size_t estimated_;
    std::size_t cap_;
};

std::size_t memory_cap() noexcept;                 // current cap in bytes (default 4 GiB)
void set_memory_cap(std::size_t bytes) noexcept;   // global, thread-safe
std::size_t matrix_footprint_bytes(std::uint32_t p, std::size_t rows, std::size_t cols);
void require_budget(std::size_t bytes, const std::string& what_for);

bool is_prime(std::uint32_t x) noexcept;

/// Dense matrix over the prime field F_p, 2 <= p < 2^16. Entries are residues
/// in [0, p). Rows are machine-word bit-packed for p = 2 and 16-bit residues
/// otherwise; multiply-accumulate stays within 32 bits. Elimination always
/// pivots on the leftmost nonzero column, topmost row, so ranks and kernel
/// bases are identical across runs.
class GfpMatrix {
public:
    GfpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
    static GfpMatrix from_rows(std::uint32_t p,
                               const std::vector<std::vector<std::uint16_t>>& rows);

    std::uint32_t modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint16_t at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, std::uint32_t value);  // reduced mod p

    GfpMatrix transposed() const;

    std::size_t rank() const;

    // Basis of the right null space: one vector per non-pivot column of the
    // reduced row echelon form, in increasing column order. Every returned
    // vector v satisfies M*v = 0; the count is cols() - rank().
    std::vector<std::vector<std::uint16_t>> kernel_basis() const;

private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    std::size_t words_per_row_ = 0;        // p == 2 only
    std::vector<std::uint64_t> bits_;      // p == 2, row-major words
    std::vector<std::uint16_t> residues_;  // p > 2, row-major

    std::vector<std::size_t> rref_in_place();
    void swap_rows(std::size_t a, std::size_t b);
    void scale_row(std::size_t i, std::uint32_t c);
    void add_multiple_of_row(std::size_t dst, std::size_t src, std::uint32_t c);
};

// Dimension of the F_p-span of the given vectors. All vectors must have equal
// length; a mismatch throws std::invalid_argument.
std::size_t rank_of_column_stack(const std::vector<std::vector<std::uint16_t>>& columns,
                                 std::uint32_t p);

}  // namespace frob
