#include "frob/slice_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace frob {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i);
        acc /= static_cast<unsigned __int128>(i);
        if (acc > static_cast<unsigned __int128>(INT64_MAX))
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::int64_t>(acc);
}

std::int64_t truncated_dimension(std::size_t r, std::uint32_t q, std::int64_t d) {
    if (r < 1) throw std::invalid_argument("need at least one variable");
    if (q < 1) throw std::invalid_argument("level q must be positive");
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    const std::int64_t rr = static_cast<std::int64_t>(r);
    if (d > (static_cast<std::int64_t>(q) - 1) * rr) return 0;
    __int128 total = 0;
    std::int64_t sign = 1;
    for (std::int64_t i = 0; i <= rr && d - i * q >= 0; ++i, sign = -sign) {
        total += static_cast<__int128>(sign) * binomial(rr, i) *
                 binomial(d - i * q + rr - 1, rr - 1);
    }
    if (total < 0 || total > INT64_MAX)
        throw std::overflow_error("truncated dimension exceeds 64 bits");
    return static_cast<std::int64_t>(total);
}

std::vector<std::int64_t> truncated_hilbert_series(std::size_t r, std::uint32_t q) {
    const std::int64_t top = (static_cast<std::int64_t>(q) - 1) * static_cast<std::int64_t>(r);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(top) + 1);
    for (std::int64_t d = 0; d <= top; ++d) out.push_back(truncated_dimension(r, q, d));
    return out;
}

SliceBasis::SliceBasis(std::size_t r, std::uint32_t q, std::int64_t d) : r_(r), q_(q), d_(d) {
    if (r < 1) throw std::invalid_argument("need at least one variable");
    if (q < 1 || q > 256) throw std::invalid_argument("level q must be in [1, 256]");
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");

    const std::int64_t expected = truncated_dimension(r, q, d);
    monomials_.reserve(static_cast<std::size_t>(expected));

    std::vector<std::uint8_t> e(r, 0);
    const std::int64_t cap = q - 1;
    // depth-first over exponent positions, pruning by remaining capacity
    auto emit = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
        if (pos + 1 == r) {
            if (remaining <= cap) {
                e[pos] = static_cast<std::uint8_t>(remaining);
                monomials_.emplace_back(e);
            }
            return;
        }
        const std::int64_t tail_cap = cap * static_cast<std::int64_t>(r - pos - 1);
        std::int64_t lo = remaining > tail_cap ? remaining - tail_cap : 0;
        for (std::int64_t v = std::min<std::int64_t>(cap, remaining); v >= lo; --v) {
            e[pos] = static_cast<std::uint8_t>(v);
            self(self, pos + 1, remaining - v);
        }
        e[pos] = 0;
    };
    emit(emit, 0, d);

    std::sort(monomials_.begin(), monomials_.end(), GrevlexDescending{});
    if (static_cast<std::int64_t>(monomials_.size()) != expected)
        throw std::logic_error("slice enumeration disagrees with the dimension count");

    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i], static_cast<std::uint32_t>(i));
}

std::optional<std::uint32_t> SliceBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace frob
