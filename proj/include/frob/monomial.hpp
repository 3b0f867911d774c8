#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace frob {

/// Exponent vector over a fixed list of r variables. Exponents are stored one
/// byte each, which caps the usable Frobenius level at q <= 256.
class Monomial {
public:
    explicit Monomial(std::vector<std::uint8_t> exps) : e_(std::move(exps)) {
        for (std::uint8_t x : e_) degree_ += x;
    }

    static Monomial one(std::size_t r) { return Monomial(std::vector<std::uint8_t>(r, 0)); }

    static Monomial variable(std::size_t r, std::size_t i, std::uint8_t k = 1) {
        std::vector<std::uint8_t> e(r, 0);
        e.at(i) = k;
        return Monomial(std::move(e));
    }

    std::size_t vars() const { return e_.size(); }
    int degree() const { return degree_; }
    std::uint8_t exp(std::size_t i) const { return e_[i]; }
    const std::vector<std::uint8_t>& exponents() const { return e_; }

    /// Product of exponent vectors. With q > 0, returns nullopt when some
    /// exponent of the product reaches q (the product lies in the ideal
    /// generated by the q-th powers of the variables). q == 0 disables the cut.
    std::optional<Monomial> times(const Monomial& other, std::uint32_t q) const {
        if (other.vars() != vars()) throw std::invalid_argument("variable count mismatch");
        std::vector<std::uint8_t> e(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            const unsigned s = unsigned(e_[i]) + unsigned(other.e_[i]);
            if (q > 0 && s >= q) return std::nullopt;
            if (s > 255) throw std::overflow_error("monomial exponent exceeds byte range");
            e[i] = static_cast<std::uint8_t>(s);
        }
        return Monomial(std::move(e));
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<std::uint8_t> e_;
    int degree_ = 0;
};

/// Graded reverse lexicographic order, variables fixed in their storage order.
/// a < b iff deg a < deg b, or the degrees tie and a has the larger exponent
/// at the last position where they differ.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const std::size_t r = a.vars();
    for (std::size_t i = r; i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i);
    }
    return false;
}

struct GrevlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 14695981039346656037ull;
        for (std::uint8_t x : m.exponents()) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace frob
