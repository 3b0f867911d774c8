#include "frob/polynomial.hpp"

#include <stdexcept>

#include "frob/slice_basis.hpp"

namespace frob {

ModularPolynomial::ModularPolynomial(std::uint32_t p, std::size_t r) : p_(p), r_(r) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 16)) throw std::invalid_argument("modulus must be below 2^16");
    if (r < 1) throw std::invalid_argument("need at least one variable");
}

void ModularPolynomial::add_term(const Monomial& m, std::int64_t coeff) {
    if (m.vars() != r_) throw std::invalid_argument("variable count mismatch");
    std::int64_t c = coeff % static_cast<std::int64_t>(p_);
    if (c < 0) c += p_;
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, static_cast<std::uint16_t>(c));
    if (!inserted) {
        const std::uint32_t s = (it->second + static_cast<std::uint32_t>(c)) % p_;
        if (s == 0)
            terms_.erase(it);
        else
            it->second = static_cast<std::uint16_t>(s);
    }
}

std::uint16_t ModularPolynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

int ModularPolynomial::degree() const {
    if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
    return terms_.begin()->first.degree();  // grevlex-descending: top term first
}

bool ModularPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

ModularPolynomial& ModularPolynomial::operator+=(const ModularPolynomial& other) {
    if (other.p_ != p_ || other.r_ != r_)
        throw std::invalid_argument("polynomials live in different rings");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

bool ModularPolynomial::operator==(const ModularPolynomial& other) const {
    return p_ == other.p_ && r_ == other.r_ && terms_ == other.terms_;
}

ModularPolynomial multiply_reduce(const ModularPolynomial& f, const Monomial& m, std::uint32_t q) {
    if (q < 1) throw std::invalid_argument("level q must be positive");
    ModularPolynomial out(f.modulus(), f.vars());
    for (const auto& [mono, c] : f) {
        if (auto prod = mono.times(m, q)) out.add_term(*prod, c);
    }
    return out;
}

ModularPolynomial multiply(const ModularPolynomial& f, const ModularPolynomial& g,
                           std::uint32_t q) {
    if (f.modulus() != g.modulus() || f.vars() != g.vars())
        throw std::invalid_argument("polynomials live in different rings");
    ModularPolynomial out(f.modulus(), f.vars());
    for (const auto& [mf, cf] : f)
        for (const auto& [mg, cg] : g) {
            if (auto prod = mf.times(mg, q))
                out.add_term(*prod, static_cast<std::int64_t>(cf) * cg);
        }
    return out;
}

ModularPolynomial poly_pow(const ModularPolynomial& f, unsigned e, std::uint32_t q) {
    ModularPolynomial acc(f.modulus(), f.vars());
    acc.add_term(Monomial::one(f.vars()), 1);
    for (unsigned i = 0; i < e; ++i) acc = multiply(acc, f, q);
    return acc;
}

bool is_scalar_multiple(const ModularPolynomial& g, const ModularPolynomial& f) {
    if (g.modulus() != f.modulus() || g.vars() != f.vars()) return false;
    if (g.is_zero() || f.is_zero()) return g.is_zero() && f.is_zero();
    if (g.term_count() != f.term_count()) return false;
    auto ig = g.begin();
    auto iff = f.begin();
    const std::uint32_t p = f.modulus();
    std::uint32_t ratio = 0;
    for (; ig != g.end(); ++ig, ++iff) {
        if (ig->first != iff->first) return false;
        // candidate ratio from the first pair, check consistency afterwards
        std::uint32_t r = 0;
        for (std::uint32_t c = 1; c < p; ++c)
            if (c * iff->second % p == ig->second) {
                r = c;
                break;
            }
        if (r == 0) return false;
        if (ratio == 0)
            ratio = r;
        else if (ratio != r)
            return false;
    }
    return true;
}

GfpMatrix mult_map_matrix(const ModularPolynomial& f, std::uint32_t q, std::int64_t d_source) {
    if (d_source < 0) throw std::invalid_argument("source degree must be nonnegative");
    if (!f.is_homogeneous()) throw std::invalid_argument("multiplication map needs homogeneous f");
    const std::size_t r = f.vars();
    const std::uint32_t p = f.modulus();
    const int k = f.is_zero() ? 0 : f.degree();

    const std::int64_t src_dim = truncated_dimension(r, q, d_source);
    const std::int64_t tgt_dim = truncated_dimension(r, q, d_source + k);
    require_budget(matrix_footprint_bytes(p, static_cast<std::size_t>(tgt_dim),
                                          static_cast<std::size_t>(src_dim)),
                   "multiplication-map matrix (" + std::to_string(tgt_dim) + "x" +
                       std::to_string(src_dim) + " over F_" + std::to_string(p) + ")");

    SliceBasis src(r, q, d_source);
    SliceBasis tgt(r, q, d_source + k);
    GfpMatrix m(p, tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        const ModularPolynomial col = multiply_reduce(f, src[j], q);
        for (const auto& [mono, c] : col) {
            const auto idx = tgt.index_of(mono);
            if (!idx) throw std::logic_error("product monomial missing from the target slice");
            m.set(*idx, j, c);
        }
    }
    return m;
}

std::string to_string(const ModularPolynomial& f, const std::vector<std::string>& labels) {
    if (labels.size() != f.vars()) throw std::invalid_argument("label count mismatch");
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : f) {
        if (!out.empty()) out += " + ";
        std::string factors;
        for (std::size_t i = 0; i < m.vars(); ++i) {
            if (m.exp(i) == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += labels[i];
            if (m.exp(i) > 1) factors += "^" + std::to_string(m.exp(i));
        }
        if (factors.empty()) {
            out += std::to_string(c);
        } else if (c == 1) {
            out += factors;
        } else {
            out += std::to_string(c) + "*" + factors;
        }
    }
    return out;
}

}  // namespace frob
