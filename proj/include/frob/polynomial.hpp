#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frob/gfp_matrix.hpp"
#include "frob/monomial.hpp"

namespace frob {

/// Sparse polynomial over F_p in r variables. Stored coefficients are always
/// nonzero residues; term iteration runs in decreasing grevlex order.
class ModularPolynomial {
public:
    using TermMap = std::map<Monomial, std::uint16_t, GrevlexDescending>;

    ModularPolynomial(std::uint32_t p, std::size_t r);

    std::uint32_t modulus() const { return p_; }
    std::size_t vars() const { return r_; }

    void add_term(const Monomial& m, std::int64_t coeff);
    std::uint16_t coeff(const Monomial& m) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int degree() const;          // throws on the zero polynomial
    bool is_homogeneous() const;

    TermMap::const_iterator begin() const { return terms_.begin(); }
    TermMap::const_iterator end() const { return terms_.end(); }

    ModularPolynomial& operator+=(const ModularPolynomial& other);
    bool operator==(const ModularPolynomial& other) const;

private:
    std::uint32_t p_;
    std::size_t r_;
    TermMap terms_;
};

/// f * m with every product monomial containing an exponent >= q deleted.
ModularPolynomial multiply_reduce(const ModularPolynomial& f, const Monomial& m, std::uint32_t q);

/// Full product for q == 0, product with the >= q exponent cut otherwise.
ModularPolynomial multiply(const ModularPolynomial& f, const ModularPolynomial& g,
                           std::uint32_t q = 0);

ModularPolynomial poly_pow(const ModularPolynomial& f, unsigned e, std::uint32_t q);

/// True when g = c*f for some nonzero residue c.
bool is_scalar_multiple(const ModularPolynomial& g, const ModularPolynomial& f);

/// Matrix of multiplication by homogeneous f from the degree-d_source slice to
/// the degree-(d_source + deg f) slice, columns indexed by the source basis in
/// order. The zero polynomial yields the zero map within degree d_source.
GfpMatrix mult_map_matrix(const ModularPolynomial& f, std::uint32_t q, std::int64_t d_source);

std::string to_string(const ModularPolynomial& f, const std::vector<std::string>& labels);

}  // namespace frob
