#include "frob/weights.hpp"

#include <algorithm>
#include <stdexcept>

#include "frob/gfp_matrix.hpp"

namespace frob {

namespace {

// dimension formula on any dominant weight; invariant under adding a constant
// to every entry, so negative trailing entries are fine here
std::int64_t dimension_product(const Weight& lam) {
    const std::size_t n = lam.size();
    unsigned __int128 num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= static_cast<unsigned __int128>(lam[i] - lam[j] + (std::int64_t)(j - i));
            den *= static_cast<unsigned __int128>(j - i);
            if (num > (static_cast<unsigned __int128>(1) << 100))
                throw std::overflow_error("dimension product exceeds the supported range");
        }
    const unsigned __int128 dim = num / den;
    if (dim > static_cast<unsigned __int128>(INT64_MAX))
        throw std::overflow_error("dimension exceeds 64 bits");
    return static_cast<std::int64_t>(dim);
}

bool is_prime_power(std::int64_t q) {
    if (q < 1) return false;
    if (q == 1) return true;  // p^0
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            while (q % d == 0) q /= d;
            return q == 1;
        }
    }
    return true;  // q itself prime
}

}  // namespace

bool is_dominant(const Weight& y) {
    for (std::size_t i = 0; i + 1 < y.size(); ++i)
        if (y[i] < y[i + 1]) return false;
    return true;
}

bool is_partition(const Weight& y) {
    return is_dominant(y) && (y.empty() || y.back() >= 0);
}

std::int64_t weight_size(const Weight& y) {
    std::int64_t s = 0;
    for (std::int64_t v : y) s += v;
    return s;
}

std::vector<std::int64_t> to_fundamental(const Weight& y) {
    if (!is_dominant(y)) throw std::domain_error("weight is not dominant");
    if (y.empty()) throw std::invalid_argument("empty weight");
    std::vector<std::int64_t> a(y.size());
    for (std::size_t i = 0; i + 1 < y.size(); ++i) a[i] = y[i] - y[i + 1];
    a.back() = y.back();
    return a;
}

Weight from_fundamental(const std::vector<std::int64_t>& a) {
    Weight y(a.size());
    std::int64_t acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        acc += a[i];
        y[i] = acc;
    }
    return y;
}

bool is_p_restricted(const Weight& y, std::uint32_t p) {
    if (!is_partition(y)) return false;
    for (std::int64_t a : to_fundamental(y))
        if (a < 0 || a >= static_cast<std::int64_t>(p)) return false;
    return true;
}

PAdicDecomposition p_adic_decompose(const Weight& lambda, std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (!is_partition(lambda)) throw std::domain_error("expected a partition");
    std::vector<std::int64_t> a = to_fundamental(lambda);
    PAdicDecomposition out{p, {}, false};
    bool more = true;
    while (more) {
        std::vector<std::int64_t> digit(a.size());
        more = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            digit[i] = a[i] % p;
            a[i] /= p;
            if (a[i] > 0) more = true;
        }
        out.layers.push_back(from_fundamental(digit));
    }
    return out;
}

PAdicDecomposition p_adic_decompose_tail(const Weight& lambda, std::uint32_t p, unsigned s) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (!is_partition(lambda)) throw std::domain_error("expected a partition");
    std::vector<std::int64_t> a = to_fundamental(lambda);
    PAdicDecomposition out{p, {}, true};
    for (unsigned j = 0; j < s; ++j) {
        std::vector<std::int64_t> digit(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            digit[i] = a[i] % p;
            a[i] /= p;
        }
        out.layers.push_back(from_fundamental(digit));
    }
    out.layers.push_back(from_fundamental(a));
    return out;
}

bool occurrence_excluded(const Weight& lambda, const Weight& mu, unsigned s, std::uint32_t p) {
    if (!is_p_restricted(mu, p)) throw std::domain_error("mu must be p-restricted");
    if (!is_partition(lambda)) throw std::domain_error("lambda must be a partition");
    Weight lam = lambda;
    lam.resize(std::max(lambda.size(), mu.size()), 0);
    const PAdicDecomposition dec = p_adic_decompose_tail(lam, p, s);
    return weight_size(dec.layers.back()) < weight_size(mu);
}

std::int64_t weyl_dimension(const Weight& lambda, std::size_t n) {
    if (!is_partition(lambda)) throw std::domain_error("expected a dominant partition");
    Weight lam = lambda;
    if (lam.size() > n) {
        for (std::size_t i = n; i < lam.size(); ++i)
            if (lam[i] != 0) throw std::domain_error("partition has more than n parts");
        lam.resize(n);
    }
    lam.resize(n, 0);
    return dimension_product(lam);
}

EulerCharacteristic euler_characteristic(const Weight& y, std::size_t n) {
    if (y.size() != n) throw std::invalid_argument("weight length must equal n");
    Weight z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = y[i] + static_cast<std::int64_t>(n - 1 - i);

    EulerCharacteristic out;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (z[i] == z[j]) {
                out.zero = true;
                return out;
            }
            if (z[i] < z[j]) ++inversions;
        }
    std::sort(z.begin(), z.end(), std::greater<std::int64_t>());

    out.inversions = inversions;
    out.sign = inversions % 2 == 0 ? 1 : -1;
    out.mu.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.mu[i] = z[i] - static_cast<std::int64_t>(n - 1 - i);
    out.dim = dimension_product(out.mu);
    return out;
}

bool vanishing_window(const Weight& lambda, std::int64_t e, std::size_t n, std::int64_t q,
                      std::int64_t j) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (!is_partition(lambda)) throw std::domain_error("expected a partition");
    if (lambda.size() > n - 1) throw std::invalid_argument("partition must have at most n-1 parts");
    if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power");
    if (j < 0) throw std::invalid_argument("j must be nonnegative");

    const std::int64_t size = weight_size(lambda);
    const bool inside = size <= (static_cast<std::int64_t>(n) - 1 - j) * q - 1 &&
                        e >= (1 + j) * q;

    if (inside && j == static_cast<std::int64_t>(n) - 2) {
        // vanishing of H^0..H^j forces the alternating sum to come from higher
        // cohomological degrees; anything else is a bug in the sort-with-sign
        // procedure
        Weight y(lambda);
        y.resize(n - 1, 0);
        y.push_back(e);
        const EulerCharacteristic chi = euler_characteristic(y, n);
        if (!chi.zero && static_cast<std::int64_t>(chi.inversions) <= j)
            throw std::logic_error("Euler characteristic contradicts the vanishing window");
    }
    return inside;
}

}  // namespace frob
