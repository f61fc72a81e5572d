#pragma once

// Shared helpers for the unit tests: terse polynomial builders, a naive long
// division used as an independent divisibility oracle, and random generators.

#include "degrowth/poly.hpp"

#include <optional>
#include <random>
#include <vector>

namespace testing {

using degrowth::Monomial;
using degrowth::Poly;
using degrowth::Rat;

inline Poly z(std::size_t n, std::size_t i) { return Poly::variable(n, i); }
inline Poly c(std::size_t n, long num, long den = 1) {
    return Poly::constant(n, degrowth::make_rat(num, den));
}

/// Textbook multivariate division by leading terms; nullopt if the remainder
/// is nonzero. Deliberately simple and independent of divide_exact.
inline std::optional<Poly> naive_divide(Poly a, const Poly& b) {
    const std::size_t n = a.nvars();
    Poly q(n);
    const auto& lb = b.leading_term();
    while (!a.is_zero()) {
        const auto& la = a.leading_term();
        if (!lb.mono.divides(la.mono)) return std::nullopt;
        Poly t = Poly::monomial(la.mono / lb.mono, la.coeff / lb.coeff);
        q = q + t;
        a = a - t * b;
    }
    return q;
}

/// Random sparse polynomial: up to max_terms terms, total degree <= max_deg,
/// small integer coefficients.
inline Poly random_poly(std::mt19937_64& rng, std::size_t n, unsigned max_deg, unsigned max_terms) {
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<degrowth::Term> terms;
    unsigned count = nterms(rng);
    for (unsigned t = 0; t < count; ++t) {
        Monomial m(n);
        unsigned d = deg(rng);
        for (unsigned k = 0; k < d; ++k) {
            auto v = pick(rng);
            m.set(v, m[v] + 1);
        }
        int cf = coeff(rng);
        if (cf == 0) cf = 1;
        terms.push_back({m, Rat(cf)});
    }
    return Poly::from_terms(n, std::move(terms));
}

}  // namespace testing
