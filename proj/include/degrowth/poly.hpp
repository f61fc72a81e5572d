#pragma once

#include "degrowth/monomial.hpp"
#include "degrowth/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace degrowth {

/// Total degree of a polynomial. The zero polynomial has the dedicated
/// NegInfinity value; asking it for value() throws.
class Degree {
public:
    constexpr Degree() = default;  // NegInfinity
    constexpr explicit Degree(std::uint64_t d) : value_(static_cast<std::int64_t>(d)) {}

    static constexpr Degree neg_infinity() { return Degree(); }

    constexpr bool is_neg_infinity() const noexcept { return value_ < 0; }
    std::uint64_t value() const;

    friend constexpr bool operator==(Degree, Degree) = default;
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        return a.value_ <=> b.value_;
    }

    std::string to_string() const;

private:
    std::int64_t value_ = -1;
};

struct Term {
    Monomial mono;
    Rat coeff;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept sorted in
/// descending graded-lex order with no zero coefficients, so two equal
/// polynomials have identical term vectors.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rat& c);
    static Poly variable(std::size_t nvars, std::size_t index);
    static Poly monomial(const Monomial& m, const Rat& c = Rat(1));
    /// Arbitrary term list; sorts and merges duplicates.
    static Poly from_terms(std::size_t nvars, std::vector<Term> terms);
    /// Term list already strictly descending with nonzero coefficients.
    static Poly from_sorted_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_one() const noexcept;

    const Term& leading_term() const;
    const Rat& leading_coeff() const { return leading_term().coeff; }
    Rat constant_term() const;
    /// Coefficient of the given monomial (zero if absent).
    Rat coeff(const Monomial& m) const;

    Degree degree() const;
    /// Largest exponent of variable var; -1 for the zero polynomial.
    long degree_in(std::size_t var) const;
    bool depends_on(std::size_t var) const;
    bool is_homogeneous() const;
    /// Monomial whose exponents are the minima over all terms.
    Monomial monomial_content() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rat& c);
    friend Poly operator*(const Rat& c, const Poly& a) { return a * c; }

    Poly mul_term(const Monomial& m, const Rat& c) const;
    Poly pow(std::uint64_t e) const;

    friend bool operator==(const Poly& a, const Poly& b);

    std::string to_string() const;
    std::size_t hash() const noexcept;

private:
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

// Free-function forms of the basic operations; all check variable counts.
Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Degree total_degree(const Poly& p);

/// Replace variable i by images[i]. All images must share one variable count.
Poly substitute(const Poly& p, std::span<const Poly> images);
/// Substitute the same images into several polynomials, sharing power caches.
std::vector<Poly> substitute_all(std::span<const Poly> polys, std::span<const Poly> images);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Multiply each term by a new last variable raised to (target - term degree).
Poly homogenize(const Poly& p, std::uint64_t target_degree);
/// Set chart_var to 1 and drop it.
Poly dehomogenize(const Poly& p, std::size_t chart_var);
/// Insert a new variable at position `index` (not appearing in p).
Poly insert_variable(const Poly& p, std::size_t index);
/// Set var to the given value (the variable stays, with exponent 0).
Poly specialize(const Poly& p, std::size_t var, const Rat& value);

Poly derivative(const Poly& p, std::size_t var);
Poly jacobian_determinant(std::span<const Poly> components);
Rat evaluate(const Poly& p, std::span<const Rat> point);

/// Positive rational c such that p / c has coprime integer coefficients.
Rat rational_content(const Poly& p);

/// Canonical scalar normalization: coprime integer coefficients with a
/// positive graded-lex-leading coefficient.
Poly normalize_unit(const Poly& p);

}  // namespace degrowth
