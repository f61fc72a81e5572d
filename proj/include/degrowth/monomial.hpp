#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace degrowth {

/// Exponent vector of a term. Ordered graded-lexicographically: total degree
/// first, then exponents compared from z0 upward (larger exponent of z0 wins).
class Monomial {
public:
    using Exponent = std::uint32_t;
    using Storage = boost::container::small_vector<Exponent, 12>;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    Monomial(std::initializer_list<Exponent> exps);
    explicit Monomial(std::span<const Exponent> exps);

    static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::uint64_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }
    std::span<const Exponent> exponents() const noexcept { return {exps_.data(), exps_.size()}; }

    void set(std::size_t i, Exponent e);

    /// Product; throws DomainError on exponent overflow.
    Monomial operator*(const Monomial& other) const;
    /// True iff every exponent of *this is <= the matching exponent of other.
    bool divides(const Monomial& other) const;
    /// Quotient other / *this style division: requires divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const;

    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

    std::size_t hash() const noexcept;

    /// "z0^2*z1"; "1" for the unit monomial.
    std::string to_string() const;

private:
    Storage exps_;
    std::uint64_t degree_ = 0;
};

}  // namespace degrowth
