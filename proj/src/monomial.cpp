#include "degrowth/monomial.hpp"

#include "degrowth/errors.hpp"

#include <algorithm>
#include <limits>

namespace degrowth {

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
    for (auto e : exps_) degree_ += e;
}

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
    for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, Exponent e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    r.exps_.resize(exps_.size());
    constexpr auto max = std::numeric_limits<Exponent>::max();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > max - other.exps_[i]) throw DomainError("monomial exponent overflow");
        r.exps_[i] = exps_[i] + other.exps_[i];
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
    r.degree_ = degree_ - divisor.degree_;
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.set(i, std::min(a[i], b[i]));
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.set(i, std::max(a[i], b[i]));
    return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'z';
        out += std::to_string(i);
        if (exps_[i] > 1) {
            out += '^';
            out += std::to_string(exps_[i]);
        }
    }
    return out.empty() ? "1" : out;
}

}  // namespace degrowth
