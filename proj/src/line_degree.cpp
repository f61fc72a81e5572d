#include "degrowth/dynamics.hpp"

#include <algorithm>
#include <random>

namespace degrowth {

namespace {

using u64 = std::uint64_t;
constexpr u64 prime = (u64{1} << 61) - 1;

u64 add_mod(u64 a, u64 b) { return (a + b) % prime; }
u64 sub_mod(u64 a, u64 b) { return (a + prime - b) % prime; }
u64 mul_mod(u64 a, u64 b) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % prime); }

u64 pow_mod(u64 a, u64 e) {
    u64 r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a))
        if (e & 1) r = mul_mod(r, a);
    return r;
}

u64 inv_mod(u64 a) {
    if (a == 0) throw DomainError("line degree: division by zero mod p");
    return pow_mod(a, prime - 2);
}

u64 reduce(const Int& z) {
    Int r = z % Int(static_cast<unsigned long>(prime));
    if (r < 0) r += static_cast<unsigned long>(prime);
    return r.get_ui();
}

u64 reduce(const Rat& q) { return mul_mod(reduce(q.get_num()), inv_mod(reduce(q.get_den()))); }

// Dense univariate polynomial mod p, lowest degree first, no trailing zeros.
using UPoly = std::vector<u64>;

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j]));
    }
    trim(r);
    return r;
}

void add_scaled(UPoly& acc, const UPoly& a, u64 c) {
    if (acc.size() < a.size()) acc.resize(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) acc[i] = add_mod(acc[i], mul_mod(a[i], c));
    trim(acc);
}

// Remainder and (optionally) quotient of a by b.
UPoly divmod(UPoly a, const UPoly& b, UPoly* quotient) {
    const u64 inv_lead = inv_mod(b.back());
    if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        u64 c = mul_mod(a.back(), inv_lead);
        if (quotient) (*quotient)[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub_mod(a[i + shift], mul_mod(c, b[i]));
        trim(a);
    }
    return a;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = divmod(a, b, nullptr);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Components of m evaluated at a tuple of univariate polynomials, with a
// lazy power table shared across components.
std::vector<UPoly> apply_map(const ProjectiveMap& m, const std::vector<UPoly>& tuple) {
    std::vector<std::vector<UPoly>> powers(tuple.size());
    for (std::size_t v = 0; v < tuple.size(); ++v) powers[v].push_back({1});
    auto power = [&](std::size_t v, std::size_t e) -> const UPoly& {
        while (powers[v].size() <= e) powers[v].push_back(mul(powers[v].back(), tuple[v]));
        return powers[v][e];
    };
    std::vector<UPoly> out;
    for (const auto& c : m.components()) {
        UPoly acc;
        for (const auto& t : c.terms()) {
            UPoly prod{1};
            for (std::size_t v = 0; v < tuple.size(); ++v)
                if (t.mono[v]) prod = mul(prod, power(v, t.mono[v]));
            add_scaled(acc, prod, reduce(t.coeff));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace

DegreeSequence degree_sequence_on_line(const ProjectiveMap& m, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw DomainError("degree_sequence_on_line: N must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> coord(1, prime - 1);
    // z_i = a_i + b_i t.
    std::vector<UPoly> tuple;
    for (std::size_t i = 0; i <= m.dimension(); ++i) {
        UPoly l{coord(rng), coord(rng)};
        trim(l);
        tuple.push_back(std::move(l));
    }
    DegreeSequence s;
    for (std::size_t step = 1; step <= n; ++step) {
        tuple = apply_map(m, tuple);
        UPoly g;
        std::size_t top = 0;
        for (const auto& c : tuple) {
            g = gcd(std::move(g), c);
            if (!c.empty()) top = std::max(top, c.size() - 1);
        }
        if (g.empty()) throw CompositionCollapse("line restriction collapsed to zero", step);
        if (g.size() > 1)
            for (auto& c : tuple) {
                UPoly q;
                divmod(c, g, &q);
                trim(q);
                c = std::move(q);
            }
        s.degrees.push_back(top - (g.size() - 1));
    }
    return s;
}

}  // namespace degrowth
