#include "degrowth/gcd.hpp"

#include "degrowth/errors.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace degrowth {

namespace {

// Univariate view: coefficient of x^i at index i, no trailing zero entries.
using UPoly = std::vector<Poly>;

UPoly to_univariate(const Poly& p, std::size_t x) {
    const std::size_t n = p.nvars();
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(p.degree_in(x) + 1));
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        auto e = m[x];
        m.set(x, 0);
        buckets[e].push_back({std::move(m), t.coeff});
    }
    UPoly u;
    u.reserve(buckets.size());
    for (auto& b : buckets) u.push_back(Poly::from_sorted_terms(n, std::move(b)));
    return u;
}

Poly from_univariate(const UPoly& u, std::size_t x, std::size_t n) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (const auto& t : u[i].terms()) {
            Monomial m = t.mono;
            m.set(x, static_cast<Monomial::Exponent>(i));
            terms.push_back({std::move(m), t.coeff});
        }
    }
    return Poly::from_terms(n, std::move(terms));
}

void trim(UPoly& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

long udeg(const UPoly& u) { return static_cast<long>(u.size()) - 1; }

Poly strip_monomial(const Poly& p, const Monomial& m) {
    if (m.is_one()) return p;
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) terms.push_back({t.mono / m, t.coeff});
    return Poly::from_sorted_terms(p.nvars(), std::move(terms));
}

Poly one(std::size_t n) { return Poly::constant(n, Rat(1)); }

Poly gcd_impl(const Poly& a, const Poly& b);

// GCD of several nonzero polynomials, smallest first, stopping at a unit.
Poly gcd_fold(std::vector<Poly> ps) {
    const std::size_t n = ps.front().nvars();
    std::erase_if(ps, [](const Poly& p) { return p.is_zero(); });
    if (ps.empty()) return Poly(n);
    std::sort(ps.begin(), ps.end(), [](const Poly& x, const Poly& y) { return x.size() < y.size(); });
    Poly g = normalize_unit(ps.front());
    for (std::size_t i = 1; i < ps.size(); ++i) {
        if (g.is_constant()) return one(n);
        if (divide_exact(ps[i], g)) continue;
        g = gcd_impl(g, ps[i]);
    }
    return g.is_constant() ? one(n) : g;
}

Poly content_of(const UPoly& u) {
    return gcd_fold(std::vector<Poly>(u.begin(), u.end()));
}

Poly exact(const Poly& a, const Poly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error("gcd: expected exact division failed");
    return std::move(*q);
}

// Pseudo-remainder lc(B)^(degA-degB+1) * A mod B.
UPoly prem(UPoly r, const UPoly& b) {
    const long db = udeg(b);
    const Poly& lcb = b.back();
    long e = udeg(r) - db + 1;
    while (!r.empty() && udeg(r) >= db) {
        const long d = udeg(r) - db;
        Poly lcr = r.back();
        for (auto& c : r) c *= lcb;
        for (long i = 0; i < db; ++i) r[static_cast<std::size_t>(i + d)] -= lcr * b[static_cast<std::size_t>(i)];
        r.pop_back();
        trim(r);
        --e;
    }
    if (e > 0 && !r.empty()) {
        Poly f = lcb.pow(static_cast<std::uint64_t>(e));
        for (auto& c : r) c *= f;
    }
    return r;
}

// GCD of primitive a, b in x via the subresultant remainder sequence.
Poly subresultant_gcd(UPoly a, UPoly b, std::size_t x, std::size_t n) {
    if (udeg(a) < udeg(b)) std::swap(a, b);
    Poly g = one(n), h = one(n);
    for (;;) {
        const long delta = udeg(a) - udeg(b);
        UPoly r = prem(a, b);
        if (r.empty()) break;
        if (udeg(r) == 0) return one(n);
        a = std::move(b);
        Poly div = g * h.pow(static_cast<std::uint64_t>(delta));
        for (auto& c : r) c = exact(c, div);
        b = std::move(r);
        g = a.back();
        if (delta > 0) h = exact(g.pow(static_cast<std::uint64_t>(delta)), h.pow(static_cast<std::uint64_t>(delta - 1)));
    }
    Poly c = content_of(b);
    Poly prim = from_univariate(b, x, n);
    if (!c.is_constant()) prim = exact(prim, c);
    return normalize_unit(prim);
}


// Heuristic GCD over Z: evaluate the last live variable at a large integer,
// recurse, rebuild by symmetric xi-adic expansion, confirm by division.
// nullopt means no answer; the caller falls back to the subresultant route.

Int max_norm(const Poly& p) {
    Int m = 0;
    for (const auto& t : p.terms()) {
        Int c = abs(t.coeff.get_num());
        if (c > m) m = c;
    }
    return m;
}

Int int_content(const Poly& p) {
    Int g = 0;
    for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    return g;
}

Poly eval_int(const Poly& p, std::size_t x, const Int& xi) {
    std::vector<Int> powers{Int(1)};
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        auto e = m[x];
        m.set(x, 0);
        while (powers.size() <= e) powers.push_back(powers.back() * xi);
        terms.push_back({std::move(m), Rat(t.coeff.get_num() * powers[e])});
    }
    return Poly::from_terms(p.nvars(), std::move(terms));
}

Poly interpolate(Poly h, std::size_t x, const Int& xi) {
    const std::size_t n = h.nvars();
    const Int half = xi / 2;
    std::vector<Term> out;
    for (Monomial::Exponent i = 0; !h.is_zero(); ++i) {
        std::vector<Term> digit, rest;
        for (const auto& t : h.terms()) {
            Int c = t.coeff.get_num();
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
            if (r > half) r -= xi;
            if (r != 0) {
                Monomial m = t.mono;
                m.set(x, i);
                out.push_back({std::move(m), Rat(r)});
            }
            Int q = (c - r) / xi;
            if (q != 0) rest.push_back({t.mono, Rat(q)});
        }
        h = Poly::from_sorted_terms(n, std::move(rest));
    }
    return Poly::from_terms(n, std::move(out));
}

std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b) {
    const std::size_t n = a.nvars();
    std::size_t x = n;
    for (std::size_t v = n; v-- > 0;)
        if (a.depends_on(v) || b.depends_on(v)) {
            x = v;
            break;
        }
    if (x == n) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.constant_term().get_num_mpz_t(), b.constant_term().get_num_mpz_t());
        return Poly::constant(n, Rat(g));
    }
    // Common integer content is pulled out and put back on the result.
    Int c;
    mpz_gcd(c.get_mpz_t(), int_content(a).get_mpz_t(), int_content(b).get_mpz_t());
    if (c != 1) {
        Poly qa = a * Rat(1 / Rat(c)), qb = b * Rat(1 / Rat(c));
        auto h = heuristic_gcd(qa, qb);
        if (h) *h *= Rat(c);
        return h;
    }
    Int na = max_norm(a), nb = max_norm(b);
    Int xi = 2 * (na < nb ? na : nb) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Poly ea = eval_int(a, x, xi), eb = eval_int(b, x, xi);
        if (!ea.is_zero() && !eb.is_zero()) {
            if (auto h = heuristic_gcd(ea, eb)) {
                Poly g = interpolate(*h, x, xi);
                if (!g.is_zero()) {
                    g = normalize_unit(g);
                    if (divide_exact(a, g) && divide_exact(b, g)) return g;
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

// Both arguments nonzero, integer-normalized, free of monomial content.
Poly gcd_core(const Poly& a, const Poly& b) {
    const std::size_t n = a.nvars();
    if (a.is_constant() || b.is_constant()) return one(n);
    if (a == b) return a;
    if (b.size() <= a.size()) {
        if (divide_exact(a, b)) return b;
    } else if (divide_exact(b, a)) {
        return a;
    }

    // Homogeneous and free of monomial content: the GCD is the rehomogenized
    // GCD of the chart x = 1, one variable fewer.
    if (n >= 2 && a.is_homogeneous() && b.is_homogeneous()) {
        for (std::size_t x = 0; x < n; ++x) {
            if (!a.depends_on(x) || !b.depends_on(x)) continue;
            Poly g = gcd_impl(specialize(a, x, Rat(1)), specialize(b, x, Rat(1)));
            const std::uint64_t d = g.degree().value();
            std::vector<Term> terms;
            for (const auto& t : g.terms()) {
                Monomial m = t.mono;
                m.set(x, static_cast<Monomial::Exponent>(d - m.degree()));
                terms.push_back({std::move(m), t.coeff});
            }
            return normalize_unit(Poly::from_terms(n, std::move(terms)));
        }
    }

    if (auto h = heuristic_gcd(a, b)) return *h;

    std::vector<long> da(n), db(n);
    for (std::size_t v = 0; v < n; ++v) {
        da[v] = a.degree_in(v);
        db[v] = b.degree_in(v);
    }
    // A variable present in only one argument drops out through that argument's content.
    for (std::size_t v = 0; v < n; ++v) {
        if ((da[v] > 0) == (db[v] > 0)) continue;
        const Poly& with = da[v] > 0 ? a : b;
        const Poly& without = da[v] > 0 ? b : a;
        std::vector<Poly> parts = to_univariate(with, v);
        parts.push_back(without);
        return gcd_fold(std::move(parts));
    }

    std::size_t x = n;
    long best = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (da[v] == 0) continue;
        long d = std::max(da[v], db[v]);
        if (x == n || d < best) {
            x = v;
            best = d;
        }
    }

    UPoly ua = to_univariate(a, x), ub = to_univariate(b, x);
    Poly ca = content_of(ua), cb = content_of(ub);
    Poly c = gcd_impl(ca, cb);
    if (!ca.is_constant())
        for (auto& co : ua) co = exact(co, ca);
    if (!cb.is_constant())
        for (auto& co : ub) co = exact(co, cb);
    Poly g = subresultant_gcd(std::move(ua), std::move(ub), x, n);
    return normalize_unit(c * g);
}

Poly gcd_impl(const Poly& a0, const Poly& b0) {
    const std::size_t n = a0.nvars();
    if (a0.is_constant() || b0.is_constant()) return one(n);
    Poly a = normalize_unit(a0), b = normalize_unit(b0);
    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    Monomial gm = gcd(ma, mb);
    Poly core = gcd_core(strip_monomial(a, ma), strip_monomial(b, mb));
    return gm.is_one() ? core : core.mul_term(gm, Rat(1));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars()) throw ArityError("gcd: variable-count mismatch");
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    return gcd_impl(a, b);
}

Poly gcd_of(std::span<const Poly> polys) {
    if (polys.empty()) throw ArityError("gcd_of: empty list");
    const std::size_t n = polys.front().nvars();
    std::vector<Poly> nonzero;
    for (const auto& p : polys) {
        if (p.nvars() != n) throw ArityError("gcd_of: variable-count mismatch");
        if (!p.is_zero()) nonzero.push_back(p);
    }
    if (nonzero.empty()) return Poly(n);
    // A monomial member bounds the GCD to a monomial; no general GCD needed.
    auto mono = std::find_if(nonzero.begin(), nonzero.end(), [](const Poly& p) { return p.is_monomial(); });
    if (mono != nonzero.end()) {
        Monomial g = mono->leading_term().mono;
        for (const auto& p : nonzero) {
            if (g.is_one()) break;
            g = gcd(g, p.monomial_content());
        }
        return Poly::monomial(g);
    }
    return gcd_fold(std::move(nonzero));
}

std::pair<Poly, Poly> content_and_primitive(const Poly& p, std::size_t main_var) {
    if (p.is_zero()) throw DomainError("content_and_primitive: zero polynomial");
    if (main_var >= p.nvars()) throw ArityError("content_and_primitive: main variable out of range");
    Rat rc = rational_content(p);
    Poly content = gcd_fold(to_univariate(p, main_var)) * rc;
    return {content, exact(p, content)};
}

}  // namespace degrowth
