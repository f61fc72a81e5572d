#include "degrowth/zoo.hpp"

#include <algorithm>
#include <regex>

namespace degrowth {

namespace {

Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i); }
Poly cst(std::size_t n, long c) { return Poly::constant(n, Rat(c)); }

Rat r(long x) { return Rat(x); }
Rat nr(std::uint64_t n) { return Rat(static_cast<unsigned long>(n)); }

Int pow2(std::uint64_t e) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

DegreeLaw always(std::function<Rat(std::uint64_t)> f) {
    return [f = std::move(f)](std::uint64_t n) -> std::optional<Rat> { return f(n); };
}

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

std::shared_ptr<const AffineMapSpec> declare(std::vector<Poly> comps) {
    return std::make_shared<const AffineMapSpec>(AffineMapSpec::polynomial(std::move(comps)));
}

// Law at n = 1 against the built map; report-mode entries are exempt.
ZooEntry finish(ZooEntry e) {
    e.map.validate();
    if (e.expected_degree && e.mode == CheckMode::hard) {
        auto want = e.expected_degree(1);
        const auto got = degree(e.projective());
        if (want && *want != nr(got))
            throw DomainError(e.name + ": degree law gives " + to_string(*want) + " at n = 1, built map has degree " +
                              std::to_string(got));
    }
    return e;
}

std::string num(long x) { return std::to_string(x); }

}  // namespace

std::vector<Generator> shear_word(std::size_t k, std::size_t target, const Poly& shift) {
    require(target < k && shift.nvars() == k, "shear_word: bad target or arity");
    require(!shift.depends_on(target), "shear_word: shift depends on the target variable");
    bool lower = false;
    for (std::size_t v = 0; v < target; ++v) lower = lower || shift.depends_on(v);
    if (!lower) return {ElementaryGenerator{target, Rat(1), shift}};
    require(!shift.depends_on(0) || target != 0, "shear_word: cannot conjugate");
    // sigma swaps z0 and z_target; E' shears z0 by shift read through sigma.
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    std::swap(perm[0], perm[target]);
    std::vector<Poly> images;
    for (std::size_t i = 0; i < k; ++i) images.push_back(var(k, perm[i]));
    AffineGenerator sigma = permutation(perm);
    return {sigma, ElementaryGenerator{0, Rat(1), substitute(shift, images)}, sigma};
}

// Word for the chained blocks: block j >= 2 sits on (z_{2j-1}, z_{2j}) and
// reads z0 (j = 2) or z_{2j-3}; block 1 is (z1 + z0*z2^e1, z0, z2). Blocks
// read the old value of the previous block, so the last block goes first.
static AffineMapSpec chain_map(const std::vector<long>& e) {
    const std::size_t blocks = e.size();
    const std::size_t k = 2 * blocks + 1;
    std::vector<Generator> word;
    for (std::size_t j = blocks; j >= 2; --j) {
        const std::size_t a = 2 * j - 1;
        const std::size_t v = j == 2 ? 0 : 2 * j - 3;
        std::vector<std::size_t> perm(k);
        for (std::size_t i = 0; i < k; ++i) perm[i] = i;
        std::swap(perm[a], perm[a + 1]);
        word.push_back(permutation(perm));
        auto s = shear_word(k, a, var(k, v).pow(e[j - 1]) * var(k, a + 1));
        word.insert(word.end(), s.begin(), s.end());
    }
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    std::swap(perm[0], perm[1]);
    word.push_back(permutation(perm));
    word.push_back(ElementaryGenerator{0, Rat(1), var(k, 1) * var(k, 2).pow(e[0])});
    return AffineMapSpec::from_word(k, std::move(word));
}

ZooEntry tec1_f(long d) {
    require(d >= 1, "tec1: d must be >= 1");
    const std::size_t k = 3;
    ZooEntry e;
    e.name = "tec1";
    e.params = {{"d", d}};
    std::vector<std::size_t> swap01{1, 0, 2};
    e.map = AffineMapSpec::from_word(
        k, {permutation(swap01), ElementaryGenerator{0, Rat(1), var(k, 1) * var(k, 2).pow(d)}});
    e.source = "shear on C^3, linear growth";
    e.formula = "d*n + 1";
    e.inverse_formula = e.formula;
    e.expected_degree = always([d](std::uint64_t n) -> Rat { return r(d) * nr(n) + 1; });
    e.expected_inverse_degree = e.expected_degree;
    e.growth_exponent = 1;
    e.horizon_hint = 10;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry tec4_g(long p, long d) {
    require(d >= 1 && p >= d, "tec4_g: need p >= d >= 1");
    ZooEntry e;
    e.name = "tec4_g";
    e.params = {{"d", d}, {"p", p}};
    e.map = chain_map({d, p});
    e.source = "two chained shears on C^5, quadratic growth";
    e.formula = "p*d/2*n^2 + p*(2-d)/2*n + 1";
    e.inverse_formula = e.formula;
    e.expected_degree = always([p, d](std::uint64_t n) -> Rat {
        Rat x = nr(n);
        return r(p * d) / 2 * x * x + r(p * (2 - d)) / 2 * x + 1;
    });
    e.expected_inverse_degree = e.expected_degree;
    e.growth_exponent = 2;
    e.horizon_hint = 8;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry tec4_h(long l, long p, long d) {
    require(d >= 1 && p >= d && l >= p, "tec4_h: need l >= p >= d >= 1");
    ZooEntry e;
    e.name = "tec4_h";
    e.params = {{"d", d}, {"l", l}, {"p", p}};
    e.map = chain_map({d, p, l});
    e.source = "three chained shears on C^7, cubic growth";
    e.formula = "1 + l*(1 - p/2 + p*d/3)*n + l*p*(1-d)/2*n^2 + l*p*d/6*n^3";
    e.inverse_formula = e.formula;
    e.expected_degree = always([l, p, d](std::uint64_t n) -> Rat {
        Rat x = nr(n);
        return 1 + r(l) * (1 - make_rat(p, 2) + make_rat(p * d, 3)) * x + r(l * p * (1 - d)) / 2 * x * x +
               r(l * p * d) / 6 * x * x * x;
    });
    e.expected_inverse_degree = e.expected_degree;
    e.growth_exponent = 3;
    e.horizon_hint = 6;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry prop_ex_automorphism(const std::vector<long>& ex) {
    require(ex.size() >= 2, "prop_ex: need k >= 2 blocks");
    require(ex[0] >= 1, "prop_ex: exponents must be >= 1");
    for (std::size_t i = 1; i < ex.size(); ++i) require(ex[i] >= ex[i - 1], "prop_ex: exponents must be non-decreasing");
    ZooEntry e;
    e.name = "prop_ex";
    e.params = {{"k", static_cast<long>(ex.size())}};
    for (std::size_t i = 0; i < ex.size(); ++i) e.params["e" + std::to_string(i + 1)] = ex[i];
    e.map = chain_map(ex);
    e.source = "k chained shears on C^(2k+1), growth n^k";
    e.formula = "~ n^k";
    e.growth_exponent = static_cast<unsigned>(ex.size());
    e.horizon_hint = 10;
    e.exact_limit = 5;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry bir_F(long p, long d) {
    require(d >= 1 && p >= d, "bir_F: need p >= d >= 1");
    const std::size_t k = 4;
    ZooEntry e;
    e.name = "bir_F";
    e.params = {{"d", d}, {"p", p}};
    e.map = AffineMapSpec::polynomial(
        {var(k, 1) + var(k, 0) * var(k, 2).pow(d), var(k, 0), var(k, 2), var(k, 0).pow(p) * var(k, 3)});
    e.source = "birational map of P^4 extending the linear shear";
    e.formula = "p*d/2*n^2 + p*(2-d)/2*n + 1";
    e.expected_degree = always([p, d](std::uint64_t n) -> Rat {
        Rat x = nr(n);
        return r(p * d) / 2 * x * x + r(p * (2 - d)) / 2 * x + 1;
    });
    e.growth_exponent = 2;
    e.horizon_hint = 6;
    return finish(std::move(e));
}

ZooEntry bir_G(long l, long p, long d) {
    require(d >= 1 && p >= d && l >= p, "bir_G: need l >= p >= d >= 1");
    const std::size_t k = 5;
    ZooEntry e;
    e.name = "bir_G";
    e.params = {{"d", d}, {"l", l}, {"p", p}};
    e.map = AffineMapSpec::polynomial({var(k, 1) + var(k, 0) * var(k, 2).pow(d), var(k, 0), var(k, 2),
                                       var(k, 0).pow(p) * var(k, 3), var(k, 3).pow(l) * var(k, 4)});
    e.source = "birational map of P^5 extending bir_F";
    e.formula = "l*p*d/6*n^3 + (1 - 3d/4)*l*p*n^2 + (13/12*p*d - 2p + 1)*l*n - l*p*d/2 + l*p + 1";
    e.expected_degree = always([l, p, d](std::uint64_t n) -> Rat {
        Rat x = nr(n);
        return r(l * p * d) / 6 * x * x * x + (1 - make_rat(3 * d, 4)) * r(l * p) * x * x +
               (make_rat(13 * p * d, 12) - 2 * p + 1) * r(l) * x - make_rat(l * p * d, 2) + l * p + 1;
    });
    e.mode = CheckMode::report;
    e.growth_exponent = 3;
    e.horizon_hint = 5;
    return finish(std::move(e));
}

ZooEntry p1_f() {
    auto z = [](std::size_t i) { return var(3, i); };
    Poly u = z(2).pow(2) + z(0);
    ZooEntry e;
    e.name = "p1_f";
    e.map = AffineMapSpec::polynomial({z(2), u.pow(2) + z(2).pow(2) + z(0) + z(1), u});
    e.map.declared_inverse = declare({z(2) - z(0).pow(2), z(1) - z(2).pow(2) - z(2), z(0)});
    e.source = "automorphism of C^3 that is not algebraically stable";
    e.formula = "2^(n+1)";
    e.expected_degree = always([](std::uint64_t n) -> Rat { return Rat(pow2(n + 1)); });
    e.horizon_hint = 6;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry p2_f() {
    auto z = [](std::size_t i) { return var(3, i); };
    ZooEntry e;
    e.name = "p2_f";
    e.map = AffineMapSpec::polynomial({z(0).pow(2) + z(1), z(0), z(2) + cst(3, 1)});
    e.map.declared_inverse = declare({z(1), z(0) - z(1).pow(2), z(2) - cst(3, 1)});
    e.source = "fibred automorphism of C^3, exponential growth";
    e.formula = "2^n";
    e.inverse_formula = "2^n";
    e.expected_degree = always([](std::uint64_t n) -> Rat { return Rat(pow2(n)); });
    e.expected_inverse_degree = e.expected_degree;
    e.horizon_hint = 6;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry p2_g() {
    auto z = [](std::size_t i) { return var(3, i); };
    const Poly one = cst(3, 1);
    ZooEntry e;
    e.name = "p2_g";
    e.map = AffineMapSpec::polynomial({z(1).pow(2) + z(0) * z(1) + z(2), z(1) + one, z(0)});
    e.map.declared_inverse = declare({z(2), z(1) - one, z(0) - (z(1) - one).pow(2) - z(2) * (z(1) - one)});
    e.source = "fibred automorphism of C^3, linear growth";
    e.formula = "n + 1";
    e.expected_degree = always([](std::uint64_t n) -> Rat { return nr(n) + 1; });
    e.growth_exponent = 1;
    e.horizon_hint = 8;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry p3_f() {
    auto z = [](std::size_t i) { return var(3, i); };
    ZooEntry e;
    e.name = "p3_f";
    e.map = AffineMapSpec::polynomial({z(0) + z(1) + z(2), z(0).pow(2) + z(0) + z(1), z(0)});
    e.map.declared_inverse = declare({z(2), z(1) - z(2).pow(2) - z(2), z(0) - z(1) + z(2).pow(2)});
    e.source = "automorphism of C^3 with forward and backward growth differing";
    e.formula = "2^(floor(n/2) + 1)";
    e.inverse_formula = "2^n";
    e.expected_degree = always([](std::uint64_t n) -> Rat { return Rat(pow2(n / 2 + 1)); });
    e.expected_inverse_degree = always([](std::uint64_t n) -> Rat { return Rat(pow2(n)); });
    e.horizon_hint = 6;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry p3_g() {
    auto z = [](std::size_t i) { return var(3, i); };
    ZooEntry e;
    e.name = "p3_g";
    e.map = AffineMapSpec::polynomial({z(1).pow(2) + z(0) + z(1) + z(2), z(1), z(0)});
    e.map.declared_inverse = declare({z(2), z(1), z(0) - z(1).pow(2) - z(1) - z(2)});
    e.source = "automorphism of C^3 with bounded degree";
    e.formula = "2";
    e.inverse_formula = "2";
    e.expected_degree = always([](std::uint64_t) -> Rat { return Rat(2); });
    e.expected_inverse_degree = e.expected_degree;
    e.growth_exponent = 0;
    e.horizon_hint = 7;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry p4_f() {
    auto z = [](std::size_t i) { return var(6, i); };
    Poly a = z(0) - z(3).pow(2);
    Poly b = z(1) - a.pow(2);
    ZooEntry e;
    e.name = "p4_f";
    e.map = AffineMapSpec::polynomial(
        {z(1).pow(2) + z(5), z(5).pow(2) + z(4), z(2), z(1), z(0), z(4).pow(2) + z(3)});
    e.map.declared_inverse = declare({z(4), z(3), z(2), z(5) - b.pow(2), b, a});
    e.source = "automorphism of C^6, stable for three steps only";
    e.formula = "2, 4, 8, 8 for n = 1..4";
    const std::vector<long> known{2, 4, 8, 8};
    e.expected_degree = [known](std::uint64_t n) -> std::optional<Rat> {
        if (n < 1 || n > known.size()) return std::nullopt;
        return Rat(known[n - 1]);
    };
    e.horizon_hint = 4;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry remark_stability() {
    auto z = [](std::size_t i) { return var(3, i); };
    Poly w = z(1) - z(2).pow(2);
    ZooEntry e;
    e.name = "remark_stability";
    e.map = AffineMapSpec::polynomial({cst(3, 5) * z(0).pow(2) + z(2).pow(2) + cst(3, 6) * z(0) * z(2) + z(1),
                                       z(2).pow(2) + z(0), z(2)});
    e.map.declared_inverse =
        declare({w, z(0) - cst(3, 5) * w.pow(2) - z(2).pow(2) - cst(3, 6) * w * z(2), z(2)});
    e.source = "algebraically stable automorphism of C^3 with a degenerate leading part";
    e.formula = "2^n";
    e.expected_degree = always([](std::uint64_t n) -> Rat { return Rat(pow2(n)); });
    e.horizon_hint = 6;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry remark_bidegree() {
    auto z = [](std::size_t i) { return var(3, i); };
    ZooEntry e;
    e.name = "remark_bidegree";
    e.map = AffineMapSpec::polynomial({z(0).pow(2) + z(1) + z(2), z(0).pow(2) + z(1), z(0)});
    e.map.declared_inverse = declare({z(2), z(1) - z(2).pow(2), z(0) - z(1)});
    e.source = "automorphism of C^3 with unequal forward and backward degrees";
    e.formula = "2^n";
    e.inverse_formula = "2^floor((n+1)/2)";
    e.expected_degree = always([](std::uint64_t n) -> Rat { return Rat(pow2(n)); });
    e.expected_inverse_degree = always([](std::uint64_t n) -> Rat { return Rat(pow2((n + 1) / 2)); });
    e.horizon_hint = 8;
    e.exact_limit = 6;
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry henon_word(const std::vector<HenonStep>& steps) {
    require(!steps.empty(), "henon: need at least one step");
    std::vector<Generator> word;
    long prod = 1;
    ZooEntry e;
    e.name = "henon";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        validate(Generator{steps[i]});
        const long d = static_cast<long>(steps[i].p.degree().value());
        prod *= d;
        e.params["d" + std::to_string(i + 1)] = d;
        word.push_back(steps[i]);
    }
    e.map = AffineMapSpec::from_word(2, std::move(word));
    e.source = "composition of Henon steps on C^2";
    e.formula = "(" + num(prod) + ")^n";
    e.inverse_formula = e.formula;
    e.expected_degree = always([prod](std::uint64_t n) -> Rat {
        Int out;
        mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(prod), n);
        return Rat(out);
    });
    e.expected_inverse_degree = e.expected_degree;
    // Exact expansion is dense in two variables: exact up to degree 64, the
    // line method up to degree 4096.
    auto steps_below = [prod](long cap) {
        std::size_t h = 1;
        for (long deg = prod; deg * prod <= cap; deg *= prod) ++h;
        return h;
    };
    e.exact_limit = steps_below(64);
    e.horizon_hint = std::max<std::size_t>(steps_below(4096), 2);
    e.automorphism = true;
    return finish(std::move(e));
}

ZooEntry diller_favre_phi() {
    auto z = [](std::size_t i) { return var(2, i); };
    ZooEntry e;
    e.name = "phi";
    e.map = AffineMapSpec::rational(
        {RationalFunction(z(1) + Poly::constant(2, make_rat(2, 3))),
         RationalFunction(z(0) * (z(1) - Poly::constant(2, make_rat(1, 3))), z(1) + cst(2, 1))});
    e.source = "birational map of P^2 with quadratic growth";
    e.formula = "s(n-1) + s(n) + 1, ~ n^2";
    e.growth_exponent = 2;
    e.horizon_hint = 10;
    return finish(std::move(e));
}

ZooEntry psi_k(long k) {
    require(k >= 3, "psi: need k >= 3");
    const auto n = static_cast<std::size_t>(k);
    auto z = [n](std::size_t i) { return var(n, i); };
    std::vector<RationalFunction> comps{
        RationalFunction(z(1) + Poly::constant(n, make_rat(2, 3))),
        RationalFunction(z(0) * (z(1) - Poly::constant(n, make_rat(1, 3))), z(1) + cst(n, 1)),
        RationalFunction(z(0) * z(2))};
    for (std::size_t j = 3; j < n; ++j) comps.emplace_back(z(j - 1) * z(j));
    ZooEntry e;
    e.name = "psi";
    e.params = {{"k", k}};
    e.map = AffineMapSpec::rational(std::move(comps));
    e.source = "birational map of P^k extending the quadratic-growth map of P^2";
    e.formula = "~ n^k";
    e.growth_exponent = static_cast<unsigned>(k);
    e.horizon_hint = k == 3 ? 6 : 5;
    return finish(std::move(e));
}

std::vector<std::vector<long>> matrix_power(const std::vector<std::vector<long>>& a, unsigned n) {
    const std::size_t k = a.size();
    std::vector<std::vector<long>> out(k, std::vector<long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) out[i][i] = 1;
    for (unsigned s = 0; s < n; ++s) {
        std::vector<std::vector<long>> next(k, std::vector<long>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t m = 0; m < k; ++m) next[i][j] += out[i][m] * a[m][j];
        out = std::move(next);
    }
    return out;
}

Int monomial_map_degree(const std::vector<std::vector<long>>& a) {
    Int total = 0;
    const std::size_t k = a.size();
    for (std::size_t j = 0; j < k; ++j) {
        long lo = 0;
        for (std::size_t i = 0; i < k; ++i) lo = std::min(lo, a[i][j]);
        total += -lo;
    }
    long top = 0;
    for (std::size_t i = 0; i < k; ++i) {
        long s = 0;
        for (long x : a[i]) s += x;
        top = std::max(top, s);
    }
    return total + top;
}

static Rat determinant(const std::vector<std::vector<long>>& a) {
    const std::size_t k = a.size();
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = a[i][j];
    Rat det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && m[p][c] == 0) ++p;
        if (p == k) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < k; ++i) {
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < k; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

ZooEntry monomial_entry(const std::vector<std::vector<long>>& a) {
    const std::size_t k = a.size();
    require(k >= 1, "monomial: empty matrix");
    for (const auto& row : a) require(row.size() == k, "monomial: matrix must be square");
    require(determinant(a) != 0, "monomial: singular matrix");
    std::vector<RationalFunction> comps;
    for (std::size_t i = 0; i < k; ++i) {
        Monomial up(k), down(k);
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] > 0) up.set(j, static_cast<Monomial::Exponent>(a[i][j]));
            if (a[i][j] < 0) down.set(j, static_cast<Monomial::Exponent>(-a[i][j]));
        }
        comps.emplace_back(Poly::monomial(up), Poly::monomial(down));
    }
    ZooEntry e;
    e.name = "monomial";
    e.params["k"] = static_cast<long>(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) e.params["a" + std::to_string(i) + std::to_string(j)] = a[i][j];
    e.map = AffineMapSpec::rational(std::move(comps));
    e.source = "monomial map of an integer matrix";
    e.formula = "deg of the monomial map of A^n";
    e.expected_degree = always([a](std::uint64_t n) -> Rat {
        return Rat(monomial_map_degree(matrix_power(a, static_cast<unsigned>(n))));
    });
    e.horizon_hint = 8;
    return finish(std::move(e));
}

EntryDegrees entry_degrees(const ZooEntry& e, std::size_t n, bool inv, std::uint64_t seed) {
    const ProjectiveMap f = inv ? homogenize_map(inverse(e.map)) : e.projective();
    EntryDegrees out;
    out.exact_upto = std::min(n, e.exact_limit);
    out.sequence = degree_sequence(f, out.exact_upto);
    if (out.exact_upto == n) return out;
    auto a = degree_sequence_on_line(f, n, seed);
    auto b = degree_sequence_on_line(f, n, seed + 7919);
    if (a != b) throw DomainError(e.name + ": line-method degrees disagree between seeds");
    for (std::size_t i = 0; i < out.exact_upto; ++i)
        if (a.degrees[i] != out.sequence.degrees[i]) throw DomainError(e.name + ": line-method degrees disagree with exact prefix");
    out.sequence = std::move(a);
    return out;
}

// Registry.

namespace {

long get(const ZooParams& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw DomainError("missing parameter " + key);
    return it->second;
}

std::vector<long> indexed(const ZooParams& p, const std::string& prefix, long count, long fallback) {
    std::vector<long> out;
    for (long i = 1; i <= count; ++i) {
        auto it = p.find(prefix + std::to_string(i));
        out.push_back(it == p.end() ? fallback : it->second);
    }
    return out;
}

std::vector<ZooFamily> make_catalog() {
    std::vector<ZooFamily> c;
    c.push_back({"tec1", {{"d", 1}}, "(z1 + z0*z2^d, z0, z2)", [](const ZooParams& p) { return tec1_f(get(p, "d")); }});
    c.push_back({"tec4_g", {{"d", 1}, {"p", 1}}, "two chained shears on C^5",
                 [](const ZooParams& p) { return tec4_g(get(p, "p"), get(p, "d")); }});
    c.push_back({"tec4_h", {{"d", 1}, {"l", 1}, {"p", 1}}, "three chained shears on C^7",
                 [](const ZooParams& p) { return tec4_h(get(p, "l"), get(p, "p"), get(p, "d")); }});
    c.push_back({"prop_ex", {{"k", 4}}, "k chained shears on C^(2k+1), exponents e1..ek (default 1)",
                 [](const ZooParams& p) { return prop_ex_automorphism(indexed(p, "e", get(p, "k"), 1)); }});
    c.push_back({"bir_F", {{"d", 1}, {"p", 1}}, "(z1 + z0*z2^d, z0, z2, z0^p*z3)",
                 [](const ZooParams& p) { return bir_F(get(p, "p"), get(p, "d")); }});
    c.push_back({"bir_G", {{"d", 1}, {"l", 1}, {"p", 1}}, "bir_F extended by z3^l*z4",
                 [](const ZooParams& p) { return bir_G(get(p, "l"), get(p, "p"), get(p, "d")); }});
    c.push_back({"p1_f", {}, "not algebraically stable", [](const ZooParams&) { return p1_f(); }});
    c.push_back({"p2_f", {}, "fibred, exponential", [](const ZooParams&) { return p2_f(); }});
    c.push_back({"p2_g", {}, "fibred, linear", [](const ZooParams&) { return p2_g(); }});
    c.push_back({"p3_f", {}, "forward and backward growth differ", [](const ZooParams&) { return p3_f(); }});
    c.push_back({"p3_g", {}, "bounded degree", [](const ZooParams&) { return p3_g(); }});
    c.push_back({"p4_f", {}, "stable for three steps only", [](const ZooParams&) { return p4_f(); }});
    c.push_back({"remark_stability", {}, "stable with degenerate leading part",
                 [](const ZooParams&) { return remark_stability(); }});
    c.push_back({"remark_bidegree", {}, "unequal forward and backward degrees",
                 [](const ZooParams&) { return remark_bidegree(); }});
    c.push_back({"henon", {{"steps", 1}, {"d1", 2}}, "steps (z0, z1) -> (z1, z1^di - z0), i = 1..steps",
                 [](const ZooParams& p) {
                     std::vector<HenonStep> steps;
                     for (long d : indexed(p, "d", get(p, "steps"), 2)) {
                         require(d >= 2, "henon: step degree must be >= 2");
                         steps.push_back({Poly::variable(1, 0).pow(static_cast<std::uint64_t>(d)), Rat(1)});
                     }
                     return henon_word(steps);
                 }});
    c.push_back({"phi", {}, "(z1 + 2/3, z0*(z1 - 1/3)/(z1 + 1))", [](const ZooParams&) { return diller_favre_phi(); }});
    c.push_back({"psi", {{"k", 3}}, "phi extended by z0*z2, z2*z3, ...",
                 [](const ZooParams& p) { return psi_k(get(p, "k")); }});
    c.push_back({"monomial", {{"k", 2}, {"a00", 1}, {"a01", 1}, {"a10", 1}, {"a11", 0}},
                 "monomial map of the k x k matrix (aij), missing entries 0", [](const ZooParams& p) {
                     const long k = get(p, "k");
                     require(k >= 1 && k <= 9, "monomial: k must be in 1..9");
                     std::vector<std::vector<long>> a(k, std::vector<long>(k, 0));
                     for (long i = 0; i < k; ++i)
                         for (long j = 0; j < k; ++j) {
                             auto it = p.find("a" + std::to_string(i) + std::to_string(j));
                             if (it != p.end()) a[i][j] = it->second;
                         }
                     return monomial_entry(a);
                 }});
    return c;
}

}  // namespace

const std::vector<ZooFamily>& zoo_catalog() {
    static const std::vector<ZooFamily> catalog = make_catalog();
    return catalog;
}

const ZooFamily& zoo_family(const std::string& name) {
    for (const auto& f : zoo_catalog())
        if (f.name == name) return f;
    throw DomainError("unknown zoo entry '" + name + "'");
}

ZooEntry build_entry(const std::string& name, const ZooParams& overrides) {
    const auto& fam = zoo_family(name);
    static const std::regex indexed_key("(e|d)[0-9]+|a[0-9][0-9]");
    ZooParams p = fam.defaults;
    for (const auto& [key, value] : overrides) {
        bool known = p.count(key) > 0;
        if (!known && (name == "prop_ex" || name == "henon" || name == "monomial"))
            known = std::regex_match(key, indexed_key) && key[0] == (name == "prop_ex" ? 'e' : name == "henon" ? 'd' : 'a');
        if (!known) throw DomainError(name + ": unknown parameter '" + key + "'");
        p[key] = value;
    }
    // A smaller monomial matrix drops the default entries outside it.
    if (name == "monomial" && overrides.count("k")) {
        ZooParams q{{"k", p["k"]}};
        for (const auto& [key, value] : overrides) q[key] = value;
        p = q;
    }
    return fam.build(p);
}

std::vector<ZooEntry> verification_entries() {
    std::vector<ZooEntry> out;
    for (long d : {1, 2, 3, 5}) out.push_back(tec1_f(d));
    for (auto [p, d] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) out.push_back(tec4_g(p, d));
    for (auto [l, p, d] : std::vector<std::tuple<long, long, long>>{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}})
        out.push_back(tec4_h(l, p, d));
    out.push_back(prop_ex_automorphism({1, 1, 1, 1}));
    out.push_back(bir_F(1, 1));
    out.push_back(bir_F(2, 1));
    out.push_back(bir_G(1, 1, 1));
    out.push_back(p1_f());
    out.push_back(p2_f());
    out.push_back(p2_g());
    out.push_back(p3_f());
    out.push_back(p3_g());
    out.push_back(p4_f());
    out.push_back(remark_stability());
    out.push_back(remark_bidegree());
    out.push_back(henon_word({{Poly::variable(1, 0).pow(2), Rat(1)}}));
    out.push_back(henon_word({{Poly::variable(1, 0).pow(2), Rat(1)}, {Poly::variable(1, 0).pow(3), Rat(1)}}));
    out.push_back(diller_favre_phi());
    out.push_back(psi_k(3));
    out.push_back(psi_k(4));
    out.push_back(monomial_entry({{2, 0}, {0, 2}}));
    out.push_back(monomial_entry({{1, 1}, {0, 1}}));
    out.push_back(monomial_entry({{1, 1}, {1, 0}}));
    return out;
}

nlohmann::json to_json(const ZooEntry& e) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : e.params) params[k] = v;
    nlohmann::json j{{"name", e.name},
                     {"dimension", e.dimension()},
                     {"parameters", params},
                     {"citation", e.source},
                     {"formula", e.formula},
                     {"inverse_formula", e.inverse_formula.empty() ? nlohmann::json() : nlohmann::json(e.inverse_formula)},
                     {"mode", e.mode == CheckMode::hard ? "hard" : "report"},
                     {"horizon_hint", e.horizon_hint},
                     {"automorphism", e.automorphism},
                     {"map", e.map.to_string()}};
    j["growth_exponent"] = e.growth_exponent ? nlohmann::json(*e.growth_exponent) : nlohmann::json();
    return j;
}

nlohmann::json catalog_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& f : zoo_catalog()) out.push_back(to_json(f.build(f.defaults)));
    return out;
}

}  // namespace degrowth
