#include "degrowth/maps.hpp"

#include "degrowth/gcd.hpp"

#include <algorithm>

namespace degrowth {

namespace {

using RatMatrix = std::vector<std::vector<Rat>>;

// Gauss-Jordan on [M | I]; nullopt if singular.
std::optional<RatMatrix> rat_inverse(const RatMatrix& m) {
    const std::size_t k = m.size();
    RatMatrix a(k, std::vector<Rat>(2 * k, Rat(0)));
    for (std::size_t i = 0; i < k; ++i) {
        if (m[i].size() != k) throw ArityError("matrix is not square");
        for (std::size_t j = 0; j < k; ++j) a[i][j] = m[i][j];
        a[i][k + i] = 1;
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv][col] == 0) ++piv;
        if (piv == k) return std::nullopt;
        std::swap(a[piv], a[col]);
        Rat inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (std::size_t j = 0; j < 2 * k; ++j) a[r][j] -= f * a[col][j];
        }
    }
    RatMatrix out(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out[i][j] = a[i][k + j];
    return out;
}

std::vector<Poly> variables(std::size_t k) {
    std::vector<Poly> v;
    v.reserve(k);
    for (std::size_t i = 0; i < k; ++i) v.push_back(Poly::variable(k, i));
    return v;
}

bool is_identity(std::span<const Poly> comps) {
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!(comps[i] == Poly::variable(comps.size(), i))) return false;
    return true;
}

// Embed a univariate polynomial as a polynomial in variable `var` of n variables.
Poly embed_univariate(const Poly& p, std::size_t n, std::size_t var) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) terms.push_back({Monomial::variable(n, var, t.mono[0]), t.coeff});
    return Poly::from_terms(n, std::move(terms));
}

// Overall scalar: coprime integer coefficients across all components and a
// positive leading coefficient on the first nonzero component.
void normalize_scalar(std::vector<Poly>& comps) {
    Int g = 0, l = 1;
    const Poly* first = nullptr;
    for (const auto& c : comps) {
        if (c.is_zero()) continue;
        if (!first) first = &c;
        for (const auto& t : c.terms()) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
        }
    }
    if (!first) return;
    Rat scale = make_rat(l, g);
    if (sgn(first->leading_coeff()) < 0) scale = -scale;
    if (scale == 1) return;
    for (auto& c : comps) c *= scale;
}

}  // namespace

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)) {
    den_ = Poly::constant(num_.nvars(), Rat(1));
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw ArityError("rational function: variable-count mismatch");
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.nvars(), Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    Rat lc = den_.leading_coeff();
    if (lc != 1) {
        num_ *= Rat(1 / lc);
        den_ *= Rat(1 / lc);
    }
}

std::string RationalFunction::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

AffineGenerator permutation(std::span<const std::size_t> perm) {
    const std::size_t k = perm.size();
    AffineGenerator g;
    g.matrix.assign(k, std::vector<Rat>(k, Rat(0)));
    g.translation.assign(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        if (perm[i] >= k) throw DomainError("permutation index out of range");
        g.matrix[i][perm[i]] = 1;
    }
    return g;
}

AffineGenerator translation(std::span<const Rat> t) {
    std::vector<std::size_t> id(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) id[i] = i;
    AffineGenerator g = permutation(id);
    g.translation.assign(t.begin(), t.end());
    return g;
}

std::size_t generator_dimension(const Generator& g) {
    return std::visit(
        [](const auto& x) -> std::size_t {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AffineGenerator>) return x.matrix.size();
            else if constexpr (std::is_same_v<T, ElementaryGenerator>) return x.shift.nvars();
            else return 2;
        },
        g);
}

void validate(const Generator& g) {
    if (const auto* a = std::get_if<AffineGenerator>(&g)) {
        const std::size_t k = a->matrix.size();
        if (k == 0 || a->translation.size() != k) throw DomainError("affine generator: bad shape");
        if (!rat_inverse(a->matrix)) throw DomainError("affine generator: singular matrix");
    } else if (const auto* e = std::get_if<ElementaryGenerator>(&g)) {
        if (e->target >= e->shift.nvars()) throw DomainError("elementary generator: target out of range");
        if (e->scale == 0) throw DomainError("elementary generator: zero scale");
        for (std::size_t v = 0; v <= e->target; ++v)
            if (e->shift.depends_on(v))
                throw DomainError("elementary generator: shift must only involve variables after the target");
    } else {
        const auto& h = std::get<HenonStep>(g);
        if (h.p.nvars() != 1) throw DomainError("Henon step: P must be univariate");
        if (h.p.is_zero() || h.p.degree().value() < 2) throw DomainError("Henon step: deg P must be >= 2");
        if (h.delta == 0) throw DomainError("Henon step: delta must be nonzero");
    }
}

std::vector<Poly> generator_components(const Generator& g) {
    validate(g);
    if (const auto* a = std::get_if<AffineGenerator>(&g)) {
        const std::size_t k = a->matrix.size();
        std::vector<Poly> comps;
        for (std::size_t i = 0; i < k; ++i) {
            Poly c = Poly::constant(k, a->translation[i]);
            for (std::size_t j = 0; j < k; ++j)
                if (a->matrix[i][j] != 0) c += Poly::variable(k, j) * a->matrix[i][j];
            comps.push_back(std::move(c));
        }
        return comps;
    }
    if (const auto* e = std::get_if<ElementaryGenerator>(&g)) {
        std::vector<Poly> comps = variables(e->shift.nvars());
        comps[e->target] = comps[e->target] * e->scale + e->shift;
        return comps;
    }
    const auto& h = std::get<HenonStep>(g);
    return {Poly::variable(2, 1), embed_univariate(h.p, 2, 1) - Poly::variable(2, 0) * h.delta};
}

std::vector<Generator> invert(const Generator& g) {
    validate(g);
    if (const auto* a = std::get_if<AffineGenerator>(&g)) {
        AffineGenerator inv;
        inv.matrix = *rat_inverse(a->matrix);
        const std::size_t k = inv.matrix.size();
        inv.translation.assign(k, Rat(0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) inv.translation[i] -= inv.matrix[i][j] * a->translation[j];
        return {inv};
    }
    if (const auto* e = std::get_if<ElementaryGenerator>(&g)) {
        Rat s = 1 / e->scale;
        return {ElementaryGenerator{e->target, s, e->shift * Rat(-s)}};
    }
    // (z0, z1) -> ((P(z0) - z1) / delta, z0): swap, then an elementary map on z0.
    const auto& h = std::get<HenonStep>(g);
    std::size_t swap[] = {1, 0};
    Rat inv_delta = 1 / h.delta;
    return {permutation(swap), ElementaryGenerator{0, Rat(-inv_delta), embed_univariate(h.p, 2, 1) * inv_delta}};
}

AffineMapSpec AffineMapSpec::polynomial(std::vector<Poly> comps) {
    AffineMapSpec m;
    m.k = comps.size();
    for (auto& c : comps) m.components.emplace_back(std::move(c));
    m.kind = MapKind::polynomial;
    m.validate();
    return m;
}

AffineMapSpec AffineMapSpec::rational(std::vector<RationalFunction> comps) {
    AffineMapSpec m;
    m.k = comps.size();
    m.kind = std::all_of(comps.begin(), comps.end(), [](const RationalFunction& r) { return r.is_polynomial(); })
                 ? MapKind::polynomial
                 : MapKind::rational;
    m.components = std::move(comps);
    m.validate();
    return m;
}

AffineMapSpec AffineMapSpec::from_word(std::size_t k, std::vector<Generator> word) {
    std::vector<Poly> comps = variables(k);
    for (const auto& g : word) {
        if (generator_dimension(g) != k) throw ArityError("generator dimension does not match the map");
        comps = substitute_all(generator_components(g), comps);
    }
    AffineMapSpec m = polynomial(std::move(comps));
    m.generator_word = std::move(word);
    return m;
}

AffineMapSpec AffineMapSpec::identity(std::size_t k) { return polynomial(variables(k)); }

void AffineMapSpec::validate() const {
    if (k == 0) throw ArityError("map of dimension 0");
    if (components.size() != k)
        throw ArityError("expected " + std::to_string(k) + " components, got " + std::to_string(components.size()));
    for (const auto& c : components) {
        if (c.nvars() != k) throw ArityError("component has the wrong variable count");
        if (c.den().is_zero()) throw DomainError("zero denominator");
        if (kind == MapKind::polynomial && !c.is_polynomial())
            throw DomainError("polynomial map with a non-trivial denominator");
    }
}

std::vector<Poly> AffineMapSpec::polynomial_components() const {
    std::vector<Poly> out;
    for (const auto& c : components) {
        if (!c.is_polynomial()) throw DomainError("map is not polynomial");
        out.push_back(c.num());
    }
    return out;
}

std::string AffineMapSpec::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out += ", ";
        out += components[i].to_string();
    }
    return out + ")";
}

ProjectiveMap ProjectiveMap::from_components(std::vector<Poly> components) {
    const std::size_t n = components.size();
    if (n < 2) throw ArityError("projective map needs at least two components");
    for (const auto& c : components)
        if (c.nvars() != n) throw ArityError("projective map: k+1 components in k+1 variables expected");
    std::optional<std::uint64_t> d;
    for (const auto& c : components) {
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) throw DomainError("projective map: component " + c.to_string() + " is not homogeneous");
        auto cd = c.degree().value();
        if (d && *d != cd) throw DomainError("projective map: components of different degrees");
        d = cd;
    }
    if (!d) throw CompositionCollapse("all components vanish identically", 0);

    Poly g = gcd_of(components);
    if (!g.is_constant())
        for (auto& c : components) c = *divide_exact(c, g);
    normalize_scalar(components);

    ProjectiveMap m;
    m.degree_ = *d - g.degree().value();
    if (m.degree_ == 0) throw DomainError("projective map of degree 0 (constant map)");
    m.components_ = std::move(components);
    return m;
}

ProjectiveMap ProjectiveMap::identity(std::size_t k) { return from_components(variables(k + 1)); }

std::string ProjectiveMap::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += " : ";
        out += components_[i].to_string();
    }
    return out + ")";
}

ProjectiveMap homogenize_map(const AffineMapSpec& m) {
    m.validate();
    Poly common = m.components.front().den();
    for (const auto& c : m.components) {
        if (c.den().is_constant()) continue;
        Poly g = gcd(common, c.den());
        common = *divide_exact(common, g) * c.den();
    }
    std::vector<Poly> nums;
    std::uint64_t top = common.degree().value();
    for (const auto& c : m.components) {
        Poly n = c.num() * *divide_exact(common, c.den());
        if (!n.is_zero()) top = std::max(top, n.degree().value());
        nums.push_back(std::move(n));
    }
    std::vector<Poly> comps;
    for (const auto& n : nums) comps.push_back(homogenize(n, top));
    comps.push_back(homogenize(common, top));
    return ProjectiveMap::from_components(std::move(comps));
}

std::vector<RationalFunction> to_affine(const ProjectiveMap& m) {
    const std::size_t k = m.dimension();
    if (m.component(k).is_zero()) throw DomainError("to_affine: last component vanishes");
    Poly den = dehomogenize(m.component(k), k);
    std::vector<RationalFunction> out;
    for (std::size_t i = 0; i < k; ++i) out.emplace_back(dehomogenize(m.component(i), k), den);
    return out;
}

ProjectiveMap compose(const ProjectiveMap& g, const ProjectiveMap& f) {
    if (g.dimension() != f.dimension()) throw ArityError("compose: dimension mismatch");
    return ProjectiveMap::from_components(substitute_all(g.components(), f.components()));
}

std::vector<ProjectiveMap> iterate(const ProjectiveMap& f, std::size_t n) {
    if (n < 1) throw DomainError("iterate: n must be >= 1");
    std::vector<ProjectiveMap> out{f};
    out.reserve(n);
    for (std::size_t j = 2; j <= n; ++j) {
        try {
            out.push_back(compose(f, out.back()));
        } catch (const CompositionCollapse& e) {
            throw IterationCollapse(std::string("iterate: step ") + std::to_string(j) + ": " + e.what(), j,
                                    std::move(out));
        }
    }
    return out;
}

AffineMapSpec compose_polynomial(const AffineMapSpec& g, const AffineMapSpec& f) {
    if (g.k != f.k) throw ArityError("compose_polynomial: dimension mismatch");
    return AffineMapSpec::polynomial(substitute_all(g.polynomial_components(), f.polynomial_components()));
}

namespace {

bool composes_to_identity(const AffineMapSpec& g, const AffineMapSpec& f) {
    if (g.kind == MapKind::polynomial && f.kind == MapKind::polynomial)
        return is_identity(substitute_all(g.polynomial_components(), f.polynomial_components()));
    try {
        return compose(homogenize_map(g), homogenize_map(f)) == ProjectiveMap::identity(g.k);
    } catch (const CompositionCollapse&) {
        return false;
    }
}

}  // namespace

AffineMapSpec inverse(const AffineMapSpec& m) {
    m.validate();
    AffineMapSpec inv;
    if (m.generator_word) {
        std::vector<Generator> word;
        for (auto it = m.generator_word->rbegin(); it != m.generator_word->rend(); ++it)
            for (auto& g : invert(*it)) word.push_back(std::move(g));
        inv = AffineMapSpec::from_word(m.k, std::move(word));
    } else if (m.declared_inverse) {
        inv = *m.declared_inverse;
        inv.validate();
        if (inv.k != m.k) throw InverseError("declared inverse has the wrong dimension");
        AffineMapSpec back = m;
        back.declared_inverse.reset();
        inv.declared_inverse = std::make_shared<const AffineMapSpec>(std::move(back));
    } else {
        throw InverseError("no inverse information (generator word or declared inverse) available");
    }
    if (!composes_to_identity(m, inv) || !composes_to_identity(inv, m))
        throw InverseError("inverse verification failed: composition is not the identity");
    return inv;
}

ProjectiveMap monomial_map(const std::vector<std::vector<long>>& a) {
    const std::size_t k = a.size();
    if (k == 0) throw ArityError("monomial_map: empty matrix");
    RatMatrix r(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i].size() != k) throw ArityError("monomial_map: matrix is not square");
        for (std::size_t j = 0; j < k; ++j) r[i][j] = a[i][j];
    }
    if (!rat_inverse(r)) throw DomainError("monomial_map: singular matrix");
    std::vector<RationalFunction> comps;
    for (std::size_t i = 0; i < k; ++i) {
        Monomial num(k), den(k);
        for (std::size_t j = 0; j < k; ++j) {
            long e = a[i][j];
            if (e >= 0) num.set(j, static_cast<Monomial::Exponent>(e));
            else den.set(j, static_cast<Monomial::Exponent>(-e));
        }
        comps.emplace_back(Poly::monomial(num), Poly::monomial(den));
    }
    return homogenize_map(AffineMapSpec::rational(std::move(comps)));
}

std::uint64_t degree(const ProjectiveMap& m) { return m.degree(); }

Bidegree bidegree(const AffineMapSpec& m) {
    return {homogenize_map(m).degree(), homogenize_map(inverse(m)).degree()};
}

}  // namespace degrowth
