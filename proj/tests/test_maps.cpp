#include "support.hpp"

#include "degrowth/errors.hpp"
#include "degrowth/gcd.hpp"
#include "degrowth/maps.hpp"

#include <doctest.h>

using namespace degrowth;
using testing::c;
using testing::z;

namespace {

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t k = a.size();
    IntMatrix out(k, std::vector<long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
    return out;
}

long det(const IntMatrix& a) {
    if (a.size() == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

AffineMapSpec tec1(unsigned d) {
    return AffineMapSpec::polynomial({z(3, 1) + z(3, 0) * z(3, 2).pow(d), z(3, 0), z(3, 2)});
}

std::vector<std::uint64_t> degrees(const std::vector<ProjectiveMap>& its) {
    std::vector<std::uint64_t> out;
    for (const auto& m : its) out.push_back(m.degree());
    return out;
}

AffineMapSpec diller_favre() {
    const std::size_t n = 2;
    return AffineMapSpec::rational(
        {RationalFunction(z(n, 1) + c(n, 2, 3)),
         RationalFunction(z(n, 0) * (z(n, 1) - c(n, 1, 3)), z(n, 1) + c(n, 1))});
}

}  // namespace

TEST_CASE("rational functions are reduced with a monic denominator") {
    const std::size_t n = 2;
    RationalFunction r(c(n, 2) * z(n, 0) * (z(n, 1) + c(n, 1)), c(n, 4) * (z(n, 1) + c(n, 1)) * z(n, 1));
    CHECK(r.num() == z(n, 0) * c(n, 1, 2));
    CHECK(r.den() == z(n, 1));
    CHECK(r.to_string() == "(1/2*z0)/(z1)");
    CHECK(RationalFunction(z(n, 0) * c(n, 3), c(n, 3)).is_polynomial());
    CHECK_THROWS_AS(RationalFunction(z(n, 0), Poly(n)), DomainError);
}

TEST_CASE("homogenize_map") {
    SUBCASE("polynomial map of C^2") {
        auto m = AffineMapSpec::polynomial({z(2, 0).pow(2) + z(2, 1), z(2, 0)});
        ProjectiveMap p = homogenize_map(m);
        CHECK(p.to_string() == "(z0^2 + z1*z2 : z0*z2 : z2^2)");
        CHECK(p.degree() == 2);
    }
    SUBCASE("identity") {
        ProjectiveMap p = homogenize_map(AffineMapSpec::identity(3));
        CHECK(p == ProjectiveMap::identity(3));
        CHECK(p.degree() == 1);
        CHECK(p.to_string() == "(z0 : z1 : z2 : z3)");
    }
    SUBCASE("Diller-Favre map over the common denominator z1 + 1") {
        ProjectiveMap p = homogenize_map(diller_favre());
        CHECK(p.degree() == 2);
        const std::size_t n = 3;
        CHECK(p.component(0) == (c(n, 3) * z(n, 1) + c(n, 2) * z(n, 2)) * (z(n, 1) + z(n, 2)));
        CHECK(p.component(1) == z(n, 0) * (c(n, 3) * z(n, 1) - z(n, 2)));
        CHECK(p.component(2) == c(n, 3) * z(n, 2) * (z(n, 1) + z(n, 2)));
    }
}

TEST_CASE("projective map normalization") {
    const std::size_t n = 3;
    Poly g = z(n, 0) + z(n, 2);
    auto p = ProjectiveMap::from_components({c(n, -2) * z(n, 0) * g, c(n, 4) * z(n, 1) * g, Poly(n)});
    CHECK(p.degree() == 1);
    CHECK(p.to_string() == "(z0 : -2*z1 : 0)");
    CHECK_THROWS_AS(ProjectiveMap::from_components({z(3, 0) * z(3, 0), z(3, 1), z(3, 2)}), DomainError);
    CHECK_THROWS_AS(ProjectiveMap::from_components({z(2, 0), z(2, 1), z(2, 1)}), ArityError);
    CHECK_THROWS_AS(ProjectiveMap::from_components({Poly(2), Poly(2)}), CompositionCollapse);
}

TEST_CASE("compose") {
    SUBCASE("identity is neutral") {
        ProjectiveMap m = homogenize_map(tec1(3));
        CHECK(compose(m, ProjectiveMap::identity(3)) == m);
        CHECK(compose(ProjectiveMap::identity(3), m) == m);
    }
    SUBCASE("linear-growth shear, d = 1, composed with itself has degree 3") {
        ProjectiveMap m = homogenize_map(tec1(1));
        CHECK(m.degree() == 2);
        ProjectiveMap m2 = compose(m, m);
        CHECK(m2.degree() == 3);
        // Affine chart of the second iterate agrees with direct substitution.
        auto chart = to_affine(m2);
        CHECK(chart[0].num() == z(3, 0) + z(3, 1) * z(3, 2) + z(3, 0) * z(3, 2).pow(2));
        CHECK(chart[0].is_polynomial());
    }
    SUBCASE("Diller-Favre iterates follow deg = s(n-1) + s(n) + 1") {
        // s(n) is the degree of the second denominator in the affine chart.
        ProjectiveMap phi = homogenize_map(diller_favre());
        auto its = iterate(phi, 5);
        std::vector<std::uint64_t> s{0};
        for (const auto& m : its) {
            auto chart = to_affine(m);
            s.push_back(chart[1].den().degree().value());
            CHECK(chart[0].num().degree().value() == s[s.size() - 2] + 1);
            CHECK(chart[1].num().degree().value() == s.back() + 1);
        }
        for (std::size_t n = 1; n <= 5; ++n) CHECK(its[n - 1].degree() == s[n - 1] + s[n] + 1);
        CHECK(compose(phi, phi).degree() == 4);
    }
    SUBCASE("collapse into the indeterminacy set is an error") {
        const std::size_t n = 4;
        auto f = ProjectiveMap::from_components({z(n, 0), z(n, 0), z(n, 2), z(n, 2)});
        auto g = ProjectiveMap::from_components(
            {z(n, 0) - z(n, 1), z(n, 2) - z(n, 3), z(n, 0) - z(n, 1), z(n, 2) - z(n, 3)});
        CHECK_THROWS_AS(compose(g, f), CompositionCollapse);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(compose(ProjectiveMap::identity(2), ProjectiveMap::identity(3)), ArityError);
    }
}

TEST_CASE("iterate") {
    SUBCASE("identity") {
        auto its = iterate(ProjectiveMap::identity(2), 5);
        REQUIRE(its.size() == 5);
        for (const auto& m : its) CHECK(m == ProjectiveMap::identity(2));
    }
    SUBCASE("linear-growth shear, d = 2: degrees 2n + 1") {
        CHECK(degrees(iterate(homogenize_map(tec1(2)), 4)) == std::vector<std::uint64_t>{3, 5, 7, 9});
    }
    SUBCASE("automorphism of C^6 whose degree stalls at 8") {
        const std::size_t n = 6;
        auto f = AffineMapSpec::polynomial({z(n, 1).pow(2) + z(n, 5), z(n, 5).pow(2) + z(n, 4), z(n, 2), z(n, 1),
                                            z(n, 0), z(n, 4).pow(2) + z(n, 3)});
        CHECK(degrees(iterate(homogenize_map(f), 4)) == std::vector<std::uint64_t>{2, 4, 8, 8});
    }
    SUBCASE("collapse reports the step and the partial result") {
        // The image of f lies in {z0 = z1, z2 = z3}, where every component vanishes.
        const std::size_t n = 4;
        auto f = ProjectiveMap::from_components(
            {z(n, 0) - z(n, 1), z(n, 0) - z(n, 1), z(n, 2) - z(n, 3), z(n, 2) - z(n, 3)});
        try {
            (void)iterate(f, 5);
            FAIL("expected a collapse");
        } catch (const IterationCollapse& e) {
            CHECK(e.step() == 2);
            CHECK(e.partial().size() == 1);
        }
    }
    CHECK_THROWS_AS(iterate(ProjectiveMap::identity(1), 0), DomainError);
}

TEST_CASE("generators") {
    SUBCASE("elementary inverse subtracts the shift") {
        ElementaryGenerator e{0, Rat(1), z(2, 1).pow(2)};
        auto m = AffineMapSpec::from_word(2, {e});
        CHECK(m.to_string() == "(z1^2 + z0, z1)");
        CHECK(inverse(m).to_string() == "(-z1^2 + z0, z1)");
    }
    SUBCASE("translation inverse is the opposite translation") {
        std::vector<Rat> t{Rat(1), Rat(-2, 3)};
        auto m = AffineMapSpec::from_word(2, {translation(t)});
        CHECK(inverse(m).to_string() == "(z0 - 1, z1 + 2/3)");
    }
    SUBCASE("elementary triangular condition") {
        CHECK_THROWS_AS(validate(ElementaryGenerator{1, Rat(1), z(2, 0)}), DomainError);
        CHECK_THROWS_AS(validate(ElementaryGenerator{0, Rat(0), z(2, 1)}), DomainError);
    }
    SUBCASE("singular affine part") {
        AffineGenerator a{{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, {Rat(0), Rat(0)}};
        CHECK_THROWS_AS(validate(a), DomainError);
    }
    SUBCASE("Henon steps") {
        CHECK_THROWS_AS(validate(HenonStep{z(1, 0), Rat(1)}), DomainError);
        CHECK_THROWS_AS(validate(HenonStep{z(1, 0).pow(2), Rat(0)}), DomainError);
        HenonStep h{z(1, 0).pow(2) + c(1, 1), Rat(3)};
        auto m = AffineMapSpec::from_word(2, {h});
        CHECK(m.to_string() == "(z1, z1^2 - 3*z0 + 1)");
        auto inv = inverse(m);
        CHECK(inv.to_string() == "(1/3*z0^2 - 1/3*z1 + 1/3, z0)");
    }
}

TEST_CASE("inverse") {
    const std::size_t n = 3;
    auto f = AffineMapSpec::polynomial({z(n, 0).pow(2) + z(n, 1) + z(n, 2), z(n, 0).pow(2) + z(n, 1), z(n, 0)});
    CHECK_THROWS_AS(inverse(f), InverseError);

    auto declared = AffineMapSpec::polynomial({z(n, 2), z(n, 1) - z(n, 2).pow(2), z(n, 0) - z(n, 1)});
    f.declared_inverse = std::make_shared<const AffineMapSpec>(declared);
    AffineMapSpec inv = inverse(f);
    CHECK(inv.components == declared.components);
    CHECK(compose_polynomial(f, inv).components == AffineMapSpec::identity(n).components);
    CHECK(bidegree(f) == Bidegree{2, 2});
    // The returned inverse carries the original as its own declared inverse.
    CHECK(inverse(inv).components == f.components);

    auto wrong = AffineMapSpec::polynomial({z(n, 2), z(n, 1) + z(n, 2).pow(2), z(n, 0) - z(n, 1)});
    f.declared_inverse = std::make_shared<const AffineMapSpec>(wrong);
    CHECK_THROWS_AS(inverse(f), InverseError);
}

TEST_CASE("degree of Henon words is the product of step degrees") {
    HenonStep h1{z(1, 0).pow(2), Rat(1)};
    HenonStep h2{z(1, 0).pow(2) - c(1, 1), Rat(2)};
    auto w = AffineMapSpec::from_word(2, {h1, h2});
    CHECK(degree(homogenize_map(w)) == 4);
    CHECK(bidegree(w) == Bidegree{4, 4});
    HenonStep h3{z(1, 0).pow(3), Rat(-1)};
    CHECK(degree(homogenize_map(AffineMapSpec::from_word(2, {h1, h2, h3}))) == 12);
}

TEST_CASE("monomial_map") {
    CHECK(monomial_map({{1, 0}, {0, 1}}) == ProjectiveMap::identity(2));
    CHECK(monomial_map({{2, 0}, {0, 2}}).to_string() == "(z0^2 : z1^2 : z2^2)");
    ProjectiveMap m = monomial_map({{1, 1}, {1, 0}});
    CHECK(m.to_string() == "(z0*z1 : z0*z2 : z2^2)");
    CHECK(m.degree() == 2);
    // (z0^-1, z1) clears to (z2^2 : z0*z1 : z0*z2).
    CHECK(monomial_map({{-1, 0}, {0, 1}}).to_string() == "(z2^2 : z0*z1 : z0*z2)");
    CHECK_THROWS_AS(monomial_map({{1, 2}, {2, 4}}), DomainError);
    CHECK_THROWS_AS(monomial_map({{1, 2}}), ArityError);
}

TEST_CASE("property: monomial functoriality against integer matrix powers") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> entry(-2, 2);
    int tested = 0;
    while (tested < 20) {
        const std::size_t k = 2 + tested % 2;
        IntMatrix a(k, std::vector<long>(k));
        for (auto& row : a)
            for (auto& x : row) x = entry(rng);
        if (det(a) == 0) continue;
        ++tested;
        auto its = iterate(monomial_map(a), 4);
        IntMatrix power = a;
        for (std::size_t n = 1; n <= 4; ++n) {
            CHECK(its[n - 1] == monomial_map(power));
            power = matmul(power, a);
        }
    }
}

TEST_CASE("property: normalized compositions have coprime components and subadditive degree") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 3;
        std::vector<Poly> gc, fc;
        for (std::size_t j = 0; j < n; ++j) {
            gc.push_back(homogenize(testing::random_poly(rng, n - 1, 2, 3), 2));
            fc.push_back(homogenize(testing::random_poly(rng, n - 1, 2, 3), 2));
        }
        try {
            auto g = ProjectiveMap::from_components(gc);
            auto f = ProjectiveMap::from_components(fc);
            auto h = compose(g, f);
            CHECK(gcd_of(h.components()).is_constant());
            CHECK(h.degree() <= g.degree() * f.degree());
        } catch (const Error&) {
            // Degenerate random inputs (constant maps, collapses) are skipped.
        }
    }
}
