#include "support.hpp"

#include "degrowth/parser.hpp"
#include "degrowth/zoo.hpp"

#include <doctest.h>

using namespace degrowth;
using testing::c;
using testing::z;

namespace {

// Position of a ParseError, or (0, 0) when none is thrown.
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
    try {
        parse_map(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

}  // namespace

TEST_CASE("parse examples") {
    auto tec = parse_map("(z1 + z0*z2^2, z0, z2)");
    CHECK(tec.components == tec1_f(2).map.components);
    CHECK(tec.kind == MapKind::polynomial);

    auto phi = parse_map("(z1 + 2/3, z0*(z1 - 1/3)/(z1 + 1))");
    CHECK(phi.components == diller_favre_phi().map.components);
    CHECK(phi.kind == MapKind::rational);

    CHECK(error_at("(z0") == std::pair<std::size_t, std::size_t>{1, 4});
}

TEST_CASE("precedence and literals") {
    const std::size_t n = 1;
    CHECK(parse_map("(-z0^2)").components[0] == RationalFunction(-z(n, 0).pow(2)));
    CHECK(parse_map("(--z0)").components[0] == RationalFunction(z(n, 0)));
    CHECK(parse_map("(2/3*z0)").components[0] == RationalFunction(c(n, 2, 3) * z(n, 0)));
    CHECK(parse_map("(z0 - 1 - 1)").components[0] == RationalFunction(z(n, 0) - c(n, 2)));
    CHECK(parse_map("(2^3*z0)").components[0] == RationalFunction(c(n, 8) * z(n, 0)));
    CHECK(parse_map("((z0 + 1)^2)").components[0] == RationalFunction(z(n, 0).pow(2) + c(n, 2) * z(n, 0) + c(n, 1)));
    CHECK(parse_map("(z0/2)").components[0] == RationalFunction(c(n, 1, 2) * z(n, 0)));
    CHECK(parse_map(" ( z0\n  *  3 ) ").components[0] == RationalFunction(c(n, 3) * z(n, 0)));
    // A rational map whose division cancels is polynomial.
    CHECK(parse_map("((z0^2 - 1)/(z0 - 1))").kind == MapKind::polynomial);
}

TEST_CASE("projective charts") {
    auto m = parse_projective_map("(z0^2 : z1*z2 : z2^2)");
    CHECK(m.dimension() == 2);
    CHECK(m.degree() == 2);
    CHECK(parse_projective_map("(z1 + z0*z2^2, z0, z2)") == tec1_f(2).projective());
    CHECK(parse_map("(z0 + z2 : z1 : z2)").components == AffineMapSpec::polynomial({z(2, 0) + c(2, 1), z(2, 1)}).components);
    CHECK_THROWS_AS(parse_projective_map("(z0^2 : z1 : z2)"), ParseError);
    CHECK_THROWS_AS(parse_projective_map("(z0 + 1 : z1 : z2)"), ParseError);
    CHECK_THROWS_AS(parse_projective_map("(z0/z1 : z1 : z2)"), ParseError);
}

TEST_CASE("errors carry positions") {
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(error_at("(z0 $ z1)") == P{1, 5});
    CHECK(error_at("(z0^-1)") == P{1, 5});
    CHECK(error_at("(z0, z1") == P{1, 8});
    CHECK(error_at("(z0, z2)") == P{1, 6});     // z1 missing
    CHECK(error_at("(z0, z1, z1)") == P{1, 12});  // 3 components, 2 variables
    CHECK(error_at("(z0/0)") == P{1, 4});
    CHECK(error_at("(1/0*z0)") == P{1, 4});
    CHECK(error_at("(z0/(z0 - z0))") == P{1, 4});
    CHECK(error_at("(z0, z1 : z0)") == P{1, 9});
    CHECK(error_at("(z0 z1)") == P{1, 5});
    CHECK(error_at("(z0)\n  x") == P{2, 3});
    CHECK(error_at("(z)") == P{1, 2});
    CHECK(error_at("()") == P{1, 2});
    CHECK(error_at("(z0) (z0)") == P{1, 6});
    try {
        parse_map("(z0 +)");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "1:6: expected a variable, number or '(', found ')'");
    }
}

TEST_CASE("render round trip on the catalog") {
    for (const auto& fam : zoo_catalog()) {
        auto e = fam.build(fam.defaults);
        CAPTURE(e.name);
        const std::string text = render(e.map);
        auto back = parse_map(text);
        CHECK(back.components == e.map.components);
        CHECK(render(back) == text);
        const std::string ptext = render(e.projective());
        CHECK(parse_projective_map(ptext) == e.projective());
    }
    for (const auto& e : verification_entries()) {
        CAPTURE(e.name);
        CHECK(parse_map(render(e.map)).components == e.map.components);
    }
}
