#pragma once

#include "degrowth/maps.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace degrowth {

/// Expression tree of one component. Positions are 1-based line/column of
/// the node's first token (the operator token for binary nodes).
struct Expr {
    enum class Kind { variable, literal, add, sub, mul, div, neg, pow };
    Kind kind = Kind::literal;
    std::size_t var = 0;       // variable
    Rat value;                 // literal
    std::uint32_t exponent = 0;  // pow
    std::vector<Expr> args;
    std::size_t line = 1;
    std::size_t column = 1;
};

enum class Chart { affine, projective };

/// "(e0, e1, ...)" is an affine map of C^k; "(e0 : e1 : ...)" a map of P^k.
struct MapExpressionAST {
    Chart chart = Chart::affine;
    std::size_t dimension = 0;  // k
    std::vector<Expr> components;
};

/// Grammar:
///   map := "(" expr ((","|":") expr)* ")"
///   expr := term (("+"|"-") term)* ; term := factor (("*"|"/") factor)*
///   factor := base ("^" nat)? | "-" factor ; base := var | rational | "(" expr ")"
///   var := "z" nat ; rational := int ("/" nat)?
/// Whitespace (including newlines) is ignored. Unary minus binds looser than
/// "^", so "-z0^2" is -(z0^2). Variable indices must be contiguous from z0.
/// Throws ParseError with line and column.
MapExpressionAST parse_map_ast(std::string_view text);

/// Affine chart of the map (a projective map is read in the chart z_k = 1).
AffineMapSpec lower_affine(const MapExpressionAST& ast);
/// Projective map (an affine map is homogenized).
ProjectiveMap lower_projective(const MapExpressionAST& ast);

AffineMapSpec parse_map(std::string_view text);
ProjectiveMap parse_projective_map(std::string_view text);

/// Canonical text of a map; parse_map(render(m)) reproduces m.
std::string render(const AffineMapSpec& m);
std::string render(const ProjectiveMap& m);

}  // namespace degrowth
