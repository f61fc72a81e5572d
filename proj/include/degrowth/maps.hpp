#pragma once

#include "degrowth/errors.hpp"
#include "degrowth/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace degrowth {

/// num / den in lowest terms, den with leading coefficient 1 (den = 1 for
/// polynomials).
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Poly num);
    RationalFunction(Poly num, Poly den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    std::size_t nvars() const noexcept { return num_.nvars(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// "p" for polynomials, "(p)/(q)" otherwise.
    std::string to_string() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    Poly num_;
    Poly den_;
};

// Generators of the tame group and of Hénon-type maps.

/// z -> M z + t with M invertible.
struct AffineGenerator {
    std::vector<std::vector<Rat>> matrix;
    std::vector<Rat> translation;
};

/// z_target -> scale * z_target + shift, where shift only involves variables
/// of index greater than target. Other coordinates are fixed.
struct ElementaryGenerator {
    std::size_t target = 0;
    Rat scale{1};
    Poly shift;
};

/// (z0, z1) -> (z1, P(z1) - delta * z0); P is univariate (one variable) of degree >= 2.
struct HenonStep {
    Poly p;
    Rat delta{1};
};

using Generator = std::variant<AffineGenerator, ElementaryGenerator, HenonStep>;

/// Coordinate permutation: component i of the result is z_{perm[i]}.
AffineGenerator permutation(std::span<const std::size_t> perm);
AffineGenerator translation(std::span<const Rat> t);

/// Ambient dimension of a generator (throws if it cannot be determined).
std::size_t generator_dimension(const Generator& g);
/// Checks the structural invariants (invertible matrix, triangular shift,
/// Hénon degree/delta). Throws DomainError.
void validate(const Generator& g);
/// Polynomial components of the generator in k variables.
std::vector<Poly> generator_components(const Generator& g);
/// Inverse as a word (applied left to right).
std::vector<Generator> invert(const Generator& g);

enum class MapKind { polynomial, rational };

/// User-level map of C^k: k rational components in k variables, with
/// optional inverse information. A generator word [g1, ..., gm] denotes
/// gm o ... o g1 (g1 applied first).
struct AffineMapSpec {
    std::size_t k = 0;
    std::vector<RationalFunction> components;
    MapKind kind = MapKind::polynomial;
    std::shared_ptr<const AffineMapSpec> declared_inverse;
    std::optional<std::vector<Generator>> generator_word;

    static AffineMapSpec polynomial(std::vector<Poly> comps);
    static AffineMapSpec rational(std::vector<RationalFunction> comps);
    static AffineMapSpec from_word(std::size_t k, std::vector<Generator> word);
    static AffineMapSpec identity(std::size_t k);

    /// Component count, variable counts, nonzero denominators, kind. Throws.
    void validate() const;
    bool has_inverse_info() const { return declared_inverse || generator_word; }
    std::vector<Poly> polynomial_components() const;

    /// "(c0, c1, ..., c{k-1})".
    std::string to_string() const;
};

/// Self-map of P^k: k+1 homogeneous components of one degree d >= 1 in k+1
/// variables, with no common factor, scaled to coprime integer coefficients
/// and a positive leading coefficient on the first nonzero component.
class ProjectiveMap {
public:
    /// Divides out the GCD and normalizes. Throws ArityError / DomainError on
    /// malformed input and CompositionCollapse when every component is zero.
    static ProjectiveMap from_components(std::vector<Poly> components);
    static ProjectiveMap identity(std::size_t k);

    std::size_t dimension() const noexcept { return components_.size() - 1; }
    std::uint64_t degree() const noexcept { return degree_; }
    const std::vector<Poly>& components() const noexcept { return components_; }
    const Poly& component(std::size_t i) const { return components_.at(i); }

    /// "(c0 : c1 : ... : ck)".
    std::string to_string() const;

    friend bool operator==(const ProjectiveMap& a, const ProjectiveMap& b) {
        return a.components_ == b.components_;
    }

private:
    ProjectiveMap() = default;
    std::vector<Poly> components_;
    std::uint64_t degree_ = 0;
};

struct Bidegree {
    std::uint64_t fwd = 1;
    std::uint64_t bwd = 1;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Iteration stopped at `step` (1-based) because the composition collapsed;
/// `partial` holds the iterates computed before it.
class IterationCollapse : public CompositionCollapse {
public:
    IterationCollapse(const std::string& what, std::size_t step, std::vector<ProjectiveMap> partial)
        : CompositionCollapse(what, step), partial_(std::move(partial)) {}
    const std::vector<ProjectiveMap>& partial() const noexcept { return partial_; }

private:
    std::vector<ProjectiveMap> partial_;
};

/// Homogenize over a common denominator with a new last variable z_k, the
/// denominator becoming the last component.
ProjectiveMap homogenize_map(const AffineMapSpec& m);
/// Affine chart z_k = 1: component i is c_i / c_k in lowest terms.
std::vector<RationalFunction> to_affine(const ProjectiveMap& m);

/// g o f.
ProjectiveMap compose(const ProjectiveMap& g, const ProjectiveMap& f);
/// f, f^2, ..., f^n with f^j = f o f^(j-1), each normalized.
std::vector<ProjectiveMap> iterate(const ProjectiveMap& f, std::size_t n);

/// Inverse from the generator word or the declared inverse, verified both ways.
AffineMapSpec inverse(const AffineMapSpec& m);
/// Polynomial composition g o f of two polynomial specs of the same dimension.
AffineMapSpec compose_polynomial(const AffineMapSpec& g, const AffineMapSpec& f);

/// phi_A with components prod_j z_j^{A[i][j]}; negative exponents go to denominators.
ProjectiveMap monomial_map(const std::vector<std::vector<long>>& a);

std::uint64_t degree(const ProjectiveMap& m);
Bidegree bidegree(const AffineMapSpec& m);

}  // namespace degrowth
