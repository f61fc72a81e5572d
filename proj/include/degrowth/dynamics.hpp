#pragma once

#include "degrowth/maps.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace degrowth {

/// deg f^1, ..., deg f^N.
struct DegreeSequence {
    std::vector<std::uint64_t> degrees;
    std::size_t horizon() const noexcept { return degrees.size(); }
    std::uint64_t operator[](std::size_t n) const { return degrees.at(n - 1); }  // 1-based
    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

/// Throws IterationCollapse (with the iterates computed so far) on collapse.
DegreeSequence degree_sequence(const ProjectiveMap& m, std::size_t n);
DegreeSequence degree_sequence(const std::vector<ProjectiveMap>& iterates);

/// Degrees of f^1..f^N restricted to a seeded random line, over Z/p with
/// p = 2^61 - 1: compose univariate tuples and cancel their common factor at
/// every step. Equals degree_sequence unless the line meets Ind(f^n) or the
/// top-degree part vanishes on it mod p (probability below deg/p per step).
/// Cheap where the exact iterates are too large to expand.
DegreeSequence degree_sequence_on_line(const ProjectiveMap& m, std::size_t n, std::uint64_t seed = 1);

struct GrowthClass {
    enum class Tag { bounded, polynomial, exponential, undetermined };

    Tag tag = Tag::undetermined;
    std::uint64_t bound = 0;     // bounded
    unsigned ell = 0;            // polynomial
    Rat leading;                 // polynomial: deg f^n ~ leading * n^ell
    unsigned period = 1;         // polynomial: step of the differences used
    double lambda = 0;           // exponential
    double bracket_lo = 0;       // exponential: range of the tail ratios
    double bracket_hi = 0;
    std::vector<double> ratio_tail;

    std::string tag_name() const;
    friend bool operator==(const GrowthClass&, const GrowthClass&) = default;
};

inline constexpr std::size_t default_window = 3;
inline constexpr std::size_t default_horizon = 10;
inline constexpr std::size_t min_classify_horizon = 6;

/// Bounded, then polynomial (exact differences, steps 1, 2, 3), then
/// exponential (ratios, then every-other-step ratios), else undetermined.
/// Throws HorizonTooShort if N < 6.
GrowthClass classify_growth(const DegreeSequence& s, std::size_t window = default_window);

struct DynamicalDegreeEstimate {
    double root = 0;        // (deg f^N)^(1/N)
    bool root_exact = false;
    double last_ratio = 0;  // deg f^N / deg f^(N-1)
    double bracket_lo = 0;  // min and max of the last `window` ratios
    double bracket_hi = 0;
    bool certified_one = false;  // growth is bounded or polynomial
};

/// Throws HorizonTooShort if N < 4.
DynamicalDegreeEstimate dynamical_degree_estimate(const DegreeSequence& s, std::size_t window = default_window);

/// Projective point, normalized to coprime integer coordinates with the first
/// nonzero one positive.
using Point = std::vector<Rat>;
Point normalize_point(Point p);
std::string point_to_string(const Point& p);  // "(0:1:0:0)"

/// Image of the hyperplane {z_h = 0} when it is contracted to a point,
/// nullopt otherwise. Throws HyperplaneInIndeterminacy if every component
/// vanishes on it.
std::optional<Point> blow_down_image(const ProjectiveMap& m, std::size_t hyperplane);

/// All components vanish at p.
bool in_indeterminacy(const ProjectiveMap& m, const Point& p);
/// All components vanish identically on {z_i = 0 for i in zero_coords}.
bool subspace_in_indeterminacy(const ProjectiveMap& m, const std::vector<std::size_t>& zero_coords);
/// `count` seeded random rational points off the subspace, none of them
/// indeterminate. One-sided support for equality claims about Ind(f).
bool spot_check_off_subspace(const ProjectiveMap& m, const std::vector<std::size_t>& zero_coords,
                             std::uint64_t seed, std::size_t count = 20);

struct Orbit {
    std::vector<Point> points;            // f(p), f^2(p), ...
    std::optional<std::size_t> stopped;   // step at which the current point was in Ind(f)
};

Orbit orbit_point(const ProjectiveMap& m, const Point& p, std::size_t n);

struct BlowDown {
    std::size_t hyperplane = 0;
    Point point;
    bool in_indeterminacy = false;
};

struct StabilityReport {
    struct Flag {
        std::size_t n;
        std::uint64_t degree;
        std::uint64_t expected;  // (deg f)^n
        bool equal;
    };
    bool stable = true;
    std::optional<std::size_t> failure_step;
    std::vector<Flag> degree_flags;
    std::optional<BlowDown> blow_down;
    /// Omega trace: the hyperplane at infinity is blown down and its image
    /// orbit enters Ind(f) after this many steps.
    std::optional<std::size_t> omega_step;
    std::vector<Point> omega_trace;
};

/// Degrees of f^i for i <= k against (deg f)^i, for the homogenization of
/// an automorphism of C^k (last component a power of the last variable).
/// Throws DomainError on other maps.
StabilityReport stability_check(const ProjectiveMap& m);
StabilityReport stability_check(const ProjectiveMap& m, std::size_t k);

/// p <= k q and q <= k p. Throws DomainError unless p, q >= 1.
bool bidegree_growth_check(std::uint64_t p_exp, std::uint64_t q_exp, std::size_t k);

nlohmann::json to_json(const GrowthClass& g);
nlohmann::json to_json(const StabilityReport& r);
nlohmann::json to_json(const DynamicalDegreeEstimate& e);
nlohmann::json to_json(const Orbit& o);

}  // namespace degrowth
