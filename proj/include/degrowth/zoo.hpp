#pragma once

#include "degrowth/dynamics.hpp"
#include "degrowth/maps.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace degrowth {

/// Integer parameters by name, ordered for deterministic output.
using ZooParams = std::map<std::string, long>;

/// Closed-form degree law; nullopt where the law says nothing about n.
using DegreeLaw = std::function<std::optional<Rat>(std::uint64_t n)>;

enum class CheckMode { hard, report };

struct ZooEntry {
    std::string name;
    ZooParams params;
    AffineMapSpec map;
    std::string source;          // where the map and its law come from
    std::string formula;         // deg f^n, as text
    std::string inverse_formula; // deg f^-n, as text (empty if none)
    DegreeLaw expected_degree;          // may be empty
    DegreeLaw expected_inverse_degree;  // may be empty
    CheckMode mode = CheckMode::hard;
    std::optional<unsigned> growth_exponent;  // expected classifier exponent
    std::size_t horizon_hint = 6;
    // Past this n exact expansion is too large; degrees come from the line method.
    std::size_t exact_limit = 1000;
    bool automorphism = false;  // polynomial automorphism of C^k with inverse information

    std::size_t dimension() const { return map.k; }
    ProjectiveMap projective() const { return homogenize_map(map); }
};

// Constructors. Each checks its parameters (DomainError) and that the law at
// n = 1 matches the degree of the built map.

/// (z1 + z0*z2^d, z0, z2) on C^3; deg f^n = d*n + 1 in both directions.
ZooEntry tec1_f(long d);
/// Quadratic growth on C^5, p >= d >= 1.
ZooEntry tec4_g(long p, long d);
/// Cubic growth on C^7, l >= p >= d >= 1.
ZooEntry tec4_h(long l, long p, long d);
/// k chained shear blocks on C^(2k+1) with non-decreasing exponents e[0..k-1];
/// k = 2, 3 coincide with tec4_g(e2, e1), tec4_h(e3, e2, e1).
ZooEntry prop_ex_automorphism(const std::vector<long>& e);
/// Birational maps of P^4 and P^5 built on tec1_f.
ZooEntry bir_F(long p, long d);
ZooEntry bir_G(long l, long p, long d);

ZooEntry p1_f();
ZooEntry p2_f();
ZooEntry p2_g();
ZooEntry p3_f();
ZooEntry p3_g();
ZooEntry p4_f();
ZooEntry remark_stability();
ZooEntry remark_bidegree();

/// Composition of Henon steps, first step applied first.
ZooEntry henon_word(const std::vector<HenonStep>& steps);
ZooEntry diller_favre_phi();
/// Diller-Favre map extended by z0*z2, z2*z3, ..., z_{k-2}*z_{k-1}; k >= 3.
ZooEntry psi_k(long k);
ZooEntry monomial_entry(const std::vector<std::vector<long>>& a);

/// Closed-form degree of phi_A: sum_j max(0, -min_i A_ij) + max(0, max_i sum_j A_ij).
Int monomial_map_degree(const std::vector<std::vector<long>>& a);
std::vector<std::vector<long>> matrix_power(const std::vector<std::vector<long>>& a, unsigned n);

/// Shear z_target -> z_target + shift as a generator word; conjugated by the
/// swap of z0 and z_target when shift involves lower-index variables.
std::vector<Generator> shear_word(std::size_t k, std::size_t target, const Poly& shift);

struct EntryDegrees {
    DegreeSequence sequence;
    std::size_t exact_upto = 0;  // terms 1..exact_upto are exact iterates
};

/// deg f^1..f^n (or of the inverse): exact up to exact_limit, then the line
/// method with two seeds that must agree with each other and with the exact
/// prefix (DomainError otherwise).
EntryDegrees entry_degrees(const ZooEntry& e, std::size_t n, bool inverse = false, std::uint64_t seed = 1);

// Registry used by the command line: family names with default parameters.

struct ZooFamily {
    std::string name;
    ZooParams defaults;
    std::string summary;
    std::function<ZooEntry(const ZooParams&)> build;
};

const std::vector<ZooFamily>& zoo_catalog();
const ZooFamily& zoo_family(const std::string& name);  // throws DomainError
/// Defaults overridden by `overrides`; unknown parameter names are errors.
ZooEntry build_entry(const std::string& name, const ZooParams& overrides = {});
/// Every family at its default parameters plus the parameter sets the
/// verification run covers, in catalog order.
std::vector<ZooEntry> verification_entries();

nlohmann::json to_json(const ZooEntry& e);
nlohmann::json catalog_json();

}  // namespace degrowth
