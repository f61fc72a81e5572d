#include "degrowth/dynamics.hpp"

#include "degrowth/gcd.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace degrowth {

DegreeSequence degree_sequence(const std::vector<ProjectiveMap>& iterates) {
    DegreeSequence s;
    for (const auto& m : iterates) s.degrees.push_back(m.degree());
    return s;
}

DegreeSequence degree_sequence(const ProjectiveMap& m, std::size_t n) {
    if (n < 1) throw DomainError("degree_sequence: N must be >= 1");
    return degree_sequence(iterate(m, n));
}

std::string GrowthClass::tag_name() const {
    switch (tag) {
        case Tag::bounded: return "Bounded";
        case Tag::polynomial: return "Polynomial";
        case Tag::exponential: return "Exponential";
        case Tag::undetermined: break;
    }
    return "Undetermined";
}

namespace {

constexpr double ratio_tolerance = 1e-9;

template <class T>
bool tail_constant(const std::vector<T>& v, std::size_t w) {
    return std::all_of(v.end() - static_cast<std::ptrdiff_t>(w), v.end(), [&](const T& x) { return x == v.back(); });
}

std::vector<Int> step_difference(const std::vector<Int>& v, std::size_t t) {
    std::vector<Int> out;
    for (std::size_t i = t; i < v.size(); ++i) out.push_back(v[i] - v[i - t]);
    return out;
}

Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// Ratios that settle: non-decreasing, or oscillating with shrinking swings.
bool ratios_settle(const std::vector<double>& r) {
    if (std::any_of(r.begin(), r.end(), [](double x) { return x <= 1 + ratio_tolerance; })) return false;
    bool non_decreasing = true;
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] < r[i - 1] - ratio_tolerance) non_decreasing = false;
    if (non_decreasing) return true;
    if (r.size() < 3) return false;
    for (std::size_t i = 2; i < r.size(); ++i) {
        double e1 = r[i - 1] - r[i - 2], e2 = r[i] - r[i - 1];
        if (!(e1 * e2 < 0) || std::abs(e2) > std::abs(e1) + ratio_tolerance) return false;
    }
    return true;
}

std::vector<double> tail_ratios(const std::vector<std::uint64_t>& d, std::size_t step, std::size_t w) {
    std::vector<double> r;
    for (std::size_t i = d.size() - w; i < d.size(); ++i)
        r.push_back(static_cast<double>(d[i]) / static_cast<double>(d[i - step]));
    return r;
}

}  // namespace

GrowthClass classify_growth(const DegreeSequence& s, std::size_t window) {
    const std::size_t n = s.horizon();
    if (n < min_classify_horizon)
        throw HorizonTooShort("classification needs N >= " + std::to_string(min_classify_horizon) + ", got N = " +
                              std::to_string(n));
    if (window < 2 || window + 2 > n) throw DomainError("classification window must satisfy 2 <= W <= N - 2");

    GrowthClass g;
    if (tail_constant(s.degrees, window)) {
        g.tag = GrowthClass::Tag::bounded;
        g.bound = s.degrees.back();
        return g;
    }

    std::vector<Int> d(s.degrees.begin(), s.degrees.end());
    std::vector<std::vector<Int>> diffs(4, d);  // index = step
    for (unsigned ell = 1;; ++ell) {
        bool any = false;
        for (unsigned t = 1; t <= 3; ++t) {
            auto& cur = diffs[t];
            if (cur.size() < t + window) continue;
            cur = step_difference(cur, t);
            if (cur.size() < window) continue;
            any = true;
            if (!tail_constant(cur, window)) continue;
            const Int& c = cur.back();
            if (c == 0 && ell == 1) {
                // Periodic tail.
                g.tag = GrowthClass::Tag::bounded;
                g.bound = *std::max_element(s.degrees.end() - static_cast<std::ptrdiff_t>(window + t), s.degrees.end());
                return g;
            }
            if (c > 0) {
                Int t_pow;
                mpz_ui_pow_ui(t_pow.get_mpz_t(), t, ell);
                g.tag = GrowthClass::Tag::polynomial;
                g.ell = ell;
                g.period = t;
                g.leading = make_rat(c, factorial(ell) * t_pow);
                return g;
            }
        }
        if (!any) break;
    }

    for (std::size_t step : {1, 2}) {
        if (n < window + step) continue;
        auto r = tail_ratios(s.degrees, step, window);
        if (!ratios_settle(r)) continue;
        g.tag = GrowthClass::Tag::exponential;
        auto [lo, hi] = std::minmax_element(r.begin(), r.end());
        double root = step == 1 ? 1.0 : 0.5;
        g.lambda = std::pow(r.back(), root);
        g.bracket_lo = std::pow(*lo, root);
        g.bracket_hi = std::pow(*hi, root);
        g.ratio_tail = r;
        return g;
    }
    return g;
}

DynamicalDegreeEstimate dynamical_degree_estimate(const DegreeSequence& s, std::size_t window) {
    const std::size_t n = s.horizon();
    if (n < 4) throw HorizonTooShort("dynamical degree estimate needs N >= 4, got N = " + std::to_string(n));
    DynamicalDegreeEstimate e;
    Int last = s.degrees.back(), root;
    e.root_exact = mpz_root(root.get_mpz_t(), last.get_mpz_t(), n) != 0;
    e.root = e.root_exact ? root.get_d() : std::pow(last.get_d(), 1.0 / static_cast<double>(n));
    auto r = tail_ratios(s.degrees, 1, std::min(window, n - 1));
    e.last_ratio = r.back();
    auto [lo, hi] = std::minmax_element(r.begin(), r.end());
    e.bracket_lo = *lo;
    e.bracket_hi = *hi;
    if (n >= min_classify_horizon && window + 2 <= n) {
        auto g = classify_growth(s, window);
        e.certified_one = g.tag == GrowthClass::Tag::bounded || g.tag == GrowthClass::Tag::polynomial;
    }
    return e;
}

Point normalize_point(Point p) {
    if (std::all_of(p.begin(), p.end(), [](const Rat& x) { return x == 0; }))
        throw DomainError("projective point with all coordinates zero");
    Int g = 0, l = 1;
    for (const auto& x : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    Rat scale = make_rat(l, g);
    if (sgn(*std::find_if(p.begin(), p.end(), [](const Rat& x) { return x != 0; })) < 0) scale = -scale;
    for (auto& x : p) x *= scale;
    return p;
}

std::string point_to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ":";
        out += to_string(p[i]);
    }
    return out + ")";
}

namespace {

void check_point(const ProjectiveMap& m, const Point& p) {
    if (p.size() != m.dimension() + 1)
        throw ArityError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                         std::to_string(m.dimension() + 1));
    if (std::all_of(p.begin(), p.end(), [](const Rat& x) { return x == 0; }))
        throw DomainError("projective point with all coordinates zero");
}

void check_subspace(const ProjectiveMap& m, const std::vector<std::size_t>& zero_coords) {
    const std::size_t n = m.dimension() + 1;
    std::set<std::size_t> seen(zero_coords.begin(), zero_coords.end());
    if (zero_coords.empty() || seen.size() != zero_coords.size() || seen.size() >= n || *seen.rbegin() >= n)
        throw DomainError("subspace must set a proper, non-empty set of distinct coordinates to zero");
}

std::vector<Rat> image(const ProjectiveMap& m, const Point& p) {
    std::vector<Rat> out;
    for (const auto& c : m.components()) out.push_back(evaluate(c, p));
    return out;
}

bool all_zero(const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace

std::optional<Point> blow_down_image(const ProjectiveMap& m, std::size_t hyperplane) {
    if (hyperplane > m.dimension()) throw DomainError("hyperplane index out of range");
    std::vector<Poly> r;
    for (const auto& c : m.components()) r.push_back(specialize(c, hyperplane, Rat(0)));
    if (std::all_of(r.begin(), r.end(), [](const Poly& p) { return p.is_zero(); }))
        throw HyperplaneInIndeterminacy("hyperplane z" + std::to_string(hyperplane) +
                                        " = 0 lies in the indeterminacy set");
    // After removing the common factor, pairwise proportional restrictions are
    // exactly the constant ones.
    Poly g = gcd_of(r);
    Point pt;
    for (const auto& p : r) {
        Poly q = *divide_exact(p, g);
        if (!q.is_constant()) return std::nullopt;
        pt.push_back(q.constant_term());
    }
    return normalize_point(std::move(pt));
}

bool in_indeterminacy(const ProjectiveMap& m, const Point& p) {
    check_point(m, p);
    return all_zero(image(m, p));
}

bool subspace_in_indeterminacy(const ProjectiveMap& m, const std::vector<std::size_t>& zero_coords) {
    check_subspace(m, zero_coords);
    for (const auto& c : m.components()) {
        Poly r = c;
        for (auto v : zero_coords) r = specialize(r, v, Rat(0));
        if (!r.is_zero()) return false;
    }
    return true;
}

bool spot_check_off_subspace(const ProjectiveMap& m, const std::vector<std::size_t>& zero_coords,
                             std::uint64_t seed, std::size_t count) {
    check_subspace(m, zero_coords);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    const std::size_t n = m.dimension() + 1;
    for (std::size_t done = 0; done < count;) {
        Point p(n);
        for (auto& x : p) x = make_rat(num(rng), den(rng));
        if (std::all_of(zero_coords.begin(), zero_coords.end(), [&](std::size_t v) { return p[v] == 0; })) continue;
        ++done;
        if (in_indeterminacy(m, p)) return false;
    }
    return true;
}

Orbit orbit_point(const ProjectiveMap& m, const Point& p, std::size_t n) {
    check_point(m, p);
    Orbit o;
    Point cur = normalize_point(p);
    for (std::size_t step = 1; step <= n; ++step) {
        auto next = image(m, cur);
        if (all_zero(next)) {
            o.stopped = step;
            break;
        }
        cur = normalize_point(std::move(next));
        o.points.push_back(cur);
    }
    return o;
}

StabilityReport stability_check(const ProjectiveMap& m) {
    const std::size_t k = m.dimension();
    const Poly& last = m.component(k);
    if (!last.is_monomial() ||
        last.leading_term().mono != Monomial::variable(k + 1, k, static_cast<Monomial::Exponent>(m.degree())))
        throw DomainError("stability_check expects the homogenization of an automorphism of C^" + std::to_string(k) +
                          " (last component c*z" + std::to_string(k) + "^d), got " + last.to_string());

    StabilityReport r;
    auto its = iterate(m, k);
    Int expected = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        expected *= m.degree();
        std::uint64_t got = its[i - 1].degree();
        bool eq = expected == got;
        r.degree_flags.push_back({i, got, expected.fits_ulong_p() ? expected.get_ui() : 0, eq});
        if (!eq && !r.failure_step) r.failure_step = i;
    }
    r.stable = !r.failure_step;

    if (auto pt = blow_down_image(m, k)) {
        r.blow_down = BlowDown{k, *pt, in_indeterminacy(m, *pt)};
        Point cur = *pt;
        r.omega_trace.push_back(cur);
        for (std::size_t j = 1; j <= k; ++j) {
            if (in_indeterminacy(m, cur)) {
                r.omega_step = j;
                break;
            }
            cur = normalize_point(image(m, cur));
            r.omega_trace.push_back(cur);
        }
    }
    return r;
}

StabilityReport stability_check(const ProjectiveMap& m, std::size_t k) {
    if (k != m.dimension())
        throw ArityError("stability_check: map lives on P^" + std::to_string(m.dimension()) + ", not P^" +
                         std::to_string(k));
    return stability_check(m);
}

bool bidegree_growth_check(std::uint64_t p_exp, std::uint64_t q_exp, std::size_t k) {
    if (p_exp < 1 || q_exp < 1) throw DomainError("growth exponents must be >= 1");
    return p_exp <= k * q_exp && q_exp <= k * p_exp;
}

nlohmann::json to_json(const GrowthClass& g) {
    using T = GrowthClass::Tag;
    nlohmann::json j;
    j["tag"] = g.tag_name();
    j["bound"] = g.tag == T::bounded ? nlohmann::json(g.bound) : nlohmann::json();
    j["ell"] = g.tag == T::polynomial ? nlohmann::json(g.ell) : nlohmann::json();
    j["leading"] = g.tag == T::polynomial ? nlohmann::json(to_string(g.leading)) : nlohmann::json();
    j["period"] = g.tag == T::polynomial ? nlohmann::json(g.period) : nlohmann::json();
    j["lambda"] = g.tag == T::exponential ? nlohmann::json(g.lambda) : nlohmann::json();
    j["lambda_bracket"] =
        g.tag == T::exponential ? nlohmann::json::array({g.bracket_lo, g.bracket_hi}) : nlohmann::json();
    return j;
}

nlohmann::json to_json(const StabilityReport& r) {
    nlohmann::json j;
    j["stable"] = r.stable;
    j["failure_step"] = r.failure_step ? nlohmann::json(*r.failure_step) : nlohmann::json();
    j["degree_flags"] = nlohmann::json::array();
    for (const auto& f : r.degree_flags)
        j["degree_flags"].push_back({{"n", f.n}, {"degree", f.degree}, {"expected", f.expected}, {"equal", f.equal}});
    if (r.blow_down)
        j["blow_down"] = {{"hyperplane", r.blow_down->hyperplane},
                          {"point", point_to_string(r.blow_down->point)},
                          {"in_indeterminacy", r.blow_down->in_indeterminacy}};
    else
        j["blow_down"] = nullptr;
    j["omega_step"] = r.omega_step ? nlohmann::json(*r.omega_step) : nlohmann::json();
    j["omega_trace"] = nlohmann::json::array();
    for (const auto& p : r.omega_trace) j["omega_trace"].push_back(point_to_string(p));
    return j;
}

nlohmann::json to_json(const DynamicalDegreeEstimate& e) {
    return {{"root", e.root},
            {"root_exact", e.root_exact},
            {"last_ratio", e.last_ratio},
            {"lambda_bracket", {e.bracket_lo, e.bracket_hi}},
            {"certified_one", e.certified_one}};
}

nlohmann::json to_json(const Orbit& o) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (const auto& p : o.points) j["points"].push_back(point_to_string(p));
    j["stopped_at"] = o.stopped ? nlohmann::json(*o.stopped) : nlohmann::json();
    return j;
}

}  // namespace degrowth
