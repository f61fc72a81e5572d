#include "degrowth/poly.hpp"

#include "degrowth/errors.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace degrowth {

namespace {

void require_same_nvars(const Poly& a, const Poly& b, const char* op) {
    if (a.nvars() != b.nvars())
        throw ArityError(std::string(op) + ": variable-count mismatch (" +
                         std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + ")");
}

// Merge two descending term lists: a + sign*b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = a[i].mono <=> b[j].mono;
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, sign > 0 ? Rat(b[j].coeff) : Rat(-b[j].coeff)});
            ++j;
        } else {
            Rat s = sign > 0 ? Rat(a[i].coeff + b[j].coeff) : Rat(a[i].coeff - b[j].coeff);
            if (s != 0) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back({b[j].mono, sign > 0 ? Rat(b[j].coeff) : Rat(-b[j].coeff)});
    return out;
}

// Product of `big` with the terms small[lo, hi), by halving the short side.
Poly mul_range(const Poly& big, const std::vector<Term>& small, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return big.mul_term(small[lo].mono, small[lo].coeff);
    std::size_t mid = lo + (hi - lo) / 2;
    Poly left = mul_range(big, small, lo, mid);
    left += mul_range(big, small, mid, hi);
    return left;
}

Poly tree_sum(std::vector<Poly>& parts, std::size_t nvars) {
    if (parts.empty()) return Poly(nvars);
    while (parts.size() > 1) {
        std::vector<Poly> next;
        next.reserve((parts.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
        if (parts.size() % 2) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    return std::move(parts.front());
}

Rat rat_pow(const Rat& base, std::uint64_t e) {
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    return make_rat(num, den);
}

}  // namespace

std::uint64_t Degree::value() const {
    if (is_neg_infinity()) throw DomainError("degree of the zero polynomial is -infinity");
    return static_cast<std::uint64_t>(value_);
}

std::string Degree::to_string() const {
    return is_neg_infinity() ? std::string("-inf") : std::to_string(value_);
}

Poly Poly::constant(std::size_t nvars, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({Monomial(nvars), c});
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw ArityError("variable index out of range");
    return monomial(Monomial::variable(nvars, index));
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
    Poly p(m.size());
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.mono.size() != nvars) throw ArityError("term with wrong variable count");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    Poly p(nvars);
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

Poly Poly::from_sorted_terms(std::size_t nvars, std::vector<Term> terms) {
    Poly p(nvars);
    p.terms_ = std::move(terms);
    return p;
}

bool Poly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Poly::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.front();
}

Rat Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Rat(0);
}

Rat Poly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.mono > x; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rat(0);
}

Degree Poly::degree() const {
    if (terms_.empty()) return Degree::neg_infinity();
    return Degree(terms_.front().mono.degree());
}

long Poly::degree_in(std::size_t var) const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (const auto& t : terms_) d = std::max<long>(d, t.mono[var]);
    return d;
}

bool Poly::depends_on(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] > 0; });
}

bool Poly::is_homogeneous() const {
    return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

Monomial Poly::monomial_content() const {
    if (terms_.empty()) return Monomial(nvars_);
    Monomial m = terms_.front().mono;
    for (const auto& t : terms_) {
        if (m.is_one()) break;
        m = gcd(m, t.mono);
    }
    return m;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_nvars(*this, o, "add");
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_terms(terms_, o.terms_, +1);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_nvars(*this, o, "sub");
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    r -= b;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_nvars(a, b, "mul");
    if (a.is_zero() || b.is_zero()) return Poly(a.nvars());
    const Poly& big = a.size() >= b.size() ? a : b;
    const Poly& small = a.size() >= b.size() ? b : a;
    return mul_range(big, small.terms(), 0, small.size());
}

Poly operator*(const Poly& a, const Rat& c) {
    Poly r = a;
    r *= c;
    return r;
}

Poly Poly::mul_term(const Monomial& m, const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly result = Poly::constant(nvars_, Rat(1));
    Poly base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        bool negative = sgn(t.coeff) < 0;
        Rat mag = abs(t.coeff);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += '*';
            }
            out += t.mono.to_string();
        }
    }
    return out;
}

std::size_t Poly::hash() const noexcept {
    std::size_t h = nvars_;
    for (const auto& t : terms_) {
        h = h * 31 + t.mono.hash();
        h = h * 31 + std::hash<std::string>{}(t.coeff.get_str());
    }
    return h;
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
Degree total_degree(const Poly& p) { return p.degree(); }

std::vector<Poly> substitute_all(std::span<const Poly> polys, std::span<const Poly> images) {
    if (polys.empty()) return {};
    const std::size_t n = polys.front().nvars();
    for (const auto& p : polys)
        if (p.nvars() != n) throw ArityError("substitute: polynomials disagree on variable count");
    if (images.size() != n)
        throw ArityError("substitute: expected " + std::to_string(n) + " images, got " +
                         std::to_string(images.size()));
    const std::size_t m = images.empty() ? 0 : images.front().nvars();
    for (const auto& img : images)
        if (img.nvars() != m) throw ArityError("substitute: images disagree on variable count");

    std::vector<std::uint32_t> max_exp(n, 0);
    for (const auto& p : polys)
        for (const auto& t : p.terms())
            for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], t.mono[i]);

    // powers[i][e] = images[i]^e, filled lazily by repeated multiplication.
    std::vector<std::vector<Poly>> powers(n);
    auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(m, Rat(1)));
        while (cache.size() <= e) {
            if (cache.size() == 1) {
                cache.push_back(images[i]);
            } else {
                cache.push_back(cache.back() * images[i]);
            }
        }
        return cache[e];
    };

    std::vector<Poly> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<Poly> parts;
        parts.reserve(p.size());
        for (const auto& t : p.terms()) {
            std::vector<const Poly*> factors;
            for (std::size_t i = 0; i < n; ++i)
                if (t.mono[i] > 0) factors.push_back(&power(i, t.mono[i]));
            std::sort(factors.begin(), factors.end(),
                      [](const Poly* a, const Poly* b) { return a->size() < b->size(); });
            Poly prod = Poly::constant(m, t.coeff);
            for (const Poly* f : factors) prod = prod * *f;
            parts.push_back(std::move(prod));
        }
        out.push_back(tree_sum(parts, m));
    }
    return out;
}

Poly substitute(const Poly& p, std::span<const Poly> images) {
    std::vector<Poly> one{p};
    return std::move(substitute_all(one, images).front());
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    require_same_nvars(a, b, "divide_exact");
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    const std::size_t n = a.nvars();
    if (a.is_zero()) return Poly(n);

    const Term& lb = b.leading_term();
    if (b.is_monomial()) {
        std::vector<Term> q;
        q.reserve(a.size());
        for (const auto& t : a.terms()) {
            if (!lb.mono.divides(t.mono)) return std::nullopt;
            q.push_back({t.mono / lb.mono, t.coeff / lb.coeff});
        }
        return Poly::from_sorted_terms(n, std::move(q));
    }
    if (a.degree() < b.degree()) return std::nullopt;

    // Per-variable degree bounds on the quotient.
    std::vector<long> bound(n);
    for (std::size_t v = 0; v < n; ++v) {
        bound[v] = a.degree_in(v) - b.degree_in(v);
        if (bound[v] < 0) return std::nullopt;
    }
    if (!b.terms().back().mono.divides(a.terms().back().mono)) return std::nullopt;

    // Quotient-heap division: the heap holds the products q_j * b_i (i >= 1)
    // still to be subtracted, one pending entry per quotient term.
    struct Entry {
        Monomial mono;
        std::size_t i;  // index into b
        std::size_t j;  // index into q
    };
    auto cmp = [](const Entry& x, const Entry& y) { return x.mono < y.mono; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);

    const auto& at = a.terms();
    const auto& bt = b.terms();
    std::vector<Term> q;
    std::size_t k = 0;
    while (k < at.size() || !heap.empty()) {
        Monomial cur;
        Rat c(0);
        if (heap.empty() || (k < at.size() && at[k].mono >= heap.top().mono)) {
            cur = at[k].mono;
        } else {
            cur = heap.top().mono;
        }
        if (k < at.size() && at[k].mono == cur) c = at[k++].coeff;
        while (!heap.empty() && heap.top().mono == cur) {
            Entry e = heap.top();
            heap.pop();
            c -= q[e.j].coeff * bt[e.i].coeff;
            if (e.i + 1 < bt.size()) heap.push({q[e.j].mono * bt[e.i + 1].mono, e.i + 1, e.j});
        }
        if (c == 0) continue;
        if (!lb.mono.divides(cur)) return std::nullopt;
        Monomial qm = cur / lb.mono;
        for (std::size_t v = 0; v < n; ++v)
            if (static_cast<long>(qm[v]) > bound[v]) return std::nullopt;
        q.push_back({qm, c / lb.coeff});
        heap.push({q.back().mono * bt[1].mono, 1, q.size() - 1});
    }
    return Poly::from_sorted_terms(n, std::move(q));
}

Poly homogenize(const Poly& p, std::uint64_t target_degree) {
    const std::size_t n = p.nvars();
    if (!p.is_zero() && p.degree().value() > target_degree)
        throw DomainError("homogenize: target degree " + std::to_string(target_degree) +
                          " below polynomial degree " + p.degree().to_string());
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m(n + 1);
        for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
        m.set(n, static_cast<Monomial::Exponent>(target_degree - t.mono.degree()));
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(n + 1, std::move(terms));
}

Poly dehomogenize(const Poly& p, std::size_t chart_var) {
    const std::size_t n = p.nvars();
    if (n < 2) throw ArityError("dehomogenize needs at least two variables");
    if (chart_var >= n) throw ArityError("dehomogenize: chart variable out of range");
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m(n - 1);
        for (std::size_t i = 0, j = 0; i < n; ++i)
            if (i != chart_var) m.set(j++, t.mono[i]);
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(n - 1, std::move(terms));
}

Poly insert_variable(const Poly& p, std::size_t index) {
    const std::size_t n = p.nvars();
    if (index > n) throw ArityError("insert_variable: index out of range");
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m(n + 1);
        for (std::size_t i = 0; i < n; ++i) m.set(i < index ? i : i + 1, t.mono[i]);
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly::from_sorted_terms(n + 1, std::move(terms));
}

Poly specialize(const Poly& p, std::size_t var, const Rat& value) {
    if (var >= p.nvars()) throw ArityError("specialize: variable out of range");
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        auto e = m[var];
        m.set(var, 0);
        if (e == 0) {
            terms.push_back({std::move(m), t.coeff});
        } else if (value != 0) {
            terms.push_back({std::move(m), t.coeff * rat_pow(value, e)});
        }
    }
    return Poly::from_terms(p.nvars(), std::move(terms));
}

Poly derivative(const Poly& p, std::size_t var) {
    if (var >= p.nvars()) throw ArityError("derivative: variable out of range");
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        auto e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        terms.push_back({std::move(m), t.coeff * e});
    }
    // Dividing by a common variable preserves the order.
    return Poly::from_sorted_terms(p.nvars(), std::move(terms));
}

Poly jacobian_determinant(std::span<const Poly> components) {
    const std::size_t k = components.size();
    for (const auto& c : components)
        if (c.nvars() != k)
            throw ArityError("jacobian_determinant: need k components in k variables");
    if (k == 0) throw ArityError("jacobian_determinant: empty system");

    std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = derivative(components[i], j);

    // Fraction-free (Bareiss) elimination; every division below is exact.
    Poly prev = Poly::constant(k, Rat(1));
    int sign = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (m[p][p].is_zero()) {
            std::size_t r = p + 1;
            while (r < k && m[r][p].is_zero()) ++r;
            if (r == k) return Poly(k);
            std::swap(m[p], m[r]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                Poly num = m[p][p] * m[i][j] - m[i][p] * m[p][j];
                auto q = divide_exact(num, prev);
                if (!q) throw Error("jacobian_determinant: inexact Bareiss step");
                m[i][j] = std::move(*q);
            }
            m[i][p] = Poly(k);
        }
        prev = m[p][p];
    }
    Poly det = m[k - 1][k - 1];
    return sign < 0 ? -det : det;
}

Rat evaluate(const Poly& p, std::span<const Rat> point) {
    if (point.size() != p.nvars())
        throw ArityError("evaluate: point has " + std::to_string(point.size()) +
                         " coordinates, polynomial has " + std::to_string(p.nvars()) + " variables");
    Rat sum(0);
    for (const auto& t : p.terms()) {
        Rat v = t.coeff;
        for (std::size_t i = 0; i < point.size() && v != 0; ++i)
            if (t.mono[i] > 0) v *= rat_pow(point[i], t.mono[i]);
        sum += v;
    }
    return sum;
}

Rat rational_content(const Poly& p) {
    if (p.is_zero()) return Rat(0);
    Int g = 0, l = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    return make_rat(g, l);
}

Poly normalize_unit(const Poly& p) {
    if (p.is_zero()) return p;
    Rat c = rational_content(p);
    if (sgn(p.leading_coeff()) < 0) c = -c;
    if (c == 1) return p;
    Poly r = p;
    r *= Rat(1 / c);
    return r;
}

}  // namespace degrowth
