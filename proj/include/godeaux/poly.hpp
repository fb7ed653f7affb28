#pragma once

#include "godeaux/linalg.hpp"
#include "godeaux/ring.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace godeaux {

// ---------------------------------------------------------------------------
// Univariate polynomials, dense, lowest degree first.

template <class Field>
struct UniPoly {
    using Elem = typename Field::Elem;
    Field F;
    std::vector<Elem> c;

    UniPoly() = default;
    explicit UniPoly(Field f) : F(f) {}
    UniPoly(Field f, std::vector<Elem> coeffs) : F(f), c(std::move(coeffs)) { trim(); }

    static UniPoly constant(Field f, Elem a) { return UniPoly(f, {a}); }
    static UniPoly x(Field f) { return UniPoly(f, {f.zero(), f.one()}); }

    void trim() {
        while (!c.empty() && F.is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Elem lead() const { return c.empty() ? F.zero() : c.back(); }
    Elem coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : F.zero(); }

    Elem eval(const Elem& t) const {
        Elem acc = F.zero();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.F);
        r.c.assign(std::max(a.c.size(), b.c.size()), a.F.zero());
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a) {
        UniPoly r(a.F);
        for (const auto& v : a.c) r.c.push_back(-v);
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.F);
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, a.F.zero());
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.F.is_zero(a.c[i])) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }

    UniPoly scaled(const Elem& s) const {
        UniPoly r(F);
        for (const auto& v : c) r.c.push_back(v * s);
        r.trim();
        return r;
    }
    UniPoly monic() const { return is_zero() ? *this : scaled(F.inv(lead())); }

    UniPoly derivative() const {
        UniPoly r(F);
        for (std::size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * F.from_int(static_cast<long long>(i)));
        r.trim();
        return r;
    }

    // Quotient and remainder; the divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        UniPoly q(F), r = *this;
        if (r.degree() < d.degree()) return {q, r};
        q.c.assign(r.degree() - d.degree() + 1, F.zero());
        Elem inv = F.inv(d.lead());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            Elem f = r.lead() * inv;
            q.c[shift] = f;
            for (int i = 0; i <= d.degree(); ++i) r.c[i + shift] = r.c[i + shift] - f * d.c[i];
            r.c.pop_back();
            r.trim();
        }
        q.trim();
        return {q, r};
    }
};

template <class Field>
UniPoly<Field> poly_gcd(UniPoly<Field> a, UniPoly<Field> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Exact division in a polynomial ring; throws if the remainder is nonzero.
template <class Field>
UniPoly<Field> exact_div(const UniPoly<Field>& a, const UniPoly<Field>& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

template <class Field>
UniPoly<Field> powmod(UniPoly<Field> base, std::uint64_t e, const UniPoly<Field>& m) {
    UniPoly<Field> r = UniPoly<Field>::constant(base.F, base.F.one()).divmod(m).second;
    base = base.divmod(m).second;
    while (e) {
        if (e & 1) r = (r * base).divmod(m).second;
        base = (base * base).divmod(m).second;
        e >>= 1;
    }
    return r;
}

// Distinct roots in F_p (Cantor-Zassenhaus equal-degree splitting).
std::vector<Fp> roots_mod_p(const UniPoly<PrimeField>& f);

// Determinant of a square matrix over F[t], fraction-free.
template <class Field>
UniPoly<Field> det_poly_bareiss(std::vector<std::vector<UniPoly<Field>>> m, Field F) {
    std::size_t n = m.size();
    if (n == 0) return UniPoly<Field>::constant(F, F.one());
    UniPoly<Field> prev = UniPoly<Field>::constant(F, F.one());
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { piv = i; break; }
            if (piv == n) return UniPoly<Field>(F);
            std::swap(m[k], m[piv]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = UniPoly<Field>(F);
        }
        prev = m[k][k];
    }
    return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Binary forms: c[j] is the coefficient of s^(d-j) t^j.

template <class Field>
struct BinForm {
    using Elem = typename Field::Elem;
    Field F;
    int degree = 0;
    std::vector<Elem> c;

    BinForm() = default;
    BinForm(Field f, int d) : F(f), degree(d), c(d + 1, f.zero()) {}

    bool is_zero() const {
        for (const auto& v : c)
            if (!F.is_zero(v)) return false;
        return true;
    }
    Elem eval(const Elem& s, const Elem& t) const {
        Elem acc = F.zero();
        for (int j = 0; j <= degree; ++j) {
            Elem term = c[j];
            for (int k = 0; k < degree - j; ++k) term = term * s;
            for (int k = 0; k < j; ++k) term = term * t;
            acc = acc + term;
        }
        return acc;
    }
    friend BinForm operator*(const BinForm& a, const BinForm& b) {
        BinForm r(a.F, a.degree + b.degree);
        for (int i = 0; i <= a.degree; ++i) {
            if (a.F.is_zero(a.c[i])) continue;
            for (int j = 0; j <= b.degree; ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        return r;
    }
    friend BinForm operator+(const BinForm& a, const BinForm& b) {
        if (a.degree != b.degree) throw std::invalid_argument("adding binary forms of different degree");
        BinForm r = a;
        for (int j = 0; j <= a.degree; ++j) r.c[j] = r.c[j] + b.c[j];
        return r;
    }
    BinForm scaled(const Elem& k) const {
        BinForm r = *this;
        for (auto& v : r.c) v = v * k;
        return r;
    }
    // Largest k with t^k dividing the form.
    int t_order() const {
        for (int j = 0; j <= degree; ++j)
            if (!F.is_zero(c[j])) return j;
        return degree + 1;
    }
    // f(s) = F(s, 1) after stripping t-powers
    UniPoly<Field> dehomogenize() const {
        UniPoly<Field> u(F);
        u.c.assign(degree + 1, F.zero());
        for (int j = 0; j <= degree; ++j) u.c[degree - j] = c[j];
        u.trim();
        return u;
    }
    static BinForm homogenize(const UniPoly<Field>& u, int d) {
        BinForm r(u.F, d);
        for (int i = 0; i <= u.degree(); ++i) r.c[d - i] = u.c[i];
        return r;
    }
    static BinForm linear(Field f, Elem a, Elem b) {  // a*s + b*t
        BinForm r(f, 1);
        r.c[0] = a;
        r.c[1] = b;
        return r;
    }
};

// Monic-normalized gcd of two nonzero binary forms.
template <class Field>
BinForm<Field> binform_gcd(const BinForm<Field>& a, const BinForm<Field>& b) {
    const Field& F = a.F;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int kt = std::min(a.t_order(), b.t_order());
    auto g = poly_gcd(a.dehomogenize(), b.dehomogenize());
    BinForm<Field> r = BinForm<Field>::homogenize(g, g.degree());
    for (int i = 0; i < kt; ++i) r = r * BinForm<Field>::linear(F, F.zero(), F.one());
    return r;
}

// Distinct roots [s:t] of a binary form over F_p; returns false if some
// irreducible factor has degree > 1.
bool binform_roots(const BinForm<PrimeField>& f, std::vector<std::pair<Fp, Fp>>& out);

// ---------------------------------------------------------------------------
// Homogeneous ternary forms.

using Exps = std::array<int, 3>;

struct ExpsOrder {
    // Graded lexicographic, largest first: x^d, x^(d-1) y, ...
    bool operator()(const Exps& a, const Exps& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        return a > b;
    }
};

std::vector<Exps> monomials(int degree);
int monomial_count(int degree);

template <class Field>
struct Form {
    using Elem = typename Field::Elem;
    Field F;
    int degree = 0;
    std::map<Exps, Elem, ExpsOrder> terms;

    Form() = default;
    Form(Field f, int d) : F(f), degree(d) {}

    bool is_zero() const { return terms.empty(); }
    Elem coeff(const Exps& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? F.zero() : it->second;
    }
    void set(const Exps& e, const Elem& v) {
        if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree)
            throw std::invalid_argument("monomial degree does not match form degree");
        if (F.is_zero(v)) terms.erase(e);
        else terms[e] = v;
    }
    void add_term(const Exps& e, const Elem& v) { set(e, coeff(e) + v); }

    static Form monomial(Field f, const Exps& e, Elem c) {
        Form r(f, e[0] + e[1] + e[2]);
        r.set(e, c);
        return r;
    }
    static Form from_vector(Field f, int d, const std::vector<Elem>& v) {
        Form r(f, d);
        auto ms = monomials(d);
        if (v.size() != ms.size()) throw std::invalid_argument("coefficient vector length");
        for (std::size_t i = 0; i < ms.size(); ++i) r.set(ms[i], v[i]);
        return r;
    }
    std::vector<Elem> to_vector() const {
        std::vector<Elem> v;
        for (const auto& m : monomials(degree)) v.push_back(coeff(m));
        return v;
    }

    friend Form operator+(const Form& a, const Form& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree != b.degree) throw std::invalid_argument("adding forms of different degree");
        Form r = a;
        for (const auto& [e, v] : b.terms) r.add_term(e, v);
        return r;
    }
    friend Form operator-(const Form& a) {
        Form r = a;
        for (auto& [e, v] : r.terms) v = -v;
        return r;
    }
    friend Form operator-(const Form& a, const Form& b) { return a + (-b); }
    friend Form operator*(const Form& a, const Form& b) {
        Form r(a.F, a.degree + b.degree);
        for (const auto& [ea, va] : a.terms)
            for (const auto& [eb, vb] : b.terms)
                r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, va * vb);
        return r;
    }
    friend bool operator==(const Form& a, const Form& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.degree == b.degree && a.terms == b.terms;
    }
    Form scaled(const Elem& k) const {
        Form r(F, degree);
        if (F.is_zero(k)) return r;
        for (const auto& [e, v] : terms) r.terms[e] = v * k;
        return r;
    }

    Form partial(int var) const {
        if (degree < 1) throw std::invalid_argument("derivative of a constant form");
        Form r(F, degree - 1);
        for (const auto& [e, v] : terms) {
            if (e[var] == 0) continue;
            Exps e2 = e;
            --e2[var];
            r.add_term(e2, v * F.from_int(e[var]));
        }
        return r;
    }

    Elem evaluate(const std::array<Elem, 3>& P) const {
        if (F.is_zero(P[0]) && F.is_zero(P[1]) && F.is_zero(P[2]))
            throw std::invalid_argument("invalid projective point (all coordinates zero)");
        std::array<std::vector<Elem>, 3> pw;
        for (int k = 0; k < 3; ++k) {
            pw[k].push_back(F.one());
            for (int i = 1; i <= degree; ++i) pw[k].push_back(pw[k].back() * P[k]);
        }
        Elem acc = F.zero();
        for (const auto& [e, v] : terms) acc = acc + v * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
        return acc;
    }

    std::string to_string() const;
};

template <class Field>
std::string Form<Field>::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [e, v] : terms) {
        if (!s.empty()) s += " + ";
        s += "(" + F.str(v) + ")";
        const char* names = "xyz";
        for (int k = 0; k < 3; ++k) {
            if (e[k] == 0) continue;
            s += std::string(1, names[k]);
            if (e[k] > 1) s += "^" + std::to_string(e[k]);
        }
    }
    return s;
}

template <class Field>
using Point = std::array<typename Field::Elem, 3>;

template <class Field>
Form<Field> power(const Form<Field>& f, int n) {
    Form<Field> r = Form<Field>::monomial(f.F, {0, 0, 0}, f.F.one());
    for (int i = 0; i < n; ++i) r = r * f;
    return r;
}

template <class Field>
Form<Field> linear_form(Field F, const Point<Field>& l) {
    Form<Field> r(F, 1);
    r.set({1, 0, 0}, l[0]);
    r.set({0, 1, 0}, l[1]);
    r.set({0, 0, 1}, l[2]);
    return r;
}

// F(A X): variable i is replaced by sum_j A[i][j] X_j.
template <class Field>
Form<Field> substitute_linear(const Form<Field>& f, const std::array<std::array<typename Field::Elem, 3>, 3>& A) {
    const Field& F = f.F;
    std::array<Form<Field>, 3> lin;
    for (int i = 0; i < 3; ++i) lin[i] = linear_form<Field>(F, {A[i][0], A[i][1], A[i][2]});
    std::array<std::vector<Form<Field>>, 3> pw;
    for (int i = 0; i < 3; ++i) {
        pw[i].push_back(Form<Field>::monomial(F, {0, 0, 0}, F.one()));
        for (int k = 1; k <= f.degree; ++k) pw[i].push_back(pw[i].back() * lin[i]);
    }
    Form<Field> r(F, f.degree);
    for (const auto& [e, v] : f.terms) r = r + (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]).scaled(v);
    return r;
}

template <class From, class To, class Map>
Form<To> map_coefficients(const Form<From>& f, To target, Map&& phi) {
    Form<To> r(target, f.degree);
    for (const auto& [e, v] : f.terms) r.set(e, phi(v));
    return r;
}

inline Form<PrimeField> map_coefficients(const Form<TowerField>& f, const RingHom& phi) {
    return map_coefficients(f, PrimeField(phi.p), [&](const Tower& t) { return phi(t); });
}

inline Point<PrimeField> map_point(const Point<TowerField>& P, const RingHom& phi) {
    return {phi(P[0]), phi(P[1]), phi(P[2])};
}

// Long division by a single divisor in lex order; returns the quotient when
// the remainder vanishes.
template <class Field>
std::optional<Form<Field>> exact_quotient(const Form<Field>& f, const Form<Field>& g) {
    const Field& F = f.F;
    if (g.is_zero()) throw std::invalid_argument("division by the zero form");
    if (f.is_zero()) return Form<Field>(F, 0);
    if (f.degree < g.degree) return std::nullopt;
    Form<Field> q(F, f.degree - g.degree), r = f;
    const auto& [lg, cg] = *g.terms.begin();
    auto inv = F.inv(cg);
    while (!r.is_zero()) {
        const auto [lr, cr] = *r.terms.begin();
        Exps m{lr[0] - lg[0], lr[1] - lg[1], lr[2] - lg[2]};
        if (m[0] < 0 || m[1] < 0 || m[2] < 0) return std::nullopt;
        auto k = cr * inv;
        q.add_term(m, k);
        for (const auto& [e, v] : g.terms) r.add_term({e[0] + m[0], e[1] + m[1], e[2] + m[2]}, -(k * v));
    }
    return q;
}

template <class Field>
bool divides(const Form<Field>& g, const Form<Field>& f) {
    return exact_quotient(f, g).has_value();
}

// Conic parametrization gamma(s,t) = (a s^2 + b st + c t^2, d.., g..).
template <class Field>
struct ConicParametrization {
    using Elem = typename Field::Elem;
    std::array<Elem, 9> k;  // a b c d e f g h i
    BinForm<Field> component(Field F, int i) const {
        BinForm<Field> r(F, 2);
        r.c = {k[3 * i], k[3 * i + 1], k[3 * i + 2]};
        return r;
    }
    Point<Field> at(Field F, const Elem& s, const Elem& t) const {
        return {component(F, 0).eval(s, t), component(F, 1).eval(s, t), component(F, 2).eval(s, t)};
    }
    // d gamma / ds and d gamma / dt at (s,t)
    std::pair<Point<Field>, Point<Field>> derivatives(Field F, const Elem& s, const Elem& t) const {
        Point<Field> ds, dt;
        auto two = F.from_int(2);
        for (int i = 0; i < 3; ++i) {
            ds[i] = two * k[3 * i] * s + k[3 * i + 1] * t;
            dt[i] = k[3 * i + 1] * s + two * k[3 * i + 2] * t;
        }
        return {ds, dt};
    }
};

template <class Field>
BinForm<Field> compose_with_parametrization(const Form<Field>& f, const ConicParametrization<Field>& g) {
    const Field& F = f.F;
    std::array<std::vector<BinForm<Field>>, 3> pw;
    for (int i = 0; i < 3; ++i) {
        BinForm<Field> one(F, 0);
        one.c[0] = F.one();
        pw[i].push_back(one);
        auto gi = g.component(F, i);
        for (int k = 1; k <= f.degree; ++k) pw[i].push_back(pw[i].back() * gi);
    }
    BinForm<Field> r(F, 2 * f.degree);
    for (const auto& [e, v] : f.terms) r = r + (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]).scaled(v);
    return r;
}

// Order of vanishing of a binary form at the root [s0:t0].
template <class Field>
int binform_root_order(BinForm<Field> f, const typename Field::Elem& s0, const typename Field::Elem& t0) {
    const Field& F = f.F;
    if (f.is_zero()) throw std::invalid_argument("order of the zero form");
    int k = 0;
    auto lin = BinForm<Field>::linear(F, t0, -s0);  // t0*s - s0*t vanishes at [s0:t0]
    while (true) {
        // divide f by lin if possible, by synthetic long division on coefficients
        if (!F.is_zero(f.eval(s0, t0))) return k;
        BinForm<Field> q(F, f.degree - 1);
        auto r = f.c;
        if (!F.is_zero(lin.c[0])) {
            auto inv = F.inv(lin.c[0]);
            for (int j = 0; j < f.degree; ++j) {
                q.c[j] = r[j] * inv;
                r[j + 1] = r[j + 1] - q.c[j] * lin.c[1];
            }
        } else {
            auto inv = F.inv(lin.c[1]);  // lin = c1 * t
            for (int j = 0; j < f.degree; ++j) q.c[j] = r[j + 1] * inv;
        }
        f = q;
        ++k;
    }
}

// Sylvester resultant eliminating variable `var`; the result is a binary
// form in the two remaining variables (in their natural order), of degree
// deg f * deg g.
template <class Field>
BinForm<Field> resultant(const Form<Field>& f, const Form<Field>& g, int var) {
    const Field& F = f.F;
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero form");
    int a = (var + 1) % 3, b = (var + 2) % 3;
    if (a > b) std::swap(a, b);
    int m = f.degree, n = g.degree;
    // coefficient of var^k as a polynomial in the first remaining variable, second set to 1
    auto coeffs = [&](const Form<Field>& h, int d) {
        std::vector<UniPoly<Field>> cs(d + 1, UniPoly<Field>(F));
        for (auto& u : cs) u.c.assign(d + 1, F.zero());
        for (const auto& [e, v] : h.terms) cs[e[var]].c[e[a]] = cs[e[var]].c[e[a]] + v;
        for (auto& u : cs) u.trim();
        return cs;
    };
    auto fc = coeffs(f, m), gc = coeffs(g, n);
    int N = m + n;
    if (N == 0) {
        BinForm<Field> r(F, 0);
        r.c[0] = F.one();
        return r;
    }
    std::vector<std::vector<UniPoly<Field>>> S(N, std::vector<UniPoly<Field>>(N, UniPoly<Field>(F)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) S[i][i + k] = fc[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) S[n + i][i + k] = gc[n - k];
    auto R = det_poly_bareiss(S, F);
    int D = m * n;
    if (R.degree() > D) throw std::logic_error("resultant degree overflow");
    // R(u) = Res(u, 1); rehomogenize as sum r_i a^i b^(D-i)
    BinForm<Field> out(F, D);
    for (int i = 0; i <= R.degree(); ++i) out.c[D - i] = R.c[i];
    return out;
}

// ---------------------------------------------------------------------------
// Bivariate polynomials in local coordinates (u, v) around a point.

template <class Field>
struct LocalPoly {
    using Elem = typename Field::Elem;
    Field F;
    std::map<std::pair<int, int>, Elem> terms;

    LocalPoly() = default;
    explicit LocalPoly(Field f) : F(f) {}

    static LocalPoly constant(Field f, Elem c) {
        LocalPoly r(f);
        if (!f.is_zero(c)) r.terms[{0, 0}] = c;
        return r;
    }
    static LocalPoly linear(Field f, Elem c0, Elem cu, Elem cv) {
        LocalPoly r(f);
        r.add({0, 0}, c0);
        r.add({1, 0}, cu);
        r.add({0, 1}, cv);
        return r;
    }

    bool is_zero() const { return terms.empty(); }
    void add(std::pair<int, int> e, const Elem& v) {
        if (F.is_zero(v)) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, v);
        } else {
            it->second = it->second + v;
            if (F.is_zero(it->second)) terms.erase(it);
        }
    }
    Elem coeff(int i, int j) const {
        auto it = terms.find({i, j});
        return it == terms.end() ? F.zero() : it->second;
    }
    // Lowest total degree present (the multiplicity at the origin).
    int order() const {
        if (terms.empty()) throw std::domain_error("order of the zero polynomial");
        int m = 1 << 30;
        for (const auto& [e, v] : terms) m = std::min(m, e.first + e.second);
        return m;
    }
    int total_degree() const {
        int m = -1;
        for (const auto& [e, v] : terms) m = std::max(m, e.first + e.second);
        return m;
    }
    // Degree-k homogeneous piece as a binary form in (u, v): c[j] of u^(k-j) v^j.
    BinForm<Field> homogeneous_part(int k) const {
        BinForm<Field> b(F, k);
        for (const auto& [e, v] : terms)
            if (e.first + e.second == k) b.c[e.second] = v;
        return b;
    }
    Elem eval(const Elem& u, const Elem& v) const {
        Elem acc = F.zero();
        for (const auto& [e, c] : terms) {
            Elem t = c;
            for (int i = 0; i < e.first; ++i) t = t * u;
            for (int i = 0; i < e.second; ++i) t = t * v;
            acc = acc + t;
        }
        return acc;
    }

    friend LocalPoly operator+(const LocalPoly& a, const LocalPoly& b) {
        LocalPoly r = a;
        for (const auto& [e, v] : b.terms) r.add(e, v);
        return r;
    }
    friend LocalPoly operator-(const LocalPoly& a) {
        LocalPoly r = a;
        for (auto& [e, v] : r.terms) v = -v;
        return r;
    }
    friend LocalPoly operator-(const LocalPoly& a, const LocalPoly& b) { return a + (-b); }
    friend LocalPoly operator*(const LocalPoly& a, const LocalPoly& b) {
        LocalPoly r(a.F);
        for (const auto& [ea, va] : a.terms)
            for (const auto& [eb, vb] : b.terms) r.add({ea.first + eb.first, ea.second + eb.second}, va * vb);
        return r;
    }
    LocalPoly scaled(const Elem& k) const {
        LocalPoly r(F);
        for (const auto& [e, v] : terms) r.add(e, v * k);
        return r;
    }
};

// G(u, v) = F(P + u T + v N), the curve in an affine frame at P.
template <class Field>
struct Frame {
    Point<Field> P, T, N;
};

template <class Field>
LocalPoly<Field> local_expansion(const Form<Field>& f, const Frame<Field>& fr) {
    const Field& F = f.F;
    std::array<std::vector<LocalPoly<Field>>, 3> pw;
    for (int i = 0; i < 3; ++i) {
        pw[i].push_back(LocalPoly<Field>::constant(F, F.one()));
        auto lin = LocalPoly<Field>::linear(F, fr.P[i], fr.T[i], fr.N[i]);
        for (int k = 1; k <= f.degree; ++k) pw[i].push_back(pw[i].back() * lin);
    }
    LocalPoly<Field> r(F);
    for (const auto& [e, v] : f.terms) r = r + (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]).scaled(v);
    return r;
}

template <class Field>
Point<Field> cross(const Point<Field>& a, const Point<Field>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class Field>
bool proportional(Field F, const Point<Field>& a, const Point<Field>& b) {
    auto c = cross<Field>(a, b);
    return F.is_zero(c[0]) && F.is_zero(c[1]) && F.is_zero(c[2]);
}

template <class Field>
typename Field::Elem dot(const Point<Field>& a, const Point<Field>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class Field>
std::array<typename Field::Elem, 3> gradient_at(const Form<Field>& f, const Point<Field>& P) {
    return {f.partial(0).evaluate(P), f.partial(1).evaluate(P), f.partial(2).evaluate(P)};
}

}  // namespace godeaux
