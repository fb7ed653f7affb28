#include "godeaux/gbcert.hpp"

#include "godeaux/linalg.hpp"
#include "godeaux/singular.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace godeaux::gb {

namespace {
constexpr Mono kGuard = 0x8080808080808080ULL;
}

Ring::Ring(int nvars, std::uint64_t prime, Order o, int eliminated) : n(nvars), p(prime), order(o), elim(eliminated) {
    if (n < 1 || n > 8) throw std::invalid_argument("between 1 and 8 variables supported");
    if (o == Order::Elimination && (elim < 1 || elim >= n)) throw std::invalid_argument("bad elimination block");
    if (o == Order::Grevlex) elim = 0;
}

Key Ring::key(Mono m) const {
    Key k = 0;
    auto block = [&](int lo, int hi) {
        int d = 0;
        for (int v = lo; v < hi; ++v) d += exp(m, v);
        k = (k << 16) | static_cast<Key>(d);
        for (int v = hi - 1; v > lo; --v) k = (k << 8) | static_cast<Key>(255 - exp(m, v));
    };
    if (order == Order::Elimination) {
        block(n - elim, n);
        block(0, n - elim);
    } else {
        block(0, n);
    }
    return k;
}

Mono Ring::make(const std::vector<int>& e) const {
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent vector length");
    Mono m = 0;
    for (int v = 0; v < n; ++v) {
        if (e[v] < 0 || e[v] > 127) throw std::overflow_error("exponent out of range");
        m |= static_cast<Mono>(e[v]) << (8 * v);
    }
    return m;
}

int Ring::degree(Mono m) const {
    int d = 0;
    for (int v = 0; v < n; ++v) d += exp(m, v);
    return d;
}

std::uint64_t Ring::inv(std::uint64_t a) const {
    if (a % p == 0) throw std::domain_error("inverse of zero");
    return powmod(a, p - 2, p);
}

int Poly::degree(const Ring& R) const {
    int d = -1;
    for (const auto& x : t) d = std::max(d, R.degree(x.m));
    return d;
}

bool mono_divides(Mono a, Mono b) { return ((b - a) & kGuard) == 0; }

Mono mono_mul(Mono a, Mono b) {
    Mono c = a + b;
    if (c & kGuard) throw std::overflow_error("exponent overflow");
    return c;
}

Mono mono_div(Mono a, Mono b) { return b - a; }

Mono mono_lcm(Mono a, Mono b, int n) {
    Mono c = 0;
    for (int v = 0; v < n; ++v) {
        Mono x = (a >> (8 * v)) & 0xff, y = (b >> (8 * v)) & 0xff;
        c |= std::max(x, y) << (8 * v);
    }
    return c;
}

bool mono_coprime(Mono a, Mono b, int n) {
    for (int v = 0; v < n; ++v)
        if (((a >> (8 * v)) & 0xff) && ((b >> (8 * v)) & 0xff)) return false;
    return true;
}

namespace {

// a + s * m * b, merging sorted term lists; `from` skips a's leading terms.
Poly axpy(const Ring& R, const Poly& a, std::size_t from, std::uint64_t s, Mono m, const Poly& b) {
    Poly out;
    out.t.reserve(a.t.size() - from + b.t.size());
    const Key shift = R.key(m) - R.key(0);
    std::size_t i = from, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size()) {
            out.t.push_back(a.t[i++]);
            continue;
        }
        Key kb = b.t[j].key + shift;
        if (i == a.t.size() || kb > a.t[i].key) {
            out.t.push_back({mono_mul(b.t[j].m, m), kb, mulmod(b.t[j].c, s, R.p)});
            ++j;
        } else if (kb < a.t[i].key) {
            out.t.push_back(a.t[i++]);
        } else {
            std::uint64_t c = (a.t[i].c + mulmod(b.t[j].c, s, R.p)) % R.p;
            if (c) out.t.push_back({a.t[i].m, a.t[i].key, c});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly poly_add(const Ring& R, const Poly& a, const Poly& b) { return axpy(R, a, 0, 1, 0, b); }
Poly poly_sub(const Ring& R, const Poly& a, const Poly& b) { return axpy(R, a, 0, R.p - 1, 0, b); }

Poly poly_scale(const Ring& R, const Poly& a, std::uint64_t c, Mono m) {
    return axpy(R, Poly{}, 0, c % R.p, m, a);
}

Poly poly_mul(const Ring& R, const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& x : a.t) out = axpy(R, out, 0, x.c, x.m, b);
    return out;
}

Poly poly_monic(const Ring& R, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(R, a, R.inv(a.lead().c));
}

Poly poly_constant(const Ring& R, std::uint64_t c) {
    Poly out;
    if (c % R.p) out.t.push_back({0, R.key(0), c % R.p});
    return out;
}

Poly poly_var(const Ring& R, int var) {
    Mono m = Mono(1) << (8 * var);
    return Poly{{{m, R.key(m), 1}}};
}

Poly poly_from_terms(const Ring& R, std::vector<std::pair<Mono, std::uint64_t>> terms) {
    std::map<Key, Term, std::greater<Key>> acc;
    for (auto [m, c] : terms) {
        Key k = R.key(m);
        auto it = acc.find(k);
        if (it == acc.end()) acc[k] = {m, k, c % R.p};
        else it->second.c = (it->second.c + c) % R.p;
    }
    Poly out;
    for (auto& [k, t] : acc)
        if (t.c) out.t.push_back(t);
    return out;
}

std::uint64_t poly_eval(const Ring& R, const Poly& f, const std::vector<std::uint64_t>& x) {
    std::uint64_t s = 0;
    for (const auto& t : f.t) {
        std::uint64_t v = t.c;
        for (int k = 0; k < R.n; ++k) v = mulmod(v, powmod(x[k] % R.p, R.exp(t.m, k), R.p), R.p);
        s = (s + v) % R.p;
    }
    return s;
}

std::string poly_str(const Ring& R, const Poly& f) {
    static const char* names[] = {"x", "y", "z", "t", "u", "v", "w", "s"};
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.t) {
        if (!first) os << " + ";
        first = false;
        os << t.c;
        for (int k = 0; k < R.n; ++k) {
            int e = R.exp(t.m, k);
            if (e == 1) os << "*" << names[k];
            else if (e > 1) os << "*" << names[k] << "^" << e;
        }
    }
    return os.str();
}

Poly rekey(const Ring& from, const Ring& to, const Poly& f) {
    std::vector<std::pair<Mono, std::uint64_t>> terms;
    for (const auto& t : f.t) {
        for (int v = to.n; v < from.n; ++v)
            if (from.exp(t.m, v)) throw std::invalid_argument("variable missing from target ring");
        terms.push_back({t.m, t.c});
    }
    return poly_from_terms(to, terms);
}

Poly from_form(const Ring& R, const Form<PrimeField>& f) {
    if (R.n < 3) throw std::invalid_argument("ternary form needs three variables");
    std::vector<std::pair<Mono, std::uint64_t>> terms;
    for (const auto& [e, c] : f.terms) {
        std::vector<int> ex(R.n, 0);
        ex[0] = e[0];
        ex[1] = e[1];
        ex[2] = e[2];
        terms.push_back({R.make(ex), c.v});
    }
    return poly_from_terms(R, terms);
}

Poly normal_form(const Ring& R, const Poly& f, const std::vector<Poly>& G) {
    Poly cur = f, rem;
    std::size_t idx = 0;
    while (idx < cur.t.size()) {
        const Term lt = cur.t[idx];
        const Poly* red = nullptr;
        for (const auto& g : G)
            if (mono_divides(g.lead().m, lt.m)) {
                red = &g;
                break;
            }
        if (!red) {
            rem.t.push_back(lt);
            ++idx;
            continue;
        }
        std::uint64_t s = mulmod(lt.c, R.inv(red->lead().c), R.p);
        cur = axpy(R, cur, idx, R.p - s, mono_div(red->lead().m, lt.m), *red);
        idx = 0;
    }
    return rem;
}

Poly s_polynomial(const Ring& R, const Poly& f, const Poly& g) {
    Mono l = mono_lcm(f.lead().m, g.lead().m, R.n);
    auto a = poly_scale(R, f, R.inv(f.lead().c), mono_div(f.lead().m, l));
    return axpy(R, a, 0, R.p - R.inv(g.lead().c), mono_div(g.lead().m, l), g);
}

namespace {

struct Pair {
    std::size_t i, j;
    Mono lcm;
    Key key;
    int sugar;
};

// Minimal, then tail-reduced and sorted.
std::vector<Poly> reduce_basis(const Ring& R, std::vector<Poly> G) {
    std::vector<Poly> minimal;
    std::sort(G.begin(), G.end(), [](const Poly& a, const Poly& b) { return a.lead().key < b.lead().key; });
    for (const auto& g : G) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (mono_divides(h.lead().m, g.lead().m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    std::vector<Poly> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly tail;
        tail.t.assign(minimal[i].t.begin() + 1, minimal[i].t.end());
        Poly r = normal_form(R, tail, others);
        Poly h;
        h.t.push_back(minimal[i].lead());
        h.t.insert(h.t.end(), r.t.begin(), r.t.end());
        out.push_back(poly_monic(R, h));
    }
    return out;
}

}  // namespace

GroebnerBasis groebner_basis(const Ring& R, const std::vector<Poly>& gens, GbStats* stats) {
    std::vector<Poly> polys;
    std::vector<int> sugar;
    std::vector<std::size_t> active;
    std::vector<Pair> pairs;

    auto update = [&](std::size_t h) {
        const Mono lh = polys[h].lead().m;
        std::vector<Pair> C, D;
        for (std::size_t g : active) {
            Mono l = mono_lcm(lh, polys[g].lead().m, R.n);
            int s = std::max(sugar[h] + R.degree(l) - R.degree(lh),
                             sugar[g] + R.degree(l) - R.degree(polys[g].lead().m));
            C.push_back({g, h, l, R.key(l), s});
        }
        // chain criterion among the new pairs
        for (std::size_t a = 0; a < C.size(); ++a) {
            bool keep = mono_coprime(lh, polys[C[a].i].lead().m, R.n);
            if (!keep) {
                keep = true;
                for (std::size_t b = 0; b < C.size() && keep; ++b) {
                    if (b == a) continue;
                    if (mono_divides(C[b].lcm, C[a].lcm) && (C[b].lcm != C[a].lcm || b < a)) keep = false;
                }
            }
            if (keep) D.push_back(C[a]);
        }
        std::vector<Pair> E;
        for (const auto& q : D)
            if (!mono_coprime(lh, polys[q.i].lead().m, R.n)) E.push_back(q);
        std::vector<Pair> kept;
        for (const auto& q : pairs) {
            bool drop = mono_divides(lh, q.lcm) &&
                        mono_lcm(polys[q.i].lead().m, lh, R.n) != q.lcm &&
                        mono_lcm(lh, polys[q.j].lead().m, R.n) != q.lcm;
            if (!drop) kept.push_back(q);
        }
        kept.insert(kept.end(), E.begin(), E.end());
        pairs.swap(kept);
        std::vector<std::size_t> act;
        for (std::size_t g : active)
            if (!mono_divides(lh, polys[g].lead().m)) act.push_back(g);
        act.push_back(h);
        active.swap(act);
    };

    auto current = [&]() {
        std::vector<Poly> G;
        for (std::size_t g : active) G.push_back(polys[g]);
        return G;
    };

    for (const auto& f : gens) {
        if (f.is_zero()) continue;
        Poly h = normal_form(R, f, current());
        if (h.is_zero()) continue;
        polys.push_back(poly_monic(R, h));
        sugar.push_back(f.degree(R));
        update(polys.size() - 1);
    }

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            return a.key < b.key;
        });
        Pair pr = *best;
        pairs.erase(best);
        if (stats) ++stats->pairs;
        Poly s = s_polynomial(R, polys[pr.i], polys[pr.j]);
        Poly h = normal_form(R, s, current());
        if (h.is_zero()) {
            if (stats) ++stats->zero_reductions;
            continue;
        }
        polys.push_back(poly_monic(R, h));
        sugar.push_back(pr.sugar);
        if (polys.back().is_constant()) {
            GroebnerBasis unit{R, {poly_constant(R, 1)}};
            return unit;
        }
        update(polys.size() - 1);
    }
    GroebnerBasis out{R, reduce_basis(R, current())};
    return out;
}

bool contains(const GroebnerBasis& G, const Poly& f) { return normal_form(G.ring, f, G.polys).is_zero(); }

bool buchberger_criterion(const GroebnerBasis& G) {
    for (std::size_t i = 0; i < G.polys.size(); ++i)
        for (std::size_t j = i + 1; j < G.polys.size(); ++j)
            if (!normal_form(G.ring, s_polynomial(G.ring, G.polys[i], G.polys[j]), G.polys).is_zero()) return false;
    return true;
}

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.polys.size() != b.polys.size()) return false;
    for (std::size_t i = 0; i < a.polys.size(); ++i) {
        const auto& x = a.polys[i].t;
        const auto& y = b.polys[i].t;
        if (x.size() != y.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k].m != y[k].m || x[k].c != y[k].c) return false;
    }
    return true;
}

std::vector<Poly> eliminate_last(const Ring& R, const std::vector<Poly>& gens, int k) {
    Ring E(R.n, R.p, Order::Elimination, k);
    Ring S(R.n - k, R.p);
    std::vector<Poly> g;
    for (const auto& f : gens) g.push_back(rekey(R, E, f));
    auto G = groebner_basis(E, g);
    std::vector<Poly> out;
    for (const auto& f : G.polys) {
        bool free = true;
        for (const auto& t : f.t)
            for (int v = R.n - k; v < R.n; ++v)
                if (E.exp(t.m, v)) free = false;
        if (free) out.push_back(rekey(E, S, f));
    }
    return out;
}

namespace {
Ring with_extra(const Ring& R) { return Ring(R.n + 1, R.p); }
}  // namespace

GroebnerBasis intersect(const Ring& R, const std::vector<Poly>& I, const std::vector<Poly>& J) {
    Ring T = with_extra(R);
    Poly t = poly_var(T, R.n);
    Poly one_minus_t = poly_sub(T, poly_constant(T, 1), t);
    std::vector<Poly> gens;
    for (const auto& f : I) gens.push_back(poly_mul(T, t, rekey(R, T, f)));
    for (const auto& g : J) gens.push_back(poly_mul(T, one_minus_t, rekey(R, T, g)));
    return groebner_basis(R, eliminate_last(T, gens, 1));
}

std::optional<Poly> exact_divide(const Ring& R, const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q, r = f;
    std::uint64_t li = R.inv(g.lead().c);
    while (!r.is_zero()) {
        if (!mono_divides(g.lead().m, r.lead().m)) return std::nullopt;
        std::uint64_t s = mulmod(r.lead().c, li, R.p);
        Mono m = mono_div(g.lead().m, r.lead().m);
        q = poly_add(R, q, Poly{{{m, R.key(m), s}}});
        r = axpy(R, r, 0, R.p - s, m, g);
    }
    return q;
}

GroebnerBasis quotient(const Ring& R, const std::vector<Poly>& I, const Poly& g) {
    auto K = intersect(R, I, {g});
    std::vector<Poly> out;
    for (const auto& h : K.polys) {
        auto q = exact_divide(R, h, g);
        if (!q) throw std::logic_error("intersection element not divisible by the quotient generator");
        out.push_back(*q);
    }
    return groebner_basis(R, out);
}

GroebnerBasis saturate_by(const Ring& R, const std::vector<Poly>& I, const Poly& g) {
    // Rabinowitsch: (I : g^inf) = (I + <1 - t g>) restricted to the old variables
    Ring T = with_extra(R);
    std::vector<Poly> gens;
    for (const auto& f : I) gens.push_back(rekey(R, T, f));
    gens.push_back(poly_sub(T, poly_constant(T, 1), poly_mul(T, poly_var(T, R.n), rekey(R, T, g))));
    return groebner_basis(R, eliminate_last(T, gens, 1));
}

GroebnerBasis saturation(const Ring& R, const std::vector<Poly>& I, const std::vector<Poly>& J) {
    if (J.empty()) return groebner_basis(R, I);
    std::optional<GroebnerBasis> acc;
    for (const auto& g : J) {
        if (g.is_zero()) continue;
        auto S = saturate_by(R, I, g);
        if (S.is_unit()) continue;
        acc = acc ? intersect(R, acc->polys, S.polys) : S;
    }
    if (!acc) return GroebnerBasis{R, {poly_constant(R, 1)}};
    return *acc;
}

std::vector<Poly> points_ideal(const Ring& R, const std::vector<Point<PrimeField>>& pts) {
    if (R.n != 3) throw std::invalid_argument("points ideal needs a ternary ring");
    std::vector<Point<PrimeField>> norm;
    for (const auto& P : pts) {
        auto Q = normalize_point(P);
        for (const auto& X : norm)
            if (X == Q) throw std::invalid_argument("duplicate point in points ideal");
        norm.push_back(Q);
    }
    PrimeField F(R.p);
    std::vector<Poly> gens;
    int top = std::max<int>(1, static_cast<int>(norm.size()));
    for (int d = 1; d <= top; ++d) {
        auto ms = monomials(d);
        Matrix<PrimeField> M(F, norm.size(), ms.size());
        for (std::size_t i = 0; i < norm.size(); ++i)
            for (std::size_t k = 0; k < ms.size(); ++k)
                M(i, k) = norm[i][0].pow(ms[k][0]) * norm[i][1].pow(ms[k][1]) * norm[i][2].pow(ms[k][2]);
        for (const auto& v : kernel_basis(M)) gens.push_back(from_form(R, Form<PrimeField>::from_vector(F, d, v)));
    }
    return groebner_basis(R, gens).polys;
}

std::vector<Poly> jacobian_ideal(const Ring& R, const Form<PrimeField>& f) {
    std::vector<Poly> out;
    for (int v = 0; v < 3; ++v) {
        auto d = f.partial(v);
        if (!d.is_zero()) out.push_back(from_form(R, d));
    }
    return out;
}

SmoothnessCertificate certify_smooth_outside(const Form<PrimeField>& f, const std::vector<Point<PrimeField>>& excluded) {
    if (f.is_zero()) throw std::invalid_argument("zero form");
    Ring R(3, f.F.p);
    SmoothnessCertificate cert;
    auto J = jacobian_ideal(R, f);
    std::vector<Poly> I;
    if (excluded.empty()) I = {poly_var(R, 0), poly_var(R, 1), poly_var(R, 2)};
    else I = points_ideal(R, excluded);
    cert.ideal_generators = I.size();
    std::optional<GroebnerBasis> acc;
    for (const auto& g : I) {
        auto S = saturate_by(R, J, g);
        cert.basis_sizes.push_back(S.polys.size());
        if (S.is_unit()) continue;
        acc = acc ? intersect(R, acc->polys, S.polys) : S;
    }
    cert.smooth_outside = !acc.has_value();
    return cert;
}

}  // namespace godeaux::gb
