// Randomized property suites and independent oracles shared by the unit tests
// and the acceptance binary.
#pragma once

#include "godeaux/asset.hpp"
#include "godeaux/gbcert.hpp"
#include "godeaux/picard.hpp"
#include "godeaux/ring.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

namespace props {

using namespace godeaux;

struct Result {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

inline Rational random_rational(std::mt19937_64& rng, long span = 50) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    return Rational(num(rng), den(rng));
}

inline Tower random_tower(std::mt19937_64& rng) {
    std::array<Rational, 8> c;
    for (auto& x : c) x = random_rational(rng);
    for (auto& x : c) x.canonicalize();
    return Tower::from_coords(c);
}

// Ring axioms and hom compatibility on random tower pairs.
inline Result tower_suite(int pairs, std::uint64_t seed = 1) {
    Result r;
    std::mt19937_64 rng(seed);
    auto phi = embed_tower(30047);
    for (int i = 0; i < pairs; ++i) {
        auto a = random_tower(rng), b = random_tower(rng), c = random_tower(rng);
        if (a * b != b * a) r.fail("commutativity");
        if ((a * b) * c != a * (b * c)) r.fail("associativity");
        if (a * (b + c) != a * b + a * c) r.fail("distributivity");
        if (phi(a * b) != phi(a) * phi(b)) r.fail("hom multiplicativity");
        if (phi(a + b) != phi(a) + phi(b)) r.fail("hom additivity");
        if (!a.is_zero() && a * a.inverse() != Tower(1)) r.fail("inverse");
    }
    return r;
}

// Exponent vectors of total degree d in n variables.
inline std::vector<std::vector<int>> exponents(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(n, 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == n - 1) {
            e[k] = left;
            out.push_back(e);
            return;
        }
        for (int i = left; i >= 0; --i) {
            e[k] = i;
            rec(k + 1, left - i);
        }
    };
    rec(0, d);
    return out;
}

inline gb::Poly random_homogeneous(const gb::Ring& R, int d, std::mt19937_64& rng, int max_terms = 4) {
    auto es = exponents(R.n, d);
    std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
    std::uniform_int_distribution<std::uint64_t> coef(1, R.p - 1);
    std::vector<std::pair<gb::Mono, std::uint64_t>> terms;
    for (int k = 0; k < max_terms; ++k) terms.push_back({R.make(es[pick(rng)]), coef(rng)});
    return gb::poly_from_terms(R, terms);
}

// Membership of a homogeneous f in a homogeneous ideal by linear algebra in
// degree deg f: f is in the span of all m * g_i of that degree.
inline bool macaulay_member(const gb::Ring& R, const std::vector<gb::Poly>& gens, const gb::Poly& f) {
    if (f.is_zero()) return true;
    int D = f.degree(R);
    auto cols = exponents(R.n, D);
    std::map<gb::Mono, std::size_t> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index[R.make(cols[i])] = i;
    PrimeField F(R.p);
    Matrix<PrimeField> M(F, 0, cols.size());
    auto row_of = [&](const gb::Poly& h) {
        std::vector<Fp> row(cols.size(), F.zero());
        for (const auto& t : h.t) row[index.at(t.m)] = Fp(t.c, R.p);
        return row;
    };
    for (const auto& g : gens) {
        int dg = g.degree(R);
        if (dg > D) continue;
        for (const auto& e : exponents(R.n, D - dg)) M.append_row(row_of(gb::poly_scale(R, g, 1, R.make(e))));
    }
    auto r0 = rank(M);
    M.append_row(row_of(f));
    return rank(M) == r0;
}

// Random homogeneous ideals over F_101 in three variables; membership of a
// random multiple combination and of a random form, against the oracle.
inline Result macaulay_suite(int ideals, std::uint64_t seed = 2) {
    Result r;
    std::mt19937_64 rng(seed);
    gb::Ring R(3, 101);
    std::uniform_int_distribution<int> ngen(1, 3), deg(1, 3);
    for (int k = 0; k < ideals; ++k) {
        std::vector<gb::Poly> gens;
        int m = ngen(rng);
        for (int i = 0; i < m; ++i) {
            auto g = random_homogeneous(R, deg(rng), rng);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        auto G = gb::groebner_basis(R, gens);
        if (!gb::buchberger_criterion(G)) r.fail("Buchberger criterion on ideal " + std::to_string(k));
        // member: sum of multiples landing in degree 6 at most
        int top = 0;
        for (const auto& g : gens) top = std::max(top, g.degree(R));
        std::uniform_int_distribution<int> target(top, 6);
        int D = target(rng);
        gb::Poly member;
        for (const auto& g : gens) {
            int dg = g.degree(R);
            member = gb::poly_add(R, member, gb::poly_mul(R, random_homogeneous(R, D - dg, rng, 3), g));
        }
        if (!gb::contains(G, member) || !macaulay_member(R, gens, member)) r.fail("member rejected in ideal " + std::to_string(k));
        for (int t = 0; t < 3; ++t) {
            auto f = random_homogeneous(R, D, rng, 5);
            if (gb::contains(G, f) != macaulay_member(R, gens, f)) r.fail("membership disagreement in ideal " + std::to_string(k));
        }
    }
    return r;
}

inline Result euler_suite() {
    Result r;
    auto dir = default_asset_dir();
    for (const auto& name : shipped_asset_names()) {
        auto a = load_named_asset(dir, name);
        std::vector<Form<TowerField>> forms;
        if (a.tower) forms.push_back(*a.tower);
        for (const auto& [n, f] : a.components) forms.push_back(f);
        for (const auto& f : forms) {
            if (f.degree < 1) continue;
            Form<TowerField> acc(f.F, f.degree);
            for (int v = 0; v < 3; ++v) {
                Exps e{0, 0, 0};
                e[v] = 1;
                acc = acc + Form<TowerField>::monomial(f.F, e, Tower(1)) * f.partial(v);
            }
            if (!(acc == f.scaled(Tower(f.degree)))) r.fail("Euler identity on " + name);
        }
    }
    return r;
}

// Random blow-up configurations of up to 12 centres.
inline BlowupConfig random_config(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> size(0, 12);
    int n = size(rng);
    BlowupConfig cfg;
    for (int j = 0; j < n; ++j) {
        int parent = -1;
        if (j > 0 && rng() % 2) parent = static_cast<int>(rng() % j);
        cfg.centers.push_back({"c" + std::to_string(j), parent});
    }
    return cfg;
}

inline DivClass random_class(const BlowupConfig& cfg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> v(-6, 6);
    DivClass a = DivClass::zero(cfg.size());
    a.d = v(rng);
    for (auto& x : a.c) x = v(rng);
    return a;
}

inline Result lattice_suite(int configs, std::uint64_t seed = 3) {
    Result r;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < configs; ++k) {
        auto cfg = random_config(rng);
        auto K = canonical_class(cfg);
        if (intersect(K, K) != 9 - cfg.size()) r.fail("K^2 != 9 - n");
        auto a = random_class(cfg, rng), b = random_class(cfg, rng), c = random_class(cfg, rng);
        if (intersect(a, b) != intersect(b, a)) r.fail("pairing symmetry");
        if (intersect(a + b, c) != intersect(a, c) + intersect(b, c)) r.fail("pairing bilinearity");
        for (int j = 0; j < cfg.size(); ++j) {
            auto E = proper_exceptional(cfg, j);
            int expect = -1 - static_cast<int>(cfg.children(j).size());
            if (intersect(E, E) != expect) r.fail("proper exceptional self-intersection");
        }
    }
    return r;
}

}  // namespace props
