#include "godeaux/poly.hpp"

namespace godeaux {

std::vector<Exps> monomials(int degree) {
    std::vector<Exps> out;
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
    return out;
}

int monomial_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

namespace {

void split_equal_degree(const UniPoly<PrimeField>& f, std::mt19937_64& rng, std::vector<Fp>& out) {
    const PrimeField& F = f.F;
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        out.push_back(-(f.c[0] * F.inv(f.c[1])));
        return;
    }
    if (F.p == 2) {
        for (std::uint64_t a = 0; a < 2; ++a)
            if (f.eval(Fp(a, 2)).is_zero()) out.push_back(Fp(a, 2));
        return;
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
    while (true) {
        auto shift = UniPoly<PrimeField>(F, {Fp(dist(rng), F.p), F.one()});
        auto h = powmod(shift, (F.p - 1) / 2, f) - UniPoly<PrimeField>::constant(F, F.one());
        auto g = poly_gcd(f, h);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_equal_degree(g, rng, out);
            split_equal_degree(exact_div(f, g).monic(), rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Fp> roots_mod_p(const UniPoly<PrimeField>& f) {
    const PrimeField& F = f.F;
    if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    std::vector<Fp> out;
    if (f.degree() <= 0) return out;
    // product of the distinct linear factors: gcd(f, x^p - x)
    auto x = UniPoly<PrimeField>::x(F);
    auto xp = powmod(x, F.p, f.monic());
    auto g = poly_gcd(f, xp - x);
    std::mt19937_64 rng(0x5eed);
    split_equal_degree(g, rng, out);
    std::sort(out.begin(), out.end(), [](Fp a, Fp b) { return a.v < b.v; });
    return out;
}

bool binform_roots(const BinForm<PrimeField>& f, std::vector<std::pair<Fp, Fp>>& out) {
    const PrimeField& F = f.F;
    if (f.is_zero()) throw std::invalid_argument("roots of the zero form");
    out.clear();
    int kt = f.t_order();
    if (kt > 0) out.push_back({F.one(), F.zero()});
    auto u = f.dehomogenize();
    // strip the t-factors: u(s) = F(s,1) has degree deg - kt
    auto rs = roots_mod_p(u);
    for (auto r : rs) out.push_back({r, F.one()});
    // all factors linear iff the squarefree part splits completely
    auto sq = poly_gcd(u, u.derivative());
    auto rad = exact_div(u.monic(), sq.is_zero() ? UniPoly<PrimeField>::constant(F, F.one()) : sq);
    return rad.degree() == static_cast<int>(rs.size());
}

}  // namespace godeaux
