#include "godeaux/singular.hpp"

#include <random>

namespace godeaux {

std::string kind_name(SingKind k) {
    switch (k) {
        case SingKind::NotOnCurve: return "not-on-curve";
        case SingKind::SimplePass: return "simple";
        case SingKind::Ordinary: return "ordinary";
        case SingKind::Tacnode: return "tacnode";
        case SingKind::Cusp: return "cusp";
        case SingKind::InfinitelyNearTriple: return "infinitely-near-triple";
        case SingKind::OutsideTaxonomy: return "outside-taxonomy";
    }
    return "?";
}

SingKind parse_kind(const std::string& s) {
    for (auto k : {SingKind::NotOnCurve, SingKind::SimplePass, SingKind::Ordinary, SingKind::Tacnode, SingKind::Cusp,
                   SingKind::InfinitelyNearTriple, SingKind::OutsideTaxonomy})
        if (kind_name(k) == s) return k;
    throw std::invalid_argument("unknown singularity kind: " + s);
}

GenusReport genus_deficit(int degree, const std::vector<std::vector<int>>& clusters) {
    GenusReport r;
    r.arithmetic = (degree - 1) * (degree - 2) / 2;
    for (const auto& c : clusters)
        for (int m : c) r.deficit += m * (m - 1) / 2;
    r.geometric = r.arithmetic - r.deficit;
    return r;
}

int local_intersection(const LocalPoly<PrimeField>& f, const LocalPoly<PrimeField>& g, int depth) {
    if (f.is_zero() || g.is_zero()) throw CommonComponent("zero local equation");
    if (depth > 200) throw CommonComponent("blow-up recursion does not separate the curves");
    int m = f.order(), n = g.order();
    if (m == 0 || n == 0) return 0;
    int total = m * n;
    auto h = binform_gcd(f.homogeneous_part(m), g.homogeneous_part(n));
    if (h.degree == 0) return total;
    std::vector<std::pair<Fp, Fp>> dirs;
    if (!binform_roots(h, dirs)) throw std::runtime_error("common tangent direction is not rational over F_p");
    for (auto [a, b] : dirs) {
        auto f1 = blowup_strict_transform(f, a, b).first;
        auto g1 = blowup_strict_transform(g, a, b).first;
        total += local_intersection(f1, g1, depth + 1);
    }
    return total;
}

int intersection_multiplicity(const Form<PrimeField>& f, const Form<PrimeField>& g, const Point<PrimeField>& P) {
    auto fr = make_frame(f.F, P);
    return local_intersection(local_expansion(f, fr), local_expansion(g, fr));
}

namespace {

// f(x, 0) as a univariate polynomial
UniPoly<PrimeField> on_x_axis(const LocalPoly<PrimeField>& f) {
    UniPoly<PrimeField> u(f.F);
    for (const auto& [e, c] : f.terms) {
        if (e.second != 0) continue;
        if (static_cast<int>(u.c.size()) <= e.first) u.c.resize(e.first + 1, f.F.zero());
        u.c[e.first] = c;
    }
    u.trim();
    return u;
}

}  // namespace

int fulton_intersection(LocalPoly<PrimeField> f, LocalPoly<PrimeField> g) {
    const PrimeField& F = f.F;
    int acc = 0;
    for (int guard = 0; guard < 100000; ++guard) {
        if (f.is_zero() || g.is_zero()) throw CommonComponent("zero polynomial");
        if (!F.is_zero(f.coeff(0, 0)) || !F.is_zero(g.coeff(0, 0))) return acc;
        auto f0 = on_x_axis(f), g0 = on_x_axis(g);
        if (f0.is_zero() && g0.is_zero()) throw CommonComponent("both curves contain y = 0");
        if (g0.is_zero()) {
            std::swap(f, g);
            std::swap(f0, g0);
        }
        if (f0.is_zero()) {
            // f = y f1: I(y, g) is the order of g(x, 0) at 0
            int ord = 0;
            while (F.is_zero(g0.c[ord])) ++ord;
            acc += ord;
            LocalPoly<PrimeField> f1(F);
            for (const auto& [e, c] : f.terms) f1.add({e.first, e.second - 1}, c);
            f = f1;
            continue;
        }
        if (f0.degree() > g0.degree()) {
            std::swap(f, g);
            std::swap(f0, g0);
        }
        int shift = g0.degree() - f0.degree();
        LocalPoly<PrimeField> xs(F);
        xs.add({shift, 0}, g0.lead());
        g = g.scaled(f0.lead()) - xs * f;
    }
    throw std::logic_error("Fulton recursion did not terminate");
}

Point<PrimeField> normalize_point(const Point<PrimeField>& P) {
    for (int k = 2; k >= 0; --k)
        if (!P[k].is_zero()) {
            auto inv = P[k].inverse();
            return {P[0] * inv, P[1] * inv, P[2] * inv};
        }
    throw std::invalid_argument("invalid point");
}

IntersectionResult intersection_points(const Form<PrimeField>& f, const Form<PrimeField>& g) {
    const PrimeField& F = f.F;
    using Mat = std::array<std::array<Fp, 3>, 3>;
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
    Mat A;
    Form<PrimeField> fa, ga;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 1000) throw std::runtime_error("no admissible projection centre");
        for (auto& row : A)
            for (auto& x : row) x = Fp(dist(rng), F.p);
        Point<PrimeField> c0{A[0][0], A[1][0], A[2][0]}, c1{A[0][1], A[1][1], A[2][1]}, c2{A[0][2], A[1][2], A[2][2]};
        if (dot<PrimeField>(c0, cross<PrimeField>(c1, c2)).is_zero()) continue;
        fa = substitute_linear(f, A);
        ga = substitute_linear(g, A);
        // centre [0:1:0] off both curves so y^deg appears in each
        if (fa.coeff({0, fa.degree, 0}).is_zero() || ga.coeff({0, ga.degree, 0}).is_zero()) continue;
        break;
    }
    auto R = resultant(fa, ga, 1);
    if (R.is_zero()) throw CommonComponent("resultant vanishes identically");
    IntersectionResult out;
    std::vector<std::pair<Fp, Fp>> roots;
    binform_roots(R, roots);
    int rational_mass = 0;
    for (auto [x0, z0] : roots) {
        int ord = binform_root_order(R, x0, z0);
        rational_mass += ord;
        // restrict both forms to the line through the centre and [x0:0:z0]
        auto restrict = [&](const Form<PrimeField>& h) {
            UniPoly<PrimeField> u(F);
            u.c.assign(h.degree + 1, F.zero());
            for (const auto& [e, c] : h.terms) u.c[e[1]] = u.c[e[1]] + c * x0.pow(e[0]) * z0.pow(e[2]);
            u.trim();
            return u;
        };
        auto gcd = poly_gcd(restrict(fa), restrict(ga));
        auto ys = roots_mod_p(gcd);
        int found = 0;
        for (auto y0 : ys) {
            Point<PrimeField> X{x0, y0, z0};
            Point<PrimeField> P;
            for (int i = 0; i < 3; ++i) P[i] = A[i][0] * X[0] + A[i][1] * X[1] + A[i][2] * X[2];
            P = normalize_point(P);
            int m = intersection_multiplicity(f, g, P);
            found += m;
            out.points.push_back({P, m});
        }
        if (found < ord) out.unresolved_degree += ord - found;
        if (found > ord) throw std::logic_error("local multiplicities exceed the resultant order");
    }
    out.unresolved_degree += R.degree - rational_mass;
    std::sort(out.points.begin(), out.points.end(), [](const IntersectionPoint& a, const IntersectionPoint& b) {
        return std::make_tuple(a.point[0].v, a.point[1].v, a.point[2].v) <
               std::make_tuple(b.point[0].v, b.point[1].v, b.point[2].v);
    });
    return out;
}

}  // namespace godeaux
