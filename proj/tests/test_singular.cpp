#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "godeaux/singular.hpp"

#include <random>
#include <set>

using namespace godeaux;

namespace {

const std::uint64_t P = 101;
const PrimeField F(P);

Fp c(long long n) { return Fp::of(n, P); }

Form<PrimeField> form(int d, std::initializer_list<std::pair<Exps, long long>> ts) {
    Form<PrimeField> f(F, d);
    for (const auto& [e, v] : ts) f.add_term(e, c(v));
    return f;
}

const Point<PrimeField> origin{Fp(0, P), Fp(0, P), Fp(1, P)};
const Point<PrimeField> y_axis_line{Fp(0, P), Fp(1, P), Fp(0, P)};  // y = 0

SingularitySpec<PrimeField> spec(SingKind k, int m = 1, std::optional<Point<PrimeField>> tangent = std::nullopt) {
    SingularitySpec<PrimeField> s;
    s.kind = k;
    s.multiplicity = m;
    s.tangent = tangent;
    s.at.base = origin;
    return s;
}

bool satisfies(const ConditionMatrix<PrimeField>& m, const Form<PrimeField>& f) {
    auto v = f.to_vector();
    for (auto x : mat_vec(m.rows, v))
        if (!x.is_zero()) return false;
    return true;
}

Form<PrimeField> random_form(std::mt19937_64& rng, std::uint64_t p, int d) {
    Form<PrimeField> f(PrimeField(p), d);
    for (const auto& e : monomials(d)) f.set(e, Fp(rng() % p, p));
    return f;
}

}  // namespace

TEST_CASE("classification of model singularities") {
    auto cusp = form(3, {{{0, 2, 1}, 1}, {{3, 0, 0}, -1}});
    auto tac = form(4, {{{0, 2, 2}, 1}, {{4, 0, 0}, -1}});
    auto node = form(3, {{{1, 1, 1}, 1}, {{3, 0, 0}, 1}, {{0, 3, 0}, 1}});
    auto triple = form(6, {{{0, 3, 3}, 1}, {{6, 0, 0}, -1}});
    auto quad = form(4, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{2, 2, 0}, 3}});
    auto smooth = form(2, {{{0, 1, 1}, 1}, {{2, 0, 0}, 1}});
    CHECK(classify_singularity(cusp, origin).kind == SingKind::Cusp);
    CHECK(classify_singularity(tac, origin).kind == SingKind::Tacnode);
    CHECK(classify_singularity(node, origin).kind == SingKind::Ordinary);
    CHECK(classify_singularity(triple, origin).kind == SingKind::InfinitelyNearTriple);
    auto q = classify_singularity(quad, origin);
    CHECK(q.multiplicity == 4);
    CHECK(classify_singularity(smooth, origin).kind == SingKind::SimplePass);
    Point<PrimeField> off{Fp(1, P), Fp(1, P), Fp(1, P)};
    CHECK(classify_singularity(smooth, off).kind == SingKind::NotOnCurve);

    auto rep = classify_singularity(tac, origin);
    REQUIRE(rep.tangent.has_value());
    CHECK(proportional<PrimeField>(F, *rep.tangent, y_axis_line));
    CHECK(rep.post_blowup_multiplicity == 2);
}

TEST_CASE("multiplicity is invariant under a change of coordinates") {
    auto tac = form(4, {{{0, 2, 2}, 1}, {{4, 0, 0}, -1}});
    std::array<std::array<Fp, 3>, 3> A{{{c(1), c(2), c(0)}, {c(0), c(1), c(0)}, {c(3), c(5), c(1)}}};
    auto g = substitute_linear(tac, A);
    // the preimage of the origin under A is the kernel of the first two rows
    Point<PrimeField> pre = cross<PrimeField>({c(1), c(2), c(0)}, {c(0), c(1), c(0)});
    CHECK(multiplicity_at(g, pre) == 2);
    CHECK(classify_singularity(g, pre).kind == SingKind::Tacnode);
}

TEST_CASE("condition row counts per singularity kind") {
    CHECK(build_condition_rows(F, 8, spec(SingKind::Ordinary, 4)).rows.rows == 10);
    CHECK(build_condition_rows(F, 8, spec(SingKind::InfinitelyNearTriple, 3, y_axis_line)).rows.rows == 12);
    CHECK(build_condition_rows(F, 8, spec(SingKind::Tacnode, 2, y_axis_line)).rows.rows == 6);
    CHECK(build_condition_rows(F, 8, spec(SingKind::Cusp, 2, y_axis_line)).rows.rows == 5);
    CHECK(build_condition_rows(F, 8, spec(SingKind::SimplePass)).rows.rows == 1);
    // a 22 x 45 base block for the Campedelli octic: 10 + 12
    auto quad = spec(SingKind::Ordinary, 4);
    quad.at.base = {Fp(1, P), Fp(0, P), Fp(0, P)};
    auto base = build_system(F, 8, {quad, [] {
                                        auto s = spec(SingKind::InfinitelyNearTriple, 3, y_axis_line);
                                        s.at.base = {Fp(0, P), Fp(1, P), Fp(0, P)};
                                        s.tangent = Point<PrimeField>{Fp(1, P), Fp(0, P), Fp(0, P)};
                                        return s;
                                    }()});
    CHECK(base.rows.rows == 22);
    CHECK(base.rows.cols == 45);
    CHECK(rank(base.rows) == 22);
}

TEST_CASE("model curves satisfy their own condition rows") {
    auto cusp = form(3, {{{0, 2, 1}, 1}, {{3, 0, 0}, -1}});
    auto tac = form(4, {{{0, 2, 2}, 1}, {{4, 0, 0}, -1}});
    auto triple = form(6, {{{0, 3, 3}, 1}, {{6, 0, 0}, -1}});
    CHECK(satisfies(build_condition_rows(F, 3, spec(SingKind::Cusp, 2, y_axis_line)), cusp));
    CHECK(satisfies(build_condition_rows(F, 4, spec(SingKind::Tacnode, 2, y_axis_line)), tac));
    CHECK(satisfies(build_condition_rows(F, 6, spec(SingKind::InfinitelyNearTriple, 3, y_axis_line)), triple));
    // the cusp is not a tacnode, and a cusp with the wrong tangent fails
    CHECK(!satisfies(build_condition_rows(F, 3, spec(SingKind::Tacnode, 2, y_axis_line)), cusp));
    Point<PrimeField> x_line{Fp(1, P), Fp(0, P), Fp(0, P)};
    CHECK(!satisfies(build_condition_rows(F, 3, spec(SingKind::Cusp, 2, x_line)), cusp));
}

TEST_CASE("linear system dimensions through simple points") {
    std::vector<SingularitySpec<PrimeField>> specs;
    long long xs[] = {0, 1, 2, 3, 4, 5};
    for (long long x : xs) {
        auto s = spec(SingKind::SimplePass);
        s.at.base = {c(x), c(x * x + 1), c(1)};  // points on a parabola, so no three collinear
        specs.push_back(s);
    }
    auto first = [&](int n) { return std::vector<SingularitySpec<PrimeField>>(specs.begin(), specs.begin() + n); };
    CHECK(linear_system_dimension(F, 2, first(4)) == 1);
    CHECK(linear_system_dimension(F, 2, first(5)) == 0);
    CHECK(linear_system_dimension(F, 2, first(6)) == 0);  // all six lie on the parabola
    CHECK(linear_system_dimension(F, 1, first(3)) == -1);
}

TEST_CASE("signed minors agree with the rref kernel") {
    std::mt19937_64 rng(21);
    for (int n = 1; n < 8; ++n) {
        Matrix<PrimeField> M(F, n, n + 1);
        for (std::size_t i = 0; i < M.rows; ++i)
            for (std::size_t j = 0; j < M.cols; ++j) M(i, j) = Fp(rng() % P, P);
        if (rank(M) != static_cast<std::size_t>(n)) continue;
        auto v = kernel_via_signed_minors(M);
        for (auto x : mat_vec(M, v)) CHECK(x.is_zero());
        auto K = kernel_basis(M);
        REQUIRE(K.size() == 1);
        // proportional: every 2x2 cross product vanishes
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) CHECK(v[i] * K[0][j] == v[j] * K[0][i]);
    }
}

TEST_CASE("Noether recursion and Fulton's algorithm agree") {
    std::mt19937_64 rng(22);
    const std::uint64_t p = 31;
    PrimeField G(p);
    int compared = 0;
    for (int i = 0; i < 300; ++i) {
        LocalPoly<PrimeField> f(G), g(G);
        for (int k = 0; k < 4; ++k) {
            int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
            if (a + b == 0) continue;
            f.add({a, b}, Fp(1 + rng() % (p - 1), p));
        }
        for (int k = 0; k < 4; ++k) {
            int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
            if (a + b == 0) continue;
            g.add({a, b}, Fp(1 + rng() % (p - 1), p));
        }
        if (f.is_zero() || g.is_zero()) continue;
        int n = -1, m = -2;
        try {
            n = local_intersection(f, g);
            m = fulton_intersection(f, g);
        } catch (const std::exception&) {
            continue;  // common component or irrational tangent
        }
        CHECK(n == m);
        ++compared;
    }
    CHECK(compared > 100);
    // I(y - x^2, y) = 2, I(y^2 - x^3, y - x^2) = 3, I(y^2 - x^3, y^2 - x^4) = 6
    LocalPoly<PrimeField> a(G), b(G);
    a.add({0, 1}, Fp(1, p));
    a.add({2, 0}, Fp::of(-1, p));
    b.add({0, 1}, Fp(1, p));
    CHECK(local_intersection(a, b) == 2);
    LocalPoly<PrimeField> cusp(G), tac(G);
    cusp.add({0, 2}, Fp(1, p));
    cusp.add({3, 0}, Fp::of(-1, p));
    tac.add({0, 2}, Fp(1, p));
    tac.add({4, 0}, Fp::of(-1, p));
    CHECK(fulton_intersection(cusp, b) == 3);
    CHECK(local_intersection(cusp, tac) == 6);
}

TEST_CASE("Bezout totals and rational points against an exhaustive scan") {
    std::mt19937_64 rng(23);
    const std::uint64_t p = 31;
    for (int i = 0; i < 30; ++i) {
        auto f = random_form(rng, p, 2), g = random_form(rng, p, 3);
        IntersectionResult res;
        try {
            res = intersection_points(f, g);
        } catch (const std::exception&) {
            continue;
        }
        CHECK(res.total() == 6);
        std::set<std::array<std::uint64_t, 3>> got, scan;
        for (const auto& ip : res.points) {
            CHECK(ip.multiplicity >= 1);
            auto n = normalize_point(ip.point);
            got.insert({n[0].v, n[1].v, n[2].v});
        }
        for (std::uint64_t x = 0; x < p; ++x)
            for (std::uint64_t y = 0; y < p; ++y)
                for (std::uint64_t z = 0; z < p; ++z) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    Point<PrimeField> X{Fp(x, p), Fp(y, p), Fp(z, p)};
                    if (!f.evaluate(X).is_zero() || !g.evaluate(X).is_zero()) continue;
                    auto n = normalize_point(X);
                    scan.insert({n[0].v, n[1].v, n[2].v});
                }
        CHECK(got == scan);
    }
}

TEST_CASE("genus from multiplicity sequences") {
    auto r = genus_deficit(8, {{4}, {3, 3}, {2, 2}, {2, 2}, {2, 2}, {2, 2}});
    CHECK(r.arithmetic == 21);
    CHECK(r.deficit == 20);
    CHECK(r.geometric == 1);
    CHECK(genus_deficit(3, {{2}}).geometric == 0);
    CHECK(genus_deficit(4, {}).geometric == 3);
}

TEST_CASE("line components through a point") {
    // x (y^2 - x z) contains the line x = 0 through the origin
    auto reducible = form(3, {{{1, 2, 0}, 1}, {{2, 0, 1}, -1}});
    auto irreducible = form(3, {{{0, 2, 1}, 1}, {{3, 0, 0}, -1}});
    CHECK(line_component_through(reducible, origin));
    CHECK(!line_component_through(irreducible, origin));
    CHECK(!tangent_lines_not_components(reducible, {origin}));
    CHECK(tangent_lines_not_components(irreducible, {origin}));
    // but the cusp's tangent line is not a component even though it meets it three times
    Point<PrimeField> other{Fp(1, P), Fp(1, P), Fp(1, P)};
    CHECK(tangent_lines_not_components(irreducible, {origin, other}));
}
