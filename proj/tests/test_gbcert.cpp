#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "godeaux/gbcert.hpp"
#include "properties.hpp"

using namespace godeaux;
using namespace godeaux::gb;

namespace {

const std::uint64_t P = 101;
const Ring R(3, P);

Poly x() { return poly_var(R, 0); }
Poly y() { return poly_var(R, 1); }
Poly z() { return poly_var(R, 2); }
Poly mul(const Poly& a, const Poly& b) { return poly_mul(R, a, b); }

Form<PrimeField> form(std::uint64_t p, int d, std::initializer_list<std::pair<Exps, long long>> ts) {
    Form<PrimeField> f(PrimeField(p), d);
    for (const auto& [e, v] : ts) f.add_term(e, Fp::of(v, p));
    return f;
}

// F_p-rational singular points by exhaustive search.
std::vector<Point<PrimeField>> singular_points(const Form<PrimeField>& f) {
    std::uint64_t p = f.F.p;
    std::vector<Point<PrimeField>> out;
    auto fx = f.partial(0), fy = f.partial(1), fz = f.partial(2);
    auto consider = [&](Point<PrimeField> X) {
        if (f.evaluate(X).is_zero() && fx.evaluate(X).is_zero() && fy.evaluate(X).is_zero() &&
            fz.evaluate(X).is_zero())
            out.push_back(X);
    };
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) consider({Fp(a, p), Fp(b, p), Fp(1, p)});
    for (std::uint64_t a = 0; a < p; ++a) consider({Fp(a, p), Fp(1, p), Fp(0, p)});
    consider({Fp(1, p), Fp(0, p), Fp(0, p)});
    return out;
}

}  // namespace

TEST_CASE("trivial bases") {
    auto G = groebner_basis(R, {x(), y(), z()});
    CHECK(G.polys.size() == 3);
    CHECK(!G.is_unit());
    CHECK(groebner_basis(R, {poly_constant(R, 7)}).is_unit());
    CHECK(groebner_basis(R, {x(), poly_add(R, x(), poly_constant(R, 1))}).is_unit());
    CHECK(contains(G, mul(x(), y())));
    CHECK(!contains(G, poly_constant(R, 1)));
    CHECK(buchberger_criterion(G));
}

TEST_CASE("membership agrees with the Macaulay matrix oracle") {
    auto r = props::macaulay_suite(50, 31);
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("ideal operations on monomial examples") {
    // <x> cap <y> = <xy>
    auto I = intersect(R, {x()}, {y()});
    CHECK(same_ideal(I, groebner_basis(R, {mul(x(), y())})));
    // <x y> : x = <y>
    CHECK(same_ideal(quotient(R, {mul(x(), y())}, x()), groebner_basis(R, {y()})));
    // <x^2 y> : x^inf = <y>
    CHECK(same_ideal(saturate_by(R, {mul(mul(x(), x()), y())}, x()), groebner_basis(R, {y()})));
    // <xy, xz> : <y, z>^inf = <x>
    auto S = saturation(R, {mul(x(), y()), mul(x(), z())}, {y(), z()});
    CHECK(same_ideal(S, groebner_basis(R, {x()})));
    // saturating again changes nothing
    CHECK(same_ideal(saturation(R, S.polys, {y(), z()}), S));
}

TEST_CASE("saturation is stable on random ideals") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 15; ++i) {
        auto f = props::random_homogeneous(R, 2, rng, 3), g = props::random_homogeneous(R, 3, rng, 3);
        if (f.is_zero() || g.is_zero()) continue;
        auto S = saturate_by(R, {f, g}, x());
        auto T = saturate_by(R, S.polys, x());
        CHECK(same_ideal(S, T));
        // the saturation contains the ideal
        CHECK(contains(S, f));
        CHECK(contains(S, g));
    }
}

TEST_CASE("exact division") {
    auto a = poly_add(R, x(), y()), b = poly_add(R, mul(x(), z()), poly_constant(R, 3));
    auto q = exact_divide(R, mul(a, b), a);
    REQUIRE(q.has_value());
    CHECK(poly_sub(R, *q, b).is_zero());
    CHECK(!exact_divide(R, poly_add(R, mul(a, b), poly_constant(R, 1)), a).has_value());
}

TEST_CASE("points ideal vanishes exactly on its points") {
    std::vector<Point<PrimeField>> pts = {{Fp(1, P), Fp(0, P), Fp(0, P)},
                                          {Fp(0, P), Fp(1, P), Fp(0, P)},
                                          {Fp(1, P), Fp(2, P), Fp(3, P)},
                                          {Fp(5, P), Fp(7, P), Fp(1, P)}};
    auto I = points_ideal(R, pts);
    for (const auto& g : I)
        for (const auto& X : pts) CHECK(poly_eval(R, g, {X[0].v, X[1].v, X[2].v}) == 0);
    // some generator is nonzero at a fifth point
    bool separates = false;
    for (const auto& g : I) separates = separates || poly_eval(R, g, {2, 2, 1}) != 0;
    CHECK(separates);
    CHECK_THROWS(points_ideal(R, {pts[0], pts[0]}));
}

TEST_CASE("nodal cubic: certificate against an exhaustive singular point scan") {
    // y^2 z = x^3 + x^2 z, node at [0:0:1]
    auto f = form(P, 3, {{{0, 2, 1}, 1}, {{3, 0, 0}, -1}, {{2, 0, 1}, -1}});
    auto sing = singular_points(f);
    REQUIRE(sing.size() == 1);
    CHECK(sing[0][0].is_zero());
    CHECK(sing[0][1].is_zero());
    CHECK(!certify_smooth_outside(f, {}).smooth_outside);
    auto cert = certify_smooth_outside(f, sing);
    CHECK(cert.smooth_outside);
    CHECK(cert.ideal_generators == 2);
    // excluding the wrong point does not help
    CHECK(!certify_smooth_outside(f, {{Fp(1, P), Fp(0, P), Fp(0, P)}}).smooth_outside);
}

TEST_CASE("smooth curves certify with nothing excluded") {
    auto fermat3 = form(P, 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}});
    auto fermat4 = form(P, 4, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}});
    CHECK(singular_points(fermat3).empty());
    CHECK(certify_smooth_outside(fermat3, {}).smooth_outside);
    CHECK(certify_smooth_outside(fermat4, {}).smooth_outside);
}

TEST_CASE("random cubics: a rational singular point always blocks the certificate") {
    std::mt19937_64 rng(43);
    const std::uint64_t p = 13;
    int singular = 0;
    for (int i = 0; i < 40; ++i) {
        Form<PrimeField> f(PrimeField(p), 3);
        for (const auto& e : monomials(3)) f.set(e, Fp(rng() % p, p));
        if (i % 2 == 0) {
            // force a node at [0:0:1]: no z^3, x z^2, y z^2
            for (Exps e : {Exps{0, 0, 3}, Exps{1, 0, 2}, Exps{0, 1, 2}}) f.set(e, Fp(0, p));
        }
        if (f.is_zero()) continue;
        auto sing = singular_points(f);
        auto cert = certify_smooth_outside(f, {});
        if (!sing.empty()) {
            ++singular;
            CHECK(!cert.smooth_outside);
        }
    }
    CHECK(singular >= 20);
}
