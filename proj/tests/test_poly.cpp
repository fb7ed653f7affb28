#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "godeaux/asset.hpp"
#include "godeaux/poly.hpp"
#include "properties.hpp"

#include <filesystem>
#include <fstream>

using namespace godeaux;

namespace {

const PrimeField F101(101);

Form<PrimeField> random_form(std::mt19937_64& rng, int d, int terms = 6) {
    Form<PrimeField> f(F101, d);
    auto ms = monomials(d);
    for (int i = 0; i < terms; ++i) f.add_term(ms[rng() % ms.size()], Fp(rng() % 101, 101));
    return f;
}

Form<RationalField> to_rational(const Form<TowerField>& f) {
    return map_coefficients(f, RationalField{}, [](const Tower& t) { return t.rational_part(); });
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("monomial counts") {
    for (int d = 0; d < 10; ++d) {
        CHECK(monomial_count(d) == (d + 1) * (d + 2) / 2);
        CHECK(static_cast<int>(monomials(d).size()) == monomial_count(d));
    }
    CHECK(monomials(2).front() == Exps{2, 0, 0});
}

TEST_CASE("form ring axioms over F_101") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        auto f = random_form(rng, 2), g = random_form(rng, 3), h = random_form(rng, 3);
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(g - g == Form<PrimeField>(F101, 3));
    }
}

TEST_CASE("partial derivatives commute and obey Leibniz") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 40; ++i) {
        auto f = random_form(rng, 4), g = random_form(rng, 3);
        for (int a = 0; a < 3; ++a) {
            auto fg = f * g;
            if (fg.is_zero()) continue;
            CHECK(fg.partial(a) == f.partial(a) * g + f * g.partial(a));
            for (int b = 0; b < 3; ++b) CHECK(f.partial(a).partial(b) == f.partial(b).partial(a));
        }
    }
}

TEST_CASE("Euler identity on every shipped curve") {
    auto r = props::euler_suite();
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("exact division recovers the cofactor") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        auto f = random_form(rng, 3), g = random_form(rng, 2);
        if (f.is_zero() || g.is_zero()) continue;
        auto q = exact_quotient(f * g, g);
        REQUIRE(q.has_value());
        CHECK(*q == f);
        CHECK(divides(g, f * g));
    }
    // x^2 + y^2 + z^2 is not a multiple of x
    Form<PrimeField> x = Form<PrimeField>::monomial(F101, {1, 0, 0}, Fp(1, 101));
    Form<PrimeField> s(F101, 2);
    for (Exps e : {Exps{2, 0, 0}, Exps{0, 2, 0}, Exps{0, 0, 2}}) s.set(e, Fp(1, 101));
    CHECK(!divides(x, s));
}

TEST_CASE("evaluation is multiplicative and homogeneous") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 40; ++i) {
        auto f = random_form(rng, 3), g = random_form(rng, 2);
        Point<PrimeField> P{Fp(rng() % 101, 101), Fp(rng() % 101, 101), Fp(1 + rng() % 100, 101)};
        CHECK((f * g).evaluate(P) == f.evaluate(P) * g.evaluate(P));
        Fp k(3, 101);
        Point<PrimeField> kP{k * P[0], k * P[1], k * P[2]};
        CHECK(f.evaluate(kP) == f.evaluate(P) * k.pow(3));
    }
}

TEST_CASE("resultant vanishes exactly at shared points") {
    std::mt19937_64 rng(9);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        auto f = random_form(rng, 2), g = random_form(rng, 2);
        Point<PrimeField> P{Fp(rng() % 101, 101), Fp(rng() % 101, 101), Fp(1, 101)};
        // force P onto both curves through the constant-in-x-free part
        f.add_term({0, 0, 2}, -f.evaluate(P));
        g.add_term({0, 0, 2}, -g.evaluate(P));
        if (f.is_zero() || g.is_zero() || f.coeff({2, 0, 0}).is_zero() || g.coeff({2, 0, 0}).is_zero()) continue;
        auto R = resultant(f, g, 0);
        CHECK(R.degree == 4);
        CHECK(R.eval(P[1], P[2]).is_zero());
        ++checked;
    }
    CHECK(checked > 20);
    // two lines x - y and x - 2z meet at [2:2:1]; eliminating x leaves y - 2z up to sign
    Form<PrimeField> l1(F101, 1), l2(F101, 1);
    l1.set({1, 0, 0}, Fp(1, 101));
    l1.set({0, 1, 0}, Fp::of(-1, 101));
    l2.set({1, 0, 0}, Fp(1, 101));
    l2.set({0, 0, 1}, Fp::of(-2, 101));
    auto R = resultant(l1, l2, 0);
    CHECK(R.eval(Fp(2, 101), Fp(1, 101)).is_zero());
    CHECK(!R.eval(Fp(1, 101), Fp(1, 101)).is_zero());
}

TEST_CASE("composition with a conic parametrization matches pointwise evaluation") {
    std::mt19937_64 rng(10);
    ConicParametrization<PrimeField> g;
    for (auto& k : g.k) k = Fp(rng() % 101, 101);
    for (int i = 0; i < 20; ++i) {
        auto f = random_form(rng, 3);
        auto h = compose_with_parametrization(f, g);
        for (int j = 0; j < 5; ++j) {
            Fp s(rng() % 101, 101), t(rng() % 101, 101);
            if (s.is_zero() && t.is_zero()) continue;
            auto P = g.at(F101, s, t);
            if (P[0].is_zero() && P[1].is_zero() && P[2].is_zero()) continue;
            CHECK(h.eval(s, t) == f.evaluate(P));
        }
    }
}

TEST_CASE("Oort-Peters conics pass through their named points") {
    auto dir = default_asset_dir();
    auto Q1 = to_rational(*load_named_asset(dir, "op_q1").tower);
    auto Q2 = to_rational(*load_named_asset(dir, "op_q2").tower);
    auto C1 = to_rational(*load_named_asset(dir, "op_c1").tower);
    auto Q = to_rational(*load_named_asset(dir, "op_q").tower);
    Point<RationalField> P{3, 0, 2}, P1{1, 0, 1}, X{3, 0, 1};
    CHECK(Q1.evaluate(P1) == 0);
    CHECK(Q1.evaluate(P) == 0);
    CHECK(Q2.evaluate(P1) == 0);
    CHECK(C1.evaluate(P1) == 0);
    CHECK(C1.evaluate(X) == 0);
    CHECK(Q.evaluate(X) == 0);
}

TEST_CASE("shipped assets round-trip byte for byte") {
    auto dir = default_asset_dir();
    for (const auto& n : shipped_asset_names()) {
        auto text = slurp(dir + "/" + n + ".json");
        auto a = parse_curve_asset(text, n);
        auto out = serialize_curve_asset(a);
        CHECK_MESSAGE(out == text, n);
        auto again = parse_curve_asset(out, n);
        CHECK(serialize_curve_asset(again) == out);
    }
}

TEST_CASE("malformed assets are rejected") {
    auto bad = [](const std::string& s) { CHECK_THROWS_AS(parse_curve_asset(s, "t"), AssetError); };
    bad("not json");
    bad("[]");
    bad(R"({"degree": 1, "terms": []})");
    bad(R"({"degree": 1, "ring": "matrix", "terms": []})");
    bad(R"({"degree": 1, "ring": {"fp": 100}, "terms": []})");
    bad(R"({"degree": 1, "ring": {"fp": 101}, "terms": [{"exps": [1,0,0], "coeff": "101"}]})");
    bad(R"({"degree": 1, "ring": {"fp": 101}, "terms": [{"exps": [1,0,0], "coeff": 5}]})");
    bad(R"({"degree": 1, "ring": {"fp": 101}, "terms": [{"exps": [1,0,0], "coeff": "5"}, {"exps": [1,0,0], "coeff": "6"}]})");
    bad(R"({"degree": 2, "ring": {"fp": 101}, "terms": [{"exps": [1,0,0], "coeff": "5"}]})");
    bad(R"({"degree": 1, "ring": "tower", "terms": [{"exps": [1,0,0], "coeff": ["1/0","0","0","0","0","0","0","0"]}]})");
    bad(R"({"degree": 1, "ring": "tower", "terms": [{"exps": [1,0,0], "coeff": ["1","0"]}]})");

    auto zero = parse_curve_asset(R"({"degree": 2, "ring": "tower", "terms": []})", "z");
    CHECK_THROWS_AS(require_curve(zero), AssetError);
    CHECK_THROWS_AS(load_curve_asset("/nonexistent/x.json"), AssetError);
}

TEST_CASE("tower coefficient strings") {
    Tower t = Tower(Rational(3, 4)) + Tower::alpha() * Tower::delta();
    auto s = tower_to_strings(t);
    CHECK(s[0] == "3/4");
    CHECK(s[5] == "1/1");
    CHECK(tower_from_strings(std::vector<std::string>(s.begin(), s.end())) == t);
}
