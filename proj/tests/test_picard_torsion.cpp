#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "godeaux/asset.hpp"
#include "godeaux/campedelli.hpp"
#include "godeaux/torsion.hpp"
#include "properties.hpp"

using namespace godeaux;

namespace {

DivClass sum_of(const CurveClassTable& t, const std::string& stem, int from, int to) {
    auto a = DivClass::zero(t.config.size());
    for (int i = from; i <= to; ++i) a = a + t.at(stem + std::to_string(i));
    return a;
}

Form<RationalField> rational_asset(const std::string& name) {
    auto a = load_named_asset(default_asset_dir(), name);
    return map_coefficients(*a.tower, RationalField{}, [](const Tower& t) { return t.rational_part(); });
}

// The Campedelli points reduced at 30047, placed on the blow-up configuration.
PlaneRealization<PrimeField> campedelli_mod_p(const BlowupConfig& cfg) {
    auto phi = embed_tower(30047);
    PrimeField F(30047);
    Point<PrimeField> x_line{F.one(), F.zero(), F.zero()};
    auto g = campedelli_geometry(F, phi(campedelli_c()), phi(campedelli_f()), x_line);
    PlaneRealization<PrimeField> real;
    real.F = F;
    real.point[cfg.index("e")] = g.pts[0];
    for (int i = 1; i <= 5; ++i) {
        int j = cfg.index("e" + std::to_string(i));
        real.point[j] = g.pts[i];
        real.tangent[j] = *g.tangents[i];
    }
    return real;
}

}  // namespace

TEST_CASE("pairing on the blow-up lattice") {
    auto r = props::lattice_suite(300, 51);
    CHECK_MESSAGE(r.ok, r.detail);
    BlowupConfig cfg;
    cfg.centers = {{"e", -1}, {"f", 0}};
    auto h = DivClass::hyperplane(2), e = DivClass::exceptional(2, 0), f = DivClass::exceptional(2, 1);
    CHECK(intersect(h, h) == 1);
    CHECK(intersect(e, e) == -1);
    CHECK(intersect(e, f) == 0);
    CHECK(intersect(proper_exceptional(cfg, 0), proper_exceptional(cfg, 0)) == -2);
    CHECK(canonical_class(cfg) == -3 * h + e + f);
    CHECK(class_str(cfg, h) == "h");
    CHECK(class_str(cfg, -1 * h) == "-h");
}

TEST_CASE("Campedelli classes") {
    auto t = campedelli_table();
    auto K = t.at("K"), L = t.at("L"), H = t.at("H");
    CHECK(intersect(K, K) == -2);
    CHECK(2 * intersect(K + L, K + L) == -4);
    CHECK(t.at("B") == t.at("Cbar") + t.at("Qbar") + sum_of(t, "E", 1, 5));
    // the strict transforms of C and Q are disjoint from each other after blowing up
    CHECK(intersect(t.at("Cbar"), t.at("Qbar")) == 0);
    // p_a(C) after resolution is 1: (C + K) C / 2 + 1
    auto C = t.at("Cbar");
    CHECK((intersect(C, C) + intersect(C, K)) / 2 + 1 == 1);
    CHECK(intersect(H, H) == 1);
}

TEST_CASE("Campedelli fixed parts") {
    auto t = campedelli_table();
    auto K = t.at("K"), L = t.at("L"), H = t.at("H"), e = t.at("e");
    auto E = sum_of(t, "e", 1, 5), Fs = sum_of(t, "f", 1, 5);
    auto kl = remove_fixed_exceptional_parts(K + L, t);
    CHECK(kl.mobile == 2 * H - e - E);
    CHECK(kl.fixed.size() == 5);
    auto two = remove_fixed_exceptional_parts(2 * K + 2 * L, t);
    CHECK(two.mobile == 4 * H - 2 * e - E - Fs);
    for (const auto& [n, m] : two.fixed) {
        CHECK(n[0] == 'E');
        CHECK(m == 1);
    }
    auto three = remove_fixed_exceptional_parts(3 * K + 3 * L, t);
    CHECK(three.mobile == 6 * H - 3 * e - 2 * E - Fs);
    for (const auto& [n, m] : three.fixed) CHECK(m == 2);
}

TEST_CASE("Campedelli invariants from plane systems mod p") {
    auto t = campedelli_table();
    auto real = campedelli_mod_p(t.config);
    auto inv = double_cover_invariants(t.at("K"), t.at("L"), 5, t, real);
    CHECK(inv.KX2 == -4);
    CHECK(inv.Kmin2 == 1);
    CHECK(inv.pg == 0);
    CHECK(inv.q == 0);
    CHECK(inv.P2 == 2);
    CHECK(inv.chi == 1);
    // |3K + 3L| is the tricanonical pencil
    CHECK(h0_of_class(3 * t.at("K") + 3 * t.at("L"), t, real) == 2);
    CHECK(h0_of_class(t.at("H"), t, real) == 3);
}

TEST_CASE("Beauville kernel for the Campedelli branch curve") {
    auto t = campedelli_table();
    std::vector<BranchComponent> comps = {{"Cbar", t.at("Cbar")}, {"Qbar", t.at("Qbar")}};
    for (int i = 1; i <= 5; ++i) comps.push_back({"E" + std::to_string(i), t.at("E" + std::to_string(i))});
    auto bv = beauville_kernel(comps, t.at("B"));
    CHECK(bv.kernel_rank == 2);
    CHECK(bv.quotient_rank == 1);
    REQUIRE(bv.representatives.size() == 1);
    const auto& r = bv.representatives[0];
    CHECK(r.subset == std::vector<std::string>{"Qbar", "E2", "E3", "E4", "E5"});
    CHECK(2 * r.half == r.sum);
    CHECK(r.half == t.at("H") - sum_of(t, "f", 2, 5));
}

TEST_CASE("Beauville kernel on small configurations") {
    const int n = 1;
    auto h = DivClass::hyperplane(n), e1 = DivClass::exceptional(n, 0);
    // one even curve besides an odd pair
    std::vector<BranchComponent> comps = {{"A", 2 * h - 2 * e1}, {"B", h}, {"C", h}};
    auto bv = beauville_kernel(comps, 4 * h - 2 * e1);
    CHECK(bv.quotient_rank == 1);
    REQUIRE(bv.representatives.size() == 1);
    CHECK(bv.representatives[0].subset == std::vector<std::string>{"A"});
    CHECK(bv.representatives[0].half == h - e1);
    // two odd lines: only the full sum
    CHECK(beauville_kernel({{"B", h}, {"C", h}}, 2 * h).quotient_rank == 0);
    CHECK_THROWS_AS(beauville_kernel({{"B", h}}, 2 * h), TorsionInputError);
    CHECK_THROWS_AS(beauville_kernel({}, 2 * h), TorsionInputError);
}

TEST_CASE("half classes") {
    CHECK(half_class(DivClass{2, {-4, 0}}) == DivClass{1, {-2, 0}});
    CHECK(!half_class(DivClass{2, {-3, 0}}).has_value());
    CHECK(!half_class(DivClass{1, {0}}).has_value());
}

TEST_CASE("Miyaoka table for cyclic groups of order up to five") {
    auto rows = small_torsion_table();
    REQUIRE(rows.size() == 5);
    // brute force over Z/n: #{t : 2t != 0} / 2
    for (int n = 1; n <= 5; ++n) {
        int count = 0;
        for (int a = 0; a < n; ++a) count += (2 * a) % n != 0;
        CHECK(rows[n - 1].miyaoka == count / 2);
        CHECK(rows[n - 1].two_rank == (n % 2 == 0 ? 1 : 0));
    }
    CHECK(miyaoka_conclusion(1, 0) == "Z/2");
    CHECK(miyaoka_conclusion(1, 1) == "Z/4");
    CHECK(miyaoka_conclusion(0, 1) == "Z/3");
    CHECK(miyaoka_conclusion(0, 2) == "Z/5");
    CHECK_THROWS_AS(miyaoka_conclusion(1, 2), TorsionInputError);
    CHECK_THROWS_AS(miyaoka_conclusion(2, 0), TorsionInputError);
}

TEST_CASE("Oort-Peters classes") {
    auto t = oort_peters_table();
    auto K = t.at("K");
    CHECK(2 * intersect(K + t.at("L"), K + t.at("L")) == -4);
    CHECK(t.at("B1") == 2 * t.at("L1"));
    CHECK(t.at("B") == t.at("B1") + t.at("B2"));
    CHECK(intersect(t.at("G1"), t.at("G1")) == -1);
    CHECK(intersect(t.at("F1"), t.at("F1")) == -2);
}

TEST_CASE("bicanonical pencil detects a shared factor") {
    auto t = oort_peters_table();
    auto Q1 = rational_asset("op_q1"), Q2 = rational_asset("op_q2"), C2 = rational_asset("op_c2");
    auto target = t.at("H");
    PencilMember a{"a", {{"Q1", Q1}, {"Q2", Q2}}, {{"F1", 1}}, target};
    PencilMember b{"b", {{"C2", C2}}, {{"E6", 1}}, target};
    auto ok = bicanonical_pencil_check(a, b, target);
    CHECK(ok.first_class_matches);
    CHECK(ok.no_fixed_part());
    PencilMember doctored{"d", {{"Q1", Q1}, {"C2", C2}}, {{"F1", 2}}, target - t.at("E6")};
    auto bad = bicanonical_pencil_check(a, doctored, target);
    CHECK(!bad.second_class_matches);
    // reported once from each side
    CHECK(bad.shared_factors == std::vector<std::string>{"Q1", "Q1"});
    CHECK(bad.shared_exceptional == std::vector<std::string>{"F1"});
    CHECK(!bad.no_fixed_part());
}

TEST_CASE("quadric relation on the shipped Oort-Peters forms") {
    OortPetersForms f{rational_asset("op_q1"), rational_asset("op_q2"), rational_asset("op_c1"),
                      rational_asset("op_c2"), rational_asset("op_q"), {}, {}};
    auto lines = load_named_asset(default_asset_dir(), "op_lines");
    for (const auto& [n, g] : lines.components) {
        auto r = map_coefficients(g, RationalField{}, [](const Tower& x) { return x.rational_part(); });
        if (n == "ell") f.ell = r;
        if (n == "ell_tilde") f.ell_tilde = r;
    }
    auto rel = solve_quadric_relation(f);
    CHECK(rel.holds());
    CHECK(rel.t == 1);
    CHECK(rel.u == 1);
    CHECK(rel.v == 1);
    CHECK(rel.T == rel.t * rel.t);
    // perturbing one conic destroys the relation
    f.Q.add_term({0, 0, 2}, Rational(1));
    CHECK(!solve_quadric_relation(f).holds());
}
