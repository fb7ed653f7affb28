#pragma once

#include "godeaux/singular.hpp"

#include <array>
#include <string>
#include <vector>

namespace godeaux {

// The conic gamma(s,t) = (s^2 + c t^2, st + f t^2, s^2 + t^2) and the six
// base points p, p1, ..., p5 of the octic.  Everything is generic in the
// coefficient field so the same pipeline runs over the tower and mod p.
template <class Field>
struct CampedelliGeometry {
    using Elem = typename Field::Elem;
    Field F;
    Elem c, f;
    ConicParametrization<Field> gamma;
    Form<Field> Q;
    std::array<Point<Field>, 6> pts;
    // tangent lines: [1] at p1 (x = 0), [2..5] the tangents to Q
    std::array<std::optional<Point<Field>>, 6> tangents;
};

inline Tower campedelli_c() { return (Tower(5) + Tower(2) * Tower::alpha() + Tower(2) * Tower::beta()) * Tower(Rational(1, 3)); }
inline Tower campedelli_f() { return Tower::delta() * Tower(Rational(1, 2)); }

template <class Field>
CampedelliGeometry<Field> campedelli_geometry(Field F, typename Field::Elem c, typename Field::Elem f,
                                              const Point<Field>& p1_tangent) {
    using Elem = typename Field::Elem;
    CampedelliGeometry<Field> g;
    g.F = F;
    g.c = c;
    g.f = f;
    const Elem z = F.zero(), o = F.one();
    g.gamma.k = {o, z, c, z, o, f, o, z, o};
    // ((c-1) y - f (x - z))^2 - (c z - x)(x - z)
    auto X = linear_form<Field>(F, {o, z, z});
    auto Y = linear_form<Field>(F, {z, o, z});
    auto Z = linear_form<Field>(F, {z, z, o});
    auto cm1 = c - o;
    auto a = Y.scaled(cm1) + (X + (-Z)).scaled(-f);
    g.Q = a * a + (-((Z.scaled(c) + (-X)) * (X + (-Z))));
    g.pts[0] = {o, z, z};
    g.pts[1] = {z, o, z};
    g.pts[2] = g.gamma.at(F, z, o);
    g.pts[3] = g.gamma.at(F, o, z);
    g.pts[4] = g.gamma.at(F, o, o);
    g.pts[5] = g.gamma.at(F, -o, o);
    g.tangents[1] = p1_tangent;
    for (int i = 2; i < 6; ++i) g.tangents[i] = gradient_at(g.Q, g.pts[i]);
    return g;
}

inline const char* campedelli_point_name(int i) {
    static const char* names[] = {"p", "p1", "p2", "p3", "p4", "p5"};
    return names[i];
}

template <class Field>
std::vector<SingularitySpec<Field>> campedelli_octic_specs(const CampedelliGeometry<Field>& g, bool cusps_at_p45) {
    std::vector<SingularitySpec<Field>> out;
    auto add = [&](int i, SingKind k, int m) {
        SingularitySpec<Field> s;
        s.kind = k;
        s.multiplicity = m;
        s.at.base = g.pts[i];
        s.tangent = g.tangents[i];
        s.label = campedelli_point_name(i);
        out.push_back(s);
    };
    add(0, SingKind::Ordinary, 4);
    add(1, SingKind::InfinitelyNearTriple, 3);
    add(2, SingKind::Tacnode, 2);
    add(3, SingKind::Tacnode, 2);
    add(4, cusps_at_p45 ? SingKind::Cusp : SingKind::Tacnode, 2);
    add(5, cusps_at_p45 ? SingKind::Cusp : SingKind::Tacnode, 2);
    return out;
}

// Coefficient of u^3 in the tangent frame at p4 and p5: the single row a
// tacnode has beyond the cusp rows.
template <class Field>
std::array<typename Field::Elem, 2> residual_rows_at(const CampedelliGeometry<Field>& g, const Form<Field>& octic) {
    std::array<typename Field::Elem, 2> out;
    for (int i = 4; i < 6; ++i) {
        auto fr = make_frame(g.F, g.pts[i], g.tangents[i]);
        out[i - 4] = local_expansion(octic, fr).coeff(3, 0);
    }
    return out;
}

template <class Field>
struct OcticSystem {
    ConditionMatrix<Field> base;           // p and p1
    std::vector<std::vector<typename Field::Elem>> free_basis;  // kernel of the base rows
    ConditionMatrix<Field> extra;          // p2, p3 tacnodes and p4, p5 cusps
    Matrix<Field> reduced;                 // extra rows restricted to the free coefficients
    std::size_t reduced_rank = 0;
    std::vector<typename Field::Elem> minors;
    Form<Field> octic;
    // the rows upgrading the cusps at p4, p5 to tacnodes, applied to the octic
    std::array<typename Field::Elem, 2> residuals;
};

template <class Field>
OcticSystem<Field> assemble_octic_system(const CampedelliGeometry<Field>& g) {
    const Field& F = g.F;
    auto specs = campedelli_octic_specs(g, true);
    OcticSystem<Field> sys;
    sys.base = stack(F, 8, std::vector<ConditionMatrix<Field>>{build_condition_rows(F, 8, specs[0]),
                                                               build_condition_rows(F, 8, specs[1])});
    sys.free_basis = kernel_basis(sys.base.rows);
    std::vector<ConditionMatrix<Field>> parts;
    for (int i = 2; i < 6; ++i) parts.push_back(build_condition_rows(F, 8, specs[i]));
    sys.extra = stack(F, 8, parts);
    const std::size_t n = sys.free_basis.size();
    sys.reduced = Matrix<Field>(F, sys.extra.rows.rows, n);
    for (std::size_t i = 0; i < sys.extra.rows.rows; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto s = F.zero();
            for (std::size_t k = 0; k < sys.extra.rows.cols; ++k)
                if (!F.is_zero(sys.extra.rows(i, k)) && !F.is_zero(sys.free_basis[j][k]))
                    s = s + sys.extra.rows(i, k) * sys.free_basis[j][k];
            sys.reduced(i, j) = s;
        }
    sys.reduced_rank = rank(sys.reduced);
    sys.minors = kernel_via_signed_minors(sys.reduced);
    std::vector<typename Field::Elem> coeffs(monomial_count(8), F.zero());
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (!F.is_zero(sys.free_basis[j][k])) coeffs[k] = coeffs[k] + sys.minors[j] * sys.free_basis[j][k];
    sys.octic = Form<Field>::from_vector(F, 8, coeffs);
    sys.residuals = residual_rows_at(g, sys.octic);
    return sys;
}

}  // namespace godeaux
