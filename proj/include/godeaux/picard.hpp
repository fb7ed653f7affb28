#pragma once

#include "godeaux/singular.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace godeaux {

struct Center {
    std::string name;
    int parent = -1;  // index of the center this one is infinitely near to
};

struct BlowupConfig {
    std::vector<Center> centers;
    int size() const { return static_cast<int>(centers.size()); }
    int index(const std::string& name) const;
    std::vector<int> children(int j) const;
    int depth(int j) const;
};

// d h + sum c_j e_j in the orthogonal basis of total transforms.
struct DivClass {
    int d = 0;
    std::vector<int> c;

    static DivClass zero(int n) { return {0, std::vector<int>(n, 0)}; }
    static DivClass hyperplane(int n) { return {1, std::vector<int>(n, 0)}; }
    static DivClass exceptional(int n, int j);

    friend DivClass operator+(const DivClass& a, const DivClass& b);
    friend DivClass operator-(const DivClass& a, const DivClass& b);
    friend DivClass operator*(int k, const DivClass& a);
    friend bool operator==(const DivClass& a, const DivClass& b) { return a.d == b.d && a.c == b.c; }
    friend bool operator!=(const DivClass& a, const DivClass& b) { return !(a == b); }
};

int intersect(const DivClass& a, const DivClass& b);
DivClass canonical_class(const BlowupConfig& cfg);

// Proper transform of the j-th exceptional curve: e_j minus its children.
DivClass proper_exceptional(const BlowupConfig& cfg, int j);

// d h - sum m_j e_j.
DivClass strict_transform_class(const BlowupConfig& cfg, int d, const std::map<std::string, int>& mult);

std::string class_str(const BlowupConfig& cfg, const DivClass& a);

// Symbolic names (proper and total transforms mixed), mapped to orthogonal classes.
struct CurveClassTable {
    BlowupConfig config;
    std::map<std::string, DivClass> named;
    std::vector<std::string> exceptional;  // names of proper exceptional curves

    const DivClass& at(const std::string& name) const;
    // Sum of named symbols with integer weights, e.g. {{"H", 2}, {"E", -1}}.
    DivClass combine(const std::vector<std::pair<std::string, int>>& terms) const;
};

CurveClassTable campedelli_table();
CurveClassTable oort_peters_table();

struct FixedPartResult {
    DivClass mobile;
    std::map<std::string, int> fixed;  // proper exceptional name -> multiplicity
};

FixedPartResult remove_fixed_exceptional_parts(const DivClass& a, const CurveClassTable& table);

struct CoverInvariants {
    int KX2 = 0;
    int Kmin2 = 0;
    int pg = 0;
    int q = 0;
    int P2 = 0;
    int chi = 0;
    int h0_2K_plus_L = 0;
    int h0_2K_plus_2L = 0;
};

// A plane realization of a config: for every root center a point, and for a
// center with children the tangent line that carries the first child.  A
// grandchild sits in chart direction (1, lambda2) of the child's blow-up.
template <class Field>
struct PlaneRealization {
    using Elem = typename Field::Elem;
    Field F;
    std::map<int, Point<Field>> point;
    std::map<int, Point<Field>> tangent;
    std::map<int, Elem> lambda2;
};

// The plane linear system of |a| once fixed exceptional parts are removed:
// degree and condition rows.  Degree -1 means the system is empty.
template <class Field>
std::pair<int, ConditionMatrix<Field>> plane_system(const DivClass& a, const CurveClassTable& table,
                                                    const PlaneRealization<Field>& real) {
    const auto& cfg = table.config;
    auto mob = remove_fixed_exceptional_parts(a, table).mobile;
    if (mob.d < 0) return {-1, {}};
    std::vector<ConditionMatrix<Field>> parts;
    for (int j = 0; j < cfg.size(); ++j) {
        if (cfg.centers[j].parent != -1) continue;
        ClusterSpec<Field> cs;
        cs.point = real.point.at(j);
        cs.label = cfg.centers[j].name;
        cs.m0 = std::max(0, -mob.c[j]);
        auto kids = cfg.children(j);
        if (kids.size() > 1) throw std::invalid_argument("more than one infinitely near center at a point");
        if (!kids.empty()) {
            int k = kids[0];
            cs.m1 = std::max(0, -mob.c[k]);
            auto grand = cfg.children(k);
            if (grand.size() > 1) throw std::invalid_argument("branching clusters are not supported");
            if (!grand.empty()) {
                if (!cfg.children(grand[0]).empty()) throw std::invalid_argument("clusters deeper than two");
                cs.m2 = std::max(0, -mob.c[grand[0]]);
                if (cs.m2 > 0) cs.lambda2 = real.lambda2.at(k);
            }
            if (cs.m1 > 0) cs.tangent = real.tangent.at(j);
        }
        if (cs.m1 > cs.m0 || cs.m2 > cs.m1) throw std::invalid_argument("cluster violates proximity after unloading");
        if (cs.m0 == 0) continue;
        parts.push_back(cluster_rows(real.F, mob.d, cs));
    }
    return {mob.d, stack(real.F, mob.d, parts)};
}

// Vector-space dimension of |a|.
template <class Field>
int h0_of_class(const DivClass& a, const CurveClassTable& table, const PlaneRealization<Field>& real) {
    auto [d, sys] = plane_system(a, table, real);
    if (d < 0) return 0;
    return monomial_count(d) - static_cast<int>(rank(sys.rows));
}

// K_X^2 = 2 (K + L)^2, K_min^2 = K_X^2 + contracted, p_g = h0(K + L),
// P2 = h0(2K + 2L) + h0(2K + L), q = 0 whenever p_g = 0 (q <= p_g).
template <class Field>
CoverInvariants double_cover_invariants(const DivClass& K, const DivClass& L, int contracted,
                                        const CurveClassTable& table, const PlaneRealization<Field>& real) {
    CoverInvariants inv;
    auto KL = K + L;
    inv.KX2 = 2 * intersect(KL, KL);
    inv.Kmin2 = inv.KX2 + contracted;
    inv.pg = h0_of_class(KL, table, real);
    inv.q = inv.pg == 0 ? 0 : -1;  // -1: not determined by q <= p_g
    inv.h0_2K_plus_L = h0_of_class(2 * K + L, table, real);
    inv.h0_2K_plus_2L = h0_of_class(2 * K + 2 * L, table, real);
    inv.P2 = inv.h0_2K_plus_2L + inv.h0_2K_plus_L;
    inv.chi = 1 + inv.pg - inv.q;
    return inv;
}

}  // namespace godeaux
