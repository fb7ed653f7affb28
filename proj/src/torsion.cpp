#include "godeaux/torsion.hpp"

#include <algorithm>

namespace godeaux {

std::optional<DivClass> half_class(const DivClass& c) {
    if (c.d % 2) return std::nullopt;
    DivClass h{c.d / 2, {}};
    for (int x : c.c) {
        if (x % 2) return std::nullopt;
        h.c.push_back(x / 2);
    }
    return h;
}

namespace {

using Bits = std::vector<int>;

// Row-reduce over F_2; returns a basis of the null space of A (rows x k).
std::vector<Bits> nullspace_f2(std::vector<Bits> A, int k) {
    std::vector<int> pivcol;
    std::size_t r = 0;
    for (int c = 0; c < k && r < A.size(); ++c) {
        std::size_t piv = r;
        while (piv < A.size() && !A[piv][c]) ++piv;
        if (piv == A.size()) continue;
        std::swap(A[piv], A[r]);
        for (std::size_t i = 0; i < A.size(); ++i)
            if (i != r && A[i][c])
                for (int j = 0; j < k; ++j) A[i][j] ^= A[r][j];
        pivcol.push_back(c);
        ++r;
    }
    std::vector<Bits> out;
    for (int f = 0; f < k; ++f) {
        if (std::find(pivcol.begin(), pivcol.end(), f) != pivcol.end()) continue;
        Bits v(k, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivcol.size(); ++i)
            if (A[i][f]) v[pivcol[i]] = 1;
        out.push_back(v);
    }
    return out;
}

int rank_f2(std::vector<Bits> A, int k) { return k - static_cast<int>(nullspace_f2(std::move(A), k).size()); }

}  // namespace

BeauvilleResult beauville_kernel(const std::vector<BranchComponent>& comps, const DivClass& B) {
    if (comps.empty()) throw TorsionInputError("no branch components");
    auto total = DivClass::zero(static_cast<int>(B.c.size()));
    for (const auto& c : comps) total = total + c.cls;
    if (total != B) throw TorsionInputError("component classes do not add up to the branch class");
    const int k = static_cast<int>(comps.size());
    const int n = static_cast<int>(B.c.size());
    // one row per orthogonal coordinate
    std::vector<Bits> A(n + 1, Bits(k, 0));
    for (int i = 0; i < k; ++i) {
        A[0][i] = comps[i].cls.d & 1;
        for (int j = 0; j < n; ++j) A[j + 1][i] = comps[i].cls.c[j] & 1;
    }
    auto ker = nullspace_f2(A, k);
    BeauvilleResult res;
    res.kernel_rank = static_cast<int>(ker.size());
    // extend {e} to a basis of the kernel
    Bits e(k, 1);
    std::vector<Bits> basis{e};
    for (const auto& v : ker) {
        auto trial = basis;
        trial.push_back(v);
        if (rank_f2(trial, k) > static_cast<int>(basis.size())) basis.push_back(v);
    }
    res.quotient_rank = static_cast<int>(basis.size()) - 1;
    for (std::size_t b = 1; b < basis.size(); ++b) {
        KernelElement best;
        bool have = false;
        for (int flip = 0; flip < 2; ++flip) {
            KernelElement el;
            el.sum = DivClass::zero(n);
            for (int i = 0; i < k; ++i)
                if (basis[b][i] ^ flip) {
                    el.subset.push_back(comps[i].name);
                    el.sum = el.sum + comps[i].cls;
                }
            auto h = half_class(el.sum);
            if (!h) throw std::logic_error("kernel element without a half class");
            el.half = *h;
            if (!have || el.half.d < best.half.d) best = el;
            have = true;
        }
        res.representatives.push_back(best);
    }
    return res;
}

std::vector<GroupRow> small_torsion_table() {
    // cyclic groups of order 1..5; Z/2 + Z/2 does not occur for these surfaces
    std::vector<GroupRow> rows;
    for (int n = 1; n <= 5; ++n) {
        int non_self_inverse = 0;
        for (int t = 0; t < n; ++t)
            if ((2 * t) % n != 0) ++non_self_inverse;
        rows.push_back({"Z/" + std::to_string(n), n % 2 == 0 ? 1 : 0, non_self_inverse / 2});
    }
    return rows;
}

std::string miyaoka_conclusion(int two_rank, int base_points) {
    for (const auto& r : small_torsion_table())
        if (r.two_rank == two_rank && r.miyaoka == base_points) return r.name;
    throw TorsionInputError("no torsion group of order at most five has 2-rank " + std::to_string(two_rank) +
                            " and " + std::to_string(base_points) + " tricanonical base points");
}

namespace {

Form<RationalField> product(const std::vector<std::pair<std::string, Form<RationalField>>>& fs) {
    if (fs.empty()) throw TorsionInputError("pencil member without plane part");
    auto acc = fs[0].second;
    for (std::size_t i = 1; i < fs.size(); ++i) acc = acc * fs[i].second;
    return acc;
}

}  // namespace

PencilCheck bicanonical_pencil_check(const PencilMember& a, const PencilMember& b, const DivClass& target) {
    PencilCheck r;
    r.first_class_matches = a.cls == target;
    r.second_class_matches = b.cls == target;
    auto pa = product(a.factors), pb = product(b.factors);
    for (const auto& [n, f] : a.factors)
        if (divides(f, pb)) r.shared_factors.push_back(n);
    for (const auto& [n, f] : b.factors)
        if (divides(f, pa)) r.shared_factors.push_back(n);
    for (const auto& [n, m] : a.exceptional)
        if (m > 0 && b.exceptional.count(n) && b.exceptional.at(n) > 0) r.shared_exceptional.push_back(n);
    return r;
}

QuadricRelation solve_quadric_relation(const OortPetersForms& f) {
    RationalField R;
    auto A = f.Q1 * f.Q2;
    auto Bf = f.C2 * f.ell_tilde;
    auto four = Rational(4);
    // unknowns t, T, u, v; the constant term (Q1 Q2)^2 moves to the right
    std::vector<Form<RationalField>> cols = {(A * Bf).scaled(-four), (Bf * Bf).scaled(four),
                                             (A * f.Q * f.Q).scaled(Rational(-1)),
                                             (f.C1 * f.C2 * f.ell * f.ell).scaled(four)};
    auto rhs = -(A * A);
    for (const auto& c : cols)
        if (c.degree != 8) throw TorsionInputError("quadric relation terms must have degree 8");
    auto mons = monomials(8);
    Matrix<RationalField> M(R, mons.size(), 5);
    for (std::size_t i = 0; i < mons.size(); ++i) {
        for (int j = 0; j < 4; ++j) M(i, j) = cols[j].coeff(mons[i]);
        M(i, 4) = rhs.coeff(mons[i]);
    }
    QuadricRelation out;
    out.equations = static_cast<int>(mons.size());
    auto piv = rref(M);
    if (!piv.empty() && piv.back() == 4) {
        out.diagnostic = "inconsistent: no scalars make the degree-8 identity hold";
        return out;
    }
    out.solvable = true;
    out.unique = piv.size() == 4;
    if (!out.unique) {
        out.diagnostic = "underdetermined: " + std::to_string(4 - piv.size()) + " free scalars";
        return out;
    }
    std::array<Rational, 4> x;
    for (std::size_t r = 0; r < 4; ++r) x[piv[r]] = M(r, 4);
    out.t = x[0];
    out.T = x[1];
    out.u = x[2];
    out.v = x[3];
    out.t_squared = out.T == out.t * out.t;
    if (!out.t_squared) out.diagnostic = "the coefficient of (C2 l~)^2 is not the square of t";
    return out;
}

}  // namespace godeaux
