#pragma once

#include "godeaux/linalg.hpp"
#include "godeaux/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace godeaux {

enum class SingKind { NotOnCurve, SimplePass, Ordinary, Tacnode, Cusp, InfinitelyNearTriple, OutsideTaxonomy };

std::string kind_name(SingKind k);
SingKind parse_kind(const std::string& s);

template <class Field>
struct PointSpec {
    using Elem = typename Field::Elem;
    Point<Field> base;
    // Directions (a, b) of successive infinitely near points, each in the
    // chart of the previous blow-up.  At most two levels are supported.
    std::vector<std::pair<Elem, Elem>> chain;
};

template <class Field>
struct SingularitySpec {
    SingKind kind = SingKind::SimplePass;
    int multiplicity = 1;  // used by Ordinary and SimplePass
    std::optional<Point<Field>> tangent;
    PointSpec<Field> at;
    std::string label;
};

template <class Field>
struct ConditionMatrix {
    Matrix<Field> rows;
    std::vector<std::string> labels;
};

template <class Field>
struct SingularityReport {
    Point<Field> point;
    int multiplicity = 0;
    // multiplicity -> total degree of the tangent-cone factors with that multiplicity
    std::vector<std::pair<int, int>> cone_shape;
    SingKind kind = SingKind::NotOnCurve;
    std::optional<Point<Field>> tangent;
    int post_blowup_multiplicity = 0;
    bool post_blowup_ordinary = false;
    std::string note;
};

struct GenusReport {
    int arithmetic = 0;
    int deficit = 0;
    int geometric = 0;
};

// Multiplicity sequences over clusters, e.g. {{4}, {3, 3}, {2, 2}}.
GenusReport genus_deficit(int degree, const std::vector<std::vector<int>>& clusters);

// ---------------------------------------------------------------------------
// Frames

// A frame at P.  With a tangent line l through P, T is a second point on l
// and N lies off l, so local v = 0 is the tangent.
template <class Field>
Frame<Field> make_frame(Field F, const Point<Field>& P, const std::optional<Point<Field>>& line = std::nullopt) {
    using E = typename Field::Elem;
    const E z = F.zero(), o = F.one();
    const std::array<Point<Field>, 3> unit = {Point<Field>{o, z, z}, Point<Field>{z, o, z}, Point<Field>{z, z, o}};
    auto det3 = [&](const Point<Field>& a, const Point<Field>& b, const Point<Field>& c) {
        return dot<Field>(a, cross<Field>(b, c));
    };
    if (F.is_zero(P[0]) && F.is_zero(P[1]) && F.is_zero(P[2])) throw std::invalid_argument("invalid point");
    if (!line) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!F.is_zero(det3(P, unit[i], unit[j]))) return {P, unit[i], unit[j]};
        throw std::logic_error("no frame");
    }
    const auto& l = *line;
    if (!F.is_zero(dot<Field>(l, P))) throw std::invalid_argument("tangent line does not pass through the point");
    std::array<Point<Field>, 3> cand = {Point<Field>{l[1], -l[0], z}, Point<Field>{l[2], z, -l[0]},
                                        Point<Field>{z, l[2], -l[1]}};
    for (const auto& T : cand) {
        if (F.is_zero(T[0]) && F.is_zero(T[1]) && F.is_zero(T[2])) continue;
        if (proportional<Field>(F, T, P)) continue;
        for (const auto& N : unit)
            if (!F.is_zero(dot<Field>(l, N))) return {P, T, N};
    }
    throw std::invalid_argument("degenerate tangent line");
}

// ---------------------------------------------------------------------------
// Local analysis

template <class Field>
int multiplicity_at(const Form<Field>& f, const Point<Field>& P) {
    auto g = local_expansion(f, make_frame(f.F, P));
    if (g.is_zero()) throw std::invalid_argument("multiplicity of the zero form");
    return g.order();
}

template <class Field>
BinForm<Field> tangent_cone(const Form<Field>& f, const Point<Field>& P, const Frame<Field>& fr) {
    auto g = local_expansion(f, fr);
    if (g.is_zero() || g.order() < 1) throw std::invalid_argument("point is not on the curve");
    return g.homogeneous_part(g.order());
}

template <class Field>
BinForm<Field> tangent_cone(const Form<Field>& f, const Point<Field>& P) {
    return tangent_cone(f, P, make_frame(f.F, P));
}

// Strict transform at the infinitely near point in direction (a, b).
// For a != 0 the chart is v = u (w + b/a); otherwise u = v w.  In both
// cases the exceptional curve is X = 0 of the returned (X, Y) polynomial
// and the infinitely near point is the origin.
template <class Field>
std::pair<LocalPoly<Field>, int> blowup_strict_transform(const LocalPoly<Field>& f, const typename Field::Elem& a,
                                                         const typename Field::Elem& b) {
    const Field& F = f.F;
    if (F.is_zero(a) && F.is_zero(b)) throw std::invalid_argument("invalid chart direction");
    int m = f.order();
    LocalPoly<Field> g(F);
    if (!F.is_zero(a)) {
        auto lam = b * F.inv(a);
        for (const auto& [e, c] : f.terms) {
            auto [i, j] = e;
            // (w + lam)^j
            auto coef = c;
            std::vector<typename Field::Elem> binom(j + 1, F.zero());
            binom[0] = F.one();
            for (int k = 1; k <= j; ++k)
                for (int t = k; t >= 1; --t) binom[t] = binom[t] + binom[t - 1];
            auto lp = F.one();
            std::vector<typename Field::Elem> lams(j + 1);
            for (int k = 0; k <= j; ++k) {
                lams[k] = lp;
                lp = lp * lam;
            }
            for (int k = 0; k <= j; ++k)  // w^k lam^(j-k)
                g.add({i + j - m, k}, coef * binom[k] * lams[j - k]);
        }
    } else {
        for (const auto& [e, c] : f.terms) g.add({e.first + e.second - m, e.first}, c);
    }
    return {g, m};
}

template <class Field>
std::pair<LocalPoly<Field>, int> blowup_strict_transform(const Form<Field>& f, const Frame<Field>& fr,
                                                         const typename Field::Elem& a,
                                                         const typename Field::Elem& b) {
    return blowup_strict_transform(local_expansion(f, fr), a, b);
}

// Squarefree decomposition of a binary form: multiplicity -> total degree.
template <class Field>
std::vector<std::pair<int, int>> binform_shape(const BinForm<Field>& f) {
    const Field& F = f.F;
    std::map<int, int> shape;
    int kt = f.t_order();
    if (kt > 0) shape[kt] += 1;
    auto u = f.dehomogenize();
    // Yun
    auto up = u.derivative();
    auto a = poly_gcd(u, up);
    auto b = exact_div(u.monic(), a);
    auto c = exact_div(up.scaled(F.inv(u.lead())), a);
    auto d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        auto g = poly_gcd(b, d);
        if (g.degree() > 0) shape[i] += g.degree();
        auto b2 = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b2.derivative();
        b = b2;
        ++i;
    }
    return {shape.begin(), shape.end()};
}

// If the form is lambda * L^m, return L = (a, b) meaning a s + b t.
template <class Field>
std::optional<std::pair<typename Field::Elem, typename Field::Elem>> perfect_power_root(const BinForm<Field>& f) {
    const Field& F = f.F;
    int m = f.degree;
    if (m < 1 || f.is_zero()) return std::nullopt;
    auto shape = binform_shape(f);
    if (shape.size() != 1 || shape[0].first != m) return std::nullopt;
    // f = lambda (a s + b t)^m; c0 = lambda a^m, c1 = m lambda a^(m-1) b
    if (!F.is_zero(f.c[0])) {
        auto ratio = f.c[1] * F.inv(f.c[0] * F.from_int(m));  // b / a
        return std::make_pair(F.one(), ratio);
    }
    return std::make_pair(F.zero(), F.one());
}

// The projective line through P in local direction (u, v) = (du, dv).
template <class Field>
Point<Field> line_through(const Frame<Field>& fr, const typename Field::Elem& du, const typename Field::Elem& dv) {
    Point<Field> Q;
    for (int i = 0; i < 3; ++i) Q[i] = du * fr.T[i] + dv * fr.N[i];
    return cross<Field>(fr.P, Q);
}

template <class Field>
SingularityReport<Field> classify_singularity(const Form<Field>& f, const Point<Field>& P) {
    const Field& F = f.F;
    SingularityReport<Field> rep;
    rep.point = P;
    auto fr = make_frame(F, P);
    auto g = local_expansion(f, fr);
    if (g.is_zero()) throw std::invalid_argument("classification of the zero form");
    int m = g.order();
    rep.multiplicity = m;
    if (m == 0) {
        rep.kind = SingKind::NotOnCurve;
        return rep;
    }
    auto cone = g.homogeneous_part(m);
    rep.cone_shape = binform_shape(cone);
    if (m == 1) {
        rep.kind = SingKind::SimplePass;
        rep.tangent = line_through(fr, cone.c[1], -cone.c[0]);
        return rep;
    }
    bool ordinary = rep.cone_shape.size() == 1 && rep.cone_shape[0].first == 1;
    if (ordinary) {
        if (m > 4) {
            rep.kind = SingKind::OutsideTaxonomy;
            rep.note = "multiplicity above four";
            return rep;
        }
        rep.kind = SingKind::Ordinary;
        rep.post_blowup_multiplicity = 1;
        rep.post_blowup_ordinary = true;
        return rep;
    }
    auto root = perfect_power_root(cone);
    if (!root || m > 3) {
        rep.kind = SingKind::OutsideTaxonomy;
        rep.note = "tangent cone is neither reduced nor a pure power";
        return rep;
    }
    // cone = (a u + b v)^m; the tangent direction is (b, -a)
    auto [a, b] = *root;
    auto du = b, dv = -a;
    rep.tangent = line_through(fr, du, dv);
    auto [h, mm] = blowup_strict_transform(g, du, dv);
    (void)mm;
    int m1 = h.order();
    rep.post_blowup_multiplicity = m1;
    if (m1 >= 1) {
        auto cone1 = h.homogeneous_part(m1);
        auto sh = binform_shape(cone1);
        rep.post_blowup_ordinary = sh.size() == 1 && sh[0].first == 1;
    }
    if (m == 2 && m1 == 2) rep.kind = SingKind::Tacnode;
    else if (m == 2 && m1 <= 1) rep.kind = SingKind::Cusp;
    else if (m == 3 && m1 == 3) rep.kind = SingKind::InfinitelyNearTriple;
    else {
        rep.kind = SingKind::OutsideTaxonomy;
        rep.note = "unsupported blow-up pattern";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Condition rows

// Multiplicity data for a cluster at one point: m0 at the point, m1 at the
// infinitely near point along the frame's tangent, m2 at a further point in
// direction (1, lambda2) of the first chart.  cone_power additionally forces
// the degree-m0 part to be a multiple of v^m0.
template <class Field>
struct ClusterSpec {
    using Elem = typename Field::Elem;
    Point<Field> point;
    std::optional<Point<Field>> tangent;
    int m0 = 1, m1 = 0, m2 = 0;
    bool cone_power = false;
    Elem lambda2{};
    std::string label;
};

template <class Field>
std::vector<LocalPoly<Field>> monomial_expansions(Field F, int d, const Frame<Field>& fr) {
    std::vector<LocalPoly<Field>> out;
    for (const auto& e : monomials(d)) out.push_back(local_expansion(Form<Field>::monomial(F, e, F.one()), fr));
    return out;
}

namespace detail {
// First chart at direction (1, 0): sum c_ij u^(i+j-m) w^j over i+j >= m.
template <class Field>
LocalPoly<Field> chart_truncate(const LocalPoly<Field>& f, int m) {
    LocalPoly<Field> g(f.F);
    for (const auto& [e, c] : f.terms)
        if (e.first + e.second >= m) g.add({e.first + e.second - m, e.second}, c);
    return g;
}
template <class Field>
LocalPoly<Field> chart_truncate_shift(const LocalPoly<Field>& f, int m, const typename Field::Elem& lam) {
    const Field& F = f.F;
    LocalPoly<Field> g(F);
    for (const auto& [e, c] : f.terms) {
        auto [i, j] = e;
        if (i + j < m) continue;
        std::vector<typename Field::Elem> binom(j + 1, F.zero());
        binom[0] = F.one();
        for (int k = 1; k <= j; ++k)
            for (int t = k; t >= 1; --t) binom[t] = binom[t] + binom[t - 1];
        std::vector<typename Field::Elem> lp(j + 1, F.one());
        for (int k = 1; k <= j; ++k) lp[k] = lp[k - 1] * lam;
        for (int k = 0; k <= j; ++k) g.add({i + j - m, k}, c * binom[k] * lp[j - k]);
    }
    return g;
}
}  // namespace detail

template <class Field>
ConditionMatrix<Field> cluster_rows(Field F, int d, const ClusterSpec<Field>& cs) {
    if (cs.m1 > 0 && !cs.tangent) throw std::invalid_argument("missing tangent for infinitely near condition");
    if (cs.cone_power && !cs.tangent) throw std::invalid_argument("missing tangent for cone condition");
    auto fr = make_frame(F, cs.point, cs.tangent);
    auto ex = monomial_expansions(F, d, fr);
    std::size_t n = ex.size();
    ConditionMatrix<Field> out{Matrix<Field>(F, 0, n), {}};
    // identical functionals (a cone row doubling as a chart row) are kept once
    auto push = [&](auto&& getter, const std::string& tag) {
        std::vector<typename Field::Elem> row(n, F.zero());
        for (std::size_t k = 0; k < n; ++k) row[k] = getter(k);
        for (std::size_t r = 0; r < out.rows.rows; ++r)
            if (out.rows.row(r) == row) return;
        out.rows.append_row(row);
        out.labels.push_back(cs.label + tag);
    };
    std::vector<std::pair<int, int>> level0;
    for (int s = 0; s < cs.m0; ++s)
        for (int j = 0; j <= s; ++j) level0.push_back({s - j, j});
    if (cs.cone_power)
        for (int j = 0; j < cs.m0; ++j) level0.push_back({cs.m0 - j, j});
    for (auto [i, j] : level0)
        push([&](std::size_t k) { return ex[k].coeff(i, j); },
             ":u" + std::to_string(i) + "v" + std::to_string(j));
    if (cs.m1 > 0) {
        std::vector<LocalPoly<Field>> l1;
        for (const auto& e : ex) l1.push_back(detail::chart_truncate(e, cs.m0));
        for (int s = 0; s < cs.m1; ++s)
            for (int j = 0; j <= s; ++j) {
                int i = s - j;
                push([&](std::size_t k) { return l1[k].coeff(i, j); },
                     ":1:u" + std::to_string(i) + "w" + std::to_string(j));
            }
        if (cs.m2 > 0) {
            std::vector<LocalPoly<Field>> l2;
            for (const auto& e : l1) l2.push_back(detail::chart_truncate_shift(e, cs.m1, cs.lambda2));
            for (int s = 0; s < cs.m2; ++s)
                for (int j = 0; j <= s; ++j) {
                    int i = s - j;
                    push([&](std::size_t k) { return l2[k].coeff(i, j); },
                         ":2:u" + std::to_string(i) + "w" + std::to_string(j));
                }
        }
    }
    return out;
}

template <class Field>
ClusterSpec<Field> cluster_of(const SingularitySpec<Field>& s) {
    ClusterSpec<Field> c;
    c.point = s.at.base;
    c.tangent = s.tangent;
    c.label = s.label.empty() ? kind_name(s.kind) : s.label;
    switch (s.kind) {
        case SingKind::SimplePass:
            c.m0 = 1;
            c.m1 = s.tangent ? 1 : 0;
            break;
        case SingKind::Ordinary:
            c.m0 = s.multiplicity;
            break;
        case SingKind::Tacnode:
            c.m0 = 2;
            c.m1 = 2;
            break;
        case SingKind::Cusp:
            c.m0 = 2;
            c.m1 = 1;
            c.cone_power = true;
            break;
        case SingKind::InfinitelyNearTriple:
            c.m0 = 3;
            c.m1 = 3;
            break;
        default:
            throw std::invalid_argument("no condition rows for kind " + kind_name(s.kind));
    }
    bool needs_tangent = s.kind == SingKind::Tacnode || s.kind == SingKind::Cusp ||
                         s.kind == SingKind::InfinitelyNearTriple;
    if (needs_tangent && !s.tangent) throw std::invalid_argument("missing tangent for " + kind_name(s.kind));
    return c;
}

// Rows for one prescribed singularity.
template <class Field>
ConditionMatrix<Field> build_condition_rows(Field F, int d, const SingularitySpec<Field>& s) {
    return cluster_rows(F, d, cluster_of(s));
}

template <class Field>
ConditionMatrix<Field> stack(Field F, int d, const std::vector<ConditionMatrix<Field>>& parts) {
    ConditionMatrix<Field> out{Matrix<Field>(F, 0, monomial_count(d)), {}};
    for (const auto& p : parts)
        for (std::size_t r = 0; r < p.rows.rows; ++r) {
            out.rows.append_row(p.rows.row(r));
            out.labels.push_back(p.labels[r]);
        }
    return out;
}

template <class Field>
ConditionMatrix<Field> build_system(Field F, int d, const std::vector<SingularitySpec<Field>>& specs) {
    std::vector<ConditionMatrix<Field>> parts;
    for (const auto& s : specs) parts.push_back(build_condition_rows(F, d, s));
    return stack(F, d, parts);
}

// Projective dimension of the linear system; -1 means empty.
template <class Field>
int linear_system_dimension(Field F, int d, const std::vector<SingularitySpec<Field>>& specs) {
    auto sys = build_system(F, d, specs);
    return monomial_count(d) - static_cast<int>(rank(sys.rows)) - 1;
}

template <class Field>
std::vector<Form<Field>> linear_system_basis(Field F, int d, const Matrix<Field>& rows) {
    std::vector<Form<Field>> out;
    for (const auto& v : kernel_basis(rows)) out.push_back(Form<Field>::from_vector(F, d, v));
    return out;
}

class DegenerateSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// v_j = (-1)^j det(M with column j removed), for an n x (n+1) matrix.
template <class Field>
std::vector<typename Field::Elem> kernel_via_signed_minors(const Matrix<Field>& M) {
    const Field& F = M.F;
    if (M.cols != M.rows + 1) throw std::invalid_argument("expected an n x (n+1) matrix");
    std::vector<typename Field::Elem> v;
    bool any = false;
    for (std::size_t j = 0; j < M.cols; ++j) {
        auto d = det_bareiss(M.without_column(j));
        if (j % 2) d = -d;
        any = any || !F.is_zero(d);
        v.push_back(d);
    }
    if (!any) throw DegenerateSystem("rank deficient: every maximal minor vanishes");
    return v;
}

// ---------------------------------------------------------------------------
// Lines through a point as components: a line au + bv through P divides the
// local polynomial iff it divides every homogeneous piece.
template <class Field>
bool line_component_through(const Form<Field>& f, const Point<Field>& P) {
    auto g = local_expansion(f, make_frame(f.F, P));
    if (g.is_zero()) return true;
    int lo = g.order(), hi = g.total_degree();
    if (lo == 0) return false;
    std::optional<BinForm<Field>> acc;
    for (int k = lo; k <= hi; ++k) {
        auto part = g.homogeneous_part(k);
        if (part.is_zero()) continue;
        acc = acc ? binform_gcd(*acc, part) : part;
        if (acc->degree == 0) return false;
    }
    return acc && acc->degree > 0;
}

template <class Field>
bool tangent_lines_not_components(const Form<Field>& f, const std::vector<Point<Field>>& points) {
    for (const auto& P : points)
        if (line_component_through(f, P)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Intersections over F_p

class CommonComponent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Noether's recursion through common tangent directions.
int local_intersection(const LocalPoly<PrimeField>& f, const LocalPoly<PrimeField>& g, int depth = 0);
int intersection_multiplicity(const Form<PrimeField>& f, const Form<PrimeField>& g, const Point<PrimeField>& P);

// Fulton's algorithm on affine polynomials with the point at the origin.
int fulton_intersection(LocalPoly<PrimeField> f, LocalPoly<PrimeField> g);

struct IntersectionPoint {
    Point<PrimeField> point;
    int multiplicity = 0;
};

struct IntersectionResult {
    std::vector<IntersectionPoint> points;  // F_p-rational, normalized
    int unresolved_degree = 0;              // Bezout mass at non-rational points
    int total() const {
        int t = unresolved_degree;
        for (const auto& p : points) t += p.multiplicity;
        return t;
    }
};

IntersectionResult intersection_points(const Form<PrimeField>& f, const Form<PrimeField>& g);

Point<PrimeField> normalize_point(const Point<PrimeField>& P);

}  // namespace godeaux
