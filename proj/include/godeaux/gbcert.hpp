#pragma once

#include "godeaux/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace godeaux::gb {

// Exponents are packed one byte per variable (at most 8 variables, each
// exponent below 128 so the top bit of every byte can act as a guard).
using Mono = std::uint64_t;
using Key = unsigned __int128;

enum class Order { Grevlex, Elimination };

// With Order::Elimination the last `elim` variables form a block that
// dominates the remaining ones; grevlex inside each block.
struct Ring {
    int n = 3;
    std::uint64_t p = 101;
    Order order = Order::Grevlex;
    int elim = 0;

    Ring() = default;
    Ring(int nvars, std::uint64_t prime, Order o = Order::Grevlex, int eliminated = 0);

    Key key(Mono m) const;
    int exp(Mono m, int var) const { return static_cast<int>((m >> (8 * var)) & 0xff); }
    Mono make(const std::vector<int>& e) const;
    int degree(Mono m) const;
    std::uint64_t inv(std::uint64_t a) const;
};

struct Term {
    Mono m;
    Key key;
    std::uint64_t c;
};

// Terms sorted by decreasing key, no zero coefficients.
struct Poly {
    std::vector<Term> t;
    bool is_zero() const { return t.empty(); }
    const Term& lead() const { return t.front(); }
    bool is_constant() const { return t.size() == 1 && t[0].m == 0; }
    int degree(const Ring& R) const;
};

bool mono_divides(Mono a, Mono b);
Mono mono_mul(Mono a, Mono b);
Mono mono_div(Mono a, Mono b);  // requires a | b, returns b / a
Mono mono_lcm(Mono a, Mono b, int n);
bool mono_coprime(Mono a, Mono b, int n);

Poly poly_add(const Ring& R, const Poly& a, const Poly& b);
Poly poly_sub(const Ring& R, const Poly& a, const Poly& b);
Poly poly_mul(const Ring& R, const Poly& a, const Poly& b);
Poly poly_scale(const Ring& R, const Poly& a, std::uint64_t c, Mono m = 0);
Poly poly_monic(const Ring& R, const Poly& a);
Poly poly_constant(const Ring& R, std::uint64_t c);
Poly poly_var(const Ring& R, int var);
Poly poly_from_terms(const Ring& R, std::vector<std::pair<Mono, std::uint64_t>> terms);
std::uint64_t poly_eval(const Ring& R, const Poly& f, const std::vector<std::uint64_t>& x);
std::string poly_str(const Ring& R, const Poly& f);

// Carries the same exponents into another ring (keys recomputed).  Variables
// beyond the target's count must be absent.
Poly rekey(const Ring& from, const Ring& to, const Poly& f);

Poly from_form(const Ring& R, const Form<PrimeField>& f);

struct GroebnerBasis {
    Ring ring;
    std::vector<Poly> polys;  // reduced, monic, sorted by leading monomial
    bool is_unit() const { return polys.size() == 1 && polys[0].is_constant(); }
};

struct GbStats {
    std::size_t pairs = 0;
    std::size_t zero_reductions = 0;
};

GroebnerBasis groebner_basis(const Ring& R, const std::vector<Poly>& gens, GbStats* stats = nullptr);
Poly normal_form(const Ring& R, const Poly& f, const std::vector<Poly>& G);
bool contains(const GroebnerBasis& G, const Poly& f);
bool buchberger_criterion(const GroebnerBasis& G);
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);
Poly s_polynomial(const Ring& R, const Poly& f, const Poly& g);

// Ideals live in a plain grevlex ring; the helpers below add the auxiliary
// variables they need internally.
std::vector<Poly> eliminate_last(const Ring& R, const std::vector<Poly>& gens, int k);
GroebnerBasis intersect(const Ring& R, const std::vector<Poly>& I, const std::vector<Poly>& J);
GroebnerBasis quotient(const Ring& R, const std::vector<Poly>& I, const Poly& g);
GroebnerBasis saturate_by(const Ring& R, const std::vector<Poly>& I, const Poly& g);
GroebnerBasis saturation(const Ring& R, const std::vector<Poly>& I, const std::vector<Poly>& J);
std::optional<Poly> exact_divide(const Ring& R, const Poly& f, const Poly& g);

// Homogeneous ideal of a finite set of points of P^2(F_p).
std::vector<Poly> points_ideal(const Ring& R, const std::vector<Point<PrimeField>>& pts);
std::vector<Poly> jacobian_ideal(const Ring& R, const Form<PrimeField>& f);

struct SmoothnessCertificate {
    bool smooth_outside = false;
    std::size_t ideal_generators = 0;
    std::vector<std::size_t> basis_sizes;  // per saturation step
};

// (Jac f : I^inf) = <1>, where I is the ideal of the excluded points or the
// irrelevant ideal <x, y, z> when none are excluded.
SmoothnessCertificate certify_smooth_outside(const Form<PrimeField>& f, const std::vector<Point<PrimeField>>& excluded);

}  // namespace godeaux::gb
