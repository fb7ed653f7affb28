#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace godeaux {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& q);

// a + b*r with r^2 = Sq::value(); used to stack the three quadratic layers.
template <class Base, class Sq>
struct QuadExt {
    Base lo{}, hi{};

    QuadExt() = default;
    QuadExt(Base l, Base h) : lo(std::move(l)), hi(std::move(h)) {}

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return {a.lo - b.lo, a.hi - b.hi}; }
    friend QuadExt operator-(const QuadExt& a) { return {-a.lo, -a.hi}; }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        Base ll = a.lo * b.lo;
        Base hh = a.hi * b.hi;
        Base mid = a.lo * b.hi + a.hi * b.lo;
        return {ll + hh * Sq::value(), mid};
    }
    friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    QuadExt conj() const { return {lo, -hi}; }
    Base norm() const { return lo * lo - hi * hi * Sq::value(); }
};

struct SqAlpha;
struct SqBeta;
struct SqDelta;

using K1 = QuadExt<Rational, SqAlpha>;  // Q(alpha)
using K2 = QuadExt<K1, SqBeta>;         // K1(beta)
using K3 = QuadExt<K2, SqDelta>;        // K2(delta)

struct SqAlpha { static const Rational& value(); };
struct SqBeta { static const K1& value(); };
struct SqDelta { static const K2& value(); };

// Element of Q(alpha, beta, delta).  Coordinates are exposed in the order
// 1, a, b, d, ab, ad, bd, abd.
class Tower {
public:
    Tower() = default;
    explicit Tower(long n);
    explicit Tower(const Rational& q);
    explicit Tower(const K3& k) : k_(k) {}

    static Tower alpha();
    static Tower beta();
    static Tower delta();
    static Tower from_coords(const std::array<Rational, 8>& c);
    std::array<Rational, 8> coords() const;

    const K3& nested() const { return k_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;

    // Solves the 8x8 system for multiplication by *this.
    Tower inverse() const;

    friend Tower operator+(const Tower& a, const Tower& b) { return Tower(a.k_ + b.k_); }
    friend Tower operator-(const Tower& a, const Tower& b) { return Tower(a.k_ - b.k_); }
    friend Tower operator-(const Tower& a) { return Tower(-a.k_); }
    friend Tower operator*(const Tower& a, const Tower& b) { return Tower(a.k_ * b.k_); }
    friend bool operator==(const Tower& a, const Tower& b) { return a.k_ == b.k_; }
    friend bool operator!=(const Tower& a, const Tower& b) { return !(a.k_ == b.k_); }
    Tower& operator+=(const Tower& b) { k_ = k_ + b.k_; return *this; }
    Tower& operator-=(const Tower& b) { k_ = k_ - b.k_; return *this; }
    Tower& operator*=(const Tower& b) { k_ = k_ * b.k_; return *this; }

    std::string to_string() const;

private:
    K3 k_;
};

Tower tower_mul(const Tower& a, const Tower& b);
Tower tower_inverse(const Tower& a);

// Residue mod p.  The modulus travels with the value.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}
    static Fp of(long long n, std::uint64_t modulus);

    friend Fp operator+(Fp a, Fp b) {
        std::uint64_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return {s, a.p, 0};
    }
    friend Fp operator-(Fp a, Fp b) { return {a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p, 0}; }
    friend Fp operator-(Fp a) { return {a.v == 0 ? 0 : a.p - a.v, a.p, 0}; }
    friend Fp operator*(Fp a, Fp b) {
        return {static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v) * b.v) % a.p), a.p, 0};
    }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }

    Fp pow(std::uint64_t e) const;
    Fp inverse() const;
    bool is_zero() const { return v == 0; }

private:
    Fp(std::uint64_t value, std::uint64_t modulus, int) : v(value), p(modulus) {}
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
bool is_prime(std::uint64_t n);
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);  // throws if p divides the denominator
std::uint64_t reduce_mod(long long n, std::uint64_t p);

// Some r with r^2 = n mod p, or nothing for a non-residue.
std::optional<std::uint64_t> sqrt_mod_p(long long n, std::uint64_t p);

struct RingHom {
    std::uint64_t p = 0;
    std::uint64_t r_alpha = 0, r_beta = 0, r_delta = 0;

    Fp operator()(const Tower& t) const;
    Fp operator()(const Rational& q) const;
    bool congruences_hold() const;
};

// Bit i picks the root in (p/2, p) for alpha, beta, delta respectively;
// a clear bit picks the one in [0, p/2].
struct BranchBits {
    bool alpha = true, beta = false, delta = true;
    static BranchBits parse(const std::string& s);
    std::string str() const;
};

class EmbedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RingHom embed_tower(std::uint64_t p, BranchBits bits = {});
std::uint64_t find_good_prime(std::uint64_t start, std::uint64_t cap = 1'000'000'000ULL);

// Coefficient-field descriptors used by the generic polynomial and linear
// algebra code.  Each knows how to make constants and invert.
struct RationalField {
    using Elem = Rational;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long n) const { return Rational(static_cast<long>(n)); }
    Elem inv(const Elem& a) const;
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    std::string str(const Elem& a) const { return rational_to_string(a); }
    bool operator==(const RationalField&) const { return true; }
};

struct TowerField {
    using Elem = Tower;
    Elem zero() const { return Tower(); }
    Elem one() const { return Tower(1); }
    Elem from_int(long long n) const { return Tower(static_cast<long>(n)); }
    Elem inv(const Elem& a) const { return a.inverse(); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    std::string str(const Elem& a) const { return a.to_string(); }
    bool operator==(const TowerField&) const { return true; }
};

struct PrimeField {
    using Elem = Fp;
    std::uint64_t p = 2;
    PrimeField() = default;
    explicit PrimeField(std::uint64_t modulus) : p(modulus) {}
    Elem zero() const { return Fp(0, p); }
    Elem one() const { return Fp(1, p); }
    Elem from_int(long long n) const { return Fp::of(n, p); }
    Elem inv(const Elem& a) const { return a.inverse(); }
    bool is_zero(const Elem& a) const { return a.v == 0; }
    std::string str(const Elem& a) const { return std::to_string(a.v); }
    bool operator==(const PrimeField& o) const { return p == o.p; }
};

}  // namespace godeaux
