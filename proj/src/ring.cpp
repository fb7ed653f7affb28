#include "godeaux/ring.hpp"

#include <sstream>
#include <vector>

namespace godeaux {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::size_t slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) throw std::invalid_argument("malformed rational: " + s);
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("malformed rational: " + s);
    };
    Rational q;
    if (slash == std::string::npos) {
        check_int(s);
        q = Rational(mpz_class(s[0] == '+' ? s.substr(1) : s));
    } else {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        check_int(num);
        check_int(den);
        mpz_class d(den[0] == '+' ? den.substr(1) : den);
        if (d == 0) throw std::invalid_argument("zero denominator: " + s);
        q = Rational(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
    }
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

const Rational& SqAlpha::value() {
    static const Rational v(17);
    return v;
}
const K1& SqBeta::value() {
    static const K1 v{Rational(21), Rational(5)};
    return v;
}
const K2& SqDelta::value() {
    static const K2 v{K1{Rational(5), Rational(1)}, K1{}};
    return v;
}

Tower::Tower(long n) : k_{K2{K1{Rational(n), 0}, K1{}}, K2{}} {}
Tower::Tower(const Rational& q) : k_{K2{K1{q, 0}, K1{}}, K2{}} {}

Tower Tower::alpha() { return from_coords({0, 1, 0, 0, 0, 0, 0, 0}); }
Tower Tower::beta() { return from_coords({0, 0, 1, 0, 0, 0, 0, 0}); }
Tower Tower::delta() { return from_coords({0, 0, 0, 1, 0, 0, 0, 0}); }

// 1 -> lo.lo.lo, a -> lo.lo.hi, b -> lo.hi.lo, ab -> lo.hi.hi,
// d -> hi.lo.lo, ad -> hi.lo.hi, bd -> hi.hi.lo, abd -> hi.hi.hi
Tower Tower::from_coords(const std::array<Rational, 8>& c) {
    K2 lo{K1{c[0], c[1]}, K1{c[2], c[4]}};
    K2 hi{K1{c[3], c[5]}, K1{c[6], c[7]}};
    return Tower(K3{lo, hi});
}

std::array<Rational, 8> Tower::coords() const {
    return {k_.lo.lo.lo, k_.lo.lo.hi, k_.lo.hi.lo, k_.hi.lo.lo,
            k_.lo.hi.hi, k_.hi.lo.hi, k_.hi.hi.lo, k_.hi.hi.hi};
}

bool Tower::is_zero() const {
    for (const auto& c : coords())
        if (sgn(c) != 0) return false;
    return true;
}

bool Tower::is_rational() const {
    auto c = coords();
    for (int i = 1; i < 8; ++i)
        if (sgn(c[i]) != 0) return false;
    return true;
}

Rational Tower::rational_part() const { return k_.lo.lo.lo; }

Tower Tower::inverse() const {
    if (is_zero()) throw std::domain_error("tower inverse of zero");
    // Column j of the matrix is coords(this * basis_j); solve M x = e_0.
    static const std::array<Tower, 8> basis = [] {
        std::array<Tower, 8> b;
        for (int j = 0; j < 8; ++j) {
            std::array<Rational, 8> c{};
            c[j] = 1;
            b[j] = from_coords(c);
        }
        return b;
    }();
    std::vector<std::vector<Rational>> m(8, std::vector<Rational>(9));
    for (int j = 0; j < 8; ++j) {
        auto col = (*this * basis[j]).coords();
        for (int i = 0; i < 8; ++i) m[i][j] = col[i];
    }
    m[0][8] = 1;
    for (int col = 0; col < 8; ++col) {
        int piv = -1;
        for (int r = col; r < 8; ++r)
            if (sgn(m[r][col]) != 0) { piv = r; break; }
        if (piv < 0) throw std::domain_error("singular multiplication matrix");
        std::swap(m[piv], m[col]);
        Rational inv = 1 / m[col][col];
        for (int c = col; c < 9; ++c) m[col][c] *= inv;
        for (int r = 0; r < 8; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c < 9; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::array<Rational, 8> x;
    for (int i = 0; i < 8; ++i) x[i] = m[i][8];
    return from_coords(x);
}

std::string Tower::to_string() const {
    static const char* names[8] = {"", "a", "b", "d", "ab", "ad", "bd", "abd"};
    auto c = coords();
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 8; ++i) {
        if (sgn(c[i]) == 0) continue;
        if (!first) os << (sgn(c[i]) > 0 ? " + " : " - ");
        else if (sgn(c[i]) < 0) os << "-";
        Rational a = abs(c[i]);
        if (i == 0 || a != 1) os << a.get_str() << (i ? "*" : "");
        os << names[i];
        first = false;
    }
    if (first) return "0";
    return os.str();
}

Tower tower_mul(const Tower& a, const Tower& b) { return a * b; }
Tower tower_inverse(const Tower& a) { return a.inverse(); }

Fp Fp::of(long long n, std::uint64_t modulus) { return Fp(reduce_mod(n, modulus), modulus); }

Fp Fp::pow(std::uint64_t e) const { return Fp(powmod(v, e, p), p); }

Fp Fp::inverse() const {
    if (v == 0) throw std::domain_error("inverse of zero mod p");
    return pow(p - 2);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // These witnesses are deterministic for 64-bit n.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t reduce_mod(long long n, std::uint64_t p) {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
    mpz_class pm(std::to_string(p));
    mpz_class num = q.get_num() % pm;
    if (num < 0) num += pm;
    mpz_class den = q.get_den() % pm;
    if (den == 0) throw std::domain_error("denominator divisible by " + std::to_string(p));
    std::uint64_t n = std::stoull(num.get_str());
    std::uint64_t d = std::stoull(den.get_str());
    return mulmod(n, powmod(d, p - 2, p), p);
}

std::optional<std::uint64_t> sqrt_mod_p(long long n_in, std::uint64_t p) {
    std::uint64_t n = reduce_mod(n_in, p);
    if (p == 2) return n;
    if (n == 0) return 0;
    if (powmod(n, (p - 1) / 2, p) != 1) return std::nullopt;
    // Tonelli-Shanks
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t t = powmod(n, q, p);
    std::uint64_t r = powmod(n, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        std::uint64_t b = c;
        for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

Fp RingHom::operator()(const Rational& q) const { return Fp(reduce_mod(q, p), p); }

Fp RingHom::operator()(const Tower& t) const {
    auto c = t.coords();
    Fp a(r_alpha, p), b(r_beta, p), d(r_delta, p);
    const Fp basis[8] = {Fp(1, p), a, b, d, a * b, a * d, b * d, a * b * d};
    Fp acc(0, p);
    for (int i = 0; i < 8; ++i)
        if (sgn(c[i]) != 0) acc += (*this)(c[i]) * basis[i];
    return acc;
}

bool RingHom::congruences_hold() const {
    return mulmod(r_alpha, r_alpha, p) == 17 % p &&
           mulmod(r_beta, r_beta, p) == (21 + 5 * r_alpha) % p &&
           mulmod(r_delta, r_delta, p) == (5 + r_alpha) % p;
}

BranchBits BranchBits::parse(const std::string& s) {
    if (s.size() != 3) throw std::invalid_argument("branch bits must be three characters of 0/1");
    BranchBits b;
    bool* f[3] = {&b.alpha, &b.beta, &b.delta};
    for (int i = 0; i < 3; ++i) {
        if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("branch bits must be 0 or 1");
        *f[i] = s[i] == '1';
    }
    return b;
}

std::string BranchBits::str() const {
    return std::string{alpha ? '1' : '0', beta ? '1' : '0', delta ? '1' : '0'};
}

namespace {
std::uint64_t pick(std::uint64_t r, std::uint64_t p, bool upper) {
    std::uint64_t lo = std::min(r, (p - r) % p), hi = (p - lo) % p;
    return upper ? std::max(lo, hi) : lo;
}
}  // namespace

RingHom embed_tower(std::uint64_t p, BranchBits bits) {
    if (p < 3 || !is_prime(p)) throw EmbedError(std::to_string(p) + " is not an odd prime");
    auto ra = sqrt_mod_p(17, p);
    if (!ra) throw EmbedError("17 is not a square mod " + std::to_string(p));
    std::uint64_t a = pick(*ra, p, bits.alpha);
    auto rb = sqrt_mod_p(static_cast<long long>((21 + 5 * a) % p), p);
    if (!rb) throw EmbedError("21+5a is not a square mod " + std::to_string(p));
    auto rd = sqrt_mod_p(static_cast<long long>((5 + a) % p), p);
    if (!rd) throw EmbedError("5+a is not a square mod " + std::to_string(p));
    RingHom h{p, a, pick(*rb, p, bits.beta), pick(*rd, p, bits.delta)};
    return h;
}

std::uint64_t find_good_prime(std::uint64_t start, std::uint64_t cap) {
    for (std::uint64_t n = std::max<std::uint64_t>(start, 3); n <= cap; ++n) {
        if (!is_prime(n)) continue;
        // Some alpha branch must carry square roots for both beta and delta.
        for (bool ab : {false, true}) {
            try {
                embed_tower(n, BranchBits{ab, false, false});
                return n;
            } catch (const EmbedError&) {
            }
        }
    }
    throw std::runtime_error("no good prime below cap");
}

Rational RationalField::inv(const Rational& a) const {
    if (sgn(a) == 0) throw std::domain_error("rational inverse of zero");
    return 1 / a;
}

}  // namespace godeaux
