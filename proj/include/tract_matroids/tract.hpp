// Skew tracts with exact arithmetic: sign, Krasner, phase (rational turns),
// GF(p), the dihedral hyperfield D6 and layerings R x| Z.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trm {

enum class Kind : std::uint8_t { krasner, sign, phase, gfp, d6, layered };

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Payload layout per kind:
//   sign     a = +1 / -1
//   krasner  a = 1
//   phase    a/b, reduced, 0 <= a < b
//   gfp      a in 1..p-1
//   d6       r^a s^b, a in 0..2, b in 0..1
//   layered  a = base payload (sign / krasner / gfp), b = layer
struct Value {
    bool zero = true;
    std::int64_t a = 0;
    std::int64_t b = 0;

    static Value nil() { return {}; }
    static Value of(std::int64_t a, std::int64_t b = 0) { return {false, a, b}; }
    bool nonzero() const { return !zero; }

    friend bool operator==(const Value&, const Value&) = default;
    friend auto operator<=>(const Value&, const Value&) = default;
};

struct Tract {
    Kind kind = Kind::sign;
    int p = 0;               // gfp modulus, or base modulus of a layering over gfp
    Kind base = Kind::sign;  // layered only

    friend bool operator==(const Tract&, const Tract&) = default;

    static Tract sign() { return {Kind::sign}; }
    static Tract krasner() { return {Kind::krasner}; }
    static Tract phase() { return {Kind::phase}; }
    static Tract d6() { return {Kind::d6}; }
    static Tract gfp(int p);
    // Layering of base along Z with trivial action (stable sums hold).
    static Tract layered(Kind base, int p = 0);

    Tract base_tract() const { return Tract{base, p, Kind::sign}; }
    bool finite() const { return kind != Kind::phase && kind != Kind::layered; }
    bool commutative() const { return kind != Kind::d6; }
};

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline Tract Tract::gfp(int p) {
    if (!is_prime(p)) throw DomainError("GF(p) needs a prime modulus, got " + std::to_string(p));
    return {Kind::gfp, p};
}

inline Tract Tract::layered(Kind base, int p) {
    if (base == Kind::gfp) (void)gfp(p);
    else if (base != Kind::sign && base != Kind::krasner)
        throw DomainError("layering supports base krasner, sign or gfp");
    return {Kind::layered, base == Kind::gfp ? p : 0, base};
}

// ---- rational turns -------------------------------------------------------

namespace turn {

inline Value make(std::int64_t n, std::int64_t d) {
    if (d <= 0) throw DomainError("phase denominator must be positive");
    n %= d;
    if (n < 0) n += d;
    std::int64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    if (n == 0) return Value::of(0, 1);
    return Value::of(n / g, d / g);
}

inline Value add(const Value& x, const Value& y) {
    __int128 n = static_cast<__int128>(x.a) * y.b + static_cast<__int128>(y.a) * x.b;
    __int128 d = static_cast<__int128>(x.b) * y.b;
    n %= d;
    __int128 u = n, v = d;
    while (v != 0) {
        __int128 r = u % v;
        u = v;
        v = r;
    }
    n /= u;
    d /= u;
    if (d > INT64_MAX) throw DomainError("phase denominator overflow");
    return make(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

inline Value negate(const Value& x) { return make(x.b - x.a, x.b); }
inline Value sub(const Value& x, const Value& y) { return add(x, negate(y)); }
inline Value half() { return Value::of(1, 2); }

// 2 * frac(x) compared against 1, i.e. the sign of frac(x) - 1/2
inline int cmp_half(const Value& x) {
    __int128 l = static_cast<__int128>(x.a) * 2;
    return l < x.b ? -1 : (l == x.b ? 0 : 1);
}

inline int cmp_quarter(const Value& x) {
    __int128 l = static_cast<__int128>(x.a) * 4;
    return l < x.b ? -1 : (l == x.b ? 0 : 1);
}

inline int cmp(const Value& x, const Value& y) {
    __int128 l = static_cast<__int128>(x.a) * y.b, r = static_cast<__int128>(y.a) * x.b;
    return l < r ? -1 : (l == r ? 0 : 1);
}

}  // namespace turn

// ---- group operations -----------------------------------------------------

inline Value one(const Tract& t) {
    switch (t.kind) {
        case Kind::phase: return Value::of(0, 1);
        case Kind::d6: return Value::of(0, 0);
        default: return Value::of(1, 0);
    }
}

inline Value epsilon(const Tract& t) {
    switch (t.kind) {
        case Kind::sign: return Value::of(-1);
        case Kind::phase: return turn::half();
        case Kind::gfp: return Value::of(t.p - 1);
        case Kind::layered:
            if (t.base == Kind::sign) return Value::of(-1, 0);
            if (t.base == Kind::gfp) return Value::of(t.p - 1, 0);
            return Value::of(1, 0);
        case Kind::d6: return Value::of(0, 0);
        default: return Value::of(1, 0);  // krasner
    }
}

namespace detail {

inline std::int64_t mod(std::int64_t x, std::int64_t m) {
    x %= m;
    return x < 0 ? x + m : x;
}

inline std::int64_t modinv(std::int64_t x, std::int64_t p) {
    std::int64_t r = 1, e = p - 2, base = mod(x, p);
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// Multiplication of base payloads (sign / krasner / gfp).
inline std::int64_t base_mul(const Tract& t, std::int64_t x, std::int64_t y) {
    if (t.base == Kind::gfp) return x * y % t.p;
    return x * y;
}

inline std::int64_t base_inv(const Tract& t, std::int64_t x) {
    if (t.base == Kind::gfp) return modinv(x, t.p);
    return x;
}

inline std::int64_t base_neg(const Tract& t, std::int64_t x) {
    if (t.base == Kind::sign) return -x;
    if (t.base == Kind::gfp) return mod(-x, t.p);
    return x;
}

}  // namespace detail

inline Value mul(const Tract& t, const Value& x, const Value& y) {
    if (x.zero || y.zero) return Value::nil();
    switch (t.kind) {
        case Kind::krasner: return Value::of(1);
        case Kind::sign: return Value::of(x.a * y.a);
        case Kind::phase: return turn::add(x, y);
        case Kind::gfp: return Value::of(x.a * y.a % t.p);
        case Kind::d6: return Value::of(detail::mod(x.a + (x.b ? -y.a : y.a), 3), x.b ^ y.b);
        case Kind::layered: return Value::of(detail::base_mul(t, x.a, y.a), x.b + y.b);
    }
    return Value::nil();
}

inline Value inv(const Tract& t, const Value& x) {
    if (x.zero) throw DomainError("inverse of zero");
    switch (t.kind) {
        case Kind::krasner: return x;
        case Kind::sign: return x;
        case Kind::phase: return turn::negate(x);
        case Kind::gfp: return Value::of(detail::modinv(x.a, t.p));
        case Kind::d6: return x.b ? x : Value::of(detail::mod(-x.a, 3), 0);
        case Kind::layered: return Value::of(detail::base_inv(t, x.a), -x.b);
    }
    return x;
}

inline Value neg(const Tract& t, const Value& x) {
    if (x.zero) return x;
    return mul(t, epsilon(t), x);
}

// Complex conjugation on the phase hyperfield; identity everywhere else.
inline Value involute(const Tract& t, const Value& x) {
    if (t.kind == Kind::phase && !x.zero) return turn::negate(x);
    return x;
}

inline Value mul(const Tract& t, std::initializer_list<Value> xs) {
    Value r = one(t);
    for (const auto& x : xs) r = mul(t, r, x);
    return r;
}

inline Value div_right(const Tract& t, const Value& x, const Value& y) { return mul(t, x, inv(t, y)); }

// ---- carriers and samples -------------------------------------------------

// Nonzero elements of a finite tract, in canonical order.
inline std::vector<Value> carrier(const Tract& t) {
    switch (t.kind) {
        case Kind::krasner: return {Value::of(1)};
        case Kind::sign: return {Value::of(1), Value::of(-1)};
        case Kind::gfp: {
            std::vector<Value> out;
            for (int i = 1; i < t.p; ++i) out.push_back(Value::of(i));
            return out;
        }
        case Kind::d6: {
            std::vector<Value> out;
            for (int j = 0; j < 2; ++j)
                for (int i = 0; i < 3; ++i) out.push_back(Value::of(i, j));
            return out;
        }
        default: throw DomainError("carrier of an infinite tract; pass an explicit sample");
    }
}

inline std::vector<Value> roots_of_unity(int n) {
    std::vector<Value> out;
    for (int k = 0; k < n; ++k) out.push_back(turn::make(k, n));
    return out;
}

inline std::vector<Value> layer_window(const Tract& t, int lo, int hi) {
    std::vector<Value> out;
    for (int k = lo; k <= hi; ++k)
        for (const auto& r : carrier(t.base_tract())) out.push_back(Value::of(r.a, k));
    return out;
}

// ---- formal sums and the null set -----------------------------------------

struct FormalSum {
    std::vector<Value> terms;

    FormalSum() = default;
    FormalSum(std::initializer_list<Value> xs) {
        for (const auto& x : xs) add(x);
    }
    explicit FormalSum(std::span<const Value> xs) {
        for (const auto& x : xs) add(x);
    }
    void add(const Value& x) {
        if (!x.zero) terms.push_back(x);
    }
    std::size_t size() const { return terms.size(); }
    FormalSum scaled_left(const Tract& t, const Value& g) const {
        FormalSum s;
        for (const auto& x : terms) s.add(mul(t, g, x));
        return s;
    }
    FormalSum scaled_right(const Tract& t, const Value& g) const {
        FormalSum s;
        for (const auto& x : terms) s.add(mul(t, x, g));
        return s;
    }
};

namespace detail {

// Stiemke: no direction w with <w,v> >= 0 for all terms and > 0 for one.
// Candidate directions v_i and v_i +- 1/4 turn suffice: the feasible
// directions form a closed arc whose endpoints are of the form v_i +- 1/4.
inline bool phase_null(std::span<const Value> xs) {
    if (xs.empty()) return true;
    std::vector<Value> cand;
    const Value q = Value::of(1, 4);
    for (const auto& v : xs) {
        cand.push_back(v);
        cand.push_back(turn::add(v, q));
        cand.push_back(turn::sub(v, q));
    }
    for (const auto& w : cand) {
        bool ok = true, strict = false;
        for (const auto& v : xs) {
            Value d = turn::sub(v, w);
            // circular distance from w: min(d, 1-d)
            Value dist = turn::cmp_half(d) <= 0 ? d : turn::negate(d);
            int c = turn::cmp_quarter(dist);
            if (c > 0) { ok = false; break; }
            if (c < 0) strict = true;
        }
        if (ok && strict) return false;
    }
    return true;
}

inline bool finite_null(const Tract& t, std::span<const Value> xs);

inline bool layered_null(const Tract& t, std::span<const Value> xs) {
    if (xs.empty()) return true;
    std::int64_t top = xs[0].b;
    for (const auto& x : xs) top = std::max(top, x.b);
    std::vector<Value> base;
    for (const auto& x : xs)
        if (x.b == top) base.push_back(Value::of(x.a));
    return finite_null(t.base_tract(), base);
}

inline bool finite_null(const Tract& t, std::span<const Value> xs) {
    std::size_t n = xs.size();
    switch (t.kind) {
        case Kind::krasner: return n != 1;
        case Kind::sign: {
            if (n == 0) return true;
            bool pos = false, negv = false;
            for (const auto& x : xs) (x.a > 0 ? pos : negv) = true;
            return pos && negv;
        }
        case Kind::gfp: {
            std::int64_t s = 0;
            for (const auto& x : xs) s = (s + x.a) % t.p;
            return s == 0;
        }
        case Kind::d6:
            if (n == 2) return xs[0] == xs[1];
            return n != 1;
        case Kind::phase: return phase_null(xs);
        case Kind::layered: return layered_null(t, xs);
    }
    return false;
}

}  // namespace detail

inline bool is_null(const Tract& t, std::span<const Value> xs) {
    std::vector<Value> nz;
    nz.reserve(xs.size());
    for (const auto& x : xs)
        if (!x.zero) nz.push_back(x);
    return detail::finite_null(t, nz);
}

inline bool is_null(const Tract& t, const FormalSum& s) { return detail::finite_null(t, s.terms); }

inline bool is_null(const Tract& t, std::initializer_list<Value> xs) {
    return is_null(t, std::span<const Value>(xs.begin(), xs.size()));
}

// z in the iterated hypersum of the elements (reversibility, iterated).
inline bool hypersum_contains(const Tract& t, std::span<const Value> elems, const Value& z) {
    std::vector<Value> all(elems.begin(), elems.end());
    if (!z.zero) all.push_back(neg(t, z));
    return is_null(t, all);
}

inline bool hypersum_contains(const Tract& t, std::initializer_list<Value> elems, const Value& z) {
    return hypersum_contains(t, std::span<const Value>(elems.begin(), elems.size()), z);
}

}  // namespace trm
