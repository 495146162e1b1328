// Explicit descriptions of binary hypersums and their setwise products.
#pragma once

#include "tract.hpp"

#include <optional>
#include <vector>

namespace trm {

// Open arc of the circle starting at `start` and running counterclockwise
// for `len` turns, 0 < len < 1.
struct Arc {
    Value start;
    Value len;

    bool contains(const Value& z) const {
        Value d = turn::sub(z, start);
        return !(d.a == 0) && turn::cmp(d, len) < 0;
    }
};

// A subset of T described finitely: an optional 0, isolated points, open arcs
// (phase only) and a strict down-set {(r,k) : k < below} (layered only).
struct HyperSet {
    bool zero = false;
    std::vector<Value> points;
    std::vector<Arc> arcs;
    std::optional<std::int64_t> below;

    bool contains(const Value& z) const {
        if (z.zero) return zero;
        for (const auto& p : points)
            if (p == z) return true;
        for (const auto& a : arcs)
            if (a.contains(z)) return true;
        return below && z.b < *below;
    }

    bool singleton() const {
        return arcs.empty() && !below && (static_cast<int>(zero) + points.size()) == 1;
    }

    bool empty() const { return !zero && points.empty() && arcs.empty() && !below; }

    void add_point(const Value& v) {
        if (v.zero) {
            zero = true;
            return;
        }
        for (const auto& p : points)
            if (p == v) return;
        points.push_back(v);
    }
};

namespace detail {

inline HyperSet phase_binary(const Value& x, const Value& y) {
    HyperSet s;
    if (x == y) {
        s.add_point(x);
        return s;
    }
    Value d = turn::sub(y, x);
    int c = turn::cmp_half(d);
    if (c == 0) {
        s.zero = true;
        s.add_point(x);
        s.add_point(y);
    } else if (c < 0) {
        s.arcs.push_back({x, d});
    } else {
        s.arcs.push_back({y, turn::negate(d)});
    }
    return s;
}

}  // namespace detail

// x ⊞ y as an explicit set.
inline HyperSet binary_sum(const Tract& t, const Value& x, const Value& y) {
    HyperSet s;
    if (x.zero) {
        s.add_point(y);
        return s;
    }
    if (y.zero) {
        s.add_point(x);
        return s;
    }
    if (t.kind == Kind::phase) return detail::phase_binary(x, y);
    if (t.kind == Kind::layered) {
        if (x.b != y.b) {
            s.add_point(x.b > y.b ? x : y);
            return s;
        }
        Tract bt = t.base_tract();
        Value xs = Value::of(x.a), ys = Value::of(y.a);
        for (const auto& r : carrier(bt))
            if (hypersum_contains(bt, {xs, ys}, r)) s.add_point(Value::of(r.a, x.b));
        if (is_null(bt, {xs, ys})) {
            s.zero = true;
            s.below = x.b;
        }
        return s;
    }
    for (const auto& r : carrier(t))
        if (hypersum_contains(t, {x, y}, r)) s.add_point(r);
    if (is_null(t, {x, y})) s.zero = true;
    return s;
}

// Setwise product {u v : u in A, v in B}.
inline HyperSet product(const Tract& t, const HyperSet& A, const HyperSet& B) {
    HyperSet s;
    if ((A.zero && !B.empty()) || (B.zero && !A.empty())) s.zero = true;
    for (const auto& u : A.points)
        for (const auto& v : B.points) s.add_point(mul(t, u, v));
    if (t.kind == Kind::phase) {
        for (const auto& u : A.points)
            for (const auto& a : B.arcs) s.arcs.push_back({turn::add(u, a.start), a.len});
        for (const auto& a : A.arcs)
            for (const auto& v : B.points) s.arcs.push_back({turn::add(a.start, v), a.len});
        // binary-sum arcs are shorter than half a turn, so sums of two never wrap
        for (const auto& a : A.arcs)
            for (const auto& b : B.arcs)
                s.arcs.push_back({turn::add(a.start, b.start), turn::add(a.len, b.len)});
    }
    if (t.kind == Kind::layered) {
        auto bump = [&](std::int64_t k) {
            if (!s.below || *s.below < k) s.below = k;
        };
        if (A.below) {
            for (const auto& v : B.points) bump(*A.below + v.b);
            if (B.below) bump(*A.below + *B.below - 1);
        }
        if (B.below)
            for (const auto& u : A.points) bump(*B.below + u.b);
    }
    return s;
}

}  // namespace trm
