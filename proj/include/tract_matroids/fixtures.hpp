// Embedded reference data and the verdicts each one is expected to produce.
#pragma once

#include "extension.hpp"
#include "properties.hpp"

#include <array>
#include <string>
#include <vector>

namespace trm::fixtures {

inline std::vector<std::string> names() {
    return {"table2-counterexample", "table1-rank2", "exam2-quintuple", "sign-u34", "layered-window"};
}

// The Pathetic Cancellation failure over the phase hyperfield.
struct Quintuple {
    Tract tract = Tract::phase();
    Value a = turn::make(3, 8), b = turn::make(1, 8), x = turn::make(1, 12), y = turn::make(1, 3), z = turn::make(1, 4);
};

inline Quintuple phase_quintuple() { return {}; }

// Rank 3 left matroid on y1..y4 over P, its six cocircuit rows, and sigma.
struct Counterexample {
    Quintuple q;
    GroundSet ground{std::vector<std::string>{"y1", "y2", "y3", "y4"}};
    // Y23, Y13, Y12, Y24, Y34, Y14 as printed
    std::array<TVector, 6> rows;
    std::array<const char*, 6> row_names{"Y23", "Y13", "Y12", "Y24", "Y34", "Y14"};
    TMatroid cocircuits;
    TMatroid M;
    Localization sigma;
};

inline Counterexample counterexample() {
    Counterexample c;
    const Tract& t = c.q.tract;
    const Value o = one(t), m = epsilon(t), O = Value::nil();
    const Value a = c.q.a, b = c.q.b;
    c.rows = {TVector{o, O, O, o},         TVector{O, o, O, inv(t, b)}, TVector{O, O, o, inv(t, a)},
              TVector{o, O, neg(t, a), O}, TVector{m, b, O, O},         TVector{O, b, neg(t, a), O}};
    c.cocircuits = make_matroid(t, Side::right, c.ground, {c.rows.begin(), c.rows.end()});
    c.M = dual(c.cocircuits);
    c.sigma = check_equivariance(c.M, {{c.rows[0], o},
                                       {c.rows[1], o},
                                       {c.rows[2], m},
                                       {c.rows[3], c.q.x},
                                       {c.rows[4], c.q.y},
                                       {c.rows[5], c.q.z}});
    return c;
}

// Uniform rank 2 on three elements over S, cocircuits laid out as
// Y2 = (Y2(e1), 0, -Y1(e3)), Y1 = (0, Y1(e2), Y1(e3)), Y3 = (Y2(e1), Y1(e2), 0).
struct Rank2 {
    GroundSet ground{std::vector<std::string>{"e1", "e2", "e3"}};
    std::array<TVector, 3> Y;  // Y1, Y2, Y3
    TMatroid M;
    Localization sigma;
};

inline Rank2 sign_u23() {
    Rank2 r;
    const Tract t = Tract::sign();
    const Value o = Value::of(1), m = Value::of(-1), O = Value::nil();
    r.Y = {TVector{O, o, o}, TVector{o, O, m}, TVector{o, o, O}};
    r.M = dual(make_matroid(t, Side::right, r.ground, {r.Y.begin(), r.Y.end()}));
    r.sigma = check_equivariance(r.M, {{r.Y[0], o}, {r.Y[1], o}, {r.Y[2], o}});
    return r;
}

// Four vectors in R^3 with v1 - v2 + v3 - v4 = 0 and a point p in general
// position; sigma(Y) is the sign of Y's defining functional at p.
struct SignU34 {
    std::array<std::array<long, 3>, 4> v{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 1}}};
    std::array<long, 3> p{2, 3, -1};
    GroundSet ground{std::vector<std::string>{"1", "2", "3", "4"}};
    TMatroid M;
    Localization sigma;
};

namespace detail {

inline std::array<long, 3> cross(const std::array<long, 3>& a, const std::array<long, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline long dot(const std::array<long, 3>& a, const std::array<long, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Value sign_of(long x) { return x == 0 ? Value::nil() : Value::of(x > 0 ? 1 : -1); }

}  // namespace detail

inline SignU34 sign_u34() {
    SignU34 f;
    const Tract t = Tract::sign();
    f.M = make_matroid(t, Side::left, f.ground, {TVector{Value::of(1), Value::of(-1), Value::of(1), Value::of(-1)}});
    std::vector<std::pair<TVector, Value>> raw;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            auto l = detail::cross(f.v[static_cast<std::size_t>(i)], f.v[static_cast<std::size_t>(j)]);
            TVector Y;
            for (const auto& w : f.v) Y.push_back(detail::sign_of(detail::dot(l, w)));
            raw.push_back({Y, detail::sign_of(detail::dot(l, f.p))});
        }
    f.sigma = check_equivariance(f.M, raw);
    return f;
}

// S x| Z restricted to layers -3..3.
struct LayeredWindow {
    Tract tract = Tract::layered(Kind::sign);
    int lo = -3, hi = 3;
    std::vector<Value> sample() const { return layer_window(tract, lo, hi); }
};

inline LayeredWindow layered_window() { return {}; }

}  // namespace trm::fixtures
