// Independent reference implementations used by the tests. Nothing here calls
// into the library's matroid or extension code.
#pragma once

#include "tract_matroids/tract.hpp"
#include "tract_matroids/tvec.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using trm::Mask;
using trm::TVector;
using trm::Value;
using Vec3 = std::array<long, 3>;

// ---- integer linear algebra over R and GF(p) --------------------------------

inline long det2(long a, long b, long c, long d) { return a * d - b * c; }

inline long det3(const Vec3& u, const Vec3& v, const Vec3& w) {
    return u[0] * det2(v[1], v[2], w[1], w[2]) - u[1] * det2(v[0], v[2], w[0], w[2]) + u[2] * det2(v[0], v[1], w[0], w[1]);
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline long dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Value sign_value(long x) { return x == 0 ? Value::nil() : Value::of(x > 0 ? 1 : -1); }

inline Value mod_value(long x, long p) {
    long r = ((x % p) + p) % p;
    return r == 0 ? Value::nil() : Value::of(r);
}

// Rank of the columns indexed by S, for vectors in (at most) 3 coordinates.
inline int rank_of(const std::vector<Vec3>& v, Mask S, long p = 0) {
    auto nz = [&](long x) { return p ? x % p != 0 : x != 0; };
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (trm::has(S, i)) idx.push_back(i);
    int r = 0;
    for (int i : idx)
        if (nz(v[static_cast<std::size_t>(i)][0]) || nz(v[static_cast<std::size_t>(i)][1]) ||
            nz(v[static_cast<std::size_t>(i)][2]))
            r = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            Vec3 c = cross(v[static_cast<std::size_t>(idx[a])], v[static_cast<std::size_t>(idx[b])]);
            if (nz(c[0]) || nz(c[1]) || nz(c[2])) r = std::max(r, 2);
            for (std::size_t d = b + 1; d < idx.size(); ++d)
                if (nz(dot(c, v[static_cast<std::size_t>(idx[d])]))) return 3;
        }
    return r;
}

// Minimal-support members of a family, deduplicated.
inline std::vector<TVector> minimal(const std::vector<TVector>& vs) {
    std::set<TVector> out;
    for (const auto& X : vs) {
        Mask s = trm::support(X);
        if (!s) continue;
        bool ok = true;
        for (const auto& Y : vs) {
            Mask o = trm::support(Y);
            if (o && o != s && (o & ~s) == 0) ok = false;
        }
        if (ok) out.insert(X);
    }
    return {out.begin(), out.end()};
}

// Sign vectors of every functional vanishing on a spanning set of a
// hyperplane. Vectors live in R^3; rank-2 configurations use z = 0.
inline std::vector<TVector> real_cocircuits(const std::vector<Vec3>& v) {
    std::vector<Vec3> normals;
    int r = rank_of(v, (Mask{1} << v.size()) - 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (r == 2) normals.push_back({-v[i][1], v[i][0], 0});
        for (std::size_t j = i + 1; j < v.size() && r == 3; ++j) normals.push_back(cross(v[i], v[j]));
    }
    if (r == 1)
        for (const auto& w : v)
            if (w != Vec3{0, 0, 0}) normals.push_back(w);
    std::vector<TVector> out;
    for (const auto& l : normals) {
        TVector Y;
        for (const auto& w : v) Y.push_back(sign_value(dot(l, w)));
        out.push_back(Y);
        TVector N = Y;
        for (auto& x : N)
            if (!x.zero) x = Value::of(-x.a);
        out.push_back(N);
    }
    return minimal(out);
}

// Every functional on GF(p)^3; minimal supports are the cocircuits.
inline std::vector<TVector> field_cocircuits(const std::vector<Vec3>& v, long p) {
    std::vector<TVector> out;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c) {
                TVector Y;
                for (const auto& w : v) Y.push_back(mod_value(a * w[0] + b * w[1] + c * w[2], p));
                out.push_back(Y);
            }
    return minimal(out);
}

// Signed circuits of a real configuration: minimal dependent sets with the
// sign pattern of the (unique up to scale) dependency, by Cramer's rule.
inline std::vector<TVector> real_circuits(const std::vector<Vec3>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<TVector> out;
    for (Mask S = 1; S < (Mask{1} << n); ++S) {
        int k = std::popcount(S);
        if (k > 4 || rank_of(v, S) != k - 1) continue;
        bool minimal_dep = true;
        for (int e = 0; e < n; ++e)
            if (trm::has(S, e) && rank_of(v, S & ~trm::bit(e)) != k - 1) minimal_dep = false;
        if (!minimal_dep) continue;
        std::vector<int> idx;
        for (int e = 0; e < n; ++e)
            if (trm::has(S, e)) idx.push_back(e);
        // choose k-1 coordinate rows on which the columns still have rank k-1
        std::vector<long> coef;
        for (int r0 = 0; r0 < 3 && coef.empty(); ++r0)
            for (int r1 = r0; r1 < 3 && coef.empty(); ++r1)
                for (int r2 = r1; r2 < 3 && coef.empty(); ++r2) {
                    std::array<int, 3> rows{r0, r1, r2};
                    if ((k - 1 >= 2 && r1 == r0) || (k - 1 >= 3 && (r2 == r1))) continue;
                    std::vector<long> c(static_cast<std::size_t>(k));
                    bool any = false;
                    for (int j = 0; j < k; ++j) {
                        std::vector<Vec3> cols;
                        for (int m = 0; m < k; ++m)
                            if (m != j) cols.push_back(v[static_cast<std::size_t>(idx[static_cast<std::size_t>(m)])]);
                        long d = 0;
                        auto at = [&](std::size_t col, int row) { return cols[col][static_cast<std::size_t>(rows[static_cast<std::size_t>(row)])]; };
                        if (k == 1) d = 1;
                        else if (k == 2) d = at(0, 0);
                        else if (k == 3) d = det2(at(0, 0), at(1, 0), at(0, 1), at(1, 1));
                        else d = det3({at(0, 0), at(0, 1), at(0, 2)}, {at(1, 0), at(1, 1), at(1, 2)}, {at(2, 0), at(2, 1), at(2, 2)});
                        c[static_cast<std::size_t>(j)] = (j % 2 ? -d : d);
                        if (d) any = true;
                    }
                    if (any) coef = c;
                }
        if (k == 1) coef = {1};
        TVector X = trm::zero_vector(n);
        for (int j = 0; j < k; ++j) X[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] = sign_value(coef[static_cast<std::size_t>(j)]);
        out.push_back(X);
    }
    return out;
}

// ---- oriented matroid circuit axioms, checked literally ---------------------

inline TVector negate_signs(const TVector& X) {
    TVector N = X;
    for (auto& x : N)
        if (!x.zero) x = Value::of(-x.a);
    return N;
}

// (C0) no zero vector, (C1) closed under negation (applied to the input),
// (C2) comparable supports only for X = +-Y, (C3) elimination for every pair
// X != -Y and every e in X+ & Y-.
inline bool om_circuit_axioms(const std::vector<TVector>& input) {
    std::set<TVector> C;
    for (const auto& X : input) {
        C.insert(X);
        C.insert(negate_signs(X));
    }
    auto pos = [](const TVector& X) {
        Mask m = 0;
        for (std::size_t i = 0; i < X.size(); ++i)
            if (!X[i].zero && X[i].a > 0) m |= trm::bit(static_cast<int>(i));
        return m;
    };
    auto negs = [](const TVector& X) {
        Mask m = 0;
        for (std::size_t i = 0; i < X.size(); ++i)
            if (!X[i].zero && X[i].a < 0) m |= trm::bit(static_cast<int>(i));
        return m;
    };
    for (const auto& X : C)
        if (trm::support(X) == 0) return false;
    for (const auto& X : C)
        for (const auto& Y : C) {
            if (X == Y || X == negate_signs(Y)) continue;
            if ((trm::support(X) & ~trm::support(Y)) == 0) return false;
        }
    for (const auto& X : C)
        for (const auto& Y : C) {
            if (X == negate_signs(Y)) continue;
            Mask both = pos(X) & negs(Y);
            for (int e = 0; e < 32; ++e) {
                if (!trm::has(both, e)) continue;
                Mask P = (pos(X) | pos(Y)) & ~trm::bit(e), N = (negs(X) | negs(Y)) & ~trm::bit(e);
                bool found = false;
                for (const auto& Z : C)
                    if ((pos(Z) & ~P) == 0 && (negs(Z) & ~N) == 0) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
        }
    return true;
}

// Random integer configuration of n vectors spanning R^r (r <= 3).
inline std::vector<Vec3> random_config(std::mt19937& rng, int r, int n, int span = 2) {
    std::uniform_int_distribution<long> d(-span, span);
    while (true) {
        std::vector<Vec3> v;
        for (int i = 0; i < n; ++i) {
            Vec3 w{0, 0, 0};
            for (int c = 0; c < r; ++c) w[static_cast<std::size_t>(c)] = d(rng);
            v.push_back(w);
        }
        if (rank_of(v, (Mask{1} << n) - 1) == r) return v;
    }
}

}  // namespace oracle
