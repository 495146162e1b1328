// Deletion, contraction, quasi-Pluecker minors, rescaling and induced sigma.
#pragma once

#include "localization.hpp"
#include "plucker.hpp"

#include <vector>

namespace trm {

enum class MinorKind { contract, remove };

namespace detail {

// Minimal-support members of a family of nonzero vectors.
inline std::vector<TVector> minimal_support(const std::vector<TVector>& vs) {
    std::vector<TVector> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Mask s = support(vs[i]);
        if (s == 0) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < vs.size() && minimal; ++j) {
            Mask o = support(vs[j]);
            if (o != 0 && o != s && (o & ~s) == 0) minimal = false;
        }
        if (minimal) out.push_back(vs[i]);
    }
    return out;
}

inline TMatroid contract(const TMatroid& M, Mask B) {
    std::vector<TVector> vs;
    for (const auto& X : M.circuits) vs.push_back(restrict_away(X, B));
    return make_matroid(M.tract, M.chirality, M.ground.without(B), minimal_support(vs));
}

inline TMatroid remove(const TMatroid& M, Mask A) {
    std::vector<TVector> vs;
    for (const auto& X : M.circuits)
        if ((support(X) & A) == 0) vs.push_back(restrict_away(X, A));
    return make_matroid(M.tract, M.chirality, M.ground.without(A), std::move(vs));
}

// Re-indexes a mask on E to E \ gone.
inline Mask squeeze(Mask m, Mask gone, int n) {
    Mask out = 0;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        if (has(gone, i)) continue;
        if (has(m, i)) out |= bit(k);
        ++k;
    }
    return out;
}

inline Mask spread(Mask m, Mask gone, int n) {
    Mask out = 0;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        if (has(gone, i)) continue;
        if (has(m, k)) out |= bit(i);
        ++k;
    }
    return out;
}

}  // namespace detail

// M \ A / B, contracting first. Both sets are masks on M's ground set.
inline TMatroid minor(const TMatroid& M, Mask del, Mask con) {
    if (del & con) throw PreconditionError("minor: deletion and contraction sets overlap");
    if ((del | con) == M.ground.full()) throw PreconditionError("minor: nothing would remain of the ground set");
    TMatroid C = con ? detail::contract(M, con) : M;
    if (!del) return C;
    return detail::remove(C, detail::squeeze(del, con, M.size()));
}

// [B, B']/A = [B + I_A, B' + I_A] and [B, B']\A = [B + J_A, B' + J_A].
// choice 0 scans in ground order, choice 1 in reverse.
inline QuasiPlucker qp_minor(const QuasiPlucker& Q, Mask A, MinorKind kind, int choice = 0) {
    const int n = Q.size();
    if (A == 0) return Q;
    if (A == Q.ground.full()) throw PreconditionError("qp_minor: nothing would remain of the ground set");
    UnderlyingMatroid U = Q.underlying();
    bool rev = choice != 0;
    Mask extra;
    UnderlyingMatroid N;
    if (kind == MinorKind::contract) {
        extra = U.greedy_basis(A, 0, rev);
        N = U.minor(0, A);
    } else {
        Mask rest = U.full() & ~A;
        extra = U.greedy_basis(U.full(), U.greedy_basis(rest, 0, rev), rev) & A;
        if (U.r(rest | extra) != U.rank()) throw PreconditionError("qp_minor: complement cannot be completed to spanning");
        N = U.minor(A, 0);
    }
    QuasiPlucker out(Q.tract, Q.chirality, Q.ground.without(A), N.bases());
    for (auto [x, y] : out.domain()) {
        Mask bx = detail::spread(x, A, n) | extra, by = detail::spread(y, A, n) | extra;
        out.values[{x, y}] = Q.at(bx, by);
    }
    return out;
}

// Right rescaling by rho, applied on the cocircuit side as rho.D (Y.rho for
// a right matroid); circuits follow as X.conj(rho)^-1 (conj(rho)^-1.X).
using RescalingMap = std::vector<Value>;

inline TMatroid rescale(const TMatroid& M, const RescalingMap& rho) {
    const Tract& t = M.tract;
    if (static_cast<int>(rho.size()) != M.size()) throw PreconditionError("rescaling map must cover the ground set");
    for (const auto& r : rho)
        if (r.zero) throw PreconditionError("rescaling map must be nonzero");
    std::vector<TVector> out;
    for (const auto& X : M.circuits) {
        TVector Y = X;
        for (std::size_t e = 0; e < X.size(); ++e) {
            Value c = inv(t, involute(t, rho[e]));
            Y[e] = M.chirality == Side::left ? mul(t, X[e], c) : mul(t, c, X[e]);
        }
        out.push_back(std::move(Y));
    }
    return make_matroid(t, M.chirality, M.ground, std::move(out));
}

// rho applied to a cocircuit family of a matroid with the given chirality.
inline TMatroid rescale_cocircuits(const TMatroid& D, Side base_chirality, const RescalingMap& rho) {
    const Tract& t = D.tract;
    std::vector<TVector> out;
    for (const auto& Y : D.circuits) {
        TVector Z = Y;
        for (std::size_t e = 0; e < Y.size(); ++e)
            Z[e] = base_chirality == Side::left ? mul(t, rho[e], Y[e]) : mul(t, Y[e], rho[e]);
        out.push_back(std::move(Z));
    }
    return make_matroid(t, D.chirality, D.ground, std::move(out));
}

namespace detail {

inline Localization induce_delete_one(const Localization& s, int e0) {
    const Tract& t = s.tract();
    TMatroid base = minor(s.base, bit(e0), 0);
    TMatroid D = dual(base);
    std::vector<Value> vals;
    for (const auto& U : D.circuits) {
        Mask su = support(U);
        std::optional<Value> v;
        for (std::size_t i = 0; i < s.cocircuits.circuits.size() && !v; ++i) {
            TVector R = restrict_away(s.cocircuits.circuits[i], bit(e0));
            if (support(R) != su) continue;
            // U = R.beta (right action) or beta.R
            auto beta = proportion(t, R, U, D.chirality);
            if (!beta) throw MatroidError("restricted cocircuit is not proportional to the minor's representative");
            const Value& x = s.values[i];
            v = x.zero ? x : (D.chirality == Side::right ? mul(t, x, *beta) : mul(t, *beta, x));
        }
        if (!v) throw MatroidError("a cocircuit of the deletion has no preimage");
        vals.push_back(*v);
    }
    return make_localization(base, std::move(vals), s.p, &D);
}

}  // namespace detail

// sigma/A on C*(M/A) or sigma\A on C*(M\A).
inline Localization induce_sigma(const Localization& s, Mask A, MinorKind kind) {
    if (A == 0) return s;
    const int n = s.base.size();
    if (kind == MinorKind::contract) {
        TMatroid base = minor(s.base, 0, A);
        TMatroid D = dual(base);
        std::vector<Value> vals;
        for (const auto& Z : D.circuits) vals.push_back(s.at(lift_zero(Z, A, n)));
        return make_localization(base, std::move(vals), s.p, &D);
    }
    // one element at a time, highest index first so lower indices stay put
    Localization cur = s;
    for (int e = n - 1; e >= 0; --e)
        if (has(A, e)) cur = detail::induce_delete_one(cur, e);
    return cur;
}

}  // namespace trm
