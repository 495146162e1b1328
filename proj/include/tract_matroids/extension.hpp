// Single-element extensions from localizations.
#pragma once

#include "minors.hpp"
#include "parallel.hpp"

#include <string>
#include <utility>
#include <vector>

namespace trm {

struct ExtensionError : std::runtime_error {
    AxiomReport report;
    ExtensionError(const std::string& what, AxiomReport r) : std::runtime_error(what), report(std::move(r)) {}
};

namespace detail {

inline bool modular_cocircuits(const UnderlyingMatroid& U, Mask s1, Mask s2) {
    if (s1 == s2) return false;
    Mask z = U.full() & ~s1 & ~s2;
    return U.r(z) == U.rank() - 2;
}

// a.b.c... on the base side: as written for a left base, reversed for right.
inline Value ordered(const Localization& s, std::initializer_list<Value> xs) {
    return chiral(s.tract(), s.base.chirality, xs);
}

}  // namespace detail

// B plus every F+p with |F| = d-1 independent and sigma nonzero on the
// cocircuit of E \ cl(F). Masks on E + p, p the last element.
inline std::vector<Mask> extended_bases(const Localization& s) {
    const auto& U = s.base.underlying();
    const int n = U.size(), d = U.rank();
    std::vector<Mask> out = U.bases();
    for (Mask F = 0; F <= U.full(); ++F) {
        if (popcount(F) != d - 1 || !U.independent(F)) continue;
        if (!s.on_hyperplane_of(F).zero) out.push_back(F | bit(n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// [.]_p by cases on where p sits.
inline QuasiPlucker extended_qp(const Localization& s, const QuasiPlucker* base_qp = nullptr) {
    const Tract& t = s.tract();
    const auto& U = s.base.underlying();
    const int n = U.size();
    const Mask P = bit(n);
    QuasiPlucker Q0 = base_qp ? *base_qp : qp_from_circuits(s.base, &s.cocircuits);
    QuasiPlucker Q(t, s.base.chirality, s.base.ground.with(s.p), extended_bases(s));
    auto at = [](const TVector& Y, int e) { return Y[static_cast<std::size_t>(e)]; };
    for (auto [A, B] : Q.domain()) {
        Mask F = A & B;
        int si = lowest(A & ~F), ti = lowest(B & ~F);
        Value v;
        if (!((A | B) & P)) {
            v = Q0.at(A, B);
        } else if (si == n) {
            const TVector& Y = s.rep_on_hyperplane_of(F);
            v = involute(t, detail::ordered(s, {s.on_hyperplane_of(F), inv(t, at(Y, ti))}));
        } else if (ti == n) {
            const TVector& Y = s.rep_on_hyperplane_of(F);
            v = involute(t, detail::ordered(s, {at(Y, si), inv(t, s.on_hyperplane_of(F))}));
        } else {
            Mask G = F & ~P;
            Mask Gst = G | bit(si) | bit(ti);
            if (!U.is_basis(Gst)) {
                bool found = false;
                for (int g = 0; g < n && !found; ++g) {
                    if (has(Gst, g)) continue;
                    Mask a = G | bit(si) | bit(g), b = G | bit(ti) | bit(g);
                    if (U.is_basis(a) && U.is_basis(b)) {
                        v = Q0.at(a, b);
                        found = true;
                    }
                }
                if (!found) throw MatroidError("no g completing G+s and G+t to bases");
            } else {
                const TVector& Ys = s.rep_on_hyperplane_of(G | bit(si));
                const TVector& Yt = s.rep_on_hyperplane_of(G | bit(ti));
                const Value& ss = s.on_hyperplane_of(G | bit(si));
                const Value& st = s.on_hyperplane_of(G | bit(ti));
                v = neg(t, involute(t, detail::ordered(s, {at(Yt, si), inv(t, st), ss, inv(t, at(Ys, ti))})));
            }
        }
        Q.values[{A, B}] = v;
    }
    return Q;
}

// Mod(Y1, Y2, p): the cocircuit of the extension eliminating p between the
// lifts of a modular pair with sigma(Y1) = -sigma(Y2) != 0. Length |E|+1.
inline TVector mod_cocircuit(const Localization& s, const TVector& Y1, const TVector& Y2) {
    const Tract& t = s.tract();
    const auto& U = s.base.underlying();
    const int n = U.size();
    if (!s.cocircuits.contains(Y1) || !s.cocircuits.contains(Y2))
        throw PreconditionError("mod_cocircuit: Y1 and Y2 must be cocircuits");
    Mask a = support(Y1), b = support(Y2);
    if (!detail::modular_cocircuits(U, a, b)) throw PreconditionError("mod_cocircuit: not a modular pair");
    Value s1 = s.at(Y1), s2 = s.at(Y2);
    if (s1.zero || s2 != neg(t, s1)) throw PreconditionError("mod_cocircuit: need sigma(Y1) = -sigma(Y2) != 0");
    TVector X = zero_vector(n + 1);
    Mask I = U.greedy_basis(U.full() & ~a & ~b);
    int e1 = lowest(b & ~a);
    for (int f = 0; f < n; ++f) {
        auto uf = static_cast<std::size_t>(f);
        if (has(a, f) && !has(b, f)) X[uf] = Y1[uf];
        else if (has(b, f) && !has(a, f)) X[uf] = Y2[uf];
        else if (has(a & b, f)) {
            Mask Fe = I | bit(f);
            const TVector& Ye = s.rep_on_hyperplane_of(Fe);
            const Value& se = s.on_hyperplane_of(Fe);
            auto ue1 = static_cast<std::size_t>(e1);
            X[uf] = neg(t, detail::ordered(s, {Y1[uf], inv(t, s1), se, inv(t, Ye[ue1]), Y2[ue1]}));
        }
    }
    return X;
}

// Lift (Y, sigma(Y)) of a cocircuit.
inline TVector lifted(const Localization& s, const TVector& Y) { return appended(Y, s.at(Y)); }

struct Provenance {
    enum class Kind { lifted, modular } kind = Kind::lifted;
    std::size_t first = 0, second = 0;  // indices into sigma's cocircuit representatives
};

struct ExtensionResult {
    TMatroid extended;    // circuits on E + p
    TMatroid cocircuits;  // cocircuits on E + p
    QuasiPlucker extended_qp;
    std::vector<Provenance> provenance;  // parallel to cocircuits.circuits
};

namespace detail {

// Second member of a pair, scaled so that sigma(Y2) = -sigma(Y1).
inline TVector balanced(const Localization& s, const TVector& R1, const TVector& R2) {
    const Tract& t = s.tract();
    Value target = neg(t, s.at(R1)), cur = s.at(R2);
    Value beta = s.action() == Side::right ? mul(t, inv(t, cur), target) : mul(t, target, inv(t, cur));
    return scale(t, R2, beta, s.action());
}

// Lifts plus Mod(Y1, Y2, p) over every modular pair of classes with both
// sigma values nonzero, tagged.
inline std::vector<std::pair<TVector, Provenance>> candidate_cocircuits(const Localization& s) {
    const auto& U = s.base.underlying();
    const auto& C = s.cocircuits.circuits;
    std::vector<std::pair<TVector, Provenance>> out;
    for (std::size_t i = 0; i < C.size(); ++i)
        out.push_back({appended(C[i], s.values[i]), {Provenance::Kind::lifted, i, i}});
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = i + 1; j < C.size(); ++j) {
            if (s.values[i].zero || s.values[j].zero) continue;
            if (!modular_cocircuits(U, support(C[i]), support(C[j]))) continue;
            out.push_back({mod_cocircuit(s, C[i], balanced(s, C[i], C[j])), {Provenance::Kind::modular, i, j}});
        }
    return out;
}

// Necessary conditions on the candidate cocircuits of the would-be
// extension: incomparable supports, and for each ordered modular pair every
// candidate in position to eliminate an element must actually do so.
inline void check_candidates(const Localization& s, AxiomReport& rep) {
    const Tract& t = s.tract();
    std::vector<TVector> vs;
    for (auto& [v, _] : candidate_cocircuits(s)) vs.push_back(v);
    TMatroid K = make_matroid(t, s.action(), s.base.ground.with(s.p), std::move(vs));
    const auto& C = K.circuits;
    std::vector<Mask> S = K.supports();
    rep.check("incomparability");
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = 0; j < C.size(); ++j)
            if (i != j && (S[i] & ~S[j]) == 0)
                rep.fail({"incomparability", {C[i], C[j]}, {S[i], S[j]}, {}, {}, "candidate supports are comparable"});
    rep.check("elimination");
    UnionLattice L(S);
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = 0; j < C.size(); ++j) {
            if (i == j || (S[i] & ~S[j]) == 0 || (S[j] & ~S[i]) == 0 || !L.modular_pair(S[i], S[j])) continue;
            const TVector& X = C[i];
            int f0 = lowest(S[i] & ~S[j]);
            for (int e = 0; e < K.size(); ++e) {
                if (!has(S[i] & S[j], e)) continue;
                TVector Y = oppose(t, X, C[j], e, K.chirality);
                Mask room = (S[i] | S[j]) & ~bit(e);
                bool any = false;
                for (const auto& W : C) {
                    Mask w = support(W);
                    if ((w & ~room) != 0) continue;
                    any = true;
                    auto uf0 = static_cast<std::size_t>(f0);
                    if (!has(w, f0)) {
                        rep.fail({"elimination", {X, Y, W}, {S[i], S[j]}, {e, f0}, FormalSum{X[uf0], Y[uf0]},
                                  "eliminant vanishes where only X is nonzero"});
                        continue;
                    }
                    TVector Z = pin(t, W, f0, X[uf0], K.chirality);
                    for (int f = 0; f < K.size(); ++f) {
                        auto u = static_cast<std::size_t>(f);
                        FormalSum sum{X[u], Y[u], neg(t, Z[u])};
                        if (!is_null(t, sum)) {
                            rep.fail({"elimination", {X, Y, Z}, {S[i], S[j]}, {e, f}, sum,
                                      "X + Y - Z is not null at an element"});
                            break;
                        }
                    }
                }
                if (!any) rep.fail({"elimination", {X, Y}, {S[i], S[j]}, {e}, {}, "no candidate eliminates the element"});
            }
        }
}

}  // namespace detail

struct LocalizationOptions {
    bool diagnose = true;  // also run the candidate-cocircuit checks
    std::size_t cap_per_axiom = 64;
};

// Basis exchange on the extended family and the quasi-Pluecker axioms on
// [.]_p; mode "strong" swaps P4/P5 for P4'/P5'.
inline AxiomReport is_localization(const Localization& s, const std::string& mode = "weak",
                                   const LocalizationOptions& opt = {}) {
    AxiomReport rep;
    rep.mode = mode;
    rep.cap_per_axiom = opt.cap_per_axiom;
    const int n = s.base.size();
    std::vector<Mask> B = extended_bases(s), w;
    rep.check("exchange");
    if (!UnderlyingMatroid::exchange_holds(n + 1, B, &w)) {
        rep.fail({"exchange", {}, w, {}, {}, "extended basis family fails basis exchange"});
    } else {
        QuasiPlucker Q = extended_qp(s);
        AxiomReport q = check_qp_axioms(Q, mode);
        q.cap_per_axiom = opt.cap_per_axiom;
        rep.merge(q);
    }
    if (opt.diagnose) {
        AxiomReport d;
        d.cap_per_axiom = opt.cap_per_axiom;
        detail::check_candidates(s, d);
        rep.merge(d);
    }
    return rep;
}

// The extension determined by a localization; refuses anything else.
inline ExtensionResult extend(const Localization& s, const std::string& mode = "weak") {
    AxiomReport r = is_localization(s, mode);
    if (!r.passed()) throw ExtensionError("sigma is not a localization", r);
    const Tract& t = s.tract();
    const int n = s.base.size();
    auto cands = detail::candidate_cocircuits(s);
    std::vector<TVector> vs;
    for (auto& [v, _] : cands) vs.push_back(v);
    ExtensionResult out;
    out.cocircuits = make_matroid(t, s.action(), s.base.ground.with(s.p), std::move(vs));
    out.extended = dual(out.cocircuits);
    if (minor(out.extended, bit(n), 0) != s.base)
        throw MatroidError("deleting the new element does not recover the base matroid");
    out.extended_qp = extended_qp(s);
    for (const auto& Y : out.cocircuits.circuits) {
        Provenance pv;
        for (const auto& [v, tag] : cands)
            if (support(v) == support(Y)) {
                pv = tag;
                break;
            }
        out.provenance.push_back(pv);
    }
    return out;
}

// The unique sigma with (Y, sigma(Y)) a cocircuit of the extension.
inline Localization sigma_from_extension(const TMatroid& base, const TMatroid& extended, const std::string& p) {
    const int n = base.size();
    int pi = extended.ground.index(p);
    if (pi != n || extended.size() != n + 1) throw PreconditionError("the new label must be the last ground element");
    if (minor(extended, bit(n), 0) != base) throw PreconditionError("deleting the new element does not give the base");
    if (extended.rank() == base.rank() + 1) throw PreconditionError("the new element is a coloop: trivial extension");
    const Tract& t = base.tract;
    TMatroid Dt = dual(extended), D = dual(base);
    std::vector<Value> vals;
    for (const auto& Y : D.circuits) {
        std::optional<Value> v;
        for (const auto& W : Dt.circuits) {
            TVector R(W.begin(), W.end() - 1);
            if (support(R) != support(Y)) continue;
            auto g = proportion(t, Y, R, D.chirality);
            if (!g) throw MatroidError("restricted cocircuit not proportional to the base representative");
            const Value& wp = W.back();
            Value gi = inv(t, *g);
            v = wp.zero ? wp : (D.chirality == Side::right ? mul(t, wp, gi) : mul(t, gi, wp));
            break;
        }
        if (!v) throw MatroidError("a base cocircuit has no lift to the extension");
        vals.push_back(*v);
    }
    return make_localization(base, std::move(vals), p, &D);
}

// Y3 eliminating e between Y1 and Y2 (cocircuits of the base), or nullopt.
inline bool eliminates(const Localization& s, const TVector& Y1, const TVector& Y2, const TVector& Y3, int e) {
    const Tract& t = s.tract();
    auto ue = static_cast<std::size_t>(e);
    if (Y1[ue].zero || Y2[ue] != neg(t, Y1[ue]) || !Y3[ue].zero) return false;
    return detail::sum_null_everywhere(t, {&Y1, &Y2}, Y3);
}

// sigma(Y1) + sigma(Y2) - sigma(Y3) as a formal sum.
inline FormalSum elimination_sum(const Localization& s, const TVector& Y1, const TVector& Y2, const TVector& Y3) {
    return FormalSum{s.at(Y1), s.at(Y2), neg(s.tract(), s.at(Y3))};
}

struct Rank2Verdict {
    bool localization = false;
    std::vector<TVector> triple;  // Y1, Y2, Y3 of the first witness
    int element = -1;
    FormalSum sum;
};

// Uniform rank 2 on three elements: a localization iff some elimination
// triple has sigma(Y1) + sigma(Y2) - sigma(Y3) null.
inline Rank2Verdict rank2_localization_test(const Localization& s) {
    const Tract& t = s.tract();
    const auto& U = s.base.underlying();
    if (U.size() != 3 || U.rank() != 2 || U.bases().size() != 3)
        throw PreconditionError("rank2_localization_test needs a uniform rank 2 matroid on three elements");
    const auto& C = s.cocircuits.circuits;
    Rank2Verdict v;
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = 0; j < C.size(); ++j) {
            if (i == j) continue;
            Mask si = support(C[i]), sj = support(C[j]);
            int e = lowest(si & sj);
            int f0 = lowest(si & ~sj);
            TVector Y2 = detail::oppose(t, C[i], C[j], e, s.cocircuits.chirality);
            for (std::size_t k = 0; k < C.size(); ++k) {
                if (k == i || k == j || !has(support(C[k]), f0)) continue;
                TVector Y3 = detail::pin(t, C[k], f0, C[i][static_cast<std::size_t>(f0)], s.cocircuits.chirality);
                if (!eliminates(s, C[i], Y2, Y3, e)) continue;
                FormalSum sum = elimination_sum(s, C[i], Y2, Y3);
                if (is_null(t, sum)) {
                    v.localization = true;
                    v.triple = {C[i], Y2, Y3};
                    v.element = e;
                    v.sum = sum;
                    return v;
                }
            }
        }
    return v;
}

// sigma(Y1) + sigma(Y2) - sigma(Y3) null for every modular pair and every
// cocircuit Y3 eliminating an element between them.
inline AxiomReport modular_triple_criterion(const Localization& s) {
    const Tract& t = s.tract();
    const auto& U = s.base.underlying();
    const auto& C = s.cocircuits.circuits;
    const Side side = s.cocircuits.chirality;
    AxiomReport rep;
    rep.mode = "weak";
    rep.check("additivity");
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = 0; j < C.size(); ++j) {
            if (i == j) continue;
            Mask si = support(C[i]), sj = support(C[j]);
            if (!detail::modular_cocircuits(U, si, sj)) continue;
            int f0 = lowest(si & ~sj);
            for (int e = 0; e < U.size(); ++e) {
                if (!has(si & sj, e)) continue;
                TVector Y2 = detail::oppose(t, C[i], C[j], e, side);
                for (const auto& R : C) {
                    Mask r = support(R);
                    if (has(r, e) || !has(r, f0) || (r & ~(si | sj)) != 0) continue;
                    TVector Y3 = detail::pin(t, R, f0, C[i][static_cast<std::size_t>(f0)], side);
                    if (!eliminates(s, C[i], Y2, Y3, e)) continue;
                    FormalSum sum = elimination_sum(s, C[i], Y2, Y3);
                    if (!is_null(t, sum))
                        rep.fail({"additivity", {C[i], Y2, Y3}, {si, sj}, {e}, sum,
                                  "sigma(Y1) + sigma(Y2) - sigma(Y3) not null"});
                }
            }
        }
    return rep;
}

struct MinorCheck {
    std::string kind;  // "contraction" or "minor3"
    Mask contracted = 0;
    Mask kept = 0;     // the three survivors, for minor3
    bool passed = false;
};

struct Characterization {
    bool full = false;
    bool rank2_contractions = false;
    bool rank2_minors3 = false;
    std::vector<MinorCheck> checks;
    std::vector<std::string> notes;
    bool agree() const { return full == rank2_contractions && full == rank2_minors3; }
};

// Flats of rank d-2, as closures of independent (d-2)-sets.
inline std::vector<Mask> corank2_flats(const UnderlyingMatroid& U) {
    std::vector<Mask> out;
    int k = U.rank() - 2;
    if (k < 0) return out;
    for (Mask I = 0; I <= U.full(); ++I)
        if (popcount(I) == k && U.independent(I)) out.push_back(U.closure(I));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline Characterization characterize(const Localization& s, const std::string& mode = "weak", unsigned jobs = 1) {
    Characterization c;
    LocalizationOptions quiet{false, 1};
    c.full = is_localization(s, mode, quiet).passed();
    const auto& U = s.base.underlying();
    const int n = U.size();
    std::vector<MinorCheck> tasks;
    for (Mask A : corank2_flats(U)) {
        tasks.push_back({"contraction", A, U.full() & ~A, false});
        Mask rest = U.full() & ~A;
        for (Mask T = rest; T; T = (T - 1) & rest)
            if (popcount(T) == 3 && U.r(T | A) - U.r(A) == 2) tasks.push_back({"minor3", A, T, false});
    }
    std::function<std::optional<bool>(std::size_t)> body = [&](std::size_t i) -> std::optional<bool> {
        const MinorCheck& m = tasks[i];
        Localization sc = induce_sigma(s, m.contracted, MinorKind::contract);
        if (m.kind == "minor3") {
            Mask gone = detail::squeeze(U.full() & ~m.contracted & ~m.kept, m.contracted, n);
            sc = induce_sigma(sc, gone, MinorKind::remove);
        }
        return is_localization(sc, mode, quiet).passed();
    };
    auto res = parallel_collect<bool>(tasks.size(), jobs, body, false);
    for (auto& [i, ok] : res) tasks[i].passed = ok;
    c.rank2_contractions = c.rank2_minors3 = true;
    for (const auto& m : tasks) {
        if (m.passed) continue;
        (m.kind == "contraction" ? c.rank2_contractions : c.rank2_minors3) = false;
    }
    c.checks = std::move(tasks);
    if (mode == "strong") c.notes.push_back("strong verdicts are equivalent only over stringent hyperfields");
    return c;
}

}  // namespace trm
