// Matroids over tracts: canonical circuit sets, axiom checks, elimination,
// duality.
#pragma once

#include "underlying.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace trm {

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct AxiomFailure {
    std::string axiom;
    std::vector<TVector> vectors;  // vectors involved, scaled as used
    std::vector<Mask> sets;        // bases, families or configurations
    std::vector<int> elements;
    FormalSum sum;                 // the offending sum, when there is one
    std::string detail;
};

struct AxiomReport {
    std::string mode;
    std::vector<std::string> axioms;  // every axiom that was checked, in order
    std::vector<AxiomFailure> failures;
    std::map<std::string, std::size_t> failure_counts;
    std::vector<std::string> notes;
    std::size_t cap_per_axiom = 64;

    bool passed() const { return failures.empty(); }
    bool passed(const std::string& ax) const { return failure_counts.count(ax) == 0; }

    const AxiomFailure* first(const std::string& ax) const {
        for (const auto& f : failures)
            if (f.axiom == ax) return &f;
        return nullptr;
    }

    void check(const std::string& ax) {
        if (std::find(axioms.begin(), axioms.end(), ax) == axioms.end()) axioms.push_back(ax);
    }

    void fail(AxiomFailure f) {
        check(f.axiom);
        if (failure_counts[f.axiom]++ < cap_per_axiom) failures.push_back(std::move(f));
    }

    void merge(const AxiomReport& other) {
        for (const auto& a : other.axioms) check(a);
        for (const auto& f : other.failures) failures.push_back(f);
        for (const auto& [k, v] : other.failure_counts) failure_counts[k] += v;
        for (const auto& n : other.notes) notes.push_back(n);
    }
};

class TMatroid {
public:
    Tract tract;
    Side chirality = Side::left;
    GroundSet ground;
    std::vector<TVector> circuits;  // canonical representatives, sorted

    int size() const { return ground.size(); }

    bool has_underlying() const { return under_ != nullptr; }
    const UnderlyingMatroid& underlying() const {
        if (!under_) throw MatroidError(under_error_);
        return *under_;
    }
    int rank() const { return underlying().rank(); }
    const std::string& underlying_error() const { return under_error_; }

    std::vector<Mask> supports() const {
        std::vector<Mask> s;
        for (const auto& X : circuits) s.push_back(support(X));
        return s;
    }

    // Canonical representative with the given support, if any.
    const TVector* with_support(Mask s) const {
        for (const auto& X : circuits)
            if (support(X) == s) return &X;
        return nullptr;
    }

    // alpha with X = alpha.rep (left) or rep.alpha (right), rep the
    // representative sharing X's support.
    std::optional<std::pair<const TVector*, Value>> locate(const TVector& X) const {
        const TVector* rep = with_support(support(X));
        if (!rep) return std::nullopt;
        auto a = proportion(tract, *rep, X, chirality);
        if (!a) return std::nullopt;
        return std::make_pair(rep, *a);
    }

    bool contains(const TVector& X) const { return locate(X).has_value(); }

    friend bool operator==(const TMatroid& a, const TMatroid& b) {
        return a.tract == b.tract && a.chirality == b.chirality && a.ground == b.ground && a.circuits == b.circuits;
    }

    friend TMatroid make_matroid(const Tract& t, Side side, const GroundSet& ground, std::vector<TVector> vectors);

private:
    std::shared_ptr<const UnderlyingMatroid> under_;
    std::string under_error_;
};

// Canonicalizes, deduplicates and sorts; the underlying matroid is attached
// when the supports satisfy the classical circuit axioms.
inline TMatroid make_matroid(const Tract& t, Side side, const GroundSet& ground, std::vector<TVector> vectors) {
    TMatroid m;
    m.tract = t;
    m.chirality = side;
    m.ground = ground;
    for (auto& X : vectors) {
        if (static_cast<int>(X.size()) != ground.size())
            throw DomainError("vector of length " + std::to_string(X.size()) + " on a ground set of size " +
                              std::to_string(ground.size()));
        m.circuits.push_back(canonical(t, X, side));
    }
    std::sort(m.circuits.begin(), m.circuits.end(), lex_less);
    m.circuits.erase(std::unique(m.circuits.begin(), m.circuits.end()), m.circuits.end());
    try {
        std::vector<Mask> s = m.supports();
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        m.under_ = std::make_shared<const UnderlyingMatroid>(UnderlyingMatroid::from_circuits(ground.size(), s));
    } catch (const MatroidError& e) {
        m.under_error_ = e.what();
    }
    return m;
}

inline const UnderlyingMatroid& underlying(const TMatroid& M) { return M.underlying(); }

// Height of the join of F in U(C) equals |F|.
inline bool modular(const std::vector<Mask>& C, const std::vector<Mask>& F) {
    return UnionLattice(C).modular(F);
}

namespace detail {

// Z in the projective class of `rep` pinned by Z(f0) = target.
inline TVector pin(const Tract& t, const TVector& rep, int f0, const Value& target, Side side) {
    const Value& r = rep[static_cast<std::size_t>(f0)];
    Value g = side == Side::left ? mul(t, target, inv(t, r)) : mul(t, inv(t, r), target);
    return scale(t, rep, g, side);
}

// Y scaled so that Y(e) = -X(e).
inline TVector oppose(const Tract& t, const TVector& X, const TVector& Y, int e, Side side) {
    return pin(t, Y, e, neg(t, X[static_cast<std::size_t>(e)]), side);
}

inline bool sum_null_everywhere(const Tract& t, const std::vector<const TVector*>& terms, const TVector& Z,
                                int* bad = nullptr) {
    for (std::size_t f = 0; f < Z.size(); ++f) {
        FormalSum s;
        for (const auto* v : terms) s.add((*v)[f]);
        s.add(neg(t, Z[f]));
        if (!is_null(t, s)) {
            if (bad) *bad = static_cast<int>(f);
            return false;
        }
    }
    return true;
}

// First circuit Z with Z zero on `zeros`, Z(f0) = target, and X1+...+Xk-Z
// null everywhere.
inline std::optional<TVector> find_eliminant(const TMatroid& M, const std::vector<const TVector*>& terms, Mask zeros,
                                             int f0, const Value& target) {
    for (const auto& rep : M.circuits) {
        Mask s = support(rep);
        if ((s & zeros) != 0 || !has(s, f0)) continue;
        TVector Z = pin(M.tract, rep, f0, target, M.chirality);
        if (sum_null_everywhere(M.tract, terms, Z)) return Z;
    }
    return std::nullopt;
}

}  // namespace detail

struct CircuitCheckOptions {
    std::size_t family_cap = 5;  // strong mode: largest family size k+1
};

inline AxiomReport check_circuit_axioms(const TMatroid& M, const std::string& mode = "weak",
                                        const CircuitCheckOptions& opt = {}) {
    const Tract& t = M.tract;
    AxiomReport rep;
    rep.mode = mode;
    const auto& C = M.circuits;
    std::vector<Mask> S = M.supports();

    rep.check("C1");
    for (const auto& X : C)
        if (support(X) == 0) rep.fail({"C1", {X}, {}, {}, {}, "zero vector among circuits"});
    // representatives stand for whole orbits, so symmetry holds by construction
    rep.check("C2");
    rep.check("C3");
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = 0; j < C.size(); ++j)
            if (i != j && S[i] != 0 && (S[i] & ~S[j]) == 0)
                rep.fail({"C3", {C[i], C[j]}, {S[i], S[j]}, {}, {}, "support contained in another, not proportional"});

    std::vector<Mask> atoms;
    for (Mask s : S)
        if (s) atoms.push_back(s);
    UnionLattice L(atoms);
    auto incomparable = [&](Mask a, Mask b) { return (a & ~b) != 0 && (b & ~a) != 0; };

    rep.check("C4");
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = i + 1; j < C.size(); ++j) {
            if (!incomparable(S[i], S[j]) || !L.modular_pair(S[i], S[j])) continue;
            const TVector& X = C[i];
            Mask common = S[i] & S[j];
            int f0 = lowest(S[i] & ~S[j]);
            for (int e = 0; e < M.size(); ++e) {
                if (!has(common, e)) continue;
                TVector Y = detail::oppose(t, X, C[j], e, M.chirality);
                if (!detail::find_eliminant(M, {&X, &Y}, bit(e), f0, X[static_cast<std::size_t>(f0)]))
                    rep.fail({"C4", {X, Y}, {S[i], S[j]}, {e}, {}, "no circuit eliminates the element"});
            }
        }

    if (mode != "strong") return rep;

    rep.check("C4'");
    bool capped = false;
    std::vector<std::size_t> pick;
    // X = C[x], family members from the other indices in increasing order
    std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t x, std::size_t from,
                                                                          std::size_t k) {
        if (pick.size() == k) {
            std::vector<Mask> fam{S[x]};
            Mask uni = 0;
            for (auto p : pick) {
                fam.push_back(S[p]);
                uni |= S[p];
            }
            if ((S[x] & ~uni) == 0 || !L.modular(fam)) return;
            // admissible e_i for each member
            std::vector<std::vector<int>> choices(k);
            for (std::size_t a = 0; a < k; ++a) {
                Mask others = 0;
                for (std::size_t b = 0; b < k; ++b)
                    if (b != a) others |= S[pick[b]];
                Mask room = S[x] & S[pick[a]] & ~others;
                for (int e = 0; e < M.size(); ++e)
                    if (has(room, e)) choices[a].push_back(e);
                if (choices[a].empty()) return;
            }
            const TVector& X = C[x];
            int f0 = lowest(S[x] & ~uni);
            std::vector<std::size_t> at(k, 0);
            while (true) {
                std::vector<TVector> scaled;
                Mask zeros = 0;
                std::vector<int> es;
                for (std::size_t a = 0; a < k; ++a) {
                    int e = choices[a][at[a]];
                    es.push_back(e);
                    zeros |= bit(e);
                    scaled.push_back(detail::oppose(t, X, C[pick[a]], e, M.chirality));
                }
                std::vector<const TVector*> terms{&X};
                for (const auto& v : scaled) terms.push_back(&v);
                if (!detail::find_eliminant(M, terms, zeros, f0, X[static_cast<std::size_t>(f0)])) {
                    AxiomFailure f{"C4'", {X}, fam, es, {}, "no circuit eliminates the chosen elements"};
                    for (auto& v : scaled) f.vectors.push_back(v);
                    rep.fail(std::move(f));
                }
                std::size_t a = 0;
                while (a < k && ++at[a] == choices[a].size()) at[a++] = 0;
                if (a == k) break;
            }
            return;
        }
        for (std::size_t p = from; p < C.size(); ++p) {
            if (p == x) continue;
            pick.push_back(p);
            rec(x, p + 1, k);
            pick.pop_back();
        }
    };
    std::size_t maxk = std::min(opt.family_cap - 1, C.empty() ? std::size_t{0} : C.size() - 1);
    if (C.size() > opt.family_cap) capped = true;
    for (std::size_t k = 1; k <= maxk; ++k)
        for (std::size_t x = 0; x < C.size(); ++x)
            if (S[x]) rec(x, 0, k);
    if (capped)
        rep.notes.push_back("C4' checked for modular families of size at most " + std::to_string(opt.family_cap));
    return rep;
}

// A circuit eliminating e between X and Y, for X, Y circuits forming a
// modular pair with X(e) = -Y(e) != 0.
inline std::optional<TVector> eliminate(const TMatroid& M, const TVector& X, const TVector& Y, int e) {
    const Tract& t = M.tract;
    if (!M.contains(X) || !M.contains(Y)) throw PreconditionError("eliminate: X and Y must be circuits");
    if (e < 0 || e >= M.size()) throw PreconditionError("eliminate: element out of range");
    auto ue = static_cast<std::size_t>(e);
    if (X[ue].zero || Y[ue] != neg(t, X[ue])) throw PreconditionError("eliminate: need X(e) = -Y(e) != 0");
    Mask a = support(X), b = support(Y);
    if (a == b) return std::nullopt;
    std::vector<Mask> atoms;
    for (const auto& C : M.circuits) atoms.push_back(support(C));
    if (!UnionLattice(atoms).modular_pair(a, b)) throw PreconditionError("eliminate: X and Y are not a modular pair");
    int f0 = lowest(a & ~b);
    return detail::find_eliminant(M, {&X, &Y}, bit(e), f0, X[static_cast<std::size_t>(f0)]);
}

// Cocircuits by propagation along circuits meeting each cocircuit support in
// two elements, then checked against every circuit.
inline TMatroid dual(const TMatroid& M) {
    const Tract& t = M.tract;
    const auto& U = M.underlying();
    int n = M.size();
    std::vector<TVector> out;
    for (Mask D : U.cocircuits()) {
        TVector Y = zero_vector(n);
        Mask set = 0;
        int d0 = lowest(D);
        if (d0 < 0) continue;
        Y[static_cast<std::size_t>(d0)] = one(t);
        set |= bit(d0);
        bool grew = true;
        while (grew && set != D) {
            grew = false;
            for (const auto& X : M.circuits) {
                Mask m = support(X) & D;
                if (popcount(m) != 2) continue;
                int e = lowest(m), f = lowest(m & ~bit(e));
                if (has(set, f) && !has(set, e)) std::swap(e, f);
                if (!has(set, e) || has(set, f)) continue;
                auto ue = static_cast<std::size_t>(e), uf = static_cast<std::size_t>(f);
                Value cxe = involute(t, X[ue]), cxf = involute(t, X[uf]), m1 = epsilon(t);
                Y[uf] = M.chirality == Side::left ? mul(t, {inv(t, cxf), m1, cxe, Y[ue]})
                                                  : mul(t, {m1, Y[ue], cxe, inv(t, cxf)});
                set |= bit(f);
                grew = true;
            }
        }
        if (set != D) throw MatroidError("cocircuit support " + mask_string(D, n) + " not reached by propagation");
        for (const auto& X : M.circuits) {
            auto o = orthogonality(t, X, Y, M.chirality);
            if (!o.orthogonal)
                throw MatroidError("propagated cocircuit on " + mask_string(D, n) +
                                   " is not orthogonal to a circuit; input is not a matroid over the tract");
        }
        out.push_back(std::move(Y));
    }
    return make_matroid(t, opposite(M.chirality), M.ground, std::move(out));
}

}  // namespace trm
