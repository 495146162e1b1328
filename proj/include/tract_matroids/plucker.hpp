// Quasi-Pluecker coordinates on adjacent basis pairs.
#pragma once

#include "matroid.hpp"

#include <map>
#include <utility>
#include <vector>

namespace trm {

class QuasiPlucker {
public:
    Tract tract;
    Side chirality = Side::left;
    GroundSet ground;
    std::map<std::pair<Mask, Mask>, Value> values;

    QuasiPlucker() = default;
    QuasiPlucker(const Tract& t, Side side, const GroundSet& g, std::vector<Mask> bases)
        : tract(t), chirality(side), ground(g), bases_(std::move(bases)) {
        std::sort(bases_.begin(), bases_.end());
        flag_.assign(std::size_t{1} << g.size(), 0);
        for (Mask b : bases_) flag_[b] = 1;
        d_ = bases_.empty() ? 0 : popcount(bases_.front());
    }

    int size() const { return ground.size(); }
    int rank() const { return d_; }
    const std::vector<Mask>& bases() const { return bases_; }
    bool is_basis(Mask B) const { return B < flag_.size() && flag_[B]; }

    // Every ordered pair of adjacent bases.
    std::vector<std::pair<Mask, Mask>> domain() const {
        std::vector<std::pair<Mask, Mask>> out;
        for (Mask a : bases_)
            for (Mask b : bases_)
                if (a != b && popcount(a & ~b) == 1) out.emplace_back(a, b);
        return out;
    }

    const Value& at(Mask a, Mask b) const {
        auto it = values.find({a, b});
        if (it == values.end())
            throw PreconditionError("no coordinate on " + mask_string(a, size()) + ", " + mask_string(b, size()));
        return it->second;
    }

    UnderlyingMatroid underlying() const { return UnderlyingMatroid::from_bases(size(), bases_); }

    friend bool operator==(const QuasiPlucker& x, const QuasiPlucker& y) {
        return x.tract == y.tract && x.chirality == y.chirality && x.ground == y.ground && x.bases_ == y.bases_ &&
               x.values == y.values;
    }

private:
    std::vector<Mask> bases_;
    std::vector<char> flag_;
    int d_ = 0;
};

namespace detail {

// Ordered product, reversed for right chirality.
inline Value chiral(const Tract& t, Side side, std::initializer_list<Value> xs) {
    std::vector<Value> v(xs);
    if (side == Side::right) std::reverse(v.begin(), v.end());
    Value r = one(t);
    for (const auto& x : v) r = mul(t, r, x);
    return r;
}

}  // namespace detail

// [Fa, Fb] read off the cocircuit with support E \ cl(F) by dual pivoting.
inline QuasiPlucker qp_from_circuits(const TMatroid& M, const TMatroid* cocircuits = nullptr) {
    const Tract& t = M.tract;
    const auto& U = M.underlying();
    TMatroid D = cocircuits ? *cocircuits : dual(M);
    QuasiPlucker Q(t, M.chirality, M.ground, U.bases());
    for (auto [A, B] : Q.domain()) {
        Mask F = A & B;
        int a = lowest(A & ~F), b = lowest(B & ~F);
        const TVector* Y = D.with_support(U.full() & ~U.closure(F));
        if (!Y) throw MatroidError("no cocircuit on the complement of a hyperplane");
        Value ya = (*Y)[static_cast<std::size_t>(a)], yb = (*Y)[static_cast<std::size_t>(b)];
        Q.values[{A, B}] = involute(t, detail::chiral(t, M.chirality, {ya, inv(t, yb)}));
    }
    return Q;
}

// One cocircuit per hyperplane H: pivot from a greedy basis F of H, with the
// least element of the complement set to 1.
inline std::vector<TVector> cocircuits_from_qp(const QuasiPlucker& Q) {
    const Tract& t = Q.tract;
    UnderlyingMatroid U = Q.underlying();
    std::vector<TVector> out;
    for (Mask H : U.hyperplanes()) {
        Mask F = U.greedy_basis(H);
        Mask D = U.full() & ~H;
        int d0 = lowest(D);
        TVector Y = zero_vector(Q.size());
        Y[static_cast<std::size_t>(d0)] = one(t);
        for (int y = 0; y < Q.size(); ++y)
            if (has(D, y) && y != d0) Y[static_cast<std::size_t>(y)] = involute(t, Q.at(F | bit(y), F | bit(d0)));
        out.push_back(std::move(Y));
    }
    return out;
}

inline TMatroid circuits_from_qp(const QuasiPlucker& Q) {
    return dual(make_matroid(Q.tract, opposite(Q.chirality), Q.ground, cocircuits_from_qp(Q)));
}

inline AxiomReport check_qp_axioms(const QuasiPlucker& Q, const std::string& mode = "weak") {
    const Tract& t = Q.tract;
    const Side s = Q.chirality;
    AxiomReport rep;
    rep.mode = mode;
    const int n = Q.size(), d = Q.rank();
    const Mask full = Q.ground.full();
    auto B = [&](Mask m) { return Q.is_basis(m); };
    auto v = [&](Mask x, Mask y) { return Q.at(x, y); };
    const Value e1 = one(t), m1 = epsilon(t);

    std::vector<Mask> by_size[GroundSet::max_size + 2];
    for (Mask m = 0; m <= full; ++m) by_size[popcount(m)].push_back(m);
    auto subsets = [&](int k) -> const std::vector<Mask>& {
        static const std::vector<Mask> none;
        return k < 0 || k > n ? none : by_size[k];
    };
    bool strong = mode == "strong";

    rep.check("P1");
    for (auto [x, y] : Q.domain())
        if (mul(t, v(x, y), v(y, x)) != e1) rep.fail({"P1", {}, {x, y}, {}, {}, "[Fa,Fb][Fb,Fa] != 1"});

    rep.check("P2");
    for (Mask F : subsets(d - 2))
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (a == b || a == c || b == c || has(F, a) || has(F, b) || has(F, c)) continue;
                    Mask ab = F | bit(a) | bit(b), ac = F | bit(a) | bit(c), bc = F | bit(b) | bit(c);
                    if (!B(ab) || !B(ac) || !B(bc)) continue;
                    if (detail::chiral(t, s, {v(ac, bc), v(ab, ac), v(bc, ab)}) != m1)
                        rep.fail({"P2", {}, {F, ab, ac, bc}, {a, b, c}, {}, "[Fac,Fbc][Fab,Fac][Fbc,Fab] != -1"});
                }

    rep.check("P3");
    for (Mask F : subsets(d - 1))
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (a == b || a == c || b == c || has(F, a) || has(F, b) || has(F, c)) continue;
                    Mask fa = F | bit(a), fb = F | bit(b), fc = F | bit(c);
                    if (!B(fa) || !B(fb) || !B(fc)) continue;
                    if (detail::chiral(t, s, {v(fa, fb), v(fb, fc), v(fc, fa)}) != e1)
                        rep.fail({"P3", {}, {F, fa, fb, fc}, {a, b, c}, {}, "[Fa,Fb][Fb,Fc][Fc,Fa] != 1"});
                }

    auto quads = [&](auto&& body) {
        for (Mask F : subsets(d - 2))
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        for (int dd = 0; dd < n; ++dd) {
                            Mask q = bit(a) | bit(b) | bit(c) | bit(dd);
                            if (popcount(q) != 4 || (q & F)) continue;
                            body(F, a, b, c, dd);
                        }
    };

    if (!strong) {
        rep.check("P4");
        quads([&](Mask F, int a, int b, int c, int dd) {
            Mask ac = F | bit(a) | bit(c), ad = F | bit(a) | bit(dd), bc = F | bit(b) | bit(c),
                 bd = F | bit(b) | bit(dd), ab = F | bit(a) | bit(b), cd = F | bit(c) | bit(dd);
            if (!B(ac) || !B(ad) || !B(bc) || !B(bd)) return;
            if (B(ab) && B(cd)) return;
            if (v(ac, bc) != v(ad, bd)) rep.fail({"P4", {}, {F, ac, bc, ad, bd}, {a, b, c, dd}, {}, "[Fac,Fbc] != [Fad,Fbd]"});
        });
        rep.check("P5");
        quads([&](Mask F, int a, int b, int c, int dd) {
            Mask ac = F | bit(a) | bit(c), ad = F | bit(a) | bit(dd), bc = F | bit(b) | bit(c),
                 bd = F | bit(b) | bit(dd), ab = F | bit(a) | bit(b), cd = F | bit(c) | bit(dd);
            if (!B(ac) || !B(ad) || !B(bc) || !B(bd) || !B(ab) || !B(cd)) return;
            FormalSum sum{m1, detail::chiral(t, s, {v(bd, ab), v(ac, cd)}), detail::chiral(t, s, {v(ad, ab), v(bc, cd)})};
            if (!is_null(t, sum))
                rep.fail({"P5", {}, {F, ab, ac, ad, bc, bd, cd}, {a, b, c, dd}, sum,
                          "-1 + [Fbd,Fab][Fac,Fcd] + [Fad,Fab][Fbc,Fcd] not null"});
        });
        return rep;
    }

    rep.check("P4'");
    rep.check("P5'");
    for (Mask I : subsets(d + 1))
        for (Mask J : subsets(d - 1)) {
            if (popcount(I & ~J) < 3) continue;
            std::vector<int> I1;
            for (int x = 0; x < n; ++x)
                if (has(I, x) && !has(J, x) && B(I & ~bit(x)) && B(J | bit(x))) I1.push_back(x);
            if (I1.size() == 2) {
                int a = I1[0], b = I1[1];
                if (v(I & ~bit(a), I & ~bit(b)) != v(J | bit(b), J | bit(a)))
                    rep.fail({"P4'", {}, {I, J}, {a, b}, {}, "[I\\a, I\\b] != [Jb, Ja]"});
            } else if (I1.size() >= 3) {
                for (int z : I1) {
                    FormalSum sum{m1};
                    for (int x : I1)
                        if (x != z)
                            sum.add(detail::chiral(t, s, {v(I & ~bit(x), I & ~bit(z)), v(J | bit(x), J | bit(z))}));
                    if (!is_null(t, sum))
                        rep.fail({"P5'", {}, {I, J}, {z}, sum, "-1 + sum [I\\x, I\\z][Jx, Jz] not null"});
                }
            }
        }
    return rep;
}

}  // namespace trm
