// Ordinary matroids on at most GroundSet::max_size elements, held as a full
// rank table, and the lattice of unions of a support family.
#pragma once

#include "tvec.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trm {

struct MatroidError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string mask_string(Mask m, int n) {
    std::string s = "{";
    for (int i = 0; i < n; ++i)
        if (has(m, i)) s += (s.size() > 1 ? "," : "") + std::to_string(i);
    return s + "}";
}

class UnderlyingMatroid {
public:
    UnderlyingMatroid() = default;

    // Circuit supports must satisfy the classical circuit axioms.
    static UnderlyingMatroid from_circuits(int n, std::vector<Mask> circuits) {
        for (std::size_t i = 0; i < circuits.size(); ++i) {
            if (circuits[i] == 0) throw MatroidError("empty circuit support");
            for (std::size_t j = 0; j < circuits.size(); ++j)
                if (i != j && (circuits[i] & ~circuits[j]) == 0)
                    throw MatroidError("circuit supports " + mask_string(circuits[i], n) + " and " +
                                       mask_string(circuits[j], n) + " are comparable");
        }
        for (std::size_t i = 0; i < circuits.size(); ++i)
            for (std::size_t j = i + 1; j < circuits.size(); ++j) {
                Mask common = circuits[i] & circuits[j], both = circuits[i] | circuits[j];
                for (int e = 0; e < n; ++e) {
                    if (!has(common, e)) continue;
                    Mask room = both & ~bit(e);
                    bool found = false;
                    for (Mask c : circuits)
                        if ((c & ~room) == 0) {
                            found = true;
                            break;
                        }
                    if (!found)
                        throw MatroidError("no circuit inside " + mask_string(room, n) + " eliminating " +
                                           std::to_string(e) + " between " + mask_string(circuits[i], n) +
                                           " and " + mask_string(circuits[j], n));
                }
            }
        std::size_t N = std::size_t{1} << n;
        std::vector<char> dep(N, 0);
        for (Mask c : circuits) dep[c] = 1;
        std::vector<std::int8_t> rank(N, 0);
        for (Mask S = 1; S < N; ++S) {
            if (!dep[S])
                for (int e = 0; e < n; ++e)
                    if (has(S, e) && dep[S & ~bit(e)]) {
                        dep[S] = 1;
                        break;
                    }
            if (!dep[S]) {
                rank[S] = static_cast<std::int8_t>(popcount(S));
            } else {
                std::int8_t r = 0;
                for (int e = 0; e < n; ++e)
                    if (has(S, e)) r = std::max(r, rank[S & ~bit(e)]);
                rank[S] = r;
            }
        }
        return from_rank_table(n, std::move(rank));
    }

    // True when the family satisfies basis exchange; otherwise names a
    // violating (B1, B2, e) through the out-parameter.
    static bool exchange_holds(int n, const std::vector<Mask>& bases, std::vector<Mask>* witness = nullptr) {
        if (bases.empty()) return false;
        std::vector<char> is(std::size_t{1} << n, 0);
        for (Mask b : bases) is[b] = 1;
        int d = popcount(bases.front());
        for (Mask b : bases)
            if (popcount(b) != d) {
                if (witness) *witness = {bases.front(), b};
                return false;
            }
        for (Mask b1 : bases)
            for (Mask b2 : bases)
                for (int e = 0; e < n; ++e) {
                    if (!has(b1 & ~b2, e)) continue;
                    bool ok = false;
                    for (int f = 0; f < n && !ok; ++f)
                        if (has(b2 & ~b1, f) && is[(b1 & ~bit(e)) | bit(f)]) ok = true;
                    if (!ok) {
                        if (witness) *witness = {b1, b2, bit(e)};
                        return false;
                    }
                }
        return true;
    }

    static UnderlyingMatroid from_bases(int n, const std::vector<Mask>& bases) {
        std::vector<Mask> w;
        if (!exchange_holds(n, bases, &w)) throw MatroidError("basis family fails exchange");
        std::size_t N = std::size_t{1} << n;
        std::vector<char> ind(N, 0);
        for (Mask b : bases) ind[b] = 1;
        for (std::size_t S = N; S-- > 0;) {
            if (ind[S]) continue;
            for (int e = 0; e < n; ++e)
                if (!has(static_cast<Mask>(S), e) && ind[S | bit(e)]) {
                    ind[S] = 1;
                    break;
                }
        }
        std::vector<std::int8_t> rank(N, 0);
        for (Mask S = 1; S < N; ++S) {
            if (ind[S]) {
                rank[S] = static_cast<std::int8_t>(popcount(S));
                continue;
            }
            for (int e = 0; e < n; ++e)
                if (has(S, e)) rank[S] = std::max(rank[S], rank[S & ~bit(e)]);
        }
        return from_rank_table(n, std::move(rank));
    }

    static UnderlyingMatroid from_rank_table(int n, std::vector<std::int8_t> rank) {
        UnderlyingMatroid m;
        m.n_ = n;
        m.rank_ = std::move(rank);
        Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
        m.d_ = m.rank_[full];
        std::size_t N = std::size_t{1} << n;
        for (Mask S = 0; S < N; ++S) {
            int r = m.rank_[S], k = popcount(S);
            if (r == k && k == m.d_) m.bases_.push_back(S);
            if (r == k - 1) {
                bool minimal = true;
                for (int e = 0; e < n && minimal; ++e)
                    if (has(S, e) && m.rank_[S & ~bit(e)] != k - 1) minimal = false;
                if (minimal) m.circuits_.push_back(S);
            }
            if (r == m.d_ - 1 && m.closure(S) == S) m.hyperplanes_.push_back(S);
        }
        for (Mask h : m.hyperplanes_) m.cocircuits_.push_back(full & ~h);
        return m;
    }

    int size() const { return n_; }
    int rank() const { return d_; }
    Mask full() const { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }
    int r(Mask S) const { return rank_[S]; }
    bool independent(Mask S) const { return rank_[S] == popcount(S); }
    bool is_basis(Mask S) const { return popcount(S) == d_ && independent(S); }
    Mask closure(Mask S) const {
        Mask c = S;
        for (int e = 0; e < n_; ++e)
            if (!has(S, e) && rank_[S | bit(e)] == rank_[S]) c |= bit(e);
        return c;
    }

    const std::vector<Mask>& circuits() const { return circuits_; }
    const std::vector<Mask>& bases() const { return bases_; }
    const std::vector<Mask>& hyperplanes() const { return hyperplanes_; }
    const std::vector<Mask>& cocircuits() const { return cocircuits_; }

    // Greedy maximal independent subset of S, scanning in `order` (ground
    // order when empty).
    Mask greedy_basis(Mask S, Mask start = 0, bool reverse = false) const {
        Mask I = start;
        for (int k = 0; k < n_; ++k) {
            int e = reverse ? n_ - 1 - k : k;
            if (has(S, e) && !has(I, e) && independent(I | bit(e))) I |= bit(e);
        }
        return I;
    }

    UnderlyingMatroid dual() const {
        std::size_t N = std::size_t{1} << n_;
        std::vector<std::int8_t> rk(N);
        for (Mask S = 0; S < N; ++S)
            rk[S] = static_cast<std::int8_t>(popcount(S) + rank_[full() & ~S] - d_);
        return from_rank_table(n_, std::move(rk));
    }

    // Delete `del`, contract `con`; survivors keep their relative order.
    UnderlyingMatroid minor(Mask del, Mask con) const {
        Mask keep = full() & ~del & ~con;
        std::vector<int> idx;
        for (int e = 0; e < n_; ++e)
            if (has(keep, e)) idx.push_back(e);
        int m = static_cast<int>(idx.size());
        std::size_t N = std::size_t{1} << m;
        std::vector<std::int8_t> rk(N);
        for (Mask S = 0; S < N; ++S) {
            Mask big = con;
            for (int i = 0; i < m; ++i)
                if (has(S, i)) big |= bit(idx[static_cast<std::size_t>(i)]);
            rk[S] = static_cast<std::int8_t>(rank_[big] - rank_[con]);
        }
        return from_rank_table(m, std::move(rk));
    }

    friend bool operator==(const UnderlyingMatroid& a, const UnderlyingMatroid& b) {
        return a.n_ == b.n_ && a.rank_ == b.rank_;
    }

private:
    int n_ = 0;
    int d_ = 0;
    std::vector<std::int8_t> rank_;
    std::vector<Mask> circuits_, bases_, hyperplanes_, cocircuits_;
};

// The lattice U(C) of unions of a family of pairwise incomparable supports,
// with the height of every element.
class UnionLattice {
public:
    explicit UnionLattice(std::vector<Mask> atoms) : atoms_(std::move(atoms)) {
        std::vector<Mask> elems{0};
        std::map<Mask, int> seen{{0, 0}};
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (Mask a : atoms_) {
                Mask u = elems[i] | a;
                if (seen.emplace(u, 0).second) elems.push_back(u);
            }
        std::sort(elems.begin(), elems.end(), [](Mask x, Mask y) {
            return popcount(x) != popcount(y) ? popcount(x) < popcount(y) : x < y;
        });
        for (std::size_t i = 0; i < elems.size(); ++i) {
            int h = 0;
            for (std::size_t j = 0; j < i; ++j)
                if ((elems[j] & ~elems[i]) == 0 && elems[j] != elems[i]) h = std::max(h, height_[elems[j]] + 1);
            height_[elems[i]] = h;
        }
    }

    int height(Mask u) const {
        auto it = height_.find(u);
        return it == height_.end() ? -1 : it->second;
    }

    const std::vector<Mask>& atoms() const { return atoms_; }

    // Distinct atoms whose join has height equal to the family size.
    bool modular(std::span<const Mask> family) const {
        Mask join = 0;
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (family[i] == 0) return false;
            for (std::size_t j = 0; j < i; ++j)
                if (family[i] == family[j]) return false;
            join |= family[i];
        }
        return height(join) == static_cast<int>(family.size());
    }

    bool modular_pair(Mask a, Mask b) const {
        Mask f[2] = {a, b};
        return modular(f);
    }

private:
    std::vector<Mask> atoms_;
    std::map<Mask, int> height_;
};

}  // namespace trm
