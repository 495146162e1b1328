// Vectors in T^E over a small ordered ground set.
#pragma once

#include "tract.hpp"

#include <bit>
#include <memory>
#include <string>
#include <vector>

namespace trm {

using Mask = std::uint32_t;

enum class Side : std::uint8_t { left, right };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return m ? std::countr_zero(m) : -1; }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1u; }

class GroundSet {
public:
    static constexpr int max_size = 20;

    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels) {
        if (labels.empty()) throw DomainError("ground set must be non-empty");
        if (labels.size() > max_size) throw DomainError("ground set larger than " + std::to_string(max_size));
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (labels[i] == labels[j]) throw DomainError("duplicate ground label '" + labels[i] + "'");
        labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
    }

    int size() const { return labels_ ? static_cast<int>(labels_->size()) : 0; }
    const std::string& label(int i) const { return (*labels_)[i]; }
    const std::vector<std::string>& labels() const { return *labels_; }
    Mask full() const { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }

    int index(const std::string& l) const {
        for (int i = 0; i < size(); ++i)
            if (label(i) == l) return i;
        return -1;
    }

    Mask mask_of(const std::vector<std::string>& ls) const {
        Mask m = 0;
        for (const auto& l : ls) {
            int i = index(l);
            if (i < 0) throw DomainError("unknown ground label '" + l + "'");
            m |= bit(i);
        }
        return m;
    }

    // Labels not in `drop`, in order.
    GroundSet without(Mask drop) const {
        std::vector<std::string> out;
        for (int i = 0; i < size(); ++i)
            if (!has(drop, i)) out.push_back(label(i));
        return GroundSet(std::move(out));
    }

    GroundSet with(const std::string& l) const {
        if (index(l) >= 0) throw DomainError("label '" + l + "' already in the ground set");
        auto out = labels();
        out.push_back(l);
        return GroundSet(std::move(out));
    }

    friend bool operator==(const GroundSet& a, const GroundSet& b) {
        return a.labels_ == b.labels_ || (a.labels_ && b.labels_ && *a.labels_ == *b.labels_);
    }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

// Dense entries in ground order.
using TVector = std::vector<Value>;

inline TVector zero_vector(int n) { return TVector(static_cast<std::size_t>(n), Value::nil()); }

inline Mask support(const TVector& X) {
    Mask m = 0;
    for (std::size_t i = 0; i < X.size(); ++i)
        if (!X[i].zero) m |= bit(static_cast<int>(i));
    return m;
}

inline Mask zero_set(const TVector& X) {
    Mask all = X.size() >= 32 ? ~Mask{0} : (Mask{1} << X.size()) - 1;
    return all & ~support(X);
}

inline TVector scale(const Tract& t, const TVector& X, const Value& a, Side side) {
    if (a.zero) throw DomainError("scaling by zero");
    TVector out(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) out[i] = side == Side::left ? mul(t, a, X[i]) : mul(t, X[i], a);
    return out;
}

inline TVector negated(const Tract& t, const TVector& X) { return scale(t, X, epsilon(t), Side::left); }

// Z in X + Y, componentwise.
inline bool sum_contains(const Tract& t, const TVector& X, const TVector& Y, const TVector& Z) {
    for (std::size_t i = 0; i < X.size(); ++i)
        if (!is_null(t, {X[i], Y[i], neg(t, Z[i])})) return false;
    return true;
}

// X . Y with the involution on the second argument. Right chirality reverses
// every product, which after applying the involution keeps the same null set.
struct Orthogonality {
    FormalSum product;
    bool orthogonal = false;
};

inline Orthogonality orthogonality(const Tract& t, const TVector& X, const TVector& Y, Side side = Side::left) {
    Orthogonality o;
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (X[i].zero || Y[i].zero) continue;
        Value c = involute(t, Y[i]);
        o.product.add(side == Side::left ? mul(t, X[i], c) : mul(t, c, X[i]));
    }
    o.orthogonal = is_null(t, o.product);
    return o;
}

// Drops the coordinates in `drop`.
inline TVector restrict_away(const TVector& X, Mask drop) {
    TVector out;
    for (std::size_t i = 0; i < X.size(); ++i)
        if (!has(drop, static_cast<int>(i))) out.push_back(X[i]);
    return out;
}

// Inverse of restrict_away: spreads X over n coordinates, zero on `drop`.
inline TVector lift_zero(const TVector& X, Mask drop, int n) {
    TVector out = zero_vector(n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
        if (!has(drop, i)) out[static_cast<std::size_t>(i)] = X[k++];
    return out;
}

inline TVector appended(TVector X, const Value& v) {
    X.push_back(v);
    return X;
}

// Canonical projective representative: least support entry becomes 1.
inline TVector canonical(const Tract& t, const TVector& X, Side side) {
    int i = lowest(support(X));
    if (i < 0) return X;
    return scale(t, X, inv(t, X[static_cast<std::size_t>(i)]), side);
}

// alpha with Y = X.alpha (right) or alpha.X (left), if any.
inline std::optional<Value> proportion(const Tract& t, const TVector& X, const TVector& Y, Side side) {
    if (support(X) != support(Y)) return std::nullopt;
    int i = lowest(support(X));
    if (i < 0) return std::nullopt;
    auto u = static_cast<std::size_t>(i);
    Value a = side == Side::left ? mul(t, Y[u], inv(t, X[u])) : mul(t, inv(t, X[u]), Y[u]);
    if (scale(t, X, a, side) != Y) return std::nullopt;
    return a;
}

inline bool lex_less(const TVector& X, const TVector& Y) {
    Mask a = support(X), b = support(Y);
    if (a != b) {
        // compare supports as sorted index lists
        Mask d = a ^ b;
        return has(a, lowest(d));
    }
    return X < Y;
}

}  // namespace trm
