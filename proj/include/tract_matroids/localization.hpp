// Equivariant maps on cocircuits, stored on canonical representatives.
#pragma once

#include "matroid.hpp"

#include <utility>
#include <vector>

namespace trm {

// sigma on C*(M). For a left base the cocircuit matroid is right-scaled and
// sigma(Y.a) = sigma(Y).a; a right base mirrors this.
struct Localization {
    TMatroid base;
    TMatroid cocircuits;        // dual(base)
    std::vector<Value> values;  // parallel to cocircuits.circuits
    std::string p = "p";

    const Tract& tract() const { return base.tract; }
    Side action() const { return cocircuits.chirality; }
    std::size_t size() const { return values.size(); }

    std::optional<std::size_t> index_of(Mask supp) const {
        const auto& C = cocircuits.circuits;
        for (std::size_t i = 0; i < C.size(); ++i)
            if (support(C[i]) == supp) return i;
        return std::nullopt;
    }

    // Equivariant completion: any scalar multiple of a representative.
    Value at(const TVector& Y) const {
        auto loc = cocircuits.locate(Y);
        if (!loc) throw PreconditionError("not a cocircuit of the base matroid");
        std::size_t i = static_cast<std::size_t>(loc->first - cocircuits.circuits.data());
        const Value& s = values[i];
        if (s.zero) return s;
        return action() == Side::right ? mul(tract(), s, loc->second) : mul(tract(), loc->second, s);
    }

    // sigma of the cocircuit class with support E \ cl(F), on its representative.
    const Value& on_hyperplane_of(Mask F) const {
        const auto& U = base.underlying();
        auto i = index_of(U.full() & ~U.closure(F));
        if (!i) throw MatroidError("no cocircuit on the complement of cl(F)");
        return values[*i];
    }

    const TVector& rep_on_hyperplane_of(Mask F) const {
        const auto& U = base.underlying();
        auto i = index_of(U.full() & ~U.closure(F));
        if (!i) throw MatroidError("no cocircuit on the complement of cl(F)");
        return cocircuits.circuits[*i];
    }

    bool all_zero() const {
        for (const auto& v : values)
            if (!v.zero) return false;
        return true;
    }

    friend bool operator==(const Localization& a, const Localization& b) {
        return a.base == b.base && a.values == b.values && a.p == b.p;
    }
};

inline Localization make_localization(const TMatroid& base, std::vector<Value> values, std::string p = "p",
                                      const TMatroid* cocircuits = nullptr) {
    Localization s;
    s.base = base;
    s.cocircuits = cocircuits ? *cocircuits : dual(base);
    if (values.size() != s.cocircuits.circuits.size())
        throw PreconditionError("expected " + std::to_string(s.cocircuits.circuits.size()) + " sigma values, got " +
                                std::to_string(values.size()));
    s.values = std::move(values);
    if (s.base.ground.index(p) >= 0) throw PreconditionError("new label '" + p + "' is already in the ground set");
    s.p = std::move(p);
    return s;
}

// Validates a raw assignment Y -> sigma(Y) (keys may be any scalar multiple
// of a representative) and normalizes it onto canonical representatives.
inline Localization check_equivariance(const TMatroid& base, const std::vector<std::pair<TVector, Value>>& raw,
                                       std::string p = "p", bool allow_zero = false) {
    TMatroid D = dual(base);
    const Tract& t = base.tract;
    std::vector<std::optional<Value>> slot(D.circuits.size());
    for (const auto& [Y, v] : raw) {
        auto loc = D.locate(Y);
        if (!loc) throw PreconditionError("sigma key is not a cocircuit of the base matroid");
        std::size_t i = static_cast<std::size_t>(loc->first - D.circuits.data());
        // sigma(rep) = sigma(Y).a^-1 (right action) or a^-1.sigma(Y)
        Value ai = inv(t, loc->second);
        Value r = v.zero ? v : (D.chirality == Side::right ? mul(t, v, ai) : mul(t, ai, v));
        if (slot[i] && *slot[i] != r) throw PreconditionError("sigma is not equivariant on a cocircuit class");
        slot[i] = r;
    }
    std::vector<Value> vals;
    for (std::size_t i = 0; i < slot.size(); ++i) {
        if (!slot[i]) throw PreconditionError("sigma is missing a value for cocircuit class " + std::to_string(i));
        vals.push_back(*slot[i]);
    }
    Localization s = make_localization(base, std::move(vals), std::move(p), &D);
    if (!allow_zero && s.all_zero()) throw PreconditionError("sigma is identically zero");
    return s;
}

// alpha.sigma for a left base, sigma.alpha for a right one: the scaling on the
// side opposite to the equivariance.
inline Localization twisted(const Localization& s, const Value& alpha) {
    Localization out = s;
    for (auto& v : out.values)
        if (!v.zero) v = s.action() == Side::right ? mul(s.tract(), alpha, v) : mul(s.tract(), v, alpha);
    return out;
}

}  // namespace trm
