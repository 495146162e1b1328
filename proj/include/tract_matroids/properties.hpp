// Property checkers over explicit finite samples: stringency, Pathetic
// Cancellation (plain and strong), double distributivity.
#pragma once

#include "hyperset.hpp"
#include "parallel.hpp"
#include "tract.hpp"

#include <string>
#include <vector>

namespace trm {

struct PropertyVerdict {
    std::string property;
    bool holds = true;
    std::string clause;                           // failed clause, empty when holding
    std::vector<Value> witness;                   // first violation, lexicographic in sample order
    std::vector<std::vector<Value>> witnesses;    // every violation, when collected
    std::size_t sample_size = 0;
    std::size_t checked = 0;                      // configurations meeting all hypotheses
};

struct CheckOptions {
    unsigned jobs = 1;
    bool collect_all = false;
};

inline std::vector<Value> default_sample(const Tract& t) { return carrier(t); }

// Membership in the sets handled by the checkers only changes at finitely many
// points. For phase: the involved directions, their antipodes, and one point in
// each gap between them. For layered: every base value on each involved layer
// and the layer just below.
inline std::vector<Value> candidate_points(const Tract& t, const std::vector<Value>& sample,
                                           const std::vector<Value>& involved) {
    std::vector<Value> out{Value::nil()};
    auto push = [&](const Value& v) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    for (const auto& v : sample) push(v);
    if (t.finite()) {
        for (const auto& v : carrier(t)) push(v);
    } else if (t.kind == Kind::phase) {
        std::vector<Value> pts;
        for (const auto& v : involved)
            if (!v.zero) {
                pts.push_back(v);
                pts.push_back(neg(t, v));
            }
        std::sort(pts.begin(), pts.end(), [](const Value& x, const Value& y) { return turn::cmp(x, y) < 0; });
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            push(pts[i]);
            const Value& nx = pts[(i + 1) % pts.size()];
            Value gap = turn::sub(nx, pts[i]);
            // a lone direction leaves the whole circle as its gap
            Value mid = gap.a == 0 ? turn::half() : turn::make(gap.a, gap.b * 2);
            push(turn::add(pts[i], mid));
        }
    } else {
        std::vector<std::int64_t> layers;
        for (const auto& v : involved)
            if (!v.zero) {
                layers.push_back(v.b);
                layers.push_back(v.b - 1);
            }
        std::sort(layers.begin(), layers.end());
        layers.erase(std::unique(layers.begin(), layers.end()), layers.end());
        for (auto k : layers)
            for (const auto& r : carrier(t.base_tract())) push(Value::of(r.a, k));
    }
    return out;
}

namespace detail {

using Witnesses = std::vector<std::vector<Value>>;

// Configurations counted up to and including the first hit, so the figure
// does not depend on how many workers ran past it.
template <class H>
std::size_t counted(const std::vector<std::size_t>& counts, const std::vector<std::pair<std::size_t, H>>& hits,
                    bool collect_all) {
    std::size_t last = (collect_all || hits.empty()) ? counts.size() : hits.front().first + 1;
    std::size_t s = 0;
    for (std::size_t i = 0; i < last; ++i) s += counts[i];
    return s;
}

inline void finish(PropertyVerdict& v, std::vector<std::pair<std::size_t, Witnesses>>&& hits,
                   const std::string& clause) {
    for (auto& [i, ws] : hits)
        for (auto& w : ws) {
            if (v.holds) {
                v.holds = false;
                v.clause = clause;
                v.witness = w;
            }
            v.witnesses.push_back(std::move(w));
        }
}

}  // namespace detail

inline PropertyVerdict check_stringent(const Tract& t, const std::vector<Value>& sample) {
    PropertyVerdict v;
    v.property = "stringent";
    v.sample_size = sample.size();
    for (const auto& a : sample)
        for (const auto& b : sample) {
            if (a == neg(t, b)) continue;
            ++v.checked;
            if (!binary_sum(t, a, b).singleton()) {
                if (v.holds) {
                    v.holds = false;
                    v.clause = "a+b is a singleton when a != -b";
                    v.witness = {a, b};
                }
                v.witnesses.push_back({a, b});
            }
        }
    return v;
}

inline PropertyVerdict check_pathetic_cancellation(const Tract& t, const std::vector<Value>& sample,
                                                   const CheckOptions& opt = {}) {
    PropertyVerdict v;
    v.property = "pathetic-cancellation";
    v.sample_size = sample.size();
    const Value e = one(t), m = epsilon(t);
    std::vector<std::size_t> counts(sample.size());
    std::function<std::optional<detail::Witnesses>(std::size_t)> body = [&](std::size_t ia) -> std::optional<detail::Witnesses> {
        const Value& a = sample[ia];
        detail::Witnesses found;
        std::size_t local = 0;
        for (const auto& b : sample)
            for (const auto& x : sample) {
                if (mul(t, a, x) != mul(t, x, a) || !is_null(t, {e, a, neg(t, x)})) continue;
                for (const auto& y : sample) {
                    if (mul(t, b, y) != mul(t, y, b) || !is_null(t, {m, b, neg(t, y)})) continue;
                    for (const auto& z : sample) {
                        if (!is_null(t, {a, b, neg(t, z)}) || !is_null(t, {x, y, neg(t, z)})) continue;
                        Value ai = inv(t, a), bi = inv(t, b), xi = inv(t, x), yi = inv(t, y);
                        if (mul(t, {ai, z, bi}) != mul(t, {bi, z, ai})) continue;
                        if (mul(t, {xi, z, yi}) != mul(t, {yi, z, xi})) continue;
                        ++local;
                        if (!is_null(t, {mul(t, x, b), neg(t, mul(t, a, y)), neg(t, z)})) {
                            found.push_back({a, b, x, y, z});
                            if (!opt.collect_all) {
                                counts[ia] = local;
                                return found;
                            }
                        }
                    }
                }
            }
        counts[ia] = local;
        if (found.empty()) return std::nullopt;
        return found;
    };
    auto hits = parallel_collect<detail::Witnesses>(sample.size(), opt.jobs, body, !opt.collect_all);
    v.checked = detail::counted(counts, hits, opt.collect_all);
    detail::finish(v, std::move(hits), "xb - ay - z is null");
    return v;
}

inline PropertyVerdict check_pp_multi(const Tract& t, const std::vector<Value>& sample) {
    PropertyVerdict v;
    v.property = "pp-multi";
    v.sample_size = sample.size();
    const Value e = one(t), m = epsilon(t);
    for (const auto& z : candidate_points(t, sample, {e, m})) {
        ++v.checked;
        bool lhs = hypersum_contains(t, {e, m, e, m}, z);
        bool rhs = hypersum_contains(t, {e, m}, z);
        if (lhs != rhs) {
            if (v.holds) {
                v.holds = false;
                v.clause = "1 - 1 + 1 - 1 = 1 - 1";
                v.witness = {z};
            }
            v.witnesses.push_back({z});
        }
    }
    return v;
}

// Strong Pathetic Cancellation together with the three pairwise inclusions
// that make the three intersections equal, then the 1-1+1-1 identity.
inline PropertyVerdict check_strong_pc(const Tract& t, const std::vector<Value>& sample,
                                       const CheckOptions& opt = {}) {
    PropertyVerdict v;
    v.property = "strong-pathetic-cancellation";
    v.sample_size = sample.size();
    const Value e = one(t), m = epsilon(t);
    static const char* clauses[] = {"(x+y)&(a+b) <= xb-ay", "(a+b)&(xb-ay) <= x+y", "(x+y)&(xb-ay) <= a+b"};
    using Hit = std::vector<std::pair<int, std::vector<Value>>>;
    std::vector<std::size_t> counts(sample.size());
    std::function<std::optional<Hit>(std::size_t)> body = [&](std::size_t ia) -> std::optional<Hit> {
        const Value& a = sample[ia];
        Hit found;
        std::size_t local = 0;
        for (const auto& b : sample)
            for (const auto& x : sample) {
                if (!hypersum_contains(t, {e, a}, x)) continue;
                for (const auto& y : sample) {
                    if (!hypersum_contains(t, {m, b}, y)) continue;
                    ++local;
                    Value xb = mul(t, x, b), may = neg(t, mul(t, a, y));
                    auto cands = candidate_points(t, sample, {e, a, b, x, y, xb, may});
                    for (const auto& z : cands) {
                        bool s1 = hypersum_contains(t, {x, y}, z);
                        bool s2 = hypersum_contains(t, {a, b}, z);
                        bool s3 = hypersum_contains(t, {xb, may}, z);
                        int bad = (s1 && s2 && !s3) ? 0 : (s2 && s3 && !s1) ? 1 : (s1 && s3 && !s2) ? 2 : -1;
                        if (bad >= 0) {
                            found.push_back({bad, {a, b, x, y, z}});
                            if (!opt.collect_all) {
                                counts[ia] = local;
                                return found;
                            }
                        }
                    }
                }
            }
        counts[ia] = local;
        if (found.empty()) return std::nullopt;
        return found;
    };
    auto hits = parallel_collect<Hit>(sample.size(), opt.jobs, body, !opt.collect_all);
    v.checked = detail::counted(counts, hits, opt.collect_all);
    for (auto& [i, hs] : hits)
        for (auto& [c, w] : hs) {
            if (v.holds) {
                v.holds = false;
                v.clause = clauses[c];
                v.witness = w;
            }
            v.witnesses.push_back(std::move(w));
        }
    auto pp = check_pp_multi(t, sample);
    if (!pp.holds && v.holds) {
        v.holds = false;
        v.clause = pp.clause;
        v.witness = pp.witness;
    }
    for (auto& w : pp.witnesses) v.witnesses.push_back(std::move(w));
    return v;
}

inline PropertyVerdict check_doubly_distributive(const Tract& t, const std::vector<Value>& sample,
                                                 const CheckOptions& opt = {}) {
    PropertyVerdict v;
    v.property = "doubly-distributive";
    v.sample_size = sample.size();
    std::vector<std::size_t> counts(sample.size());
    std::function<std::optional<detail::Witnesses>(std::size_t)> body = [&](std::size_t ia) -> std::optional<detail::Witnesses> {
        const Value& a = sample[ia];
        detail::Witnesses found;
        std::size_t& local = counts[ia];
        for (const auto& b : sample)
            for (const auto& c : sample)
                for (const auto& d : sample) {
                    ++local;
                    HyperSet lhs = product(t, binary_sum(t, a, b), binary_sum(t, c, d));
                    Value ac = mul(t, a, c), ad = mul(t, a, d), bc = mul(t, b, c), bd = mul(t, b, d);
                    for (const auto& z : candidate_points(t, sample, {a, b, c, d, ac, ad, bc, bd})) {
                        if (lhs.contains(z) != hypersum_contains(t, {ac, ad, bc, bd}, z)) {
                            found.push_back({a, b, c, d, z});
                            if (!opt.collect_all) return found;
                            break;
                        }
                    }
                }
        if (found.empty()) return std::nullopt;
        return found;
    };
    auto hits = parallel_collect<detail::Witnesses>(sample.size(), opt.jobs, body, !opt.collect_all);
    v.checked = detail::counted(counts, hits, opt.collect_all);
    detail::finish(v, std::move(hits), "(a+b)(c+d) = ac+ad+bc+bd");
    return v;
}

}  // namespace trm
