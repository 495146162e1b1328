// Text and JSON forms of tracts, values, matroids, sigma and reports.
#pragma once

#include "extension.hpp"
#include "properties.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace trm::io {

using json = nlohmann::ordered_json;

inline constexpr const char* schema = "tract-matroids/1";

// Malformed input. `where` is a JSON pointer or "line L, column C".
struct InputError : std::runtime_error {
    std::string where;
    InputError(const std::string& where_, const std::string& msg)
        : std::runtime_error(where_.empty() ? msg : where_ + ": " + msg), where(where_) {}
};

// ---- tracts ----------------------------------------------------------------

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::krasner: return "krasner";
        case Kind::sign: return "sign";
        case Kind::phase: return "phase";
        case Kind::gfp: return "gfp";
        case Kind::d6: return "d6";
        case Kind::layered: return "layered";
    }
    return "?";
}

inline std::optional<Kind> kind_from(std::string_view s) {
    for (Kind k : {Kind::krasner, Kind::sign, Kind::phase, Kind::gfp, Kind::d6, Kind::layered})
        if (s == kind_name(k)) return k;
    return std::nullopt;
}

inline json to_json(const Tract& t) {
    json j;
    j["kind"] = kind_name(t.kind);
    if (t.kind == Kind::layered) j["base"] = kind_name(t.base);
    if (t.kind == Kind::gfp || (t.kind == Kind::layered && t.base == Kind::gfp)) j["p"] = t.p;
    return j;
}

inline Tract tract_from_json(const json& j, const std::string& at = "") {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError(at, "tract descriptor needs a string \"kind\"");
    auto k = kind_from(j["kind"].get<std::string>());
    if (!k) throw InputError(at + "/kind", "unknown tract kind '" + j["kind"].get<std::string>() + "'");
    auto modulus = [&]() {
        if (!j.contains("p") || !j["p"].is_number_integer()) throw InputError(at + "/p", "gfp needs an integer \"p\"");
        return j["p"].get<int>();
    };
    try {
        switch (*k) {
            case Kind::gfp: return Tract::gfp(modulus());
            case Kind::layered: {
                if (!j.contains("base") || !j["base"].is_string())
                    throw InputError(at + "/base", "layered needs a string \"base\"");
                auto b = kind_from(j["base"].get<std::string>());
                if (!b) throw InputError(at + "/base", "unknown base kind");
                return Tract::layered(*b, *b == Kind::gfp ? modulus() : 0);
            }
            default: return Tract{*k};
        }
    } catch (const DomainError& e) {
        throw InputError(at, e.what());
    }
}

// ---- values ----------------------------------------------------------------

inline std::string format(const Tract& t, const Value& v) {
    if (v.zero) return "0";
    switch (t.kind) {
        case Kind::krasner: return "1";
        case Kind::sign: return v.a > 0 ? "1" : "-1";
        case Kind::gfp: return std::to_string(v.a);
        case Kind::phase: return v.a == 0 ? "ph:0" : "ph:" + std::to_string(v.a) + "/" + std::to_string(v.b);
        case Kind::d6: {
            std::string s;
            if (v.a == 1) s += "r";
            if (v.a == 2) s += "r2";
            if (v.b == 1) s += "s";
            return s.empty() ? "1" : s;
        }
        case Kind::layered: return "(" + format(t.base_tract(), Value::of(v.a)) + "," + std::to_string(v.b) + ")";
    }
    return "?";
}

namespace detail {

inline std::optional<std::int64_t> integer(std::string_view s) {
    std::string buf;
    // accept U+2212 as a minus sign
    if (s.starts_with("\xE2\x88\x92")) buf = "-" + std::string(s.substr(3));
    else buf = std::string(s);
    std::int64_t x = 0;
    auto [p, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{} || p != buf.data() + buf.size() || buf.empty()) return std::nullopt;
    return x;
}

}  // namespace detail

inline Value parse_value(const Tract& t, std::string_view s) {
    auto bad = [&]() { return DomainError("'" + std::string(s) + "' is not a " + kind_name(t.kind) + " value"); };
    if (s == "0") return Value::nil();
    switch (t.kind) {
        case Kind::krasner:
            if (s == "1") return Value::of(1);
            throw bad();
        case Kind::sign: {
            auto x = detail::integer(s);
            if (x && (*x == 1 || *x == -1)) return Value::of(*x);
            throw bad();
        }
        case Kind::gfp: {
            auto x = detail::integer(s);
            if (!x) throw bad();
            std::int64_t r = ((*x % t.p) + t.p) % t.p;
            return r == 0 ? Value::nil() : Value::of(r);
        }
        case Kind::phase: {
            if (!s.starts_with("ph:")) throw bad();
            auto body = s.substr(3);
            auto slash = body.find('/');
            auto n = detail::integer(body.substr(0, slash));
            auto d = slash == std::string_view::npos ? std::optional<std::int64_t>(1) : detail::integer(body.substr(slash + 1));
            if (!n || !d || *d <= 0) throw bad();
            return turn::make(*n, *d);
        }
        case Kind::d6: {
            std::int64_t a = 0, b = 0;
            std::string_view r = s;
            if (r == "1") return Value::of(0, 0);
            if (r.starts_with("r2")) a = 2, r.remove_prefix(2);
            else if (r.starts_with("r")) a = 1, r.remove_prefix(1);
            if (r == "s") b = 1, r.remove_prefix(1);
            if (!r.empty() || (a == 0 && b == 0)) throw bad();
            return Value::of(a, b);
        }
        case Kind::layered: {
            if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw bad();
            auto body = s.substr(1, s.size() - 2);
            auto comma = body.rfind(',');
            if (comma == std::string_view::npos) throw bad();
            Value base = parse_value(t.base_tract(), body.substr(0, comma));
            auto k = detail::integer(body.substr(comma + 1));
            if (base.zero || !k) throw bad();
            return Value::of(base.a, *k);
        }
    }
    throw bad();
}

inline json to_json(const Tract& t, const TVector& X) {
    json a = json::array();
    for (const auto& v : X) a.push_back(format(t, v));
    return a;
}

inline std::string vector_id(const Tract& t, const TVector& X) { return to_json(t, X).dump(); }

inline TVector vector_from_json(const Tract& t, const json& j, int n, const std::string& at) {
    if (!j.is_array()) throw InputError(at, "expected an array of value strings");
    if (static_cast<int>(j.size()) != n)
        throw InputError(at, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    TVector X;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        std::string where = at + "/" + std::to_string(i);
        if (!e.is_string()) throw InputError(where, "values are serialized as strings");
        try {
            X.push_back(parse_value(t, e.get<std::string>()));
        } catch (const DomainError& err) {
            throw InputError(where, err.what());
        }
    }
    return X;
}

// ---- documents -------------------------------------------------------------

inline json parse_text(const std::string& text, const std::string& name) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        // nlohmann reports "line L, column C" inside the message
        auto at = msg.find("at line ");
        std::string where = at == std::string::npos ? "byte " + std::to_string(e.byte) : msg.substr(at + 3);
        if (auto colon = where.find(':'); colon != std::string::npos) where = where.substr(0, colon);
        throw InputError(name + " " + where, msg);
    }
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

inline json to_json(const TMatroid& M, const char* key = "circuits") {
    json j;
    j["schema"] = schema;
    j["tract"] = to_json(M.tract);
    j["chirality"] = side_name(M.chirality);
    j["ground"] = M.ground.labels();
    json cs = json::array();
    for (const auto& X : M.circuits) cs.push_back(to_json(M.tract, X));
    j[key] = cs;
    return j;
}

// A matroid file with "circuits", or "cocircuits" (then the dual is taken).
inline TMatroid matroid_from_json(const json& j) {
    if (!j.is_object()) throw InputError("", "matroid file must be a JSON object");
    if (!j.contains("tract")) throw InputError("/tract", "missing tract descriptor");
    Tract t = tract_from_json(j["tract"], "/tract");
    Side side = Side::left;
    if (j.contains("chirality")) {
        const auto& c = j["chirality"];
        if (c == "left") side = Side::left;
        else if (c == "right") side = Side::right;
        else throw InputError("/chirality", "chirality is \"left\" or \"right\"");
    }
    if (!j.contains("ground") || !j["ground"].is_array()) throw InputError("/ground", "missing ground label array");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < j["ground"].size(); ++i) {
        if (!j["ground"][i].is_string()) throw InputError("/ground/" + std::to_string(i), "labels are strings");
        labels.push_back(j["ground"][i].get<std::string>());
    }
    GroundSet g;
    try {
        g = GroundSet(labels);
    } catch (const DomainError& e) {
        throw InputError("/ground", e.what());
    }
    bool co = !j.contains("circuits");
    const char* key = co ? "cocircuits" : "circuits";
    if (!j.contains(key) || !j[key].is_array()) throw InputError("", "need a \"circuits\" or \"cocircuits\" array");
    std::vector<TVector> vs;
    for (std::size_t i = 0; i < j[key].size(); ++i)
        vs.push_back(vector_from_json(t, j[key][i], g.size(), std::string("/") + key + "/" + std::to_string(i)));
    try {
        // a cocircuit family of a left matroid is right-scaled and vice versa
        if (co) return dual(make_matroid(t, opposite(side), g, std::move(vs)));
        return make_matroid(t, side, g, std::move(vs));
    } catch (const std::exception& e) {
        throw InputError(std::string("/") + key, e.what());
    }
}

inline json to_json(const Localization& s) {
    json j;
    j["schema"] = schema;
    j["p"] = s.p;
    json vals = json::object();
    for (std::size_t i = 0; i < s.values.size(); ++i)
        vals[vector_id(s.tract(), s.cocircuits.circuits[i])] = format(s.tract(), s.values[i]);
    j["values"] = vals;
    return j;
}

// Keys are serialized cocircuits; any scalar multiple of a representative is
// accepted and normalized.
inline Localization sigma_from_json(const TMatroid& base, const json& j, bool allow_zero = false) {
    if (!j.is_object() || !j.contains("values") || !j["values"].is_object())
        throw InputError("/values", "sigma file needs a \"values\" object");
    const Tract& t = base.tract;
    std::string p = j.contains("p") && j["p"].is_string() ? j["p"].get<std::string>() : "p";
    std::vector<std::pair<TVector, Value>> raw;
    for (const auto& [k, v] : j["values"].items()) {
        std::string where = "/values/" + k;
        json key;
        try {
            key = json::parse(k);
        } catch (const json::parse_error& e) {
            throw InputError(where, std::string("key is not a serialized vector: ") + e.what());
        }
        TVector Y = vector_from_json(t, key, base.size(), where);
        if (!v.is_string()) throw InputError(where, "sigma values are strings");
        try {
            raw.push_back({Y, parse_value(t, v.get<std::string>())});
        } catch (const DomainError& e) {
            throw InputError(where, e.what());
        }
    }
    try {
        return check_equivariance(base, raw, p, allow_zero);
    } catch (const PreconditionError& e) {
        throw InputError("/values", e.what());
    }
}

// "full", "roots:N", "window:LO..HI", or a JSON list of value strings.
inline std::vector<Value> parse_sample(const Tract& t, const std::string& spec) {
    try {
        if (spec.empty() || spec == "full") return default_sample(t);
        if (spec.starts_with("roots:")) {
            if (t.kind != Kind::phase) throw InputError("--sample", "roots:N applies to the phase tract");
            auto n = detail::integer(std::string_view(spec).substr(6));
            if (!n || *n <= 0 || *n > 720) throw InputError("--sample", "roots:N needs 1 <= N <= 720");
            return roots_of_unity(static_cast<int>(*n));
        }
        if (spec.starts_with("window:")) {
            if (t.kind != Kind::layered) throw InputError("--sample", "window:LO..HI applies to layered tracts");
            std::string_view w = std::string_view(spec).substr(7);
            auto dots = w.find("..");
            if (dots == std::string_view::npos) throw InputError("--sample", "expected window:LO..HI");
            auto lo = detail::integer(w.substr(0, dots)), hi = detail::integer(w.substr(dots + 2));
            if (!lo || !hi || *lo > *hi) throw InputError("--sample", "bad window bounds");
            return layer_window(t, static_cast<int>(*lo), static_cast<int>(*hi));
        }
        json j = parse_text(spec, "--sample");
        if (!j.is_array()) throw InputError("--sample", "expected full, roots:N, window:LO..HI or a list");
        std::vector<Value> out;
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_string()) throw InputError("--sample/" + std::to_string(i), "values are strings");
            Value v = parse_value(t, j[i].get<std::string>());
            if (v.zero) throw InputError("--sample/" + std::to_string(i), "samples are nonzero");
            out.push_back(v);
        }
        return out;
    } catch (const DomainError& e) {
        throw InputError("--sample", e.what());
    }
}

// ---- reports ---------------------------------------------------------------

inline json masks_json(const std::vector<Mask>& ms, const GroundSet& g) {
    json a = json::array();
    for (Mask m : ms) {
        json s = json::array();
        for (int i = 0; i < 32; ++i)
            if (has(m, i)) s.push_back(i < g.size() ? g.label(i) : "#" + std::to_string(i));
        a.push_back(s);
    }
    return a;
}

inline json to_json(const AxiomReport& r, const Tract& t, const GroundSet& g) {
    json j;
    j["mode"] = r.mode;
    j["passed"] = r.passed();
    j["axioms"] = r.axioms;
    json counts = json::object();
    for (const auto& [k, v] : r.failure_counts) counts[k] = v;
    j["failure_counts"] = counts;
    json fs = json::array();
    for (const auto& f : r.failures) {
        json x;
        x["axiom"] = f.axiom;
        if (!f.vectors.empty()) {
            json vs = json::array();
            for (const auto& v : f.vectors) vs.push_back(to_json(t, v));
            x["vectors"] = vs;
        }
        if (!f.sets.empty()) x["sets"] = masks_json(f.sets, g);
        if (!f.elements.empty()) {
            json es = json::array();
            for (int e : f.elements) es.push_back(e < g.size() ? g.label(e) : "#" + std::to_string(e));
            x["elements"] = es;
        }
        if (f.sum.size()) x["sum"] = to_json(t, f.sum.terms);
        if (!f.detail.empty()) x["detail"] = f.detail;
        fs.push_back(x);
    }
    j["failures"] = fs;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline json to_json(const PropertyVerdict& v, const Tract& t) {
    json j;
    j["property"] = v.property;
    j["holds"] = v.holds;
    j["sample_size"] = v.sample_size;
    j["checked"] = v.checked;
    if (!v.holds) {
        j["clause"] = v.clause;
        j["witness"] = to_json(t, v.witness);
    }
    if (!v.witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : v.witnesses) ws.push_back(to_json(t, w));
        j["witnesses"] = ws;
    }
    return j;
}

inline json to_json(const QuasiPlucker& Q) {
    json j;
    j["schema"] = schema;
    j["tract"] = to_json(Q.tract);
    j["chirality"] = side_name(Q.chirality);
    j["ground"] = Q.ground.labels();
    j["rank"] = Q.rank();
    json vs = json::array();
    for (const auto& [k, v] : Q.values) {
        json e;
        e["bases"] = masks_json({k.first, k.second}, Q.ground);
        e["value"] = format(Q.tract, v);
        vs.push_back(e);
    }
    j["coordinates"] = vs;
    return j;
}

}  // namespace trm::io
