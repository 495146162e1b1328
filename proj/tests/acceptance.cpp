// One line per acceptance criterion; exit status is the number of failures.
#include "generated.hpp"
#include "oracles.hpp"
#include "tract_matroids/fixtures.hpp"
#include "tract_matroids/io.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace trm;

namespace {

struct Line {
    bool ok = true;
    std::ostringstream why;
    void require(bool c, const std::string& what) {
        if (!c) {
            if (!ok) why << "; ";
            why << what;
            ok = false;
        }
    }
};

std::string show(const Tract& t, const Value& v) {
    if (v.zero) return "0";
    if (t.kind == Kind::phase) return v.a == 0 ? "ph:0" : "ph:" + std::to_string(v.a) + "/" + std::to_string(v.b);
    return std::to_string(v.a);
}

std::string show(const Tract& t, const std::vector<Value>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + show(t, xs[i]);
    return s + ")";
}

Value ph(int n, int d) { return turn::make(n, d); }

// ---- 1 ----------------------------------------------------------------------

void criterion1(Line& L, std::string& info) {
    auto c = fixtures::counterexample();
    const Tract& t = c.q.tract;
    const auto& q = c.q;
    L.require(check_circuit_axioms(c.M, "weak").passed(), "weak circuit axioms");
    L.require(check_circuit_axioms(c.M, "strong").passed(), "strong circuit axioms");
    L.require(c.M.rank() == 3 && c.M.circuits.size() == 1, "rank 3 with one circuit class");

    // the four rank 2 contractions with the triples from the proof
    const Value o = one(t), m = epsilon(t);
    struct Triple {
        int contracted;
        std::array<int, 3> rows;
        std::array<Value, 3> scale;
        int element;
        std::array<Value, 3> expect;
    };
    const Value mia = neg(t, q.a);
    std::array<Triple, 4> triples{{
        {0, {1, 2, 5}, {q.b, mia, o}, 3, {q.b, q.a, neg(t, q.z)}},
        {1, {0, 2, 3}, {o, mia, o}, 3, {o, q.a, neg(t, q.x)}},
        {2, {0, 1, 4}, {m, q.b, o}, 3, {m, q.b, neg(t, q.y)}},
        {3, {3, 4, 5}, {o, o, o}, 0, {q.x, q.y, neg(t, q.z)}},
    }};
    int good = 0;
    for (const auto& tr : triples) {
        Localization sk = induce_sigma(c.sigma, bit(tr.contracted), MinorKind::contract);
        auto v = rank2_localization_test(sk);
        std::array<TVector, 3> W;
        for (int i = 0; i < 3; ++i)
            W[static_cast<std::size_t>(i)] = restrict_away(
                scale(t, c.rows[static_cast<std::size_t>(tr.rows[static_cast<std::size_t>(i)])],
                      tr.scale[static_cast<std::size_t>(i)], Side::right),
                bit(tr.contracted));
        int e = tr.element - (tr.element > tr.contracted ? 1 : 0);
        bool elim = eliminates(sk, W[0], W[1], W[2], e);
        FormalSum sum = elimination_sum(sk, W[0], W[1], W[2]);
        std::vector<Value> want{tr.expect.begin(), tr.expect.end()};
        bool exact = sum.terms == want && is_null(t, sum);
        if (v.localization && elim && exact) ++good;
        L.require(v.localization, "rank2 test on M/y" + std::to_string(tr.contracted + 1));
        L.require(elim && exact, "null sum " + show(t, want) + " on M/y" + std::to_string(tr.contracted + 1) +
                                     ", got " + show(t, sum.terms));
    }

    const Value O = Value::nil();
    TVector Y1 = mod_cocircuit(c.sigma, c.rows[0], c.rows[2]);
    TVector Y2 = mod_cocircuit(c.sigma, negated(t, c.rows[0]), c.rows[1]);
    TVector Z = mod_cocircuit(c.sigma, c.rows[1], c.rows[2]);
    L.require(Y1 == TVector{o, O, o, ph(17, 24), O}, "Y1 = " + show(t, Y1));
    L.require(Y2 == TVector{m, o, O, ph(17, 24), O}, "Y2 = " + show(t, Y2));
    L.require(Z == TVector{O, o, o, ph(3, 4), O}, "Z = " + show(t, Z));

    auto rep = is_localization(c.sigma, "weak", {true, 4096});
    L.require(!rep.passed(), "is_localization must fail");
    bool witness = false;
    for (const auto& f : rep.failures)
        if (f.axiom == "elimination" && f.vectors == std::vector<TVector>{Y1, Y2, Z} &&
            f.sum.terms == std::vector<Value>{ph(17, 24), ph(17, 24), neg(t, ph(3, 4))} && !is_null(t, f.sum))
            witness = true;
    L.require(witness, "Y1/Y2/Z elimination witness with sum ph:17/24 + ph:17/24 - ph:3/4");
    std::size_t p5 = rep.failure_counts.count("P5") ? rep.failure_counts.at("P5") : 0;
    info = "4/4 contractions " + std::to_string(good) + " exact, P5 failures " + std::to_string(p5);
}

// ---- 2 ----------------------------------------------------------------------

void criterion2(Line& L) {
    auto q = fixtures::phase_quintuple();
    const Tract& t = q.tract;
    const Value o = one(t), m = epsilon(t);
    L.require(hypersum_contains(t, {o, q.a}, q.x), "x in 1 + a");
    L.require(hypersum_contains(t, {m, q.b}, q.y), "y in -1 + b");
    L.require(hypersum_contains(t, {q.a, q.b}, q.z), "z in a + b");
    L.require(hypersum_contains(t, {q.x, q.y}, q.z), "z in x + y");
    Value xb = mul(t, q.x, q.b), may = neg(t, mul(t, q.a, q.y));
    L.require(xb == ph(5, 24) && may == ph(5, 24), "xb = -ay = ph:5/24");
    HyperSet h = binary_sum(t, xb, may);
    L.require(h.singleton() && h.contains(ph(5, 24)), "xb + (-ay) is the singleton {ph:5/24}");
    L.require(!hypersum_contains(t, {xb, may}, q.z), "z not in xb - ay");
}

// ---- 3 ----------------------------------------------------------------------

void criterion3(Line& L, std::string& info) {
    std::string counts;
    for (const Tract& t : {Tract::krasner(), Tract::sign(), Tract::gfp(3), Tract::gfp(5)}) {
        auto v = check_pathetic_cancellation(t, carrier(t));
        L.require(v.holds, "PC over " + io::to_json(t).dump());
        counts += (counts.empty() ? "" : " ") + std::to_string(v.checked);
    }
    auto q = fixtures::phase_quintuple();
    CheckOptions opt;
    opt.collect_all = true;
    opt.jobs = 4;
    auto v = check_pathetic_cancellation(q.tract, roots_of_unity(24), opt);
    L.require(!v.holds, "PC fails on 24th roots");
    std::vector<Value> want{q.a, q.b, q.x, q.y, q.z};
    bool found = std::find(v.witnesses.begin(), v.witnesses.end(), want) != v.witnesses.end();
    L.require(found, "the phase quintuple among the witnesses");
    info = "hypothesis hits " + counts + "; " + std::to_string(v.witnesses.size()) + " witnesses over 24th roots, first " + show(q.tract, v.witness);
}

// ---- 4 ----------------------------------------------------------------------

void criterion4(Line& L) {
    auto lw = fixtures::layered_window();
    std::vector<std::pair<Tract, std::vector<Value>>> good{{Tract::krasner(), carrier(Tract::krasner())},
                                                           {Tract::sign(), carrier(Tract::sign())},
                                                           {Tract::gfp(2), carrier(Tract::gfp(2))},
                                                           {Tract::gfp(3), carrier(Tract::gfp(3))},
                                                           {Tract::gfp(5), carrier(Tract::gfp(5))},
                                                           {Tract::gfp(7), carrier(Tract::gfp(7))},
                                                           {lw.tract, lw.sample()}};
    for (const auto& [t, s] : good)
        L.require(check_stringent(t, s).holds, "stringent over kind " + std::to_string(int(t.kind)));
    auto p = check_stringent(Tract::phase(), roots_of_unity(4));
    L.require(!p.holds && p.witness == std::vector<Value>{ph(0, 1), ph(1, 4)}, "phase fails with witness (1, i)");
    CheckOptions opt;
    opt.jobs = 4;
    L.require(check_strong_pc(lw.tract, lw.sample(), opt).holds, "strong PC on the layered window");
    good.push_back({Tract::phase(), roots_of_unity(24)});
    for (const auto& [t, s] : good)
        L.require(check_pp_multi(t, s).holds, "1-1+1-1 = 1-1 over kind " + std::to_string(int(t.kind)));
}

// ---- 5 ----------------------------------------------------------------------

void criterion5(Line& L, std::string& info) {
    std::mt19937 rng(20261015);
    int agree = 0, total = 0, valid = 0;
    const Tract t = Tract::sign();
    for (int it = 0; it < 240; ++it) {
        int r = 1 + static_cast<int>(rng() % 3);
        int n = std::max(r, 2) + static_cast<int>(rng() % static_cast<unsigned>(6 - std::max(r, 2)));
        auto cfg = oracle::random_config(rng, r, n);
        auto C = oracle::real_circuits(cfg);
        switch (rng() % 4) {
            case 1:
                if (!C.empty()) {
                    auto& X = C[rng() % C.size()];
                    std::vector<std::size_t> at;
                    for (std::size_t i = 0; i < X.size(); ++i)
                        if (!X[i].zero) at.push_back(i);
                    auto e = at[rng() % at.size()];
                    X[e] = Value::of(-X[e].a);
                }
                break;
            case 2:
                if (!C.empty()) C.erase(C.begin() + static_cast<long>(rng() % C.size()));
                break;
            case 3: {
                TVector X;
                for (int i = 0; i < n; ++i) {
                    int k = static_cast<int>(rng() % 3);
                    X.push_back(k == 0 ? Value::nil() : Value::of(k == 1 ? 1 : -1));
                }
                C.push_back(X);
                break;
            }
            default: break;
        }
        bool brute = oracle::om_circuit_axioms(C);
        bool lib = false;
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        try {
            lib = check_circuit_axioms(make_matroid(t, Side::left, GroundSet(labels), C), "weak").passed();
        } catch (const std::exception&) {
            lib = false;
        }
        ++total;
        valid += brute;
        if (brute == lib) ++agree;
    }
    L.require(agree == total, std::to_string(total - agree) + " disagreements");
    info = std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(valid) + " valid)";
}

// ---- 6 ----------------------------------------------------------------------

void duality_checks(Line& L, const TMatroid& M, const std::string& name) {
    TMatroid D = dual(M);
    L.require(dual(D) == M, name + ": dual(dual(M)) = M");
    L.require(M.rank() + D.rank() == M.size(), name + ": rank additivity");
    for (const auto& X : M.circuits)
        for (const auto& Y : D.circuits)
            if (!orthogonality(M.tract, X, Y, M.chirality).orthogonal) {
                L.require(false, name + ": circuit/cocircuit orthogonality");
                return;
            }
}

void criterion6(Line& L) {
    auto c = fixtures::counterexample();
    auto r = fixtures::sign_u23();
    auto s = fixtures::sign_u34();
    duality_checks(L, c.M, "counterexample");
    duality_checks(L, r.M, "sign U23");
    duality_checks(L, s.M, "sign-u34");
    duality_checks(L, extend(r.sigma).extended, "sign U23 extended");
    duality_checks(L, extend(s.sigma).extended, "sign-u34 extended");
    const Tract t = Tract::sign();
    TMatroid U23 = make_matroid(t, Side::left, r.ground, {TVector{Value::of(1), Value::of(-1), Value::of(1)}});
    L.require(dual(U23) == make_matroid(t, Side::right, r.ground, {r.Y.begin(), r.Y.end()}),
              "dual of S U23 has the expected cocircuits");
}

// ---- 7 ----------------------------------------------------------------------

void criterion7(Line& L, const std::vector<oracle::Generated>& pool, std::string& info) {
    int ok = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto& g = pool[i];
        std::string tag = "#" + std::to_string(i);
        try {
            auto R = extend(g.sigma);
            const int n = g.sigma.base.size();
            bool a = R.cocircuits == g.true_cocircuits;
            bool b = sigma_from_extension(g.sigma.base, R.extended, "p") == g.sigma;
            bool c = minor(R.extended, bit(n), 0) == g.sigma.base;
            L.require(a, tag + " cocircuits differ from brute force");
            L.require(b, tag + " sigma round trip");
            L.require(c, tag + " deletion of p");
            if (a && b && c) ++ok;
        } catch (const std::exception& e) {
            L.require(false, tag + " " + e.what());
        }
    }
    info = std::to_string(ok) + "/" + std::to_string(pool.size()) + " generated localizations (S and GF(3))";
}

// ---- 8 ----------------------------------------------------------------------

void criterion8(Line& L, std::string& info) {
    auto f = fixtures::sign_u34();
    L.require(f.sigma.cocircuits.circuits.size() == 6, "six cocircuit classes on U34");
    int agree = 0, loc = 0, total = 0;
    std::vector<Value> opts{Value::nil(), Value::of(1), Value::of(-1)};
    for (int code = 0; code < 729; ++code) {
        std::vector<Value> vals;
        for (int k = 0, c = code; k < 6; ++k, c /= 3) vals.push_back(opts[static_cast<std::size_t>(c % 3)]);
        auto s = make_localization(f.M, vals, "p", &f.sigma.cocircuits);
        auto ch = characterize(s, "weak", 2);
        ++total;
        if (ch.agree()) ++agree;
        if (ch.full) ++loc;
    }
    L.require(agree == 729, std::to_string(729 - agree) + " sigma with differing verdicts");
    auto c = fixtures::counterexample();
    auto ch = characterize(c.sigma);
    L.require(!ch.full && ch.rank2_contractions && ch.rank2_minors3, "counterexample verdicts (false, true, true)");
    info = std::to_string(agree) + "/" + std::to_string(total) + " agree, " + std::to_string(loc) + " localizations";
}

// ---- 9 ----------------------------------------------------------------------

struct Named {
    std::string name;
    Localization sigma;
    std::vector<Value> alphas;
};

std::vector<Named> localization_fixtures(const std::vector<oracle::Generated>& pool) {
    std::vector<Named> out;
    out.push_back({"sign-u23", fixtures::sign_u23().sigma, {Value::of(-1)}});
    out.push_back({"sign-u34", fixtures::sign_u34().sigma, {Value::of(-1)}});
    {
        const Tract t = Tract::phase();
        const Value O = Value::nil();
        GroundSet g(std::vector<std::string>{"e1", "e2", "e3"});
        std::vector<TVector> Y{{O, ph(0, 1), ph(1, 4)}, {ph(0, 1), O, ph(0, 1)}, {ph(1, 4), ph(1, 2), O}};
        TMatroid M = dual(make_matroid(t, Side::right, g, Y));
        out.push_back({"phase-u23",
                       check_equivariance(M, {{Y[0], ph(0, 1)}, {Y[1], ph(1, 3)}, {Y[2], ph(13, 24)}}),
                       {ph(1, 8), ph(1, 3), ph(5, 12), ph(1, 2)}});
    }
    {
        auto c = fixtures::counterexample();
        std::vector<std::pair<TVector, Value>> raw;
        for (const auto& r : c.rows) raw.push_back({r, r[0]});
        out.push_back({"counterexample-parallel", check_equivariance(c.M, raw), {ph(1, 8), ph(1, 3), ph(5, 12), ph(1, 2)}});
    }
    for (std::size_t i = 0; i < pool.size(); i += 6)
        out.push_back({"generated#" + std::to_string(i), pool[i].sigma,
                       pool[i].sigma.tract().kind == Kind::sign ? std::vector<Value>{Value::of(-1)}
                                                                : std::vector<Value>{Value::of(2)}});
    return out;
}

void criterion9(Line& L, const std::vector<oracle::Generated>& pool, std::string& info) {
    int checked = 0;
    for (const auto& f : localization_fixtures(pool)) {
        const auto& s = f.sigma;
        const int n = s.base.size();
        ExtensionResult R;
        try {
            R = extend(s);
        } catch (const std::exception& e) {
            L.require(false, f.name + ": " + e.what());
            continue;
        }
        for (const auto& alpha : f.alphas) {
            Localization s2 = twisted(s, alpha);
            RescalingMap rho(static_cast<std::size_t>(n + 1), one(s.tract()));
            rho[static_cast<std::size_t>(n)] = alpha;
            try {
                auto R2 = extend(s2);
                bool a = R2.extended == rescale(R.extended, rho);
                bool b = R2.cocircuits == rescale_cocircuits(R.cocircuits, s.base.chirality, rho);
                L.require(a && b, f.name + ": alpha " + show(s.tract(), alpha));
                ++checked;
            } catch (const std::exception& e) {
                L.require(false, f.name + ": alpha " + show(s.tract(), alpha) + ": " + e.what());
            }
        }
    }
    info = std::to_string(checked) + " (sigma, alpha) pairs";
}

}  // namespace

int main() {
    int failures = 0;
    auto run = [&](int k, const std::string& title, const std::function<void(Line&, std::string&)>& body) {
        Line L;
        std::string info;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(L, info);
        } catch (const std::exception& e) {
            L.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!L.ok) ++failures;
        std::printf("criterion %d %-44s %s  [%.2fs]%s%s%s%s\n", k, title.c_str(), L.ok ? "PASS" : "FAIL", secs,
                    info.empty() ? "" : "  ", info.c_str(), L.ok ? "" : "  -- ", L.why.str().c_str());
        std::fflush(stdout);
    };
    run(1, "counterexample reproduction", criterion1);
    run(2, "phase quintuple memberships", [](Line& L, std::string&) { criterion2(L); });
    run(3, "pathetic cancellation verdicts", criterion3);
    run(4, "stringency suite", [](Line& L, std::string&) { criterion4(L); });
    run(5, "signed circuit axioms vs brute force", criterion5);
    run(6, "duality on fixtures", [](Line& L, std::string&) { criterion6(L); });
    std::vector<oracle::Generated> pool = oracle::generated_pool();
    run(7, "extension round trips", [&](Line& L, std::string& i) { criterion7(L, pool, i); });
    run(8, "U34 characterization agreement", criterion8);
    run(9, "rescaling coherence", [&](Line& L, std::string& i) { criterion9(L, pool, i); });
    return failures;
}
