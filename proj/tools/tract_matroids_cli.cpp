// Command-line front end. Reports go to stdout as JSON; exit status is 0 when
// the checked property holds, 1 when it fails, 2 on bad input.
#include "tract_matroids/fixtures.hpp"
#include "tract_matroids/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace trm;
using io::json;

namespace {

enum Exit { ok = 0, failed = 1, bad_input = 2 };

struct Options {
    std::string matroid, sigma, tract, mode = "weak", fixture, sample, property, rho, del, con;
    unsigned jobs = 1;
    bool all_witnesses = false;
};

json header(const std::string& command) {
    json j;
    j["schema"] = io::schema;
    j["command"] = command;
    return j;
}

int emit(json& j, int code) {
    std::cout << j.dump(2) << "\n";
    return code;
}

std::vector<std::string> split_labels(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else cur += c;
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Mask labels_mask(const TMatroid& M, const std::string& s, const char* flag) {
    try {
        return M.ground.mask_of(split_labels(s));
    } catch (const DomainError& e) {
        throw io::InputError(flag, e.what());
    }
}

TMatroid load_matroid(const Options& o) {
    if (o.matroid.empty()) throw io::InputError("--matroid", "a matroid file is required");
    return io::matroid_from_json(io::read_file(o.matroid));
}

Localization load_sigma(const TMatroid& M, const Options& o, bool allow_zero = false) {
    if (o.sigma.empty()) throw io::InputError("--sigma", "a sigma file is required");
    return io::sigma_from_json(M, io::read_file(o.sigma), allow_zero);
}

Tract load_tract(const Options& o) {
    if (o.tract.empty()) throw io::InputError("--tract", "a tract descriptor is required");
    json j = o.tract.front() == '{' ? io::parse_text(o.tract, "--tract") : io::read_file(o.tract);
    return io::tract_from_json(j);
}

void require_mode(const Options& o) {
    if (o.mode != "weak" && o.mode != "strong") throw io::InputError("--mode", "mode is weak or strong");
}

json rank2_json(const Tract& t, const Rank2Verdict& v) {
    json j;
    j["localization"] = v.localization;
    if (!v.triple.empty()) {
        json tr = json::array();
        for (const auto& Y : v.triple) tr.push_back(io::to_json(t, Y));
        j["triple"] = tr;
        j["element"] = v.element;
        j["sum"] = io::to_json(t, v.sum.terms);
    }
    return j;
}

json characterization_json(const Characterization& c, const GroundSet& g) {
    json j;
    j["full"] = c.full;
    j["rank2_contractions"] = c.rank2_contractions;
    j["rank2_minors3"] = c.rank2_minors3;
    j["agree"] = c.agree();
    json checks = json::array();
    for (const auto& m : c.checks) {
        json x;
        x["kind"] = m.kind;
        x["contracted"] = io::masks_json({m.contracted}, g)[0];
        if (m.kind == "minor3") x["kept"] = io::masks_json({m.kept}, g)[0];
        x["passed"] = m.passed;
        checks.push_back(x);
    }
    j["checks"] = checks;
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

// ---- subcommands -------------------------------------------------------------

int cmd_validate(const Options& o) {
    require_mode(o);
    TMatroid M = load_matroid(o);
    auto rep = check_circuit_axioms(M, o.mode);
    json j = header("validate");
    j["matroid"] = io::to_json(M);
    j["rank"] = M.has_underlying() ? json(M.rank()) : json(nullptr);
    j["report"] = io::to_json(rep, M.tract, M.ground);
    return emit(j, rep.passed() ? ok : failed);
}

int cmd_dual(const Options& o) {
    TMatroid M = load_matroid(o);
    json j = header("dual");
    j["dual"] = io::to_json(dual(M));
    return emit(j, ok);
}

int cmd_minor(const Options& o) {
    TMatroid M = load_matroid(o);
    Mask del = labels_mask(M, o.del, "--delete"), con = labels_mask(M, o.con, "--contract");
    json j = header("minor");
    try {
        j["minor"] = io::to_json(minor(M, del, con));
    } catch (const PreconditionError& e) {
        throw io::InputError("--delete/--contract", e.what());
    }
    return emit(j, ok);
}

int cmd_rescale(const Options& o) {
    TMatroid M = load_matroid(o);
    json r = io::parse_text(o.rho, "--rho");
    if (!r.is_array()) throw io::InputError("--rho", "expected a list of value strings");
    RescalingMap rho = io::vector_from_json(M.tract, r, M.size(), "--rho");
    for (const auto& v : rho)
        if (v.zero) throw io::InputError("--rho", "rescaling values are nonzero");
    json j = header("rescale");
    j["rescaled"] = io::to_json(rescale(M, rho));
    return emit(j, ok);
}

int cmd_plucker(const Options& o) {
    require_mode(o);
    TMatroid M = load_matroid(o);
    QuasiPlucker Q = qp_from_circuits(M);
    auto rep = check_qp_axioms(Q, o.mode);
    json j = header("plucker");
    j["plucker"] = io::to_json(Q);
    j["report"] = io::to_json(rep, M.tract, M.ground);
    j["round_trip"] = circuits_from_qp(Q) == M;
    return emit(j, rep.passed() ? ok : failed);
}

int cmd_check_localization(const Options& o) {
    require_mode(o);
    TMatroid M = load_matroid(o);
    Localization s = load_sigma(M, o, true);
    auto rep = is_localization(s, o.mode);
    json j = header("check-localization");
    j["localization"] = rep.passed();
    j["report"] = io::to_json(rep, M.tract, M.ground.with(s.p));
    return emit(j, rep.passed() ? ok : failed);
}

int cmd_extend(const Options& o) {
    require_mode(o);
    TMatroid M = load_matroid(o);
    Localization s = load_sigma(M, o, true);
    json j = header("extend");
    try {
        auto R = extend(s, o.mode);
        j["extended"] = io::to_json(R.extended);
        j["cocircuits"] = io::to_json(R.cocircuits, "cocircuits");
        j["cocircuit_classes"] = R.cocircuits.circuits.size();
        json prov = json::array();
        for (const auto& p : R.provenance) {
            json x;
            x["kind"] = p.kind == Provenance::Kind::lifted ? "lifted" : "modular";
            x["from"] = p.kind == Provenance::Kind::lifted ? json::array({p.first}) : json::array({p.first, p.second});
            prov.push_back(x);
        }
        j["provenance"] = prov;
        return emit(j, ok);
    } catch (const ExtensionError& e) {
        j["error"] = e.what();
        j["report"] = io::to_json(e.report, M.tract, M.ground.with(s.p));
        return emit(j, failed);
    }
}

int cmd_characterize(const Options& o) {
    require_mode(o);
    TMatroid M = load_matroid(o);
    Localization s = load_sigma(M, o, true);
    auto c = characterize(s, o.mode, o.jobs);
    json j = header("characterize");
    j["verdicts"] = characterization_json(c, M.ground);
    return emit(j, c.full ? ok : failed);
}

PropertyVerdict run_property(const Tract& t, const std::string& p, const std::vector<Value>& sample,
                             const CheckOptions& opt) {
    if (p == "pathetic-cancellation") return check_pathetic_cancellation(t, sample, opt);
    if (p == "stringent") return check_stringent(t, sample);
    if (p == "strong-pathetic-cancellation") return check_strong_pc(t, sample, opt);
    if (p == "pp-multi") return check_pp_multi(t, sample);
    if (p == "doubly-distributive") return check_doubly_distributive(t, sample, opt);
    throw io::InputError("--property", "unknown property '" + p + "'");
}

int cmd_check_tract(const Options& o) {
    Tract t = load_tract(o);
    if (!t.finite() && o.sample.empty())
        throw io::InputError("--sample", "infinite tracts need an explicit --sample");
    auto sample = io::parse_sample(t, o.sample);
    CheckOptions opt;
    opt.jobs = o.jobs;
    opt.collect_all = o.all_witnesses;
    std::vector<std::string> props = o.property.empty() ? std::vector<std::string>{"pathetic-cancellation"}
                                                        : split_labels(o.property);
    json j = header("check-tract");
    j["tract"] = io::to_json(t);
    json vs = json::array();
    bool all = true;
    for (const auto& p : props) {
        auto v = run_property(t, p, sample, opt);
        all = all && v.holds;
        vs.push_back(io::to_json(v, t));
    }
    j["verdicts"] = vs;
    return emit(j, all ? ok : failed);
}

// ---- fixtures ----------------------------------------------------------------

json expectation(bool ok_, const std::string& what) {
    json e;
    e["check"] = what;
    e["matches"] = ok_;
    return e;
}

json repro_counterexample(bool& pass, unsigned jobs) {
    auto c = fixtures::counterexample();
    const Tract& t = c.q.tract;
    json r, checks = json::array();
    auto add = [&](bool b, const std::string& what) {
        pass = pass && b;
        checks.push_back(expectation(b, what));
    };
    add(check_circuit_axioms(c.M, "weak").passed(), "weak circuit axioms pass");
    add(check_circuit_axioms(c.M, "strong").passed(), "strong circuit axioms pass");
    json contr = json::array();
    bool all2 = true;
    for (int k = 0; k < 4; ++k) {
        auto v = rank2_localization_test(induce_sigma(c.sigma, bit(k), MinorKind::contract));
        all2 = all2 && v.localization;
        json x = rank2_json(t, v);
        x["contracted"] = c.ground.label(k);
        contr.push_back(x);
    }
    add(all2, "rank 2 test passes on M/y1..M/y4");
    const Value o = one(t), O = Value::nil();
    TVector Y1 = mod_cocircuit(c.sigma, c.rows[0], c.rows[2]);
    TVector Y2 = mod_cocircuit(c.sigma, negated(t, c.rows[0]), c.rows[1]);
    TVector Z = mod_cocircuit(c.sigma, c.rows[1], c.rows[2]);
    auto rep = is_localization(c.sigma);
    bool witness = false;
    for (const auto& f : rep.failures)
        if (f.axiom == "elimination" && f.vectors == std::vector<TVector>{Y1, Y2, Z} && !is_null(t, f.sum)) witness = true;
    add(!rep.passed() && witness, "is_localization fails with the Y1, Y2, Z elimination witness");
    add(Y1 == TVector{o, O, o, turn::make(17, 24), O} && Z == TVector{O, o, o, turn::make(3, 4), O},
        "Mod cocircuits take the values ph:17/24 and ph:3/4 at y4");
    auto ch = characterize(c.sigma, "weak", jobs);
    add(!ch.full && ch.rank2_contractions && ch.rank2_minors3, "characterize gives (false, true, true)");
    r["matroid"] = io::to_json(c.M);
    r["sigma"] = io::to_json(c.sigma);
    r["contractions"] = contr;
    r["mod_cocircuits"] = json::array({io::to_json(t, Y1), io::to_json(t, Y2), io::to_json(t, Z)});
    r["localization_report"] = io::to_json(rep, t, c.ground.with(c.sigma.p));
    r["characterize"] = characterization_json(ch, c.ground);
    r["checks"] = checks;
    return r;
}

json repro_sign_u23(bool& pass) {
    auto f = fixtures::sign_u23();
    json r, checks = json::array();
    auto add = [&](bool b, const std::string& what) {
        pass = pass && b;
        checks.push_back(expectation(b, what));
    };
    add(dual(f.M) == make_matroid(f.M.tract, Side::right, f.ground, {f.Y.begin(), f.Y.end()}),
        "cocircuits are Y1, Y2, Y3 up to scaling");
    auto v = rank2_localization_test(f.sigma);
    add(v.localization, "rank 2 test passes");
    add(is_localization(f.sigma).passed(), "sigma is a localization");
    auto R = extend(f.sigma);
    add(R.cocircuits.circuits.size() == 4, "the extension has 4 cocircuit classes");
    add(sigma_from_extension(f.M, R.extended, f.sigma.p) == f.sigma, "sigma is recovered from the extension");
    r["rank2"] = rank2_json(f.M.tract, v);
    r["extended"] = io::to_json(R.extended);
    r["cocircuits"] = io::to_json(R.cocircuits, "cocircuits");
    r["checks"] = checks;
    return r;
}

json repro_quintuple(bool& pass, unsigned jobs) {
    auto q = fixtures::phase_quintuple();
    const Tract& t = q.tract;
    const Value o = one(t), m = epsilon(t);
    json r, checks = json::array();
    auto add = [&](bool b, const std::string& what) {
        pass = pass && b;
        checks.push_back(expectation(b, what));
    };
    add(hypersum_contains(t, {o, q.a}, q.x), "x in 1 + a");
    add(hypersum_contains(t, {m, q.b}, q.y), "y in -1 + b");
    add(hypersum_contains(t, {q.a, q.b}, q.z), "z in a + b");
    add(hypersum_contains(t, {q.x, q.y}, q.z), "z in x + y");
    Value xb = mul(t, q.x, q.b), may = neg(t, mul(t, q.a, q.y));
    add(binary_sum(t, xb, may).singleton() && xb == may, "xb + (-ay) is a singleton");
    add(!hypersum_contains(t, {xb, may}, q.z), "z is not in xb - ay");
    CheckOptions opt;
    opt.jobs = jobs;
    opt.collect_all = true;
    auto v = check_pathetic_cancellation(t, roots_of_unity(24), opt);
    std::vector<Value> want{q.a, q.b, q.x, q.y, q.z};
    add(!v.holds && std::find(v.witnesses.begin(), v.witnesses.end(), want) != v.witnesses.end(),
        "Pathetic Cancellation fails on 24th roots with this quintuple among the witnesses");
    r["quintuple"] = io::to_json(t, want);
    r["xb"] = io::format(t, xb);
    r["minus_ay"] = io::format(t, may);
    r["witness_count"] = v.witnesses.size();
    r["first_witness"] = io::to_json(t, v.witness);
    r["checks"] = checks;
    return r;
}

json repro_u34(bool& pass, unsigned jobs) {
    auto f = fixtures::sign_u34();
    json r, checks = json::array();
    auto add = [&](bool b, const std::string& what) {
        pass = pass && b;
        checks.push_back(expectation(b, what));
    };
    add(check_circuit_axioms(f.M, "strong").passed(), "circuit axioms pass");
    auto ch = characterize(f.sigma, "weak", jobs);
    add(ch.full && ch.rank2_contractions && ch.rank2_minors3, "characterize gives (true, true, true)");
    auto R = extend(f.sigma);
    add(sigma_from_extension(f.M, R.extended, f.sigma.p) == f.sigma, "sigma is recovered from the extension");
    add(minor(R.extended, bit(f.M.size()), 0) == f.M, "deleting p gives the base");
    r["sigma"] = io::to_json(f.sigma);
    r["characterize"] = characterization_json(ch, f.ground);
    r["cocircuits"] = io::to_json(R.cocircuits, "cocircuits");
    r["checks"] = checks;
    return r;
}

json repro_layered(bool& pass, unsigned jobs) {
    auto f = fixtures::layered_window();
    auto sample = f.sample();
    json r, checks = json::array();
    CheckOptions opt;
    opt.jobs = jobs;
    json vs = json::array();
    for (auto v : {check_stringent(f.tract, sample), check_strong_pc(f.tract, sample, opt),
                   check_pathetic_cancellation(f.tract, sample, opt), check_pp_multi(f.tract, sample)}) {
        pass = pass && v.holds;
        checks.push_back(expectation(v.holds, v.property + " holds on layers -3..3"));
        vs.push_back(io::to_json(v, f.tract));
    }
    r["tract"] = io::to_json(f.tract);
    r["verdicts"] = vs;
    r["checks"] = checks;
    return r;
}

int cmd_repro(const Options& o) {
    std::vector<std::string> names = o.fixture.empty() || o.fixture == "all" ? fixtures::names()
                                                                               : std::vector<std::string>{o.fixture};
    json j = header("repro");
    json out = json::array();
    bool all = true;
    for (const auto& n : names) {
        bool pass = true;
        json r;
        if (n == "table2-counterexample") r = repro_counterexample(pass, o.jobs);
        else if (n == "table1-rank2") r = repro_sign_u23(pass);
        else if (n == "exam2-quintuple") r = repro_quintuple(pass, o.jobs);
        else if (n == "sign-u34") r = repro_u34(pass, o.jobs);
        else if (n == "layered-window") r = repro_layered(pass, o.jobs);
        else throw io::InputError("--fixture", "unknown fixture '" + n + "'");
        json x;
        x["fixture"] = n;
        x["matches_expected"] = pass;
        x["result"] = r;
        out.push_back(x);
        all = all && pass;
    }
    j["fixtures"] = out;
    return emit(j, all ? ok : failed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matroids over skew tracts: axioms, duality, minors, extensions"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    if (const char* env = std::getenv("TRACT_MATROIDS_JOBS")) {
        try {
            o.jobs = static_cast<unsigned>(std::stoul(env));
        } catch (...) {
            std::cerr << "TRACT_MATROIDS_JOBS must be a positive integer\n";
            return bad_input;
        }
    }
    app.add_option("--jobs", o.jobs, "worker threads (default $TRACT_MATROIDS_JOBS or 1)")->check(CLI::PositiveNumber);

    auto mat = [&](CLI::App* s) { s->add_option("--matroid", o.matroid, "matroid JSON file")->required(); };
    auto sig = [&](CLI::App* s) { s->add_option("--sigma", o.sigma, "sigma JSON file")->required(); };
    auto mode = [&](CLI::App* s) { s->add_option("--mode", o.mode, "weak or strong")->check(CLI::IsMember({"weak", "strong"})); };

    auto* validate = app.add_subcommand("validate", "check the circuit axioms");
    mat(validate), mode(validate);
    auto* dual_ = app.add_subcommand("dual", "print the dual matroid");
    mat(dual_);
    auto* minor_ = app.add_subcommand("minor", "delete and contract ground elements");
    mat(minor_);
    minor_->add_option("--delete", o.del, "comma-separated labels");
    minor_->add_option("--contract", o.con, "comma-separated labels");
    auto* rescale_ = app.add_subcommand("rescale", "rescale by a nonzero map on the ground set");
    mat(rescale_);
    rescale_->add_option("--rho", o.rho, "JSON list of values, one per ground element")->required();
    auto* plucker = app.add_subcommand("plucker", "quasi-Pluecker coordinates and their axioms");
    mat(plucker), mode(plucker);
    auto* ext = app.add_subcommand("extend", "single-element extension from a localization");
    mat(ext), sig(ext), mode(ext);
    auto* cl = app.add_subcommand("check-localization", "decide whether sigma is a localization");
    mat(cl), sig(cl), mode(cl);
    auto* ch = app.add_subcommand("characterize", "full, rank 2 contraction and 3-element minor verdicts");
    mat(ch), sig(ch), mode(ch);
    auto* ct = app.add_subcommand("check-tract", "decide tract properties on a sample");
    ct->add_option("--tract", o.tract, "tract descriptor file or inline JSON")->required();
    ct->add_option("--property", o.property, "comma-separated: pathetic-cancellation, stringent, "
                                              "strong-pathetic-cancellation, pp-multi, doubly-distributive");
    ct->add_option("--sample", o.sample, "full, roots:N, window:LO..HI or a JSON list");
    ct->add_flag("--all-witnesses", o.all_witnesses, "collect every witness");
    auto* repro = app.add_subcommand("repro", "reproduce an embedded fixture");
    repro->add_option("--fixture", o.fixture, "fixture name or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (validate->parsed()) return cmd_validate(o);
        if (dual_->parsed()) return cmd_dual(o);
        if (minor_->parsed()) return cmd_minor(o);
        if (rescale_->parsed()) return cmd_rescale(o);
        if (plucker->parsed()) return cmd_plucker(o);
        if (ext->parsed()) return cmd_extend(o);
        if (cl->parsed()) return cmd_check_localization(o);
        if (ch->parsed()) return cmd_characterize(o);
        if (ct->parsed()) return cmd_check_tract(o);
        if (repro->parsed()) return cmd_repro(o);
    } catch (const io::InputError& e) {
        json j = header(app.get_subcommands().front()->get_name());
        j["input_error"] = e.what();
        j["at"] = e.where;
        std::cout << j.dump(2) << "\n";
        return bad_input;
    } catch (const std::exception& e) {
        json j = header(app.get_subcommands().front()->get_name());
        j["input_error"] = e.what();
        std::cout << j.dump(2) << "\n";
        return bad_input;
    }
    return bad_input;
}
