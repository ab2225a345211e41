#include "tasks.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "algebra_json.hpp"
#include "conformal.hpp"
#include "exprparse.hpp"
#include "identities.hpp"
#include "jets.hpp"
#include "orbifold.hpp"
#include "pfaffian.hpp"
#include "standard.hpp"
#include "truncation.hpp"
#include "zhu.hpp"

namespace voa {

using nlohmann::json;

namespace {

struct Task {
    json in;
    bool as_json = false;
    json out;            // structured report
    std::string text;    // text report
    int code = 0;

    void line(const std::string& s) { text += s + "\n"; }
};

AlgebraPtr task_algebra(Task& t) {
    if (t.in.contains("builtin")) return standard_algebra(t.in.at("builtin").get<std::string>());
    if (t.in.contains("algebra")) return algebra_from_file(t.in.at("algebra").get<std::string>());
    throw std::invalid_argument("need --builtin or --algebra");
}

Weight2 parse_weight2(const json& v) {
    // weights are written as rationals ("7/2") or integers; stored doubled
    if (v.is_number_integer()) return 2 * v.get<long>();
    Rational q = rat_parse(v.get<std::string>());
    Rational dbl = q * 2;
    if (dbl.get_den() != 1) throw std::invalid_argument("weight must be a half-integer");
    return dbl.get_num().get_si();
}

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    return out;
}

std::vector<State> parse_states(const AlgebraPtr& h, const std::string& joined) {
    std::vector<State> out;
    std::stringstream ss(joined);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty()) out.push_back(parse_expr(item, h));
    return out;
}

DiagonalAction parse_diagonal(const AlgebraPtr& h, const std::string& s) {
    DiagonalAction act;
    if (s == "z2") {
        act.modulus = 2;
        act.charge.assign(h->num_generators(), 1);
        return act;
    }
    // "zN:c1,c2,..." with one charge per generator
    if (s.size() > 1 && s[0] == 'z') {
        auto colon = s.find(':');
        act.modulus = std::stol(s.substr(1, colon - 1));
        if (colon == std::string::npos) {
            act.charge.assign(h->num_generators(), 1);
        } else {
            act.charge = parse_list(s.substr(colon + 1));
        }
        return act;
    }
    throw std::invalid_argument("unknown invariant action: " + s);
}

json checks_to_json(const CheckReport& rep) {
    json arr = json::array();
    for (const auto& c : rep.checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return arr;
}

void emit_checks(Task& t, const CheckReport& rep) {
    for (const auto& c : rep.checks)
        t.line((c.pass ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail));
    t.out["checks"] = checks_to_json(rep);
    t.out["pass"] = rep.all_pass();
    if (!rep.all_pass()) t.code = 1;
    t.line(rep.all_pass() ? "PASS" : "FAIL");
}

json relation_to_json(const AlgebraPtr& h, const Relation& rel,
                      const std::vector<std::string>& names) {
    json terms = json::array();
    for (const auto& [w, c] : rel.rhs) {
        json word = json::array();
        for (const auto& [g, dz] : w) word.push_back({{"gen", names[(std::size_t)g]}, {"dz", dz}});
        terms.push_back({{"coeff", c.str()}, {"word", word}, {"text", genword_str(w, names)}});
    }
    return {{"target", rel.target_state.str()}, {"terms", terms}};
}

std::string relation_text(const Relation& rel, const std::vector<std::string>& names) {
    std::string s;
    for (const auto& [w, c] : rel.rhs) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*" + genword_str(w, names);
    }
    return s.empty() ? "0" : s;
}

// ---- command handlers -------------------------------------------------------

void cmd_ope(Task& t) {
    auto h = task_algebra(t);
    State a = parse_expr(t.in.at("a").get<std::string>(), h);
    State b = parse_expr(t.in.at("b").get<std::string>(), h);
    long n = t.in.value("n", -1);
    State r = nth_product(a, n, b);
    t.out["result"] = r.str();
    t.line(r.str());
}

void cmd_wick(Task& t) {
    auto h = task_algebra(t);
    State a = parse_expr(t.in.at("a").get<std::string>(), h);
    State b = parse_expr(t.in.at("b").get<std::string>(), h);
    State r = wick(a, b);
    t.out["result"] = r.str();
    t.line(r.str());
}

void cmd_identities(Task& t) {
    auto h = task_algebra(t);
    State a = parse_expr(t.in.at("a").get<std::string>(), h);
    State b = parse_expr(t.in.at("b").get<std::string>(), h);
    State c = parse_expr(t.in.at("c").get<std::string>(), h);
    long nmax = t.in.value("nmax", 4);
    auto rep = check_identities(a, b, c, nmax);
    CheckReport cr;
    for (const auto& ch : rep.checks) cr.checks.push_back({ch.name, ch.pass, ch.witness});
    emit_checks(t, cr);
}

void cmd_charge(Task& t) {
    auto h = task_algebra(t);
    State L = parse_expr(t.in.at("expr").get<std::string>(), h);
    Scalar c = central_charge(L);
    t.out["c"] = c.str();
    t.line("c = " + c.str());
}

void cmd_sugawara(Task& t) {
    auto h = task_algebra(t);
    Rational hv = rat_parse(t.in.value("hvee", "2"));
    auto vir = sugawara(h, hv);
    t.out["c"] = vir.c.str();
    t.out["L"] = vir.L.str();
    t.line("L = " + vir.L.str());
    t.line("c = " + vir.c.str());
    t.line("all generators primary of weight one: PASS");
}

void cmd_shapovalov(Task& t) {
    auto h = task_algebra(t);
    Weight2 w2 = parse_weight2(t.in.at("weight"));
    auto gram = shapovalov_gram(h, w2);
    json rows = json::array();
    for (const auto& row : gram.gram) {
        json r = json::array();
        for (const auto& c : row) r.push_back(c.str());
        rows.push_back(std::move(r));
    }
    t.out["dimension"] = gram.basis.size();
    t.out["gram"] = rows;
    t.out["det"] = gram.det.str();
    t.line("dimension " + std::to_string(gram.basis.size()));
    for (std::size_t i = 0; i < gram.gram.size(); ++i) {
        std::string row;
        for (const auto& c : gram.gram[i]) row += (row.empty() ? "" : "  ") + c.str();
        t.line("[ " + row + " ]");
    }
    t.line("det = " + gram.det.str());
}

void cmd_limit(Task& t) {
    auto h = task_algebra(t);
    auto lim = limit_infinity(h);
    t.out["limit"] = algebra_to_json(lim.limit);
    t.line(algebra_to_json(lim.limit).dump(2));
    if (t.in.contains("check_weight")) {
        Weight2 maxw2 = parse_weight2(t.in.at("check_weight"));
        bool ok = true;
        for (Weight2 wa = 0; wa <= maxw2 && ok; ++wa)
            for (Weight2 wb = 0; wb <= maxw2 && ok; ++wb)
                for (const auto& a : h->basis_words(wa))
                    for (const auto& b : h->basis_words(wb)) {
                        State sa = h->make(a), sb = h->make(b);
                        for (long n = -3; 2 * (n + 1) <= wa + wb; ++n) {
                            State lhs = lim.map(nth_product(sa, n, sb));
                            State rhs = nth_product(lim.map(sa), n, lim.map(sb));
                            if (!(lhs == rhs)) {
                                ok = false;
                                t.line("functoriality FAIL at n=" + std::to_string(n));
                                break;
                            }
                        }
                        if (!ok) break;
                    }
        t.out["functorial"] = ok;
        t.line(ok ? "limit map is functorial: PASS" : "FAIL");
        if (!ok) t.code = 1;
    }
}

void cmd_invariants(Task& t) {
    auto h = task_algebra(t);
    Weight2 w2 = parse_weight2(t.in.at("weight"));
    std::vector<std::string> words;
    if (t.in.contains("family")) {
        auto tag = family_tag_from_string(t.in.at("family").get<std::string>());
        if (!tag) throw std::invalid_argument("unknown family");
        QuadraticFamily fam{*tag, t.in.value("n", 1), t.in.value("k", 1)};
        auto fh = family_algebra(fam);
        auto act = family_action(fam, fh);
        for (const auto& s : invariant_states(fh, act, w2)) words.push_back(s.str());
    } else {
        auto act = parse_diagonal(h, t.in.value("invariant", "z2"));
        for (const auto& w : invariant_basis(h, act, w2)) words.push_back(h->make(w).str());
    }
    t.out["dimension"] = words.size();
    t.out["basis"] = words;
    for (const auto& w : words) t.line(w);
    t.line("dimension " + std::to_string(words.size()));
}

std::vector<State> default_generators(Task& t, const AlgebraPtr& h) {
    if (t.in.contains("generators")) return parse_states(h, t.in.at("generators").get<std::string>());
    // default for the rank-one sign orbifold: the quadratic ladder seeds
    return {parse_expr("omega(0,0)", h), parse_expr("omega(2,0)", h)};
}

void cmd_decouple(Task& t) {
    auto h = task_algebra(t);
    std::vector<State> gens = default_generators(t, h);
    std::vector<std::string> names;
    if (t.in.contains("names")) {
        std::stringstream ss(t.in.at("names").get<std::string>());
        std::string item;
        while (std::getline(ss, item, ';')) names.push_back(item);
    } else {
        for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("G" + std::to_string(i));
    }
    State target = parse_expr(t.in.at("target").get<std::string>(), h);
    auto rel = decouple(h, gens, target);
    if (!rel) {
        t.out["found"] = false;
        t.line("none");
        t.code = 1;
        return;
    }
    t.out["found"] = true;
    t.out["relation"] = relation_to_json(h, *rel, names);
    t.line("target = " + relation_text(*rel, names));
    if (t.in.contains("bootstrap")) {
        int count = t.in.at("bootstrap").get<int>();
        State pump = gens.size() > 1 ? gens[1] : gens[0];
        if (t.in.contains("pump")) pump = parse_expr(t.in.at("pump").get<std::string>(), h);
        auto steps = decouple_bootstrap(h, gens, pump, *rel, count);
        json jsteps = json::array();
        for (const auto& s : steps) {
            json js = {{"target", "w[" + std::to_string(2 * s.target_index) + ",0]"},
                       {"ok", s.ok},
                       {"pump_identity", s.pump_identity}};
            if (s.ok) {
                js["lead_coeff"] = s.lead_coeff.str();
                js["relation"] = relation_to_json(h, *s.relation, names);
                t.line(s.pump_identity);
                t.line("w[" + std::to_string(2 * s.target_index) +
                       ",0] = " + relation_text(*s.relation, names));
            } else {
                js["error"] = s.error;
                t.line("step failed: " + s.error);
                t.code = 1;
            }
            jsteps.push_back(std::move(js));
        }
        t.out["bootstrap"] = jsteps;
    }
}

void cmd_pfaffian(Task& t) {
    auto I = parse_list(t.in.at("list").get<std::string>());
    Poly p = pfaffian(I);
    t.out["pfaffian"] = p.str();
    t.line(p.str());
}

void cmd_rn(Task& t) {
    auto I = parse_list(t.in.at("list").get<std::string>());
    Rational closed = rn_closed(I);
    Rational rec = rn_recursion(I);
    t.out["closed"] = rat_str(closed);
    t.out["recursion"] = rat_str(rec);
    t.out["match"] = closed == rec;
    t.line("closed    = " + rat_str(closed));
    t.line("recursion = " + rat_str(rec));
    t.line(closed == rec ? "PASS" : "FAIL");
    if (!(closed == rec)) t.code = 1;
}

SubspaceSelector task_selector(Task& t, const AlgebraPtr& h) {
    std::string sel = t.in.value("selector", "full");
    if (sel == "full") return SelectorFull{};
    if (sel == "generated") return SelectorGenerated{parse_states(h, t.in.at("generators").get<std::string>())};
    return SelectorDiagonal{parse_diagonal(h, sel)};
}

void cmd_zhu(Task& t) {
    auto h = task_algebra(t);
    auto sel = task_selector(t, h);
    if (t.in.contains("expr")) {
        State e = parse_expr(t.in.at("expr").get<std::string>(), h);
        bool in_ideal = relation_in_zhu(h, sel, e);
        t.out["vanishes_in_zhu"] = in_ideal;
        t.line(in_ideal ? "true" : "false");
        if (!in_ideal) t.code = 1;
        return;
    }
    Weight2 maxw2 = parse_weight2(t.in.at("maxweight"));
    auto dims = c2_graded_dims(h, sel, maxw2);
    json jd = json::array();
    std::string row;
    for (const auto& [w2, d] : dims) {
        jd.push_back({{"weight2x", w2}, {"dim", d}});
        if (w2 % 2 == 0) row += (row.empty() ? "" : ",") + std::to_string(d);
    }
    t.out["dims"] = jd;
    t.line("zhu ring graded dims (integer weights): " + row);
}

void cmd_jet(Task& t) {
    Presentation p = presentation_from_file(t.in.at("file").get<std::string>());
    long m = t.in.at("m").get<long>();
    bool zero_base = t.in.value("zero_base", false);
    auto jp = jet_presentation(p, m, zero_base);
    t.out["jet"] = presentation_to_json(jp.jet);
    t.line(presentation_to_json(jp.jet).dump(2));
}

void cmd_hilbert(Task& t) {
    Presentation p = presentation_from_file(t.in.at("file").get<std::string>());
    Weight2 maxw2 = parse_weight2(t.in.at("maxweight"));
    GradedDims dims =
        t.in.value("arc", false) ? arc_hilbert(p, maxw2) : truncated_hilbert(p, maxw2);
    json jd = json::array();
    std::string row;
    for (const auto& [w2, d] : dims) {
        jd.push_back({{"weight2x", w2}, {"dim", d}});
        row += (row.empty() ? "" : ",") + std::to_string(d);
    }
    t.out["dims"] = jd;
    t.line("graded dims (half-integer steps): " + row);
}

void cmd_probe(Task& t) {
    auto h = task_algebra(t);
    auto sel = task_selector(t, h);
    Presentation R = presentation_from_file(t.in.at("file").get<std::string>());
    Weight2 maxw2 = parse_weight2(t.in.at("maxweight"));
    auto rep = classical_freeness_probe(h, sel, R, maxw2);
    json rows = json::array();
    for (const auto& r : rep.rows) {
        rows.push_back({{"weight2x", r.w2}, {"arc", r.arc_dim}, {"voa", r.voa_dim}});
        t.line("weight " + std::to_string(r.w2) + "/2: arc " + std::to_string(r.arc_dim) +
               "  voa " + std::to_string(r.voa_dim) +
               (r.arc_dim == r.voa_dim ? "" : "  (strict)"));
    }
    t.out["rows"] = rows;
    t.out["surjectivity"] = rep.surjective_ok;
    if (!rep.surjective_ok) {
        t.line("FAIL: arc dimension below the subalgebra dimension (engine bug)");
        t.code = 1;
    } else {
        t.line(rep.first_strict < 0 ? "equality at every weight"
                                    : "first strict inequality at weight2x " +
                                          std::to_string(rep.first_strict));
    }
}

void cmd_curve(Task& t) {
    char fam = t.in.value("family", "C")[0];
    long n = t.in.at("n").get<long>();
    long m = t.in.at("m").get<long>();
    CurvePoint cp = fam == 'C' ? curve_C(n, m) : curve_D(n, m);
    t.out["c"] = cp.c.str();
    std::string lam = cp.lambda ? cp.lambda->str() : "undefined";
    t.out["lambda"] = lam;
    t.line("c      = " + cp.c.str());
    t.line("lambda = " + lam);
}

void cmd_triality(Task& t) {
    auto rep = verify_triality(t.in.at("n").get<long>(), t.in.at("m").get<long>());
    emit_checks(t, rep);
}

void cmd_coincide(Task& t) {
    auto res = intersection_with_principal(t.in.at("n").get<long>(), t.in.at("m").get<long>(),
                                           t.in.at("s").get<long>());
    t.out["psi"] = rat_str(res.psi_star);
    t.out["c"] = rat_str(res.c_star);
    t.out["lambda"] = rat_str(res.lambda_star);
    t.line("psi*    = " + rat_str(res.psi_star));
    t.line("c*      = " + rat_str(res.c_star));
    t.line("lambda* = " + rat_str(res.lambda_star));
    emit_checks(t, res.report);
}

void cmd_bootstrap(Task& t) {
    long n = t.in.at("n").get<long>();
    long m = t.in.at("m").get<long>();
    std::string stage = t.in.value("stage", "lambda");
    BootstrapData data = stage == "alpha" ? bootstrap_alpha(n, m) : bootstrap_lambda(n, m);
    t.out["a0"] = data.alpha0.str();
    t.out["a1"] = data.alpha1.str();
    t.out["a2"] = data.alpha2.str();
    t.line("a0/a3 = " + data.alpha0.str());
    t.line("a1/a3 = " + data.alpha1.str());
    t.line("a2/a3 = " + data.alpha2.str());
    if (stage != "alpha") {
        t.out["a3_sq"] = data.a3_sq.str();
        t.out["b0"] = data.b0.str();
        t.out["lambda"] = data.lambda.str();
        t.line("a3^2  = " + data.a3_sq.str());
        t.line("b0    = " + data.b0.str());
        t.line("lambda = " + data.lambda.str());
    }
    emit_checks(t, data.report);
}

void cmd_bcd(Task& t) { emit_checks(t, bcd_parameter_consistency()); }

void cmd_basis(Task& t) {
    auto h = task_algebra(t);
    Weight2 w2 = parse_weight2(t.in.at("weight"));
    auto words = h->basis_words(w2);
    json arr = json::array();
    for (const auto& w : words) {
        arr.push_back(h->make(w).str());
        t.line(h->make(w).str());
    }
    t.out["basis"] = arr;
    t.out["dimension"] = words.size();
    t.line("dimension " + std::to_string(words.size()));
}

void cmd_strong(Task& t) {
    auto h = task_algebra(t);
    std::vector<State> gens = default_generators(t, h);
    Weight2 maxw2 = parse_weight2(t.in.at("maxweight"));
    LinearAction act;
    if (t.in.contains("family")) {
        auto tag = family_tag_from_string(t.in.at("family").get<std::string>());
        if (!tag) throw std::invalid_argument("unknown family");
        QuadraticFamily fam{*tag, t.in.value("n", 1), t.in.value("k", 1)};
        act = family_action(fam, h);
    } else {
        act.diagonal.push_back(parse_diagonal(h, t.in.value("invariant", "z2")));
    }
    auto rep = verify_strong_generation(h, act, gens, maxw2);
    json rows = json::array();
    for (const auto& r : rep.rows) {
        rows.push_back(
            {{"weight2x", r.w2}, {"span", r.span_dim}, {"invariant", r.invariant_dim}});
        t.line("weight " + std::to_string(r.w2) + "/2: span " + std::to_string(r.span_dim) +
               " of " + std::to_string(r.invariant_dim) +
               (r.span_dim == r.invariant_dim ? "" : "  DEFICIT"));
    }
    t.out["rows"] = rows;
    t.out["full_span"] = rep.full_span;
    t.line(rep.full_span ? "PASS" : "FAIL");
    if (!rep.full_span) t.code = 1;
}

}  // namespace

RunResult run_task(const std::string& task_json) {
    Task t;
    try {
        t.in = json::parse(task_json);
        t.as_json = t.in.value("format", "text") == "json";
        std::string cmd = t.in.at("cmd").get<std::string>();
        t.out["cmd"] = cmd;
        if (cmd == "ope")
            cmd_ope(t);
        else if (cmd == "wick")
            cmd_wick(t);
        else if (cmd == "identities")
            cmd_identities(t);
        else if (cmd == "charge")
            cmd_charge(t);
        else if (cmd == "sugawara")
            cmd_sugawara(t);
        else if (cmd == "shapovalov")
            cmd_shapovalov(t);
        else if (cmd == "limit")
            cmd_limit(t);
        else if (cmd == "invariants")
            cmd_invariants(t);
        else if (cmd == "decouple")
            cmd_decouple(t);
        else if (cmd == "strong")
            cmd_strong(t);
        else if (cmd == "pfaffian")
            cmd_pfaffian(t);
        else if (cmd == "rn")
            cmd_rn(t);
        else if (cmd == "zhu")
            cmd_zhu(t);
        else if (cmd == "jet")
            cmd_jet(t);
        else if (cmd == "hilbert")
            cmd_hilbert(t);
        else if (cmd == "probe")
            cmd_probe(t);
        else if (cmd == "curve")
            cmd_curve(t);
        else if (cmd == "triality")
            cmd_triality(t);
        else if (cmd == "coincide")
            cmd_coincide(t);
        else if (cmd == "bootstrap")
            cmd_bootstrap(t);
        else if (cmd == "bcd")
            cmd_bcd(t);
        else if (cmd == "basis")
            cmd_basis(t);
        else
            throw std::invalid_argument("unknown command: " + cmd);
    } catch (const std::exception& e) {
        t.out["error"] = e.what();
        return {2, t.as_json ? t.out.dump(2) + "\n" : std::string("error: ") + e.what() + "\n"};
    }
    t.out["exit"] = t.code;
    return {t.code, t.as_json ? t.out.dump(2) + "\n" : t.text};
}

}  // namespace voa
