#include "algebra_json.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace voa {

using nlohmann::json;

namespace {

Scalar coeff_from_json(const json& v, const FieldDesc& field) {
    if (v.is_number_integer()) return Scalar(Rational(v.get<long>()));
    if (v.is_string()) return Scalar::parse(v.get<std::string>(), field);
    throw std::invalid_argument("coefficient must be an integer or a string");
}

int gen_ref(const json& v, const LieConformalSpec& spec) {
    if (v.is_number_integer()) {
        int g = v.get<int>();
        if (g < 0 || g >= static_cast<int>(spec.generators.size()))
            throw std::invalid_argument("generator index out of range");
        return g;
    }
    if (v.is_string()) {
        const std::string name = v.get<std::string>();
        for (std::size_t i = 0; i < spec.generators.size(); ++i)
            if (spec.generators[i].name == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown generator name: " + name);
    }
    throw std::invalid_argument("generator reference must be a name or an index");
}

}  // namespace

AlgebraPtr algebra_from_json(const json& j) {
    LieConformalSpec spec;
    if (j.contains("field")) {
        const auto& f = j.at("field");
        std::string kind = f.value("kind", "rational");
        if (kind == "rational")
            spec.field = FieldDesc::rational();
        else if (kind == "ratfunc")
            spec.field = FieldDesc::ratfunc(f.at("param").get<std::string>());
        else
            throw std::invalid_argument("unknown field kind: " + kind);
    }
    for (const auto& g : j.at("generators")) {
        GeneratorDecl d;
        d.name = g.at("name").get<std::string>();
        std::string parity = g.value("parity", "even");
        if (parity == "even")
            d.parity = Parity::even;
        else if (parity == "odd")
            d.parity = Parity::odd;
        else
            throw std::invalid_argument("parity must be 'even' or 'odd'");
        d.weight2 = g.at("weight2x").get<long>();
        spec.generators.push_back(std::move(d));
    }
    if (j.contains("brackets")) {
        for (const auto& b : j.at("brackets")) {
            int a = gen_ref(b.at("a"), spec);
            int bb = gen_ref(b.at("b"), spec);
            long jj = b.at("j").get<long>();
            BracketRhs rhs;
            if (b.contains("terms"))
                for (const auto& t : b.at("terms"))
                    rhs.terms.push_back({gen_ref(t.at("gen"), spec),
                                         t.value("dz", 0), coeff_from_json(t.at("coeff"), spec.field)});
            if (b.contains("central")) rhs.central = coeff_from_json(b.at("central"), spec.field);
            spec.set_bracket(a, bb, jj, std::move(rhs));
        }
    }
    return Algebra::build(std::move(spec), {"custom", 0, 0, {}});
}

AlgebraPtr algebra_from_json_text(const std::string& text) {
    return algebra_from_json(json::parse(text));
}

AlgebraPtr algebra_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algebra spec: " + path);
    json j;
    in >> j;
    return algebra_from_json(j);
}

json algebra_to_json(const AlgebraPtr& h) {
    json j;
    j["generators"] = json::array();
    for (std::size_t i = 0; i < h->num_generators(); ++i) {
        const auto& g = h->generator(static_cast<int>(i));
        j["generators"].push_back({{"name", g.name},
                                   {"parity", g.parity == Parity::odd ? "odd" : "even"},
                                   {"weight2x", g.weight2}});
    }
    if (h->field().kind == FieldDesc::kRational)
        j["field"] = {{"kind", "rational"}};
    else
        j["field"] = {{"kind", "ratfunc"}, {"param", h->field().param}};
    j["brackets"] = json::array();
    for (const auto& [key, rhs] : h->spec().brackets) {
        auto [a, b, jj] = key;
        json entry = {{"a", h->generator(a).name}, {"b", h->generator(b).name}, {"j", jj}};
        json terms = json::array();
        for (const auto& t : rhs.terms)
            terms.push_back(
                {{"gen", h->generator(t.gen).name}, {"dz", t.dz}, {"coeff", t.coeff.str()}});
        if (!terms.empty()) entry["terms"] = terms;
        if (!rhs.central.is_zero()) entry["central"] = rhs.central.str();
        j["brackets"].push_back(std::move(entry));
    }
    return j;
}

Presentation presentation_from_json(const json& j) {
    std::vector<PolyRing::Var> vars;
    for (const auto& v : j.at("vars"))
        vars.push_back({v.at("name").get<std::string>(), v.at("weight2x").get<long>()});
    Presentation p;
    p.ring = PolyRing::make(std::move(vars));
    if (j.contains("relations"))
        for (const auto& r : j.at("relations"))
            p.relations.push_back(Poly::parse(p.ring, r.get<std::string>()));
    return p;
}

Presentation presentation_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open presentation: " + path);
    json j;
    in >> j;
    return presentation_from_json(j);
}

json presentation_to_json(const Presentation& p) {
    json j;
    j["vars"] = json::array();
    for (std::size_t i = 0; i < p.ring->size(); ++i)
        j["vars"].push_back(
            {{"name", p.ring->var(i).name}, {"weight2x", p.ring->var(i).weight2}});
    j["relations"] = json::array();
    for (const auto& f : p.relations) j["relations"].push_back(f.str());
    return j;
}

}  // namespace voa
