#include "locproj/json_io.hpp"

#include <fstream>

namespace locproj::json_io {

namespace {

Exponent exps_from_json(const json& j, std::size_t rank) {
    Exponent e = j.get<Exponent>();
    if (e.size() != rank) throw BadRank("exponent length does not match torus rank");
    return e;
}

} // namespace

json to_json(const Character& c) {
    json arr = json::array();
    for (const auto& [e, a] : c.terms()) arr.push_back({{"coeff", to_decimal(a)}, {"exps", e}});
    return arr;
}

Character character_from_json(const json& j, std::size_t rank) {
    Character c(rank);
    for (const auto& term : j) {
        Int a;
        if (term.at("coeff").is_string())
            a = Int(term.at("coeff").get<std::string>());
        else
            a = Int(term.at("coeff").get<long>());
        c.add_term(exps_from_json(term.at("exps"), rank), a);
    }
    return c;
}

json to_json(const RationalCharacter& r) {
    json den = json::array();
    for (const auto& [e, m] : r.denominator()) den.push_back({{"exps", e}, {"mult", m}});
    return {{"num", to_json(r.numerator())}, {"den", den}};
}

RationalCharacter rational_character_from_json(const json& j, std::size_t rank) {
    RationalCharacter r(character_from_json(j.at("num"), rank));
    if (j.contains("den"))
        for (const auto& f : j.at("den"))
            r.multiply_denominator_factor(exps_from_json(f.at("exps"), rank),
                                          f.at("mult").get<std::int64_t>());
    return r;
}

json to_json(const plethysm::SymFun& f) {
    json arr = json::array();
    for (const auto& t : f.terms) arr.push_back({{"coeff", t.coeff}, {"indices", t.indices}});
    return arr;
}

plethysm::SymFun symfun_from_json(const json& j) {
    plethysm::SymFun f;
    for (const auto& t : j) {
        plethysm::SymFun::Term term;
        term.coeff = t.at("coeff").get<std::int64_t>();
        term.indices = t.at("indices").get<std::vector<std::int64_t>>();
        for (auto i : term.indices)
            if (i < 1) throw Error("symmetric function indices must be positive");
        f.terms.push_back(std::move(term));
    }
    return f;
}

json to_json(const grassmann::WeightList& w) {
    json arr = json::array();
    for (const auto& e : w.weights) arr.push_back(e);
    return arr;
}

grassmann::WeightList weight_list_from_json(const json& j) {
    grassmann::WeightList w;
    for (const auto& e : j) w.weights.push_back(e.get<Exponent>());
    w.rank = w.weights.empty() ? 0 : w.weights[0].size();
    for (const auto& e : w.weights)
        if (e.size() != w.rank) throw BadRank("weight list exponents have mixed ranks");
    return w;
}

json to_json(const Truncation& t) {
    json coeffs = json::object();
    for (std::int64_t d = t.lower(); d <= t.order(); ++d)
        if (t.coefficient(d) != 0) coeffs[std::to_string(d)] = to_decimal(t.coefficient(d));
    return {{"lower", t.lower()}, {"order", t.order()}, {"coeffs", coeffs}};
}

json to_json(const grassmann::IdentityReport& r) {
    json j{{"identity", r.identity}, {"order", r.order}, {"match", r.match}};
    j["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
    return j;
}

json to_json(const projection::ConditionReport& r) {
    json arr = json::array();
    for (const auto& e : r.entries)
        arr.push_back({{"condition", e.name}, {"pass", e.pass}, {"detail", e.detail}});
    return {{"all_pass", r.all_pass()}, {"conditions", arr}};
}

json to_json(const projection::VerificationReport& r) {
    json j;
    j["example"] = r.example;
    j["n"] = r.n;
    j["m"] = r.m;
    j["f"] = to_json(r.f);
    j["grading"] = r.grading;
    j["cutoffs"] = {{"k", r.cutoffs.k}, {"l", r.cutoffs.l}, {"J", r.cutoffs.J},
                    {"N", r.cutoffs.N}, {"W", r.cutoffs.W}};
    j["conditions"] = to_json(r.conditions);
    j["conditions_ok"] = r.conditions_ok;
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    j["match"] = r.match;
    j["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
    json trace = json::array();
    for (const auto& s : r.trace)
        trace.push_back({{"k", s.k}, {"l", s.l}, {"J", s.J}, {"changed", s.changed}});
    j["stabilization"] = trace;
    return j;
}

models::ExampleSpec spec_from_json(const json& j) {
    models::ExampleSpec s;
    s.name = j.value("name", "user-spec");
    s.variables = j.at("variables").get<std::vector<std::string>>();
    std::size_t rank = s.variables.size();
    s.Z = rational_character_from_json(j.at("Z"), rank);
    s.A = j.contains("A") ? character_from_json(j.at("A"), rank) : Character(rank);
    s.C = j.contains("C") ? character_from_json(j.at("C"), rank) : Character(rank);
    if (j.contains("B_correction"))
        s.B_correction = character_from_json(j.at("B_correction"), rank);
    else if (j.contains("B"))
        s.B_direct = rational_character_from_json(j.at("B"), rank);
    else
        throw Error("spec needs either B or B_correction");
    s.n = j.value("n", 1);
    s.m = j.value("m", 0);
    if (j.contains("f")) s.f = symfun_from_json(j.at("f"));
    std::vector<std::int64_t> gw = j.at("grading").get<std::vector<std::int64_t>>();
    if (gw.size() != rank) throw BadRank("grading length does not match torus rank");
    Grading g(gw);
    s.grading_for_order = [g](std::int64_t) { return g; };
    return s;
}

models::ExampleSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open spec file " + path);
    json j;
    in >> j;
    return spec_from_json(j);
}

} // namespace locproj::json_io
