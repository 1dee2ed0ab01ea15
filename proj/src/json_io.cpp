#include "crystal_lr/json_io.hpp"

namespace clr {

json to_json(const TPoly& p) {
    json out = json::array();
    for (auto& [e, c] : p.terms()) out.push_back({e, c});
    return out;
}

json to_json(const ExtremalClass& c) {
    json j;
    j["mu"] = c.mu.parts;
    j["nu"] = c.nu.parts;
    j["hw"] = c.hw ? json(c.hw->parts) : json(nullptr);
    j["dual"] = c.dual;
    return j;
}

json to_json(const Decomposition& d) {
    json out = json::array();
    for (auto& [c, m] : d.terms) out.push_back({{"class", to_json(c)}, {"mult", m}});
    return out;
}

json to_json(const KostkaWindow& w, int T) {
    json terms = json::array();
    for (auto& [lam, p] : w.coeffs) terms.push_back({{"lambda", lam.parts}, {"tpoly", to_json(p)}});
    return {{"basis", "z-schur"}, {"T", T}, {"complete", w.complete}, {"terms", terms}};
}

json to_json(const VerifyReport& r) {
    json census = json::array();
    for (auto& e : r.census)
        census.push_back({{"class", to_json(e.cls)}, {"observed", e.observed}, {"predicted", e.predicted}});
    return {{"match", r.match},     {"window", {r.window.lo, r.window.hi}}, {"margin", r.margin},
            {"retried", r.retried}, {"sources", r.sources},                 {"unstable", r.unstable},
            {"census", census},     {"discrepancy", r.discrepancy}};
}

json to_json(const CheckResult& r, bool timings) {
    json j{{"name", r.name},         {"criterion", r.criterion}, {"pass", r.pass},
           {"cases", r.cases},       {"failures", r.failures},   {"note", r.note},
           {"counterexample", r.counterexample.empty() ? json(nullptr) : json(r.counterexample)}};
    if (timings) j["seconds"] = r.seconds;
    return j;
}

ExtremalClass class_from_json(const json& j) {
    ExtremalClass c;
    c.mu = Partition(j.at("mu").get<std::vector<int>>());
    c.nu = Partition(j.at("nu").get<std::vector<int>>());
    if (!j.at("hw").is_null()) c.hw = GenPartition(j.at("hw").get<std::vector<int>>());
    c.dual = j.value("dual", false);
    return c;
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition d;
    for (auto& t : j) d.add(class_from_json(t.at("class")), t.at("mult").get<long long>());
    return d;
}

}  // namespace clr
