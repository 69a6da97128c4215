#include "powerstab/serialize.hpp"

namespace powerstab {

namespace {

Json members(const FiniteRing& R, const std::vector<FiniteRing::Element>& es) {
    Json out = Json::array();
    for (auto e : es) out.push_back(R.to_string(e));
    return out;
}

Json generator_list(const Ideal& I) {
    Json out = Json::array();
    for (const auto& g : I.generators()) out.push_back(g.to_string());
    return out;
}

}  // namespace

Json to_json(const Ideal& I) { return generator_list(I); }

Json to_json(const FinIdeal& I) { return members(*I.ring(), I.members()); }

Json to_json(const StabilityReport& r) {
    Json j;
    j["tower"] = r.tower.to_string();
    j["ideal"] = to_json(r.ideal);
    j["t_max"] = r.t_max;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["t"] = row.t;
        x["contraction"] = to_json(row.contraction);
        x["expected"] = to_json(row.expected);
        x["verdict"] = row.equal ? "equal" : "unequal";
        x["witness"] = row.witness ? Json(row.witness->to_string()) : Json(nullptr);
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["overall"] = r.overall();
    if (auto a = r.observed_window_start()) {
        j["observed_window"] = {{"from", *a},
                                {"to", r.t_max},
                                {"note", "equality observed on this range only; larger t is not decided"}};
    }
    if (r.resource_error) j["resource_error"] = *r.resource_error;
    return j;
}

Json to_json(const GradedReport& r) {
    Json j;
    j["tower"] = r.tower.to_string();
    j["ideal"] = to_json(r.ideal);
    j["n_max"] = r.n_max;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"n", row.n},
                        {"lhs", to_json(row.lhs)},
                        {"rhs", to_json(row.rhs)},
                        {"verdict", row.holds ? "equal" : "unequal"},
                        {"witness", row.witness ? Json(row.witness->to_string()) : Json(nullptr)}});
    }
    j["rows"] = std::move(rows);
    j["first_failure"] = r.first_failure() ? Json(*r.first_failure()) : Json(nullptr);
    if (r.resource_error) j["resource_error"] = *r.resource_error;
    return j;
}

Json to_json(const CheckReport& r) {
    Json j;
    j["name"] = r.name;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json x{{"check", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) x["detail"] = c.detail;
        checks.push_back(std::move(x));
    }
    j["checks"] = std::move(checks);
    if (r.stability) j["stability"] = to_json(*r.stability);
    j["passed"] = r.passed();
    return j;
}

Json to_json(const PropagationReport& r) {
    Json j;
    j["l"] = r.l;
    j["t_max"] = r.t_max;
    j["hypothesis"] = {{"holds", r.hypothesis_holds}, {"detail", r.hypothesis_detail}};
    Json rows = Json::array();
    for (const auto& row : r.rows) rows.push_back({{"t", row.t}, {"verdict", row.equal ? "equal" : "unequal"}});
    j["rows"] = std::move(rows);
    j["violations"] = r.violations;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const PowerProfile& p) {
    Json j;
    j["ring"] = p.ideal.ring()->describe();
    j["ideal"] = to_json(p.ideal);
    Json rows = Json::array();
    for (const auto& row : p.rows) {
        rows.push_back({{"t", row.t},
                        {"power_size", row.power.size()},
                        {"contraction", to_json(row.contraction)},
                        {"expected", to_json(row.expected)},
                        {"verdict", row.equal ? "equal" : "unequal"}});
    }
    j["rows"] = std::move(rows);
    auto f = p.last_failure();
    j["last_failure"] = f ? Json(*f) : Json(nullptr);
    return j;
}

Json to_json(const CrossCheckReport& r) {
    Json j;
    j["ring"] = r.ring->describe();
    j["via_groebner"] = members(*r.ring, r.via_groebner);
    j["via_closure"] = members(*r.ring, r.via_closure);
    j["image_in_base"] = members(*r.ring, r.image_in_base);
    j["agree"] = r.agree;
    return j;
}

}  // namespace powerstab
