#include "improper/json_io.hpp"

#include "improper/errors.hpp"
#include "improper/graph_io.hpp"

namespace improper {

Json to_json(const IntervalRepresentation& r) {
    Json ivs = Json::array();
    for (const auto& iv : r.intervals) ivs.push_back({iv.left, iv.right});
    return Json{{"n", r.size()}, {"intervals", std::move(ivs)}};
}

IntervalRepresentation representation_from_json(const Json& j) {
    try {
        IntervalRepresentation r;
        for (const auto& iv : j.at("intervals")) {
            if (!iv.is_array() || iv.size() != 2) throw InvalidRepresentation("interval must be [left, right]");
            r.intervals.push_back({iv[0].get<std::int64_t>(), iv[1].get<std::int64_t>()});
        }
        if (j.contains("n") && j["n"].get<std::size_t>() != r.size()) {
            throw InvalidRepresentation("n does not match the number of intervals");
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidRepresentation(e.what());
    }
}

Json to_json(const SearchStats& s) {
    return Json{{"nodes", s.nodes},
                {"orderings_explored", s.orderings_explored},
                {"feasibility_prunes", s.feasibility_prunes},
                {"bound_prunes", s.bound_prunes}};
}

Json to_json(const ImproprietyCertificate& c) {
    Json j;
    j["objective"] = to_string(c.objective);
    j["value"] = c.value;
    j["witness"] = to_json(c.witness);
    j["basepoint_witness"] = c.basepoint_witness >= 0 ? Json(c.basepoint_witness) : Json();
    j["stats"] = to_json(c.stats);
    return j;
}

Json to_json(const Calibration& c) {
    return Json{{"chosen_s", c.chosen_s},
                {"calibrated", c.calibrated},
                {"reached_target", c.reached_target},
                {"observed_impropriety", c.observed_impropriety},
                {"observed_drop", c.observed_drop}};
}

Json family_sidecar(const FamilyInstance& inst) {
    Json j;
    j["family"] = inst.family_tag;
    Json params;
    params["p"] = inst.params.p;
    params["n"] = inst.params.n;
    if (inst.params.s) params["s"] = *inst.params.s;
    params["q"] = inst.params.q;
    params["k"] = inst.params.k;
    j["params"] = std::move(params);
    j["vertices"] = inst.graph.vertex_count();
    j["graph6"] = to_graph6(inst.graph);
    const bool claims = inst.family_tag.rfind("fig", 0) == 0;
    j["designated_vertex"] = claims ? Json(inst.designated_vertex) : Json();
    j["constructed_basepoint"] = claims ? Json(inst.constructed_basepoint) : Json();
    j["expected_imp"] = claims ? Json(inst.expected_impropriety) : Json();
    j["expected_drop"] = claims ? Json(inst.expected_drop_value) : Json();
    j["relocating"] = inst.relocating;
    j["labels"] = inst.labels;
    j["calibration"] = inst.calibration ? to_json(*inst.calibration) : Json();
    j["notes"] = inst.notes;
    return j;
}

Json to_json(const StructureReport& r) {
    Json j;
    j["impropriety"] = r.impropriety;
    j["basepoint_witnesses"] = r.basepoint_witnesses;
    Json per = Json::array();
    for (const auto& a : r.per_basepoint) {
        Json comps = Json::array();
        for (std::size_t i = 0; i < a.local_components.size(); ++i) {
            comps.push_back({{"vertices", a.local_components[i]}, {"exterior", static_cast<bool>(a.exterior[i])}});
        }
        per.push_back({{"basepoint", a.basepoint},
                       {"local_components", std::move(comps)},
                       {"exterior_count", a.exterior_count()}});
    }
    j["per_basepoint"] = std::move(per);
    return j;
}

Json to_json(const SpectrumReport& r) {
    Json j;
    j["key"] = r.graph_key;
    j["objective"] = to_string(r.objective);
    j["value"] = r.impropriety;
    Json pv = Json::array();
    for (const auto& [v, value] : r.per_vertex) pv.push_back({v, value});
    j["per_vertex"] = std::move(pv);
    j["spectrum"] = r.spectrum;
    j["critical"] = r.critical ? Json(*r.critical) : Json();
    j["disconnecting_deletion"] = r.disconnecting_deletion;
    return j;
}

}  // namespace improper
