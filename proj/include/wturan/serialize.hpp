#pragma once

// JSON forms of the report types. Rationals are always strings "p/q" in
// lowest terms ("p" when q = 1). Object keys come out sorted.

#include "json.hpp"

#include "wturan/clique.hpp"
#include "wturan/harness.hpp"
#include "wturan/lagrangian.hpp"
#include "wturan/rational.hpp"
#include "wturan/weights.hpp"

namespace wturan {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const CliqueSet& c) { return c.vertices; }

inline Json to_json(const SimplexPoint& x) {
    Json a = Json::array();
    for (const auto& c : x.coords()) a.push_back(c.str());
    return a;
}

inline Json to_json(const WeightReport& rep) {
    Json edges = Json::array();
    for (const auto& e : rep.records) edges.push_back({{"u", e.u}, {"v", e.v}, {"r", e.r}, {"w", e.w.str()}});
    return {{"n", rep.n}, {"edges", std::move(edges)}, {"total", rep.total.str()}, {"bound", rep.bound.str()},
            {"slack", rep.slack.str()}};
}

inline Json to_json(const ReductionStep& s) {
    return {{"i", s.receiver},          {"j", s.donor},
            {"s_i", s.s_receiver.str()}, {"s_j", s.s_donor.str()},
            {"f_before", s.f_before.str()}, {"f_after", s.f_after.str()},
            {"point_after", to_json(s.point_after)}};
}

inline Json to_json(const ReductionTrace& t) {
    Json a = Json::array();
    for (const auto& s : t.steps) a.push_back(to_json(s));
    return a;
}

inline Json to_json(const LagrangianCandidate& c) {
    return {{"clique", to_json(c.clique)},
            {"status", std::string(to_string(c.status))},
            {"value", c.value ? Json(c.value->str()) : Json(nullptr)}};
}

inline Json to_json(const LagrangianOutcome& o) {
    Json cands = Json::array();
    for (const auto& c : o.candidates) cands.push_back(to_json(c));
    return {{"m", o.m.str()}, {"support", to_json(o.support)}, {"witness", to_json(o.witness)},
            {"candidates", std::move(cands)}};
}

inline Json to_json(const SweepStats& s) {
    return {{"n", s.n},
            {"graphs_checked", s.graphs_checked},
            {"violations", s.violations},
            {"min_slack", s.graphs_checked ? Json(s.min_slack.str()) : Json(nullptr)},
            {"tight_count", s.tight_count},
            {"tight_examples", s.tight_examples},
            {"max_total_weight", s.graphs_checked ? Json(s.max_total_weight.str()) : Json(nullptr)},
            {"lagrangian_checked", s.lagrangian_checked}};
}

} // namespace wturan
