#include <berge/report.hpp>

#include <berge/io.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace berge {

namespace {

json edge_list(const std::vector<Hyperedge> & edges)
{
    json out = json::array();
    for (const auto & e : edges)
        out.push_back(to_json(e));
    return out;
}

json campaign_violation(const CampaignViolation & v)
{
    json out = {{"kind", v.kind}, {"detail", v.detail}};
    if (v.witness)
        out["witness"] = to_hg(*v.witness);
    if (v.cycle)
        out["cycle"] = {{"vertices", v.cycle->vertices}, {"edges", edge_list(v.cycle->edges)}};
    if (v.claim)
        out["claim"] = to_json(*v.claim);
    return out;
}

[[noreturn]] void schema_error(const std::string & message)
{
    throw Error(ErrorCode::SchemaError, message);
}

void expect_keys(const json & object, const std::set<std::string> & required, const std::set<std::string> & optional, const std::string & where)
{
    if (!object.is_object())
        schema_error(where + " must be an object");
    for (const auto & key : required)
        if (!object.contains(key))
            schema_error(where + " is missing '" + key + "'");
    for (const auto & [key, value] : object.items())
        if (!required.contains(key) && !optional.contains(key))
            schema_error(where + " has unknown field '" + key + "'");
}

const std::map<std::string, std::set<std::string>> & result_keys()
{
    static const std::map<std::string, std::set<std::string>> keys{
        {"solve longest-path", {"length", "witness_vertices", "witness_edges"}},
        {"solve circumference", {"length", "witness_vertices", "witness_edges"}},
        {"solve has-path", {"k", "has_path", "length", "witness_vertices", "witness_edges"}},
        {"check claims", {"cycle_length", "checked_vertices", "checked_triples", "checked_triple_pairs", "violations"}},
        {"shadow", {"n", "shadow_edges", "pairs"}},
        {"stats", {"n", "m", "m2", "m3", "shadow_edges", "min_degree", "max_degree", "min_shadow_degree", "max_shadow_degree", "components"}},
    };
    return keys;
}

const std::set<std::string> verify_keys{"campaign", "params", "verified", "instances_checked", "bp_free_count", "pruned_subtrees",
    "max_hyperedges", "max_shadow_edges", "bound", "extremal_count", "extremal_witnesses", "extremal_classes", "notes", "cyclic_instances",
    "acyclic_skipped", "cycles_checked", "checked_vertices", "checked_triples", "checked_triple_pairs", "violation_count", "violations"};

const std::set<std::string> verify_param_keys{"n", "k", "uniformity", "mode", "samples", "seed", "dedup", "cap", "max_witnesses", "all_cycles_up_to"};

} // namespace

json to_json(const Hyperedge & e)
{
    return json(std::vector<VertexId>(e.begin(), e.end()));
}

json to_json(const Violation & v)
{
    return {{"check", v.check}, {"clause", v.clause}, {"vertices", v.vertices}, {"cycle_vertex", v.cycle_vertex}, {"position", v.position},
        {"edges", edge_list(v.edges)}};
}

json to_json(const VerificationReport & r)
{
    const auto & p = r.params;
    json params = {{"n", p.n}, {"k", p.k}, {"uniformity", std::string(to_string(p.uniformity))}, {"mode", p.exhaustive() ? "exhaustive" : "random"},
        {"samples", p.samples}, {"seed", p.seed}, {"dedup", p.dedup}, {"cap", p.cap()}, {"max_witnesses", p.max_witnesses},
        {"all_cycles_up_to", p.all_cycles_up_to}};

    json out = {{"campaign", r.campaign}, {"params", params}, {"verified", r.verified()}, {"instances_checked", r.instances_checked}};
    if (r.campaign == "claims") {
        out["cyclic_instances"] = r.cyclic_instances;
        out["acyclic_skipped"] = r.acyclic_skipped;
        out["cycles_checked"] = r.cycles_checked;
        out["checked_vertices"] = r.checked_vertices;
        out["checked_triples"] = r.checked_triples;
        out["checked_triple_pairs"] = r.checked_triple_pairs;
    }
    else {
        out["bp_free_count"] = r.bp_free_count;
        out["pruned_subtrees"] = r.pruned_subtrees;
        out["max_hyperedges"] = r.max_hyperedges;
        out["max_shadow_edges"] = r.max_shadow_edges;
        out["bound"] = {{"numerator", r.bound.numerator}, {"denominator", r.bound.denominator}};
        out["extremal_count"] = r.extremal_count;
        json witnesses = json::array();
        for (const auto & w : r.extremal_witnesses)
            witnesses.push_back(to_hg(w));
        out["extremal_witnesses"] = witnesses;
        json classes = json::array();
        for (const auto & c : r.extremal_classes)
            classes.push_back({{"canonical", c.canonical_hex}, {"hg", to_hg(c.representative)}});
        out["extremal_classes"] = classes;
    }
    out["notes"] = r.notes;
    out["violation_count"] = r.violation_count;
    json violations = json::array();
    for (const auto & v : r.violations)
        violations.push_back(campaign_violation(v));
    out["violations"] = violations;
    return out;
}

json path_result(const BergePath & p)
{
    return {{"length", p.vertices.empty() ? json(nullptr) : json(p.length())}, {"witness_vertices", p.vertices}, {"witness_edges", edge_list(p.edges)}};
}

json cycle_result(const std::optional<BergeCycle> & c)
{
    if (!c)
        return {{"length", nullptr}, {"witness_vertices", json::array()}, {"witness_edges", json::array()}};
    return {{"length", c->length()}, {"witness_vertices", c->vertices}, {"witness_edges", edge_list(c->edges)}};
}

json claims_result(const std::optional<CycleContext> & ctx, const ClaimAudit & audit)
{
    json violations = json::array();
    for (const auto & v : audit.violations)
        violations.push_back(to_json(v));
    return {{"cycle_length", ctx ? json(ctx->length()) : json(nullptr)}, {"checked_vertices", audit.checked_vertices},
        {"checked_triples", audit.checked_triples}, {"checked_triple_pairs", audit.checked_triple_pairs}, {"violations", violations}};
}

json shadow_result(const LinearHypergraph & h)
{
    json pairs = json::array();
    for (const auto & [u, v] : shadow(h).pairs())
        pairs.push_back({u, v});
    return {{"n", h.vertex_count()}, {"shadow_edges", shadow_edge_count(h)}, {"pairs", pairs}};
}

json stats_result(const LinearHypergraph & h)
{
    int m2 = 0, m3 = 0;
    for (const auto & e : h.edges())
        (e.size() == 2 ? m2 : m3)++;
    json out = {{"n", h.vertex_count()}, {"m", h.edge_count()}, {"m2", m2}, {"m3", m3}, {"shadow_edges", shadow_edge_count(h)}};
    if (h.vertex_count() == 0) {
        out["min_degree"] = out["max_degree"] = out["min_shadow_degree"] = out["max_shadow_degree"] = nullptr;
    }
    else {
        int dmin = degree(h, 0), dmax = dmin, smin = shadow_degree(h, 0), smax = smin;
        for (VertexId v = 1; v < h.vertex_count(); ++v) {
            dmin = std::min(dmin, degree(h, v));
            dmax = std::max(dmax, degree(h, v));
            smin = std::min(smin, shadow_degree(h, v));
            smax = std::max(smax, shadow_degree(h, v));
        }
        out["min_degree"] = dmin;
        out["max_degree"] = dmax;
        out["min_shadow_degree"] = smin;
        out["max_shadow_degree"] = smax;
    }
    out["components"] = components(h).size();
    return out;
}

json make_envelope(const std::string & verb, const std::vector<std::string> & args, json result, double seconds)
{
    return {{"schema_version", schema_version}, {"command", {{"verb", verb}, {"args", args}}}, {"result", std::move(result)},
        {"timing", {{"seconds", seconds}}}};
}

void validate_envelope(const json & report)
{
    expect_keys(report, {"schema_version", "command", "result", "timing"}, {}, "report");
    if (report["schema_version"] != schema_version)
        schema_error("unsupported schema_version");
    expect_keys(report["command"], {"verb", "args"}, {}, "command");
    if (!report["command"]["verb"].is_string() || !report["command"]["args"].is_array())
        schema_error("command must hold a string verb and an args array");
    expect_keys(report["timing"], {"seconds"}, {}, "timing");
    if (!report["timing"]["seconds"].is_number())
        schema_error("timing.seconds must be a number");

    const auto verb = report["command"]["verb"].get<std::string>();
    const auto & result = report["result"];
    if (verb.rfind("verify", 0) == 0) {
        expect_keys(result, {"campaign", "params", "verified", "instances_checked", "notes", "violation_count", "violations"}, verify_keys, "result");
        expect_keys(result["params"], verify_param_keys, {}, "result.params");
        return;
    }
    auto it = result_keys().find(verb);
    if (it == result_keys().end())
        schema_error("unknown verb '" + verb + "'");
    expect_keys(result, it->second, {}, "result");
}

std::string without_timing(const json & report)
{
    json copy = report;
    copy.erase("timing");
    return copy.dump();
}

} // namespace berge
