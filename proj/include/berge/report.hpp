#pragma once

#include <berge/campaign.hpp>
#include <berge/cycle_structure.hpp>
#include <berge/hypergraph.hpp>
#include <berge/solver.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace berge {

using json = nlohmann::ordered_json;

inline constexpr const char * schema_version = "1";

json to_json(const Hyperedge & e);
json to_json(const Violation & v);
json to_json(const VerificationReport & r);

json path_result(const BergePath & p);
json cycle_result(const std::optional<BergeCycle> & c);
json claims_result(const std::optional<CycleContext> & ctx, const ClaimAudit & audit);
json shadow_result(const LinearHypergraph & h);
json stats_result(const LinearHypergraph & h);

/// {schema_version, command: {verb, args}, result, timing: {seconds}}.
json make_envelope(const std::string & verb, const std::vector<std::string> & args, json result, double seconds);

/// Strict reader: throws SchemaError on a missing or unknown field anywhere in the
/// envelope or in the result keys for the given verb.
void validate_envelope(const json & report);

/// The envelope serialised without its timing field; equal for reproducible runs.
std::string without_timing(const json & report);

} // namespace berge
