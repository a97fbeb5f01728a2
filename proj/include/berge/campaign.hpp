#pragma once

#include <berge/cycle_structure.hpp>
#include <berge/enumerator.hpp>
#include <berge/hypergraph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace berge {

inline constexpr std::uint64_t default_seed = 20210611;
inline constexpr int default_cap_mixed = 7;
inline constexpr int default_cap_triples = 8;

struct CampaignParams {
    int n = 0;
    int k = 0;
    Uniformity uniformity = Uniformity::mixed;
    /// 0 means exhaustive; otherwise that many seeded random instances.
    std::uint64_t samples = 0;
    std::uint64_t seed = default_seed;
    /// Collect extremal witnesses up to isomorphism (canonical_form) instead of labelled.
    bool dedup = false;
    int cap_mixed = default_cap_mixed;
    int cap_triples = default_cap_triples;
    unsigned jobs = 1;
    std::size_t max_witnesses = 4;
    /// Exhaustive claim campaigns check every longest cycle up to this n, and only
    /// the solver's first longest cycle above it.
    int all_cycles_up_to = 5;

    bool exhaustive() const noexcept { return samples == 0; }
    int cap() const noexcept { return uniformity == Uniformity::mixed ? cap_mixed : cap_triples; }
};

/// Caps taken from HX_CAP_N when set (applies to both uniformities).
CampaignParams with_environment_caps(CampaignParams params);

struct Rational {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;
};

struct CampaignViolation {
    std::string kind;   ///< bound_exceeded, equality_class, equality_value, claim
    std::string detail;
    std::optional<LinearHypergraph> witness;
    std::optional<BergeCycle> cycle;
    std::optional<Violation> claim;
};

struct ExtremalClass {
    std::string canonical_hex;
    LinearHypergraph representative;
};

struct VerificationReport {
    std::string campaign; ///< theorem-uniform, theorem-shadow, remark, claims
    CampaignParams params;

    std::uint64_t instances_checked = 0;
    std::uint64_t bp_free_count = 0;
    std::uint64_t pruned_subtrees = 0;

    /// Maximum over Berge-path-free instances; -1 when none were seen.
    int max_hyperedges = -1;
    int max_shadow_edges = -1;
    Rational bound;
    std::uint64_t extremal_count = 0;
    std::vector<LinearHypergraph> extremal_witnesses;
    std::vector<ExtremalClass> extremal_classes; ///< dedup mode only
    std::vector<std::string> notes;

    // Claim campaigns.
    std::uint64_t cyclic_instances = 0;
    std::uint64_t acyclic_skipped = 0;
    std::uint64_t cycles_checked = 0;
    std::uint64_t checked_vertices = 0;
    std::uint64_t checked_triples = 0;
    std::uint64_t checked_triple_pairs = 0;

    std::uint64_t violation_count = 0;
    std::vector<CampaignViolation> violations; ///< first few, in enumeration order

    double runtime_seconds = 0;

    bool verified() const noexcept { return violation_count == 0; }
};

/// Labelled enumeration (or random sampling, when params.samples > 0) of linear
/// hypergraphs on params.n vertices. Returns the number of instances visited.
/// Throws CapExceeded when an exhaustive run exceeds the cap.
std::uint64_t enumerate(const CampaignParams & params, const std::function<Visit(const EnumerationNode &)> & visitor);

/// 3-uniform linear H without a Berge path of length k: 6 e(H) <= (k-1) n. k >= 4.
VerificationReport verify_theorem_uniform(CampaignParams params);

/// {2,3}-uniform linear H without a Berge path of length k: 2 e(∂H) <= (k-1) n. k >= 4.
VerificationReport verify_theorem_shadow(CampaignParams params);

/// k in {1,2,3}: the small-k bounds and their equality families (forces dedup).
VerificationReport verify_remark(CampaignParams params);

/// Claims on longest cycles over every (or every sampled) instance.
VerificationReport verify_claims(CampaignParams params);

} // namespace berge
