#pragma once

#include <berge/hypergraph.hpp>
#include <berge/shadow_index.hpp>
#include <berge/solver.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace berge {

/// A subset of the positions 0..l-1 of a cycle of length l <= 64.
class CycleSet {
public:
    explicit CycleSet(int cycle_length, std::uint64_t bits = 0);

    int cycle_length() const noexcept { return _length; }
    std::uint64_t bits() const noexcept { return _bits; }

    bool contains(int position) const noexcept { return (_bits >> position) & 1U; }
    void insert(int position) noexcept { _bits |= std::uint64_t{1} << position; }
    bool empty() const noexcept { return _bits == 0; }
    int size() const noexcept;
    std::vector<int> positions() const;

    /// Rotation by `offset` modulo l: shift(+1) is S⁺ = {v_i : v_{i-1} ∈ S},
    /// shift(-1) is S⁻, and so on.
    CycleSet shift(int offset) const noexcept;

    CycleSet operator|(const CycleSet & o) const noexcept { return CycleSet(_length, _bits | o._bits); }
    CycleSet operator&(const CycleSet & o) const noexcept { return CycleSet(_length, _bits & o._bits); }
    friend bool operator==(const CycleSet &, const CycleSet &) = default;

private:
    int _length;
    std::uint64_t _bits;
};

inline CycleSet shift(const CycleSet & s, int offset) noexcept { return s.shift(offset); }

/// A Berge cycle v_0 h_0 v_1 ... v_{l-1} h_{l-1} in H, with the third vertex x_i of
/// each size-3 defining hyperedge. Positions are 0-based.
class CycleContext {
public:
    /// Throws InvalidCycle unless `cycle` is a Berge cycle of `h` with l <= 64.
    /// Maximality is not checked here; use longest_cycle_context for that.
    CycleContext(const LinearHypergraph & h, BergeCycle cycle);

    int length() const noexcept { return static_cast<int>(_cycle.length()); }
    const BergeCycle & cycle() const noexcept { return _cycle; }
    VertexId vertex(int position) const { return _cycle.vertices[static_cast<std::size_t>(position)]; }
    const Hyperedge & defining_edge(int position) const { return _cycle.edges[static_cast<std::size_t>(position)]; }
    std::optional<VertexId> third_vertex(int position) const { return _third[static_cast<std::size_t>(position)]; }

    /// Cycle position of v, or -1 when v is off the cycle.
    int position_of(VertexId v) const { return _position[static_cast<std::size_t>(v)]; }
    bool on_cycle(VertexId v) const { return position_of(v) >= 0; }
    bool is_defining(const Hyperedge & e) const;

private:
    BergeCycle _cycle;
    std::vector<std::optional<VertexId>> _third;
    std::vector<int> _position;
};

/// Context around the solver's longest cycle, or nullopt when H is Berge-acyclic.
std::optional<CycleContext> longest_cycle_context(const LinearHypergraph & h);

/// S(u): cycle vertices joined to u by a non-defining hyperedge.
/// L(u): positions i whose defining hyperedge has third vertex u. R(u) = L(u)⁺.
struct PeripheralSets {
    VertexId u;
    CycleSet s;
    CycleSet l;
    CycleSet r;
};

/// Throws VertexOnCycle when u is a defining vertex.
PeripheralSets peripheral_sets(const LinearHypergraph & h, const CycleContext & ctx, VertexId u);

struct Violation {
    std::string check;             // claim_plus, claim_plus_plus, claim_triple, s_size_bound, l_shift_r
    std::string clause;            // which set identity failed
    std::vector<VertexId> vertices; // the off-cycle vertices involved
    VertexId cycle_vertex = -1;    // v_i at the intersection
    int position = -1;
    std::vector<Hyperedge> edges;  // witnessing hyperedges
};

/// (S(u) ∪ L(u)) ∩ S(u)⁻ = ∅.
std::optional<Violation> check_claim_plus(const LinearHypergraph & h, const CycleContext & ctx, VertexId u);

/// For a triple {u1,u2,u3} disjoint from the cycle and every ordered pair i != j:
/// (S(u_i) ∪ L(u_i)) ∩ (S(u_j) ∪ L(u_j))⁻ = ∅ and (S(u_i) ∪ L(u_i)) ∩ S(u_j)⁻⁻ = ∅.
/// Throws TripleTouchesCycle / InvalidArgument on bad input.
std::optional<Violation> check_claim_plus_plus(const LinearHypergraph & h, const CycleContext & ctx, const Hyperedge & triple);

/// For triples e1 = {u1,u2,u3}, e2 = {u1,u4,u5} disjoint from the cycle, i ∈ {2,3},
/// j ∈ {4,5}: (S∪L)(u_i) misses (S∪L)(u_j)⁻, (S∪L)(u_j)⁻⁻ and S(u_j)⁻⁻⁻. The
/// last clause is only meaningful for l >= 4 (for l = 3 the shift by three is the
/// identity) and is skipped on triangles. Throws BadSharingPattern unless the
/// triples share exactly one vertex.
std::optional<Violation> check_claim_triple(const LinearHypergraph & h, const CycleContext & ctx, const Hyperedge & e1, const Hyperedge & e2);

/// Runs every applicable check for one cycle: each off-cycle u, each size-3 edge
/// disjoint from the cycle, each pair of such edges sharing one vertex, plus the
/// |S(u)| <= floor(l/2) and L⁺ = R identities.
struct ClaimAudit {
    std::uint64_t checked_vertices = 0;
    std::uint64_t checked_triples = 0;
    std::uint64_t checked_triple_pairs = 0;
    std::vector<Violation> violations;
};

ClaimAudit audit_claims(const LinearHypergraph & h, const CycleContext & ctx);

namespace detail {

/// Allocation-light variant used inside campaigns. `cycle` must be a Berge cycle of h.
void audit_claims(HypergraphView h, const BergeCycle & cycle, ClaimAudit & audit);

} // namespace detail

} // namespace berge
