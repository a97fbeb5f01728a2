#pragma once

#include <berge/hypergraph.hpp>
#include <berge/shadow_index.hpp>

#include <optional>
#include <vector>

namespace berge {

/// v_1, h_1, v_2, ..., h_k, v_{k+1}. Length is the number of hyperedges, so a lone
/// vertex is a path of length 0.
struct BergePath {
    std::vector<VertexId> vertices;
    std::vector<Hyperedge> edges;

    std::size_t length() const noexcept { return edges.size(); }
    friend bool operator==(const BergePath &, const BergePath &) = default;
};

/// v_1, h_1, ..., v_l, h_l with h_i ⊇ {v_i, v_{i+1 mod l}}.
struct BergeCycle {
    std::vector<VertexId> vertices;
    std::vector<Hyperedge> edges;

    std::size_t length() const noexcept { return edges.size(); }
    friend bool operator==(const BergeCycle &, const BergeCycle &) = default;
};

bool is_valid_berge_path(const LinearHypergraph & h, const BergePath & path);
bool is_valid_berge_cycle(const LinearHypergraph & h, const BergeCycle & cycle);

/// Exact longest Berge path. Among maximum paths the lexicographically smallest
/// vertex sequence is returned. For n = 0 the result is empty (no vertices).
BergePath longest_berge_path(const LinearHypergraph & h);

/// A Berge path of length exactly k, if one exists (the lexicographically first).
std::optional<BergePath> find_berge_path(const LinearHypergraph & h, int k);
bool has_berge_path(const LinearHypergraph & h, int k);

/// Longest Berge cycle, or nullopt for a Berge-acyclic hypergraph. The witness
/// starts at its smallest vertex and is lexicographically first among maxima.
std::optional<BergeCycle> longest_berge_cycle(const LinearHypergraph & h);

/// Every longest Berge cycle, each listed once per direction, rooted at its
/// smallest vertex.
std::vector<BergeCycle> all_longest_berge_cycles(const LinearHypergraph & h);

/// Independent check of the longest path length: enumerates injective vertex
/// sequences and tests each for a system of distinct covering hyperedges by
/// bipartite matching. Accepts non-linear input (any edges of size >= 2).
/// Throws InstanceTooLarge when n > max_n.
int oracle_longest_path(int n, const std::vector<std::vector<VertexId>> & edges, int max_n = 7);
int oracle_longest_path(const LinearHypergraph & h, int max_n = 7);

namespace detail {

// Search cores on a prebuilt index; `h` supplies the hyperedges for witnesses.
bool has_berge_path(HypergraphView h, const ShadowIndex & index, int k);
BergePath longest_berge_path(HypergraphView h, const ShadowIndex & index);
std::optional<BergeCycle> longest_berge_cycle(HypergraphView h, const ShadowIndex & index);
std::vector<BergeCycle> all_longest_berge_cycles(HypergraphView h, const ShadowIndex & index);

} // namespace detail

} // namespace berge
