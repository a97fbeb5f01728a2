#pragma once

#include <berge/error.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace berge {

using VertexId = std::int32_t;

/// A 2- or 3-element vertex set, stored sorted.
class Hyperedge {
public:
    Hyperedge(VertexId a, VertexId b);
    Hyperedge(VertexId a, VertexId b, VertexId c);

    /// Throws EdgeSizeError unless `vertices` has 2 or 3 distinct entries.
    static Hyperedge from_vertices(std::span<const VertexId> vertices);
    static Hyperedge from_vertices(std::initializer_list<VertexId> vertices)
    {
        return from_vertices(std::span<const VertexId>(vertices.begin(), vertices.size()));
    }

    int size() const noexcept { return _size; }
    VertexId operator[](int i) const noexcept { return _v[static_cast<std::size_t>(i)]; }
    const VertexId * begin() const noexcept { return _v.data(); }
    const VertexId * end() const noexcept { return _v.data() + _size; }

    bool contains(VertexId v) const noexcept;
    VertexId max_vertex() const noexcept { return _v[static_cast<std::size_t>(_size - 1)]; }

    /// Number of vertices shared with `other`.
    int intersection_size(const Hyperedge & other) const noexcept;

    // Lexicographic order of the sorted vertex sequence; a proper prefix sorts first.
    friend std::strong_ordering operator<=>(const Hyperedge & a, const Hyperedge & b) noexcept;
    friend bool operator==(const Hyperedge & a, const Hyperedge & b) noexcept;

private:
    Hyperedge() = default;

    std::array<VertexId, 3> _v{};
    std::uint8_t _size = 0;
};

class LinearHypergraph;
class Enumerator;

/// Non-owning (n, edges) pair whose edges are known to be linear and {2,3}-uniform.
/// Only obtainable from a LinearHypergraph or from the enumerator.
class HypergraphView {
public:
    int vertex_count() const noexcept { return _n; }
    std::span<const Hyperedge> edges() const noexcept { return _edges; }

private:
    friend class LinearHypergraph;
    friend class Enumerator;
    HypergraphView(int n, std::span<const Hyperedge> edges) noexcept : _n(n), _edges(edges) {}

    int _n;
    std::span<const Hyperedge> _edges;
};

/// A {2,3}-uniform linear hypergraph on vertices 0..n-1. Immutable once built.
class LinearHypergraph {
public:
    /// The empty hypergraph on zero vertices.
    LinearHypergraph() = default;

    /// Validates and canonicalises (sorts) the edge list. Throws berge::Error naming
    /// the first violated invariant.
    static LinearHypergraph validate(int n, const std::vector<std::vector<VertexId>> & raw_edges);
    static LinearHypergraph validate(int n, std::vector<Hyperedge> edges);

    int vertex_count() const noexcept { return _n; }
    std::size_t edge_count() const noexcept { return _edges.size(); }
    const std::vector<Hyperedge> & edges() const noexcept { return _edges; }
    bool has_edge(const Hyperedge & e) const;

    HypergraphView view() const noexcept { return HypergraphView(_n, _edges); }

    friend bool operator==(const LinearHypergraph &, const LinearHypergraph &) = default;

private:
    int _n = 0;
    std::vector<Hyperedge> _edges;
};

using VertexPair = std::pair<VertexId, VertexId>;

/// The 2-shadow of a linear hypergraph together with the unique covering hyperedge
/// of every shadow pair.
class ShadowGraph {
public:
    int vertex_count() const noexcept { return _n; }
    std::size_t edge_count() const noexcept { return _cover.size(); }

    /// Sorted list of pairs (u < v).
    std::vector<VertexPair> pairs() const;
    bool contains(VertexId u, VertexId v) const;
    std::optional<Hyperedge> cover(VertexId u, VertexId v) const;
    const std::map<VertexPair, Hyperedge> & cover_map() const noexcept { return _cover; }

private:
    friend ShadowGraph shadow(const LinearHypergraph & h);
    int _n = 0;
    std::map<VertexPair, Hyperedge> _cover;
};

ShadowGraph shadow(const LinearHypergraph & h);

/// e(∂H); for a linear hypergraph this is m2 + 3*m3.
std::size_t shadow_edge_count(const LinearHypergraph & h) noexcept;

int degree(const LinearHypergraph & h, VertexId v);
int shadow_degree(const LinearHypergraph & h, VertexId v);

struct Restriction {
    LinearHypergraph hypergraph;
    /// old vertex id -> new id, or -1 when the vertex was dropped
    std::vector<VertexId> old_to_new;
};

/// Restriction to `keep`: each edge h becomes h ∩ keep when that has at least two
/// vertices, relabelled densely in increasing old-id order.
Restriction restrict_to(const LinearHypergraph & h, std::span<const VertexId> keep);

/// Restriction to all vertices except `removed`.
Restriction remove_vertices(const LinearHypergraph & h, std::span<const VertexId> removed);

/// Connected components of ∂H, each sorted, listed by smallest vertex.
std::vector<std::vector<VertexId>> components(const LinearHypergraph & h);

LinearHypergraph disjoint_union(const LinearHypergraph & a, const LinearHypergraph & b);

} // namespace berge
