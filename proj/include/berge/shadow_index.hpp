#pragma once

#include <berge/hypergraph.hpp>

#include <bit>
#include <cstdint>
#include <vector>

namespace berge::detail {

/// Bitmask adjacency of ∂H plus a pair -> edge-index table. The search cores run
/// on this; it can be updated edge by edge while the enumerator walks.
class ShadowIndex {
public:
    static constexpr int max_vertices = 64;

    explicit ShadowIndex(int n);
    explicit ShadowIndex(HypergraphView h);

    int vertex_count() const noexcept { return _n; }
    int edge_count() const noexcept { return _m; }

    std::uint64_t neighbours(VertexId v) const noexcept { return _nbr[static_cast<std::size_t>(v)]; }

    /// Index of the edge covering {u, v}, or -1.
    int cover(VertexId u, VertexId v) const noexcept { return _cover[static_cast<std::size_t>(u * _n + v)]; }

    /// Edge indices must be assigned 0, 1, 2, ... and removed in stack order.
    void push_edge(const Hyperedge & e);
    void pop_edge(const Hyperedge & e);

private:
    int _n;
    int _m = 0;
    std::vector<std::uint64_t> _nbr;
    std::vector<int> _cover;
};

inline int popcount(std::uint64_t x) noexcept { return std::popcount(x); }

} // namespace berge::detail
