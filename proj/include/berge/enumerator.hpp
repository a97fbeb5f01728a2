#pragma once

#include <berge/hypergraph.hpp>
#include <berge/shadow_index.hpp>

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace berge {

enum class Uniformity {
    triples_only, ///< every hyperedge has size 3
    mixed,        ///< sizes 2 and 3
};

std::string_view to_string(Uniformity u) noexcept;

/// Every candidate edge on n vertices for the given uniformity, in lexicographic
/// order of the sorted vertex sequence (so {0,1} < {0,1,2} < {0,1,3} < {0,2}).
std::vector<Hyperedge> candidate_edges(int n, Uniformity u);

enum class Visit {
    descend,
    skip_subtree, ///< no superset reached from this node is visited
};

/// What the visitor sees at each node of the enumeration tree.
struct EnumerationNode {
    HypergraphView hypergraph;
    const detail::ShadowIndex & index;
    std::span<const std::size_t> chosen; ///< candidate indices, strictly increasing
    int shadow_edges;
    int triples;
};

/// Depth-first generation of labelled linear hypergraphs: each node adds a later
/// candidate edge that covers no pair already covered. Visits every linear
/// hypergraph exactly once, in lexicographic order of the chosen-index sequence.
///
/// The tree splits into work units: unit 0 is the empty hypergraph, unit i >= 1
/// is every set whose smallest edge is candidate i-1. Not thread-safe; give each
/// worker its own Enumerator.
class Enumerator {
public:
    /// Pair bitmasks limit n to 11.
    static constexpr int max_vertices = 11;

    Enumerator(int n, Uniformity u);

    int vertex_count() const noexcept { return _n; }
    const std::vector<Hyperedge> & candidates() const noexcept { return _candidates; }
    std::size_t unit_count() const noexcept { return _candidates.size() + 1; }

    /// Walks one unit; returns the number of nodes visited. For unit 0 the
    /// visitor's verdict on the empty hypergraph is stored in root_verdict().
    template <class Visitor>
    std::uint64_t walk_unit(std::size_t unit, Visitor & visitor)
    {
        if (unit == 0) {
            _root_verdict = visitor(node());
            return 1;
        }
        const auto c = unit - 1;
        std::uint64_t count = 0;
        push(c);
        if (visitor(node()) == Visit::descend)
            dfs(c + 1, _masks[c], visitor, count);
        pop();
        return count + 1;
    }

    /// Walks the whole tree; returns the number of nodes visited.
    template <class Visitor>
    std::uint64_t walk(Visitor & visitor)
    {
        std::uint64_t count = walk_unit(0, visitor);
        if (_root_verdict == Visit::skip_subtree)
            return count;
        for (std::size_t u = 1; u < unit_count(); ++u)
            count += walk_unit(u, visitor);
        return count;
    }

    Visit root_verdict() const noexcept { return _root_verdict; }

private:
    EnumerationNode node() const noexcept
    {
        return EnumerationNode{HypergraphView(_n, _edges), _index, _chosen, _shadow_edges, _triples};
    }

    void push(std::size_t c)
    {
        const auto & e = _candidates[c];
        _chosen.push_back(c);
        _edges.push_back(e);
        _index.push_edge(e);
        _shadow_edges += e.size() == 2 ? 1 : 3;
        _triples += e.size() == 3 ? 1 : 0;
    }

    void pop()
    {
        const auto & e = _edges.back();
        _index.pop_edge(e);
        _shadow_edges -= e.size() == 2 ? 1 : 3;
        _triples -= e.size() == 3 ? 1 : 0;
        _edges.pop_back();
        _chosen.pop_back();
    }

    template <class Visitor>
    void dfs(std::size_t next, std::uint64_t covered, Visitor & visitor, std::uint64_t & count)
    {
        for (std::size_t c = next; c < _candidates.size(); ++c) {
            if (_masks[c] & covered)
                continue;
            push(c);
            ++count;
            if (visitor(node()) == Visit::descend)
                dfs(c + 1, covered | _masks[c], visitor, count);
            pop();
        }
    }

    int _n;
    std::vector<Hyperedge> _candidates;
    std::vector<std::uint64_t> _masks; // covered-pair bitmask per candidate
    std::vector<Hyperedge> _edges;
    std::vector<std::size_t> _chosen;
    detail::ShadowIndex _index;
    int _shadow_edges = 0;
    int _triples = 0;
    Visit _root_verdict = Visit::descend;
};

/// Seeded random linear hypergraph: draws an attempt budget A uniformly from
/// [0, #candidates], then makes A uniform candidate draws, keeping each one that
/// preserves linearity. Sample i of seed s is the same on every platform.
LinearHypergraph random_linear_hypergraph(int n, Uniformity u, std::uint64_t seed, std::uint64_t sample_index);

} // namespace berge
