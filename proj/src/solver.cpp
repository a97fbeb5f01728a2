#include <berge/solver.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace berge {

namespace {

using detail::popcount;
using detail::ShadowIndex;

constexpr std::uint64_t bit(VertexId v) noexcept { return std::uint64_t{1} << v; }

// Vertices strictly above v, as a mask over n <= 64 vertices.
constexpr std::uint64_t above(VertexId v) noexcept { return v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1); }

/// Backtracking over shadow paths. In a linear hypergraph each consecutive pair
/// fixes its hyperedge, so a Berge path is a shadow path whose pair-covers are
/// pairwise distinct.
class Search {
public:
    Search(HypergraphView h, const ShadowIndex & index) :
        _h(h),
        _index(index),
        _used(static_cast<std::size_t>(index.edge_count()), 0),
        _component(static_cast<std::size_t>(index.vertex_count()), 0),
        _component_edges(static_cast<std::size_t>(index.vertex_count()), 0)
    {
        const int n = index.vertex_count();
        std::uint64_t seen = 0;
        for (VertexId s = 0; s < n; ++s) {
            if (seen & bit(s))
                continue;
            std::uint64_t comp = bit(s), frontier = bit(s);
            while (frontier) {
                std::uint64_t next = 0;
                for (auto f = frontier; f; f &= f - 1)
                    next |= index.neighbours(std::countr_zero(f));
                frontier = next & ~comp;
                comp |= next;
            }
            int edges = 0;
            for (const auto & e : h.edges())
                if (comp & bit(e[0]))
                    ++edges;
            for (auto c = comp; c; c &= c - 1) {
                auto v = static_cast<std::size_t>(std::countr_zero(c));
                _component[v] = comp;
                _component_edges[v] = edges;
            }
            seen |= comp;
        }
    }

    /// Longest path search. Stops once a path of length >= `target` is found;
    /// branches that cannot exceed max(best, floor) are cut.
    void run_paths(int floor, int target)
    {
        _floor = floor;
        _target = target;
        _best = -1;
        _done = false;
        for (VertexId s = 0; s < _index.vertex_count() && !_done; ++s) {
            const auto & comp = _component[static_cast<std::size_t>(s)];
            const int bound = std::min(popcount(comp) - 1, _component_edges[static_cast<std::size_t>(s)]);
            if (bound <= std::max(_best, _floor))
                continue;
            _stack.assign(1, s);
            path_dfs(s, bit(s), 0);
        }
    }

    /// Longest cycle search (collect == false) or collection of every cycle of
    /// length exactly `target` (collect == true).
    void run_cycles(bool collect, int target)
    {
        _collect = collect;
        _target = target;
        _best = collect ? target - 1 : 0;
        _floor = 0;
        _done = false;
        for (VertexId s = 0; s < _index.vertex_count() && !_done; ++s) {
            _root = s;
            _allowed = _component[static_cast<std::size_t>(s)] & above(s);
            const int bound = std::min(popcount(_allowed) + 1, _component_edges[static_cast<std::size_t>(s)]);
            if (bound < 3 || bound <= _best)
                continue;
            _stack.assign(1, s);
            cycle_dfs(s, bit(s), 0);
        }
    }

    int best() const noexcept { return _best; }

    BergePath best_path() const
    {
        BergePath p;
        p.vertices = _best_sequence;
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
            p.edges.push_back(edge_between(p.vertices[i], p.vertices[i + 1]));
        return p;
    }

    BergeCycle cycle_from(const std::vector<VertexId> & sequence) const
    {
        BergeCycle c;
        c.vertices = sequence;
        for (std::size_t i = 0; i < sequence.size(); ++i)
            c.edges.push_back(edge_between(sequence[i], sequence[(i + 1) % sequence.size()]));
        return c;
    }

    BergeCycle best_cycle() const { return cycle_from(_best_sequence); }
    const std::vector<std::vector<VertexId>> & collected() const noexcept { return _collected; }

    int path_upper_bound() const
    {
        int bound = _index.vertex_count() > 0 ? 0 : -1;
        for (std::size_t v = 0; v < _component.size(); ++v)
            bound = std::max(bound, std::min(popcount(_component[v]) - 1, _component_edges[v]));
        return bound;
    }

    int cycle_upper_bound() const
    {
        int bound = 0;
        for (std::size_t v = 0; v < _component.size(); ++v)
            bound = std::max(bound, std::min(popcount(_component[v]), _component_edges[v]));
        return bound;
    }

private:
    const Hyperedge & edge_between(VertexId u, VertexId v) const
    {
        return _h.edges()[static_cast<std::size_t>(_index.cover(u, v))];
    }

    // Vertices of `open` reachable from v through `open`.
    int reach(VertexId v, std::uint64_t open) const noexcept
    {
        std::uint64_t seen = _index.neighbours(v) & open, frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (auto f = frontier; f; f &= f - 1)
                next |= _index.neighbours(std::countr_zero(f));
            frontier = next & open & ~seen;
            seen |= frontier;
        }
        return popcount(seen);
    }

    void path_dfs(VertexId v, std::uint64_t visited, int depth)
    {
        if (depth > _best) {
            _best = depth;
            _best_sequence = _stack;
            if (_best >= _target) {
                _done = true;
                return;
            }
        }
        const auto comp = _component[static_cast<std::size_t>(v)];
        const int edges_left = _component_edges[static_cast<std::size_t>(v)] - depth;
        if (depth + std::min(edges_left, reach(v, comp & ~visited)) <= std::max(_best, _floor))
            return;

        for (auto candidates = _index.neighbours(v) & ~visited; candidates; candidates &= candidates - 1) {
            const VertexId w = std::countr_zero(candidates);
            const auto e = static_cast<std::size_t>(_index.cover(v, w));
            if (_used[e])
                continue;
            _used[e] = 1;
            _stack.push_back(w);
            path_dfs(w, visited | bit(w), depth + 1);
            _stack.pop_back();
            _used[e] = 0;
            if (_done)
                return;
        }
    }

    void cycle_dfs(VertexId v, std::uint64_t visited, int depth)
    {
        if (depth >= 2) {
            const int closing = _index.cover(v, _root);
            if (closing >= 0 && !_used[static_cast<std::size_t>(closing)]) {
                const int length = depth + 1;
                if (_collect) {
                    if (length == _target)
                        _collected.push_back(_stack);
                }
                else if (length > _best) {
                    _best = length;
                    _best_sequence = _stack;
                    if (_best >= _target) {
                        _done = true;
                        return;
                    }
                }
            }
        }
        const int edges_left = _component_edges[static_cast<std::size_t>(v)] - depth;
        if (depth + std::min(edges_left, 1 + reach(v, _allowed & ~visited)) <= _best)
            return;

        for (auto candidates = _index.neighbours(v) & _allowed & ~visited; candidates; candidates &= candidates - 1) {
            const VertexId w = std::countr_zero(candidates);
            const auto e = static_cast<std::size_t>(_index.cover(v, w));
            if (_used[e])
                continue;
            _used[e] = 1;
            _stack.push_back(w);
            cycle_dfs(w, visited | bit(w), depth + 1);
            _stack.pop_back();
            _used[e] = 0;
            if (_done)
                return;
        }
    }

    HypergraphView _h;
    const ShadowIndex & _index;
    std::vector<std::uint8_t> _used;
    std::vector<std::uint64_t> _component;
    std::vector<int> _component_edges;

    std::vector<VertexId> _stack;
    std::vector<VertexId> _best_sequence;
    std::vector<std::vector<VertexId>> _collected;
    int _best = -1;
    int _floor = -1;
    int _target = 0;
    bool _done = false;
    bool _collect = false;
    VertexId _root = 0;
    std::uint64_t _allowed = 0;
};

bool distinct_vertices(const std::vector<VertexId> & vs, int n)
{
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (auto v : vs) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool distinct_member_edges(const LinearHypergraph & h, const std::vector<Hyperedge> & edges)
{
    std::set<Hyperedge> seen;
    for (const auto & e : edges)
        if (!h.has_edge(e) || !seen.insert(e).second)
            return false;
    return true;
}

} // namespace

bool is_valid_berge_path(const LinearHypergraph & h, const BergePath & path)
{
    if (path.vertices.empty() || path.vertices.size() != path.edges.size() + 1)
        return false;
    if (!distinct_vertices(path.vertices, h.vertex_count()) || !distinct_member_edges(h, path.edges))
        return false;
    for (std::size_t i = 0; i < path.edges.size(); ++i)
        if (!path.edges[i].contains(path.vertices[i]) || !path.edges[i].contains(path.vertices[i + 1]))
            return false;
    return true;
}

bool is_valid_berge_cycle(const LinearHypergraph & h, const BergeCycle & cycle)
{
    const auto l = cycle.vertices.size();
    if (l < 2 || cycle.edges.size() != l)
        return false;
    if (!distinct_vertices(cycle.vertices, h.vertex_count()) || !distinct_member_edges(h, cycle.edges))
        return false;
    for (std::size_t i = 0; i < l; ++i)
        if (!cycle.edges[i].contains(cycle.vertices[i]) || !cycle.edges[i].contains(cycle.vertices[(i + 1) % l]))
            return false;
    return true;
}

namespace detail {

bool has_berge_path(HypergraphView h, const ShadowIndex & index, int k)
{
    if (k <= 0)
        return h.vertex_count() > 0;
    if (k > static_cast<int>(h.edges().size()) || k > h.vertex_count() - 1)
        return false;
    Search search(h, index);
    search.run_paths(k - 1, k);
    return search.best() >= k;
}

BergePath longest_berge_path(HypergraphView h, const ShadowIndex & index)
{
    if (h.vertex_count() == 0)
        return {};
    Search search(h, index);
    search.run_paths(-1, search.path_upper_bound());
    return search.best_path();
}

std::optional<BergeCycle> longest_berge_cycle(HypergraphView h, const ShadowIndex & index)
{
    Search search(h, index);
    const int bound = search.cycle_upper_bound();
    if (bound < 3)
        return std::nullopt;
    search.run_cycles(false, bound);
    if (search.best() < 3)
        return std::nullopt;
    return search.best_cycle();
}

std::vector<BergeCycle> all_longest_berge_cycles(HypergraphView h, const ShadowIndex & index)
{
    const auto longest = longest_berge_cycle(h, index);
    if (!longest)
        return {};
    Search search(h, index);
    search.run_cycles(true, static_cast<int>(longest->length()));
    std::vector<BergeCycle> cycles;
    for (const auto & sequence : search.collected())
        cycles.push_back(search.cycle_from(sequence));
    return cycles;
}

} // namespace detail

BergePath longest_berge_path(const LinearHypergraph & h)
{
    return detail::longest_berge_path(h.view(), detail::ShadowIndex(h.view()));
}

std::optional<BergePath> find_berge_path(const LinearHypergraph & h, int k)
{
    if (k < 0)
        throw Error(ErrorCode::InvalidArgument, "path length must be non-negative");
    if (k == 0) {
        if (h.vertex_count() == 0)
            return std::nullopt;
        return BergePath{{0}, {}};
    }
    if (k > static_cast<int>(h.edge_count()) || k > h.vertex_count() - 1)
        return std::nullopt;
    detail::ShadowIndex index(h.view());
    Search search(h.view(), index);
    search.run_paths(k - 1, k);
    if (search.best() < k)
        return std::nullopt;
    return search.best_path();
}

bool has_berge_path(const LinearHypergraph & h, int k)
{
    if (k < 0)
        throw Error(ErrorCode::InvalidArgument, "path length must be non-negative");
    if (k > static_cast<int>(h.edge_count()) || k > h.vertex_count() - 1)
        return k == 0 && h.vertex_count() > 0;
    return detail::has_berge_path(h.view(), detail::ShadowIndex(h.view()), k);
}

std::optional<BergeCycle> longest_berge_cycle(const LinearHypergraph & h)
{
    return detail::longest_berge_cycle(h.view(), detail::ShadowIndex(h.view()));
}

std::vector<BergeCycle> all_longest_berge_cycles(const LinearHypergraph & h)
{
    return detail::all_longest_berge_cycles(h.view(), detail::ShadowIndex(h.view()));
}

namespace {

/// Kuhn's augmenting-path matching of path positions to hyperedges.
class DistinctRepresentatives {
public:
    DistinctRepresentatives(const std::vector<std::vector<int>> & options, std::size_t edge_count) :
        _options(options),
        _owner(edge_count, -1)
    {
    }

    bool perfect()
    {
        for (std::size_t p = 0; p < _options.size(); ++p) {
            _visited.assign(_owner.size(), false);
            if (!augment(static_cast<int>(p)))
                return false;
        }
        return true;
    }

private:
    bool augment(int position)
    {
        for (int e : _options[static_cast<std::size_t>(position)]) {
            auto se = static_cast<std::size_t>(e);
            if (_visited[se])
                continue;
            _visited[se] = true;
            if (_owner[se] < 0 || augment(_owner[se])) {
                _owner[se] = position;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<int>> & _options;
    std::vector<int> _owner;
    std::vector<bool> _visited;
};

} // namespace

int oracle_longest_path(int n, const std::vector<std::vector<VertexId>> & edges, int max_n)
{
    if (n > max_n)
        throw Error(ErrorCode::InstanceTooLarge, "oracle is limited to n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
    if (n <= 0)
        return 0;

    const auto un = static_cast<std::size_t>(n);
    std::vector<std::vector<bool>> incident(edges.size(), std::vector<bool>(un, false));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].size() < 2)
            throw Error(ErrorCode::EdgeSizeError, "oracle edges need at least two vertices");
        for (auto v : edges[e]) {
            if (v < 0 || v >= n)
                throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
            incident[e][static_cast<std::size_t>(v)] = true;
        }
    }

    // Does this vertex sequence admit distinct hyperedges h_i ⊇ {s_i, s_{i+1}}?
    auto realisable = [&](const std::vector<VertexId> & sequence) {
        std::vector<std::vector<int>> options(sequence.size() - 1);
        for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
            for (std::size_t e = 0; e < edges.size(); ++e)
                if (incident[e][static_cast<std::size_t>(sequence[i])] && incident[e][static_cast<std::size_t>(sequence[i + 1])])
                    options[i].push_back(static_cast<int>(e));
        return DistinctRepresentatives(options, edges.size()).perfect();
    };

    const int upper = std::min(n - 1, static_cast<int>(edges.size()));
    for (int length = upper; length >= 1; --length) {
        std::vector<VertexId> sequence;
        std::vector<bool> taken(un, false);
        bool found = false;
        auto extend = [&](auto && self) -> void {
            if (found)
                return;
            if (static_cast<int>(sequence.size()) == length + 1) {
                found = realisable(sequence);
                return;
            }
            for (VertexId v = 0; v < n && !found; ++v) {
                if (taken[static_cast<std::size_t>(v)])
                    continue;
                taken[static_cast<std::size_t>(v)] = true;
                sequence.push_back(v);
                self(self);
                sequence.pop_back();
                taken[static_cast<std::size_t>(v)] = false;
            }
        };
        extend(extend);
        if (found)
            return length;
    }
    return 0;
}

int oracle_longest_path(const LinearHypergraph & h, int max_n)
{
    std::vector<std::vector<VertexId>> raw;
    for (const auto & e : h.edges())
        raw.emplace_back(e.begin(), e.end());
    return oracle_longest_path(h.vertex_count(), raw, max_n);
}

} // namespace berge
