#include <berge/hypergraph.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

namespace berge {

namespace {

std::string describe(const Hyperedge & e)
{
    std::ostringstream out;
    out << '{';
    for (int i = 0; i < e.size(); ++i)
        out << (i ? "," : "") << e[i];
    out << '}';
    return out.str();
}

} // namespace

Hyperedge::Hyperedge(VertexId a, VertexId b)
{
    const VertexId vs[] = {a, b};
    *this = from_vertices(std::span<const VertexId>(vs));
}

Hyperedge::Hyperedge(VertexId a, VertexId b, VertexId c)
{
    const VertexId vs[] = {a, b, c};
    *this = from_vertices(std::span<const VertexId>(vs));
}

Hyperedge Hyperedge::from_vertices(std::span<const VertexId> vertices)
{
    if (vertices.size() != 2 && vertices.size() != 3)
        throw Error(ErrorCode::EdgeSizeError, "hyperedge has " + std::to_string(vertices.size()) + " vertices, expected 2 or 3");
    Hyperedge e;
    e._size = static_cast<std::uint8_t>(vertices.size());
    std::copy(vertices.begin(), vertices.end(), e._v.begin());
    std::sort(e._v.begin(), e._v.begin() + e._size);
    if (std::adjacent_find(e._v.begin(), e._v.begin() + e._size) != e._v.begin() + e._size)
        throw Error(ErrorCode::EdgeSizeError, "hyperedge " + describe(e) + " repeats a vertex");
    return e;
}

bool Hyperedge::contains(VertexId v) const noexcept
{
    return std::find(begin(), end(), v) != end();
}

int Hyperedge::intersection_size(const Hyperedge & other) const noexcept
{
    int count = 0;
    for (auto v : *this)
        count += other.contains(v) ? 1 : 0;
    return count;
}

std::strong_ordering operator<=>(const Hyperedge & a, const Hyperedge & b) noexcept
{
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool operator==(const Hyperedge & a, const Hyperedge & b) noexcept
{
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

LinearHypergraph LinearHypergraph::validate(int n, const std::vector<std::vector<VertexId>> & raw_edges)
{
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    std::vector<Hyperedge> edges;
    edges.reserve(raw_edges.size());
    for (const auto & raw : raw_edges) {
        if (raw.size() != 2 && raw.size() != 3)
            throw Error(ErrorCode::EdgeSizeError, "hyperedge has " + std::to_string(raw.size()) + " vertices, expected 2 or 3");
        for (auto v : raw)
            if (v < 0 || v >= n)
                throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in [0," + std::to_string(n) + ")");
        edges.push_back(Hyperedge::from_vertices(std::span<const VertexId>(raw)));
    }
    return validate(n, std::move(edges));
}

LinearHypergraph LinearHypergraph::validate(int n, std::vector<Hyperedge> edges)
{
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    for (const auto & e : edges)
        for (auto v : e)
            if (v < 0 || v >= n)
                throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in [0," + std::to_string(n) + ")");

    // Every pair may be covered by at most one edge; checked in input order.
    std::map<VertexPair, std::size_t> owner;
    for (std::size_t j = 0; j < edges.size(); ++j) {
        const auto & e = edges[j];
        for (int a = 0; a < e.size(); ++a)
            for (int b = a + 1; b < e.size(); ++b) {
                auto [it, inserted] = owner.emplace(VertexPair{e[a], e[b]}, j);
                if (inserted)
                    continue;
                const auto & prior = edges[it->second];
                if (prior == e)
                    throw Error(ErrorCode::DuplicateEdge, "hyperedge " + describe(e) + " listed twice");
                throw Error(ErrorCode::LinearityViolation,
                    "hyperedges " + describe(prior) + " and " + describe(e) + " share the pair {" + std::to_string(e[a]) + ","
                        + std::to_string(e[b]) + "}");
            }
    }

    std::sort(edges.begin(), edges.end());
    LinearHypergraph h;
    h._n = n;
    h._edges = std::move(edges);
    return h;
}

bool LinearHypergraph::has_edge(const Hyperedge & e) const
{
    return std::binary_search(_edges.begin(), _edges.end(), e);
}

std::vector<VertexPair> ShadowGraph::pairs() const
{
    std::vector<VertexPair> result;
    result.reserve(_cover.size());
    for (const auto & [p, e] : _cover)
        result.push_back(p);
    return result;
}

bool ShadowGraph::contains(VertexId u, VertexId v) const
{
    return cover(u, v).has_value();
}

std::optional<Hyperedge> ShadowGraph::cover(VertexId u, VertexId v) const
{
    if (u > v)
        std::swap(u, v);
    auto it = _cover.find({u, v});
    if (it == _cover.end())
        return std::nullopt;
    return it->second;
}

ShadowGraph shadow(const LinearHypergraph & h)
{
    ShadowGraph g;
    g._n = h.vertex_count();
    for (const auto & e : h.edges())
        for (int a = 0; a < e.size(); ++a)
            for (int b = a + 1; b < e.size(); ++b)
                g._cover.emplace(VertexPair{e[a], e[b]}, e);
    return g;
}

std::size_t shadow_edge_count(const LinearHypergraph & h) noexcept
{
    std::size_t count = 0;
    for (const auto & e : h.edges())
        count += e.size() == 2 ? 1 : 3;
    return count;
}

int degree(const LinearHypergraph & h, VertexId v)
{
    if (v < 0 || v >= h.vertex_count())
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    return static_cast<int>(std::count_if(h.edges().begin(), h.edges().end(), [v](const Hyperedge & e) { return e.contains(v); }));
}

int shadow_degree(const LinearHypergraph & h, VertexId v)
{
    if (v < 0 || v >= h.vertex_count())
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    int d = 0;
    for (const auto & e : h.edges())
        if (e.contains(v))
            d += e.size() - 1;
    return d;
}

Restriction restrict_to(const LinearHypergraph & h, std::span<const VertexId> keep)
{
    Restriction r;
    r.old_to_new.assign(static_cast<std::size_t>(h.vertex_count()), -1);
    for (auto v : keep) {
        if (v < 0 || v >= h.vertex_count())
            throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
        r.old_to_new[static_cast<std::size_t>(v)] = 0;
    }
    VertexId next = 0;
    for (auto & id : r.old_to_new)
        if (id == 0)
            id = next++;
        else
            id = -1;

    std::vector<Hyperedge> edges;
    for (const auto & e : h.edges()) {
        std::vector<VertexId> kept;
        for (auto v : e)
            if (auto nv = r.old_to_new[static_cast<std::size_t>(v)]; nv >= 0)
                kept.push_back(nv);
        if (kept.size() >= 2)
            edges.push_back(Hyperedge::from_vertices(std::span<const VertexId>(kept)));
    }
    // Intersections of a linear family stay linear, so this cannot throw.
    r.hypergraph = LinearHypergraph::validate(next, std::move(edges));
    return r;
}

Restriction remove_vertices(const LinearHypergraph & h, std::span<const VertexId> removed)
{
    std::vector<bool> drop(static_cast<std::size_t>(h.vertex_count()), false);
    for (auto v : removed) {
        if (v < 0 || v >= h.vertex_count())
            throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
        drop[static_cast<std::size_t>(v)] = true;
    }
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (!drop[static_cast<std::size_t>(v)])
            keep.push_back(v);
    return restrict_to(h, keep);
}

std::vector<std::vector<VertexId>> components(const LinearHypergraph & h)
{
    const auto n = static_cast<std::size_t>(h.vertex_count());
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (const auto & e : h.edges())
        for (int i = 1; i < e.size(); ++i) {
            auto a = find(e[0]), b = find(e[i]);
            if (a != b)
                parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }

    std::vector<std::vector<VertexId>> result;
    std::vector<int> slot(n, -1);
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
        auto root = static_cast<std::size_t>(find(v));
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(result.size());
            result.emplace_back();
        }
        result[static_cast<std::size_t>(slot[root])].push_back(v);
    }
    return result;
}

LinearHypergraph disjoint_union(const LinearHypergraph & a, const LinearHypergraph & b)
{
    std::vector<Hyperedge> edges = a.edges();
    const auto shift = a.vertex_count();
    for (const auto & e : b.edges()) {
        std::vector<VertexId> moved(e.begin(), e.end());
        for (auto & v : moved)
            v += shift;
        edges.push_back(Hyperedge::from_vertices(std::span<const VertexId>(moved)));
    }
    return LinearHypergraph::validate(a.vertex_count() + b.vertex_count(), std::move(edges));
}

} // namespace berge
