#include <berge/canonical.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

namespace berge {

namespace {

// Iterated colour refinement: start from (#2-edges, #3-edges) at each vertex, then
// repeatedly split colours by the multiset of (edge size, colours of co-members).
std::vector<int> refine_colours(const LinearHypergraph & h)
{
    const auto n = static_cast<std::size_t>(h.vertex_count());
    std::vector<int> colour(n, 0);
    for (const auto & e : h.edges())
        for (auto v : e)
            colour[static_cast<std::size_t>(v)] += e.size() == 2 ? 1 : 1000;

    using Signature = std::pair<int, std::vector<std::vector<int>>>;
    std::size_t classes = 0;
    while (true) {
        std::vector<Signature> signature(n);
        for (std::size_t v = 0; v < n; ++v)
            signature[v].first = colour[v];
        for (const auto & e : h.edges())
            for (auto v : e) {
                std::vector<int> entry{e.size()};
                for (auto w : e)
                    if (w != v)
                        entry.push_back(colour[static_cast<std::size_t>(w)]);
                std::sort(entry.begin() + 1, entry.end());
                signature[static_cast<std::size_t>(v)].second.push_back(std::move(entry));
            }
        for (auto & s : signature)
            std::sort(s.second.begin(), s.second.end());

        std::map<Signature, int> rank;
        for (const auto & s : signature)
            rank.emplace(s, 0);
        int next = 0;
        for (auto & [s, r] : rank)
            r = next++;
        for (std::size_t v = 0; v < n; ++v)
            colour[v] = rank[signature[v]];
        if (rank.size() == classes)
            break;
        classes = rank.size();
    }
    return colour;
}

std::string encode(int n, const std::vector<std::array<int, 4>> & edges)
{
    std::string out;
    out.reserve(1 + edges.size() * 4);
    out.push_back(static_cast<char>(n));
    for (const auto & e : edges)
        for (int i = 0; i <= e[0]; ++i)
            out.push_back(static_cast<char>(e[static_cast<std::size_t>(i)]));
    return out;
}

} // namespace

std::string canonical_form(const LinearHypergraph & h, int max_n)
{
    const int n = h.vertex_count();
    if (n > max_n)
        throw Error(ErrorCode::CapExceeded, "canonical form is limited to n <= " + std::to_string(max_n) + ", got " + std::to_string(n));

    const auto colour = refine_colours(h);
    std::vector<std::vector<VertexId>> cells;
    {
        std::map<int, std::vector<VertexId>> by_colour;
        for (VertexId v = 0; v < n; ++v)
            by_colour[colour[static_cast<std::size_t>(v)]].push_back(v);
        for (auto & [c, members] : by_colour)
            cells.push_back(std::move(members));
    }

    std::vector<VertexId> label(static_cast<std::size_t>(n));
    std::vector<std::array<int, 4>> relabelled(h.edge_count());
    std::string best;
    bool first = true;
    while (true) {
        int position = 0;
        for (const auto & cell : cells)
            for (auto v : cell)
                label[static_cast<std::size_t>(v)] = position++;
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            const auto & e = h.edges()[i];
            std::array<int, 4> r{e.size(), 0, 0, 0};
            for (int j = 0; j < e.size(); ++j)
                r[static_cast<std::size_t>(j + 1)] = label[static_cast<std::size_t>(e[j])];
            std::sort(r.begin() + 1, r.begin() + 1 + e.size());
            relabelled[i] = r;
        }
        // Order edges by vertex sequence, then size, so 2-edges and triples interleave lexicographically.
        std::sort(relabelled.begin(), relabelled.end(), [](const auto & a, const auto & b) {
            return std::lexicographical_compare(a.begin() + 1, a.begin() + 1 + a[0], b.begin() + 1, b.begin() + 1 + b[0]);
        });
        auto candidate = encode(n, relabelled);
        if (first || candidate < best) {
            best = std::move(candidate);
            first = false;
        }

        // Odometer over the per-cell permutations.
        std::size_t c = 0;
        for (; c < cells.size(); ++c)
            if (std::next_permutation(cells[c].begin(), cells[c].end()))
                break;
        if (c == cells.size())
            break;
    }
    return best;
}

LinearHypergraph relabel(const LinearHypergraph & h, const std::vector<VertexId> & permutation)
{
    if (static_cast<int>(permutation.size()) != h.vertex_count())
        throw Error(ErrorCode::InvalidArgument, "permutation size does not match vertex count");
    std::vector<bool> hit(permutation.size(), false);
    for (auto p : permutation) {
        if (p < 0 || p >= h.vertex_count() || hit[static_cast<std::size_t>(p)])
            throw Error(ErrorCode::InvalidArgument, "relabeling is not a permutation");
        hit[static_cast<std::size_t>(p)] = true;
    }
    std::vector<Hyperedge> edges;
    for (const auto & e : h.edges()) {
        std::vector<VertexId> moved;
        for (auto v : e)
            moved.push_back(permutation[static_cast<std::size_t>(v)]);
        edges.push_back(Hyperedge::from_vertices(std::span<const VertexId>(moved)));
    }
    return LinearHypergraph::validate(h.vertex_count(), std::move(edges));
}

} // namespace berge
