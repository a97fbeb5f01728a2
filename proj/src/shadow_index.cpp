#include <berge/shadow_index.hpp>

#include <string>

namespace berge::detail {

ShadowIndex::ShadowIndex(int n) :
    _n(n)
{
    if (n > max_vertices)
        throw Error(ErrorCode::InstanceTooLarge, "search supports at most " + std::to_string(max_vertices) + " vertices, got " + std::to_string(n));
    _nbr.assign(static_cast<std::size_t>(n), 0);
    _cover.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
}

ShadowIndex::ShadowIndex(HypergraphView h) :
    ShadowIndex(h.vertex_count())
{
    for (const auto & e : h.edges())
        push_edge(e);
}

void ShadowIndex::push_edge(const Hyperedge & e)
{
    const int index = _m++;
    for (int a = 0; a < e.size(); ++a)
        for (int b = 0; b < e.size(); ++b)
            if (a != b) {
                _nbr[static_cast<std::size_t>(e[a])] |= std::uint64_t{1} << e[b];
                _cover[static_cast<std::size_t>(e[a] * _n + e[b])] = index;
            }
}

void ShadowIndex::pop_edge(const Hyperedge & e)
{
    --_m;
    for (int a = 0; a < e.size(); ++a)
        for (int b = 0; b < e.size(); ++b)
            if (a != b) {
                _nbr[static_cast<std::size_t>(e[a])] &= ~(std::uint64_t{1} << e[b]);
                _cover[static_cast<std::size_t>(e[a] * _n + e[b])] = -1;
            }
}

} // namespace berge::detail
