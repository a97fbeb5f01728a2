#include <berge/enumerator.hpp>

#include <algorithm>
#include <random>
#include <string>

namespace berge {

std::string_view to_string(Uniformity u) noexcept
{
    return u == Uniformity::triples_only ? "3" : "2,3";
}

std::vector<Hyperedge> candidate_edges(int n, Uniformity u)
{
    std::vector<Hyperedge> result;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            if (u == Uniformity::mixed)
                result.emplace_back(a, b);
            for (VertexId c = b + 1; c < n; ++c)
                result.emplace_back(a, b, c);
        }
    return result;
}

namespace {

int pair_index(int n, VertexId a, VertexId b)
{
    // Row-major index of a < b in the strict upper triangle.
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

// Unbiased draw from [0, bound) by rejection; identical on every standard library.
std::uint64_t uniform_below(std::mt19937_64 & rng, std::uint64_t bound)
{
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = rng();
        if (x >= threshold)
            return x % bound;
    }
}

} // namespace

namespace {

int checked_vertex_count(int n)
{
    if (n < 0 || n > Enumerator::max_vertices)
        throw Error(ErrorCode::CapExceeded, "enumeration supports 0 <= n <= " + std::to_string(Enumerator::max_vertices) + ", got " + std::to_string(n));
    return n;
}

} // namespace

Enumerator::Enumerator(int n, Uniformity u) :
    _n(checked_vertex_count(n)),
    _candidates(candidate_edges(n, u)),
    _index(n)
{
    for (const auto & e : _candidates) {
        std::uint64_t mask = 0;
        for (int a = 0; a < e.size(); ++a)
            for (int b = a + 1; b < e.size(); ++b)
                mask |= std::uint64_t{1} << pair_index(n, e[a], e[b]);
        _masks.push_back(mask);
    }
}

LinearHypergraph random_linear_hypergraph(int n, Uniformity u, std::uint64_t seed, std::uint64_t sample_index)
{
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(sample_index),
        static_cast<std::uint32_t>(sample_index >> 32)};
    std::mt19937_64 rng(sequence);

    const auto candidates = candidate_edges(n, u);
    std::vector<Hyperedge> chosen;
    if (candidates.empty())
        return LinearHypergraph::validate(n, chosen);

    const auto un = static_cast<std::size_t>(n);
    std::vector<bool> covered(un * un, false);
    std::vector<bool> taken(candidates.size(), false);
    const auto attempts = uniform_below(rng, candidates.size() + 1);
    for (std::uint64_t a = 0; a < attempts; ++a) {
        const auto c = uniform_below(rng, candidates.size());
        if (taken[c])
            continue;
        const auto & e = candidates[c];
        bool clash = false;
        for (int i = 0; i < e.size() && !clash; ++i)
            for (int j = i + 1; j < e.size() && !clash; ++j)
                clash = covered[static_cast<std::size_t>(e[i]) * un + static_cast<std::size_t>(e[j])];
        if (clash)
            continue;
        for (int i = 0; i < e.size(); ++i)
            for (int j = i + 1; j < e.size(); ++j)
                covered[static_cast<std::size_t>(e[i]) * un + static_cast<std::size_t>(e[j])] = true;
        taken[c] = true;
        chosen.push_back(e);
    }
    return LinearHypergraph::validate(n, std::move(chosen));
}

} // namespace berge
