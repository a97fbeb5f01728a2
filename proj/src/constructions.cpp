#include <berge/constructions.hpp>

#include <string>

namespace berge {

namespace {

void require(bool ok, ErrorCode code, const std::string & message)
{
    if (!ok)
        throw Error(code, message);
}

} // namespace

LinearHypergraph fano()
{
    std::vector<Hyperedge> edges;
    for (int i = 0; i < 7; ++i)
        edges.emplace_back(i, (i + 1) % 7, (i + 3) % 7);
    return LinearHypergraph::validate(7, std::move(edges));
}

LinearHypergraph sts_bose(int n)
{
    require(n >= 3 && n % 6 == 3, ErrorCode::BadResidue, "Bose construction needs n ≡ 3 (mod 6), got " + std::to_string(n));
    // Points (x, i) with x in Z_v, i in Z_3, v = n/3 odd; x∘y = (x+y)(v+1)/2 is an
    // idempotent commutative quasigroup on Z_v.
    const int v = n / 3;
    auto point = [v](int x, int i) { return x + ((i % 3) * v); };
    auto op = [v](int x, int y) { return ((x + y) * ((v + 1) / 2)) % v; };

    std::vector<Hyperedge> edges;
    for (int x = 0; x < v; ++x)
        edges.emplace_back(point(x, 0), point(x, 1), point(x, 2));
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < v; ++x)
            for (int y = x + 1; y < v; ++y)
                edges.emplace_back(point(x, i), point(y, i), point(op(x, y), i + 1));
    return LinearHypergraph::validate(n, std::move(edges));
}

LinearHypergraph sts_skolem(int n)
{
    require(n >= 7 && n % 6 == 1, ErrorCode::BadResidue, "Skolem construction needs n ≡ 1 (mod 6) and n >= 7, got " + std::to_string(n));
    // Points (x, i) with x in Z_2t, i in Z_3, plus ∞ = n-1. The half-idempotent
    // quasigroup is x∘y = σ(x+y mod 2t) with σ(s) = s/2 (s even), (s+2t-1)/2 (s odd).
    const int t = (n - 1) / 6;
    const int order = 2 * t;
    const int infinity = n - 1;
    auto point = [order](int x, int i) { return x + ((i % 3) * order); };
    auto op = [order](int x, int y) {
        const int s = (x + y) % order;
        return s % 2 == 0 ? s / 2 : (s + order - 1) / 2;
    };

    std::vector<Hyperedge> edges;
    for (int x = 0; x < t; ++x)
        edges.emplace_back(point(x, 0), point(x, 1), point(x, 2));
    for (int x = 0; x < t; ++x)
        for (int i = 0; i < 3; ++i)
            edges.emplace_back(infinity, point(x + t, i), point(x, i + 1));
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < order; ++x)
            for (int y = x + 1; y < order; ++y)
                edges.emplace_back(point(x, i), point(y, i), point(op(x, y), i + 1));
    return LinearHypergraph::validate(n, std::move(edges));
}

LinearHypergraph steiner_triple_system(int n)
{
    if (n % 6 == 3)
        return sts_bose(n);
    if (n % 6 == 1 && n >= 7)
        return sts_skolem(n);
    throw Error(ErrorCode::BadResidue, "no Steiner triple system construction for n = " + std::to_string(n));
}

LinearHypergraph extremal_disjoint_sts(int k, int copies)
{
    require(copies >= 1, ErrorCode::InvalidArgument, "copies must be positive");
    const auto block = steiner_triple_system(k);
    LinearHypergraph result;
    for (int c = 0; c < copies; ++c)
        result = disjoint_union(result, block);
    return result;
}

LinearHypergraph star_k3(int n)
{
    require(n >= 3 && n % 2 == 1, ErrorCode::BadParity, "star needs odd n >= 3, got " + std::to_string(n));
    std::vector<Hyperedge> edges;
    for (int i = 1; 2 * i < n; ++i)
        edges.emplace_back(0, 2 * i - 1, 2 * i);
    return LinearHypergraph::validate(n, std::move(edges));
}

LinearHypergraph matching_k2(int n)
{
    require(n >= 0 && n % 3 == 0, ErrorCode::BadResidue, "matching needs n ≡ 0 (mod 3), got " + std::to_string(n));
    std::vector<Hyperedge> edges;
    for (int i = 0; i < n; i += 3)
        edges.emplace_back(i, i + 1, i + 2);
    return LinearHypergraph::validate(n, std::move(edges));
}

LinearHypergraph two_edge_clique(int n)
{
    require(n >= 1, ErrorCode::InvalidArgument, "clique needs n >= 1");
    std::vector<Hyperedge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            edges.emplace_back(a, b);
    return LinearHypergraph::validate(n, std::move(edges));
}

const std::vector<std::string_view> & construction_families()
{
    static const std::vector<std::string_view> families{
        "fano", "sts_bose", "sts_skolem", "disjoint_sts", "star_k3", "matching_k2", "two_edge_clique"};
    return families;
}

LinearHypergraph construct(const ConstructionSpec & spec)
{
    const auto & f = spec.family;
    if (f == "fano")
        return fano();
    if (f == "sts_bose")
        return sts_bose(spec.n);
    if (f == "sts_skolem")
        return sts_skolem(spec.n);
    if (f == "disjoint_sts")
        return extremal_disjoint_sts(spec.k, spec.copies);
    if (f == "star_k3")
        return star_k3(spec.n);
    if (f == "matching_k2")
        return matching_k2(spec.n);
    if (f == "two_edge_clique")
        return two_edge_clique(spec.n);
    throw Error(ErrorCode::InvalidArgument, "unknown construction family '" + f + "'");
}

} // namespace berge
