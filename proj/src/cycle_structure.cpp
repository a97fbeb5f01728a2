#include <berge/cycle_structure.hpp>

#include <algorithm>
#include <bit>
#include <string>

namespace berge {

CycleSet::CycleSet(int cycle_length, std::uint64_t bits) :
    _length(cycle_length),
    _bits(bits)
{
    if (cycle_length < 1 || cycle_length > 64)
        throw Error(ErrorCode::InvalidArgument, "cycle length must be in [1,64]");
    if (cycle_length < 64)
        _bits &= (std::uint64_t{1} << cycle_length) - 1;
}

int CycleSet::size() const noexcept
{
    return std::popcount(_bits);
}

std::vector<int> CycleSet::positions() const
{
    std::vector<int> result;
    for (auto b = _bits; b; b &= b - 1)
        result.push_back(std::countr_zero(b));
    return result;
}

CycleSet CycleSet::shift(int offset) const noexcept
{
    const int l = _length;
    const int r = ((offset % l) + l) % l;
    if (r == 0)
        return *this;
    const std::uint64_t full = l == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << l) - 1;
    return CycleSet(l, ((_bits << r) | (_bits >> (l - r))) & full);
}

CycleContext::CycleContext(const LinearHypergraph & h, BergeCycle cycle) :
    _cycle(std::move(cycle))
{
    if (!is_valid_berge_cycle(h, _cycle))
        throw Error(ErrorCode::InvalidCycle, "not a Berge cycle of the hypergraph");
    if (_cycle.length() > 64)
        throw Error(ErrorCode::InstanceTooLarge, "cycles longer than 64 are not supported");
    const int l = length();
    _position.assign(static_cast<std::size_t>(h.vertex_count()), -1);
    for (int i = 0; i < l; ++i)
        _position[static_cast<std::size_t>(vertex(i))] = i;
    _third.resize(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        const auto & e = defining_edge(i);
        if (e.size() == 3)
            for (auto x : e)
                if (x != vertex(i) && x != vertex((i + 1) % l))
                    _third[static_cast<std::size_t>(i)] = x;
    }
}

bool CycleContext::is_defining(const Hyperedge & e) const
{
    return std::find(_cycle.edges.begin(), _cycle.edges.end(), e) != _cycle.edges.end();
}

std::optional<CycleContext> longest_cycle_context(const LinearHypergraph & h)
{
    auto cycle = longest_berge_cycle(h);
    if (!cycle)
        return std::nullopt;
    return CycleContext(h, std::move(*cycle));
}

namespace {

/// S and L for every off-cycle vertex, as position bitmasks.
class Frame {
public:
    Frame(HypergraphView h, const BergeCycle & cycle) :
        _h(h),
        _cycle(cycle),
        _l(static_cast<int>(cycle.length())),
        _position(static_cast<std::size_t>(h.vertex_count()), -1),
        _defining(h.edges().size(), false),
        _s(static_cast<std::size_t>(h.vertex_count()), 0),
        _lset(static_cast<std::size_t>(h.vertex_count()), 0),
        _r(static_cast<std::size_t>(h.vertex_count()), 0)
    {
        for (int i = 0; i < _l; ++i)
            _position[static_cast<std::size_t>(cycle.vertices[static_cast<std::size_t>(i)])] = i;
        const auto edges = h.edges();
        for (const auto & d : cycle.edges)
            for (std::size_t e = 0; e < edges.size(); ++e)
                if (edges[e] == d)
                    _defining[e] = true;

        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (_defining[e])
                continue;
            for (auto u : edges[e])
                if (!on_cycle(u))
                    for (auto w : edges[e])
                        if (on_cycle(w))
                            _s[static_cast<std::size_t>(u)] |= std::uint64_t{1} << position(w);
        }
        for (int i = 0; i < _l; ++i) {
            const auto & d = cycle.edges[static_cast<std::size_t>(i)];
            if (d.size() != 3)
                continue;
            for (auto x : d)
                if (!on_cycle(x)) {
                    _lset[static_cast<std::size_t>(x)] |= std::uint64_t{1} << i;
                    _r[static_cast<std::size_t>(x)] |= std::uint64_t{1} << ((i + 1) % _l);
                }
        }
    }

    int length() const noexcept { return _l; }
    int position(VertexId v) const noexcept { return _position[static_cast<std::size_t>(v)]; }
    bool on_cycle(VertexId v) const noexcept { return position(v) >= 0; }
    bool defining(std::size_t edge) const noexcept { return _defining[edge]; }

    CycleSet s(VertexId u) const { return CycleSet(_l, _s[static_cast<std::size_t>(u)]); }
    CycleSet l(VertexId u) const { return CycleSet(_l, _lset[static_cast<std::size_t>(u)]); }
    CycleSet r(VertexId u) const { return CycleSet(_l, _r[static_cast<std::size_t>(u)]); }
    CycleSet sl(VertexId u) const { return s(u) | l(u); }

    VertexId cycle_vertex(int position) const
    {
        return _cycle.vertices[static_cast<std::size_t>(((position % _l) + _l) % _l)];
    }

    /// The hyperedge joining u to the vertex at `position`: the defining edge when
    /// u is its third vertex and `prefer_defining`, else the non-defining cover.
    std::optional<Hyperedge> joining_edge(VertexId u, int position, bool prefer_defining) const
    {
        const auto p = static_cast<std::size_t>(((position % _l) + _l) % _l);
        if (prefer_defining && l(u).contains(static_cast<int>(p)))
            return _cycle.edges[p];
        const auto v = _cycle.vertices[p];
        const auto edges = _h.edges();
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (!_defining[e] && edges[e].contains(u) && edges[e].contains(v))
                return edges[e];
        return std::nullopt;
    }

    std::size_t edge_count() const noexcept { return _h.edges().size(); }
    const Hyperedge & edge(std::size_t e) const { return _h.edges()[e]; }

private:
    HypergraphView _h;
    const BergeCycle & _cycle;
    int _l;
    std::vector<int> _position;
    std::vector<bool> _defining;
    std::vector<std::uint64_t> _s;
    std::vector<std::uint64_t> _lset;
    std::vector<std::uint64_t> _r;
};

/// Violation for A(ui) ∩ B(uj)^(-offset) ≠ ∅ at its first position.
Violation make_violation(const Frame & f, std::string check, std::string clause, VertexId ui, VertexId uj, const CycleSet & hit, int offset,
    bool second_uses_l, std::vector<VertexId> involved, std::vector<Hyperedge> extra = {})
{
    const int p = hit.positions().front();
    Violation v;
    v.check = std::move(check);
    v.clause = std::move(clause);
    v.vertices = std::move(involved);
    v.position = p;
    v.cycle_vertex = f.cycle_vertex(p);
    if (auto first = f.joining_edge(ui, p, true))
        v.edges.push_back(*first);
    if (auto second = f.joining_edge(uj, p + offset, second_uses_l))
        v.edges.push_back(*second);
    for (auto & e : extra)
        v.edges.push_back(e);
    return v;
}

std::optional<Violation> claim_plus(const Frame & f, VertexId u)
{
    const auto hit = f.sl(u) & f.s(u).shift(-1);
    if (hit.empty())
        return std::nullopt;
    return make_violation(f, "claim_plus", "(S(u)|L(u)) & S(u)^-", u, u, hit, 1, false, {u});
}

std::optional<Violation> claim_plus_plus(const Frame & f, const Hyperedge & t)
{
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b)
                continue;
            const auto ui = t[a], uj = t[b];
            if (auto hit = f.sl(ui) & f.sl(uj).shift(-1); !hit.empty())
                return make_violation(f, "claim_plus_plus", "(S(ui)|L(ui)) & (S(uj)|L(uj))^-", ui, uj, hit, 1, true, {ui, uj}, {t});
            if (auto hit = f.sl(ui) & f.s(uj).shift(-2); !hit.empty())
                return make_violation(f, "claim_plus_plus", "(S(ui)|L(ui)) & S(uj)^--", ui, uj, hit, 2, false, {ui, uj}, {t});
        }
    return std::nullopt;
}

VertexId shared_vertex(const Hyperedge & a, const Hyperedge & b)
{
    for (auto v : a)
        if (b.contains(v))
            return v;
    return -1;
}

std::optional<Violation> claim_triple(const Frame & f, const Hyperedge & e1, const Hyperedge & e2)
{
    const auto centre = shared_vertex(e1, e2);
    for (auto ui : e1) {
        if (ui == centre)
            continue;
        for (auto uj : e2) {
            if (uj == centre)
                continue;
            const std::vector<VertexId> involved{ui, centre, uj};
            if (auto hit = f.sl(ui) & f.sl(uj).shift(-1); !hit.empty())
                return make_violation(f, "claim_triple", "(S(ui)|L(ui)) & (S(uj)|L(uj))^-", ui, uj, hit, 1, true, involved, {e1, e2});
            if (auto hit = f.sl(ui) & f.sl(uj).shift(-2); !hit.empty())
                return make_violation(f, "claim_triple", "(S(ui)|L(ui)) & (S(uj)|L(uj))^--", ui, uj, hit, 2, true, involved, {e1, e2});
            if (f.length() >= 4)
                if (auto hit = f.sl(ui) & f.s(uj).shift(-3); !hit.empty())
                    return make_violation(f, "claim_triple", "(S(ui)|L(ui)) & S(uj)^---", ui, uj, hit, 3, false, involved, {e1, e2});
        }
    }
    return std::nullopt;
}

Frame frame_for(const LinearHypergraph & h, const CycleContext & ctx)
{
    if (ctx.cycle().vertices.empty() || h.vertex_count() <= *std::max_element(ctx.cycle().vertices.begin(), ctx.cycle().vertices.end())
        || !is_valid_berge_cycle(h, ctx.cycle()))
        throw Error(ErrorCode::InvalidCycle, "cycle context does not belong to this hypergraph");
    return Frame(h.view(), ctx.cycle());
}

void require_off_cycle_triple(const LinearHypergraph & h, const CycleContext & ctx, const Hyperedge & t)
{
    if (t.size() != 3)
        throw Error(ErrorCode::InvalidArgument, "expected a hyperedge of size three");
    if (!h.has_edge(t))
        throw Error(ErrorCode::InvalidArgument, "triple is not a hyperedge of H");
    for (auto v : t)
        if (ctx.on_cycle(v))
            throw Error(ErrorCode::TripleTouchesCycle, "vertex " + std::to_string(v) + " is a defining vertex of the cycle");
}

} // namespace

PeripheralSets peripheral_sets(const LinearHypergraph & h, const CycleContext & ctx, VertexId u)
{
    if (u < 0 || u >= h.vertex_count())
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(u));
    if (ctx.on_cycle(u))
        throw Error(ErrorCode::VertexOnCycle, "vertex " + std::to_string(u) + " is a defining vertex of the cycle");
    const auto f = frame_for(h, ctx);
    return PeripheralSets{u, f.s(u), f.l(u), f.r(u)};
}

std::optional<Violation> check_claim_plus(const LinearHypergraph & h, const CycleContext & ctx, VertexId u)
{
    if (u < 0 || u >= h.vertex_count())
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(u));
    if (ctx.on_cycle(u))
        throw Error(ErrorCode::VertexOnCycle, "vertex " + std::to_string(u) + " is a defining vertex of the cycle");
    return claim_plus(frame_for(h, ctx), u);
}

std::optional<Violation> check_claim_plus_plus(const LinearHypergraph & h, const CycleContext & ctx, const Hyperedge & triple)
{
    require_off_cycle_triple(h, ctx, triple);
    return claim_plus_plus(frame_for(h, ctx), triple);
}

std::optional<Violation> check_claim_triple(const LinearHypergraph & h, const CycleContext & ctx, const Hyperedge & e1, const Hyperedge & e2)
{
    if (e1.size() != 3 || e2.size() != 3 || e1.intersection_size(e2) != 1)
        throw Error(ErrorCode::BadSharingPattern, "expected two triples sharing exactly one vertex");
    require_off_cycle_triple(h, ctx, e1);
    require_off_cycle_triple(h, ctx, e2);
    return claim_triple(frame_for(h, ctx), e1, e2);
}

namespace detail {

void audit_claims(HypergraphView h, const BergeCycle & cycle, ClaimAudit & audit)
{
    const Frame f(h, cycle);
    const int l = f.length();

    for (VertexId u = 0; u < h.vertex_count(); ++u) {
        if (f.on_cycle(u))
            continue;
        ++audit.checked_vertices;
        if (auto v = claim_plus(f, u))
            audit.violations.push_back(std::move(*v));
        if (f.s(u).size() > l / 2) {
            Violation v;
            v.check = "s_size_bound";
            v.clause = "|S(u)| <= floor(l/2)";
            v.vertices = {u};
            audit.violations.push_back(std::move(v));
        }
        if (f.l(u).shift(1) != f.r(u)) {
            Violation v;
            v.check = "l_shift_r";
            v.clause = "L(u)^+ == R(u)";
            v.vertices = {u};
            audit.violations.push_back(std::move(v));
        }
    }

    std::vector<std::size_t> free_triples;
    for (std::size_t e = 0; e < f.edge_count(); ++e) {
        const auto & t = f.edge(e);
        if (t.size() == 3 && std::none_of(t.begin(), t.end(), [&](VertexId v) { return f.on_cycle(v); }))
            free_triples.push_back(e);
    }
    for (auto e : free_triples) {
        ++audit.checked_triples;
        if (auto v = claim_plus_plus(f, f.edge(e)))
            audit.violations.push_back(std::move(*v));
    }
    for (auto a : free_triples)
        for (auto b : free_triples) {
            if (a == b || f.edge(a).intersection_size(f.edge(b)) != 1)
                continue;
            ++audit.checked_triple_pairs;
            if (auto v = claim_triple(f, f.edge(a), f.edge(b)))
                audit.violations.push_back(std::move(*v));
        }
}

} // namespace detail

ClaimAudit audit_claims(const LinearHypergraph & h, const CycleContext & ctx)
{
    ClaimAudit audit;
    frame_for(h, ctx);
    detail::audit_claims(h.view(), ctx.cycle(), audit);
    return audit;
}

} // namespace berge
