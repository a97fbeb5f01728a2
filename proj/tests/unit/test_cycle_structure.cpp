#include "support.hpp"

#include <berge/constructions.hpp>
#include <berge/cycle_structure.hpp>
#include <berge/enumerator.hpp>
#include <berge/solver.hpp>

using namespace berge;

namespace {

BergeCycle triangle_cycle()
{
    return BergeCycle{{0, 1, 2}, {Hyperedge(0, 1), Hyperedge(1, 2), Hyperedge(0, 2)}};
}

CycleSet set_of(int length, std::initializer_list<int> positions)
{
    CycleSet s(length);
    for (int p : positions)
        s.insert(p);
    return s;
}

} // namespace

TEST_CASE("shift on cycle positions")
{
    CHECK(shift(CycleSet(5), 3).empty());
    CHECK(shift(set_of(5, {0}), 1) == set_of(5, {1}));
    CHECK(shift(set_of(5, {0}), -1) == set_of(5, {4}));
    CHECK(shift(set_of(5, {4}), 1) == set_of(5, {0}));
    CHECK(shift(set_of(5, {1, 3}), -2) == set_of(5, {4, 1}));
    CHECK(shift(set_of(3, {0, 2}), -3) == set_of(3, {0, 2}));
    for (int length = 1; length <= 64; length += 7)
        for (std::uint64_t seed = 1; seed < 200; seed += 13) {
            const std::uint64_t mask = length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
            const CycleSet s(length, (seed * 0x9E3779B97F4A7C15ULL) & mask);
            CHECK(shift(shift(s, 1), -1) == s);
            CHECK(shift(s, 0) == s);
            CHECK(shift(s, length) == s);
            for (int o : {-3, -2, -1, 1, 2, 5})
                CHECK(shift(s, o).size() == s.size());
        }
    CHECK_ERROR(CycleSet(0), ErrorCode::InvalidArgument);
    CHECK_ERROR(CycleSet(65), ErrorCode::InvalidArgument);
}

TEST_CASE("cycle context records the defining structure")
{
    const auto h = hg(5, {{0, 1, 3}, {1, 2}, {0, 2}, {3, 4}});
    const CycleContext ctx(h, BergeCycle{{0, 1, 2}, {Hyperedge(0, 1, 3), Hyperedge(1, 2), Hyperedge(0, 2)}});
    CHECK(ctx.length() == 3);
    CHECK(ctx.third_vertex(0) == 3);
    CHECK_FALSE(ctx.third_vertex(1).has_value());
    CHECK(ctx.position_of(2) == 2);
    CHECK_FALSE(ctx.on_cycle(3));
    CHECK(ctx.is_defining(Hyperedge(1, 2)));
    CHECK_FALSE(ctx.is_defining(Hyperedge(3, 4)));
    CHECK_ERROR(CycleContext(h, BergeCycle{{0, 1, 2}, {Hyperedge(0, 1), Hyperedge(1, 2), Hyperedge(0, 2)}}), ErrorCode::InvalidCycle);
}

TEST_CASE("peripheral sets")
{
    SUBCASE("vertex away from the cycle")
    {
        const auto h = hg(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
        const CycleContext ctx(h, triangle_cycle());
        const auto p = peripheral_sets(h, ctx, 3);
        CHECK(p.s.empty());
        CHECK(p.l.empty());
        CHECK(p.r.empty());
        CHECK_ERROR(peripheral_sets(h, ctx, 1), ErrorCode::VertexOnCycle);
    }
    SUBCASE("third vertex of a defining triple")
    {
        const auto h = hg(4, {{0, 1, 3}, {1, 2}, {0, 2}});
        const auto ctx = longest_cycle_context(h);
        REQUIRE(ctx.has_value());
        const int pos = ctx->position_of(0) == (ctx->position_of(1) + 1) % 3 ? ctx->position_of(1) : ctx->position_of(0);
        const auto p = peripheral_sets(h, *ctx, 3);
        CHECK(p.l == set_of(3, {pos}));
        CHECK(p.r == set_of(3, {(pos + 1) % 3}));
        CHECK(p.s.empty());
    }
    SUBCASE("pendant 2-edge on a longest triangle")
    {
        const auto h = hg(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
        const auto ctx = longest_cycle_context(h);
        REQUIRE(ctx.has_value());
        CHECK(ctx->length() == 3);
        const auto p = peripheral_sets(h, *ctx, 3);
        CHECK(p.s == set_of(3, {ctx->position_of(0)}));
        CHECK(p.l.empty());
        CHECK(p.r.empty());
    }
}

TEST_CASE("claim checkers on vacuous and trivial inputs")
{
    const auto f = fano();
    const auto ctx = longest_cycle_context(f);
    REQUIRE(ctx.has_value());
    CHECK(ctx->length() == 7);
    const auto audit = audit_claims(f, *ctx);
    CHECK(audit.checked_vertices == 0);
    CHECK(audit.violations.empty());

    const auto h = hg(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4, 5}});
    const CycleContext tri(h, triangle_cycle());
    CHECK_FALSE(check_claim_plus(h, tri, 3).has_value());
    CHECK_FALSE(check_claim_plus_plus(h, tri, Hyperedge(3, 4, 5)).has_value());
    CHECK_ERROR(check_claim_plus_plus(h, tri, Hyperedge(3, 4)), ErrorCode::InvalidArgument);
    CHECK_ERROR(check_claim_plus_plus(h, tri, Hyperedge(2, 3, 4)), ErrorCode::InvalidArgument);

    const auto touching = hg(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3, 4}});
    CHECK_ERROR(check_claim_plus_plus(touching, CycleContext(touching, triangle_cycle()), Hyperedge(2, 3, 4)), ErrorCode::TripleTouchesCycle);
}

TEST_CASE("claim triple checker")
{
    const auto h = hg(8, {{0, 1}, {1, 2}, {0, 2}, {3, 4, 5}, {3, 6, 7}});
    const CycleContext ctx(h, triangle_cycle());
    CHECK_FALSE(check_claim_triple(h, ctx, Hyperedge(3, 4, 5), Hyperedge(3, 6, 7)).has_value());
    CHECK_ERROR(check_claim_triple(h, ctx, Hyperedge(3, 4, 5), Hyperedge(3, 4, 5)), ErrorCode::BadSharingPattern);
    const auto audit = audit_claims(h, ctx);
    CHECK(audit.checked_triples == 2);
    // Both orders: the shifted clauses are not symmetric in the two triples.
    CHECK(audit.checked_triple_pairs == 2);
    CHECK(audit.violations.empty());
}

TEST_CASE("checkers flag a cycle that is not longest")
{
    // The triangle 0,1,2 extends through 3 to the 4-cycle 0,3,1,2.
    const auto h = hg(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}});
    const CycleContext ctx(h, triangle_cycle());
    const auto v = check_claim_plus(h, ctx, 3);
    REQUIRE(v.has_value());
    CHECK(v->check == "claim_plus");
    CHECK(v->vertices == std::vector<VertexId>{3});
    CHECK_FALSE(audit_claims(h, ctx).violations.empty());
    CHECK(longest_berge_cycle(h)->length() == 4);
}

TEST_CASE("claim four negative control")
{
    // Triangle 0,1,2 plus triple {3,4,5}; 3 sees v_0 and 4 sees v_2, so v_2 in S(4)
    // and v_0 = v_2^+ gives v_2 in S(3)^- ; a longer cycle 0,3,4,2,1 exists.
    const auto h = hg(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4, 5}, {0, 3}, {2, 4}});
    const CycleContext ctx(h, triangle_cycle());
    const auto v = check_claim_plus_plus(h, ctx, Hyperedge(3, 4, 5));
    REQUIRE(v.has_value());
    CHECK(v->check == "claim_plus_plus");
    CHECK(longest_berge_cycle(h)->length() > 3);
}

TEST_CASE("claim five at cycle length three")
{
    // Longest triangle 0,1,2; triples {3,4,6}, {3,5,7} meet at 3 and {0,4,5} puts
    // v_0 in both S(4) and S(5). At length three the triple shift is the identity.
    const auto h = hg(8, {{0, 1}, {1, 2}, {0, 2}, {3, 4, 6}, {3, 5, 7}, {0, 4, 5}});
    REQUIRE(longest_berge_cycle(h)->length() == 3);
    const CycleContext ctx(h, triangle_cycle());
    const auto s4 = peripheral_sets(h, ctx, 4).s;
    const auto s5 = peripheral_sets(h, ctx, 5).s;
    CHECK_FALSE((s4 & shift(s5, -3)).empty());
    CHECK_FALSE(check_claim_triple(h, ctx, Hyperedge(3, 4, 6), Hyperedge(3, 5, 7)).has_value());
    CHECK(audit_claims(h, ctx).violations.empty());
}

TEST_CASE("audit invariants on random hypergraphs")
{
    for (std::uint64_t i = 0; i < 500; ++i) {
        const int n = 4 + static_cast<int>(i % 9);
        const auto h = random_linear_hypergraph(n, i % 2 ? Uniformity::mixed : Uniformity::triples_only, 5, i);
        const auto ctx = longest_cycle_context(h);
        if (!ctx)
            continue;
        CHECK(audit_claims(h, *ctx).violations.empty());
        for (VertexId u = 0; u < n; ++u) {
            if (ctx->on_cycle(u))
                continue;
            const auto p = peripheral_sets(h, *ctx, u);
            CHECK(p.s.size() <= ctx->length() / 2);
            CHECK(shift(p.l, 1) == p.r);
            CHECK(p.l.size() == p.r.size());
        }
    }
}
