#include "oracles.hpp"
#include "support.hpp"

#include <berge/constructions.hpp>
#include <berge/solver.hpp>

using namespace berge;

namespace {

void check_sts(const LinearHypergraph & h, int n)
{
    CHECK(h.vertex_count() == n);
    CHECK(static_cast<int>(h.edge_count()) == n * (n - 1) / 6);
    for (const auto & e : h.edges())
        CHECK(e.size() == 3);
    CHECK(oracle::every_pair_once(n, oracle::edges_of(h)));
}

} // namespace

TEST_CASE("Fano plane")
{
    const auto f = fano();
    check_sts(f, 7);
    CHECK(6 * f.edge_count() == (7 - 1) * 7);
}

TEST_CASE("Bose construction")
{
    for (int n : {3, 9, 15, 21, 27})
        check_sts(sts_bose(n), n);
    CHECK(sts_bose(3).edge_count() == 1);
    CHECK(sts_bose(9).edge_count() == 12);
    CHECK_ERROR(sts_bose(8), ErrorCode::BadResidue);
    CHECK_ERROR(sts_bose(7), ErrorCode::BadResidue);
    CHECK_ERROR(sts_bose(-3), ErrorCode::BadResidue);
}

TEST_CASE("Skolem construction")
{
    for (int n : {7, 13, 19, 25})
        check_sts(sts_skolem(n), n);
    CHECK(sts_skolem(13).edge_count() == 26);
    CHECK(oracle::isomorphic(7, oracle::edges_of(sts_skolem(7)), oracle::edges_of(fano())));
    CHECK_ERROR(sts_skolem(9), ErrorCode::BadResidue);
    CHECK_ERROR(sts_skolem(1), ErrorCode::BadResidue);
}

TEST_CASE("steiner_triple_system dispatches on residue")
{
    check_sts(steiner_triple_system(9), 9);
    check_sts(steiner_triple_system(13), 13);
    CHECK_ERROR(steiner_triple_system(11), ErrorCode::BadResidue);
}

TEST_CASE("disjoint Steiner systems are sharp for paths")
{
    for (int copies : {1, 2, 3}) {
        const auto h = extremal_disjoint_sts(7, copies);
        const int n = 7 * copies;
        CHECK(h.vertex_count() == n);
        CHECK(6 * static_cast<int>(h.edge_count()) == (7 - 1) * n);
        CHECK_FALSE(has_berge_path(h, 7));
        CHECK(has_berge_path(h, 6));
    }
    const auto m = extremal_disjoint_sts(3, 2);
    CHECK(m == matching_k2(6));
    CHECK(extremal_disjoint_sts(9, 1).edge_count() == 12);
    CHECK_ERROR(extremal_disjoint_sts(5, 1), ErrorCode::BadResidue);
    CHECK_ERROR(extremal_disjoint_sts(7, 0), ErrorCode::InvalidArgument);
}

TEST_CASE("star of triples")
{
    CHECK(star_k3(3).edge_count() == 1);
    const auto s = star_k3(7);
    CHECK(s.edge_count() == 3);
    CHECK(shadow_edge_count(s) == 9);
    CHECK(longest_berge_path(s).length() == 2);
    CHECK(oracle::longest_path(7, oracle::edges_of(s)) == 2);
    for (int n = 3; n <= 11; n += 2) {
        const auto h = star_k3(n);
        CHECK(2 * shadow_edge_count(h) == static_cast<std::size_t>(3 * (n - 1)));
        CHECK_FALSE(has_berge_path(h, 3));
        CHECK(degree(h, 0) == (n - 1) / 2);
    }
    CHECK_ERROR(star_k3(4), ErrorCode::BadParity);
    CHECK_ERROR(star_k3(1), ErrorCode::BadParity);
}

TEST_CASE("matching of triples")
{
    CHECK(matching_k2(3).edge_count() == 1);
    CHECK(shadow_edge_count(matching_k2(3)) == 3);
    CHECK(shadow_edge_count(matching_k2(6)) == 6);
    CHECK(matching_k2(0).edge_count() == 0);
    for (int n = 3; n <= 12; n += 3) {
        const auto h = matching_k2(n);
        CHECK(static_cast<int>(shadow_edge_count(h)) == n);
        CHECK(longest_berge_path(h).length() == 1);
        CHECK_FALSE(has_berge_path(h, 2));
    }
    CHECK_ERROR(matching_k2(4), ErrorCode::BadResidue);
}

TEST_CASE("complete graph of 2-edges")
{
    const auto k4 = two_edge_clique(4);
    CHECK(k4.edge_count() == 6);
    CHECK(2 * shadow_edge_count(k4) == (4 - 1) * 4);
    CHECK_FALSE(has_berge_path(k4, 4));
    CHECK(two_edge_clique(2).edge_count() == 1);
    CHECK(two_edge_clique(1).edge_count() == 0);
    CHECK(has_berge_path(two_edge_clique(5), 4));
    CHECK_ERROR(two_edge_clique(0), ErrorCode::InvalidArgument);
}

TEST_CASE("construct dispatches by family name")
{
    CHECK(construct({"fano", 0, 0, 1}) == fano());
    CHECK(construct({"sts_bose", 9, 0, 1}) == sts_bose(9));
    CHECK(construct({"sts_skolem", 13, 0, 1}) == sts_skolem(13));
    CHECK(construct({"disjoint_sts", 0, 7, 2}) == extremal_disjoint_sts(7, 2));
    CHECK(construct({"star_k3", 5, 0, 1}) == star_k3(5));
    CHECK(construct({"matching_k2", 6, 0, 1}) == matching_k2(6));
    CHECK(construct({"two_edge_clique", 4, 0, 1}) == two_edge_clique(4));
    CHECK_ERROR(construct({"petersen", 10, 0, 1}), ErrorCode::InvalidArgument);
    CHECK(construction_families().size() == 7);
}

TEST_CASE("generators are deterministic")
{
    CHECK(sts_bose(15) == sts_bose(15));
    CHECK(sts_skolem(19) == sts_skolem(19));
}
