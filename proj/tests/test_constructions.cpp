#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cofill/constructions.hpp"
#include "cofill/minimality.hpp"

using namespace cofill;

TEST_CASE("complete multipartite example, d=2") {
    PartitionedExample ex = multipartite_example(6, 2, {2, 2, 2});
    CHECK(ex.E.card() == 4);
    CHECK(ex.F.card() == 8);
    CHECK(normalized_size(ex.E) == Rat(4, 15));
    CHECK(normalized_size(ex.F) == Rat(8, 20));
    CHECK(coboundary(ex.E) == ex.F);
    CHECK(is_minimal_exact(ex.E).minimal);
}

TEST_CASE("complete multipartite example, d=3") {
    PartitionedExample ex = multipartite_example(8, 3, {2, 2, 2, 2});
    CHECK(ex.E.card() == 8);
    CHECK(ex.F.card() == 16);
    CHECK(coboundary(ex.E) == ex.F);
}

TEST_CASE("the |E'| >= |F|/M counting argument holds numerically") {
    for (auto [n, d, sizes] : {std::tuple<int, int, std::vector<int>>{6, 2, {2, 2, 2}},
                               {8, 3, {2, 2, 2, 2}},
                               {7, 2, {2, 2, 3}}}) {
        PartitionedExample ex = multipartite_example(n, d, sizes);
        int M = *std::max_element(sizes.begin(), sizes.end());
        // every f in F contains at least one member of E
        for (const auto& f : ex.F.members()) {
            int hits = 0;
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[static_cast<std::size_t>(i)]);
                if (ex.E.contains_rank(subset_rank(sub, n))) ++hits;
            }
            REQUIRE(hits >= 1);
        }
        // every e in E lies in at most M members of F
        for (const auto& e : ex.E.members()) {
            std::uint64_t up = face_degree(e, ex.F);
            REQUIRE(up <= static_cast<std::uint64_t>(M));
        }
        // together: |E'| >= |F|/M = |E| for any filling E'
        CHECK(ex.F.card() == static_cast<std::uint64_t>(M) * ex.E.card());
    }
}

TEST_CASE("relabeling leaves the counts invariant") {
    std::vector<int> perm{3, 1, 6, 2, 5, 4};
    PartitionedExample a = multipartite_example(6, 2, {2, 2, 2});
    PartitionedExample b = multipartite_example(6, 2, {2, 2, 2}, &perm);
    CHECK(a.E.card() == b.E.card());
    CHECK(a.F.card() == b.F.card());
    CHECK(coboundary(b.E) == b.F);
    CHECK(a.E != b.E);  // genuinely relabeled
}

TEST_CASE("edge cuts") {
    auto [s3, cut3] = edge_cut_example(6, 3);
    CHECK(cut3.card() == 9);
    CHECK(normalized_size(cut3) == Rat(9, 15));
    auto [s0, cut0] = edge_cut_example(6, 0);
    CHECK(cut0.empty());
    // finite-n cut profile: |delta S| = s(n-s) for every s
    for (int s = 0; s <= 11; ++s) {
        auto [sv, cut] = edge_cut_example(11, s);
        CHECK(cut.card() == static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(11 - s));
    }
}

TEST_CASE("bipartite block: degree-feasible but not minimal") {
    CHECK(nonminimal_bipartite_example(8, 0).empty());
    Cochain e = nonminimal_bipartite_example(9, 2);
    CHECK(e.card() == 8);
    CHECK(necessary_conditions(e).pass);
    CHECK_FALSE(is_minimal_exact(e).minimal);
}

TEST_CASE("invalid partitions are rejected") {
    CHECK_THROWS(multipartite_example(6, 2, {2, 2, 3}));
    CHECK_THROWS(multipartite_example(6, 2, {2, 2}));
    CHECK_THROWS(multipartite_example(6, 2, {2, 0, 4}));
    CHECK_THROWS(edge_cut_example(6, 7));
    CHECK_THROWS(nonminimal_bipartite_example(8, 6));
}
