#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cofill/pagoda.hpp"

using namespace cofill;

TEST_CASE("quadripartite pagoda verifies with zero slack") {
    for (int n : {8, 12}) {
        Pagoda p = quadripartite_pagoda(n);
        PagodaReport rep = verify_pagoda(p, Rat(0));
        CHECK(rep.relations_ok);
        CHECK(rep.max_residual == Rat(0));
        CHECK(rep.minimality_ok);
        CHECK(rep.pass);
        std::int64_t q = n / 4;
        CHECK(p.G.card() == static_cast<std::uint64_t>(q * q * q * q));
    }
    Pagoda p8 = quadripartite_pagoda(8);
    CHECK(verify_pagoda(p8, Rat(0)).G_norm == Rat(16, 70));
    CHECK_THROWS(quadripartite_pagoda(10));
}

TEST_CASE("the top norm decreases monotonically toward 3/32") {
    Rat prev(1);
    for (int n : {8, 12, 16, 20, 24}) {
        Rat g = verify_pagoda(quadripartite_pagoda(n), Rat(0)).G_norm;
        std::int64_t q = n / 4;
        CHECK(g == Rat(q * q * q * q, static_cast<std::int64_t>(binom(n, 4))));
        CHECK(g < prev);
        CHECK(g > Rat(3, 32));
        prev = g;
    }
}

TEST_CASE("a single perturbed edge is detected at the exact residual scale") {
    const int n = 8;
    Pagoda p = quadripartite_pagoda(n);
    p.E[0].flip_rank(p.E[0].bits().test(0) ? 0 : 1);
    PagodaReport rep = verify_pagoda(p, Rat(0));
    CHECK_FALSE(rep.relations_ok);
    // the flipped edge shows up once in each of the two incident dV relations
    CHECK(rep.residual_dV[0] == Rat(1, static_cast<std::int64_t>(binom(n, 2))));
    CHECK(rep.residual_dV[1] == Rat(1, static_cast<std::int64_t>(binom(n, 2))));
    // and its coboundary (n-2 triples) in the dE relation
    CHECK(rep.residual_dE[0] == Rat(n - 2, static_cast<std::int64_t>(binom(n, 3))));
}

TEST_CASE("degenerate one-part pagoda fails only on minimality") {
    const int n = 8;
    Pagoda p(n);
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(n); ++k) p.V[0].set_rank(k);
    PagodaReport rep = verify_pagoda(p, Rat(0));
    CHECK(rep.relations_ok);       // delta V = 0 and everything else is empty
    CHECK_FALSE(rep.min_V[0].minimal);  // |V1| = n > n/2
    CHECK_FALSE(rep.pass);
}

TEST_CASE("closed-form chain of the epsilon cascade") {
    Prop9Chain z = prop9_chain(0.0);
    CHECK(z.eps1 == 0.0);
    CHECK(z.eps2 == doctest::Approx(0.0));
    CHECK(z.f_value == doctest::Approx(0.0));

    Prop9Chain t = prop9_chain(1e-6);
    CHECK(t.eps1 / t.eps0 == doctest::Approx(6.0).epsilon(1e-3));
    CHECK(t.eps2 / t.eps0 == doctest::Approx(18.0).epsilon(1e-3));
    CHECK(t.f_value / t.eps0 == doctest::Approx(73.5).epsilon(1e-3));

    // second-order series agreement
    Prop9Chain s = prop9_chain(1e-4);
    double series = 18e-4 + 864e-8;
    CHECK(s.eps2 == doctest::Approx(series).epsilon(1e-4));

    CHECK_THROWS(prop9_chain(1.0 / 48.0));
    CHECK_THROWS(prop9_chain(-1e-9));
}

TEST_CASE("first-selection constant lower bound") {
    C3Lower c = solve_c3_lower();
    CHECK(c.eps0_star > 0.00082);
    CHECK(c.eps0_star < 0.0009);
    CHECK(c.c3_bound > 0.06332);
    CHECK(c.c3_bound < 0.0634);

    // the bisected function is strictly increasing on a sampled grid
    double prev = -1.0;
    for (int i = 0; i <= 40; ++i) {
        double e = i * (1.0 / 48.0) / 41.0;
        double v = prop9_chain(e).f_value + 2.0 * e;
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("local search never loses to its seed") {
    PagodaSearchResult r = pagoda_search(8, 40, 1);
    CHECK(r.report.pass);
    CHECK(r.report.G_norm <= Rat(16, 70));
    CHECK(r.report.G_norm > Rat(0));
    CHECK(r.budget_exhausted);
    CHECK(r.evaluated <= 40);
}

TEST_CASE("json-independent index helpers") {
    CHECK(pagoda_pair_index(0, 1) == 0);
    CHECK(pagoda_pair_index(3, 2) == 5);
    CHECK(pagoda_triple_index(0, 1, 2) == 0);
    CHECK(pagoda_triple_index(3, 2, 1) == 3);
    CHECK_THROWS(pagoda_triple_index(1, 1, 2));
}
