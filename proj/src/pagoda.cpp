#include "cofill/pagoda.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cofill {

int pagoda_pair_index(int i, int j) {
    for (int t = 0; t < 6; ++t)
        if ((kPagodaPairs[t][0] == i && kPagodaPairs[t][1] == j) ||
            (kPagodaPairs[t][0] == j && kPagodaPairs[t][1] == i))
            return t;
    throw std::invalid_argument("pagoda_pair_index: bad part ids");
}

int pagoda_triple_index(int i, int j, int k) {
    int missing = 0 + 1 + 2 + 3 - i - j - k;
    if (missing < 0 || missing > 3 || i == j || i == k || j == k)
        throw std::invalid_argument("pagoda_triple_index: bad part ids");
    return 3 - missing;  // triples listed by increasing missing index 3,2,1,0 reversed
}

Pagoda::Pagoda(int n_)
    : n(n_),
      V{Cochain(n_, 1), Cochain(n_, 1), Cochain(n_, 1), Cochain(n_, 1)},
      E{Cochain(n_, 2), Cochain(n_, 2), Cochain(n_, 2),
        Cochain(n_, 2), Cochain(n_, 2), Cochain(n_, 2)},
      F{Cochain(n_, 3), Cochain(n_, 3), Cochain(n_, 3), Cochain(n_, 3)},
      G(n_, 4) {}

namespace {

Rat norm_of(const Cochain& c) {
    return Rat(static_cast<std::int64_t>(c.card()), static_cast<std::int64_t>(binom(c.n(), c.arity())));
}

PagodaMinVerdict check_min(const Cochain& c) {
    PagodaMinVerdict v;
    if (c.arity() == 1) {
        v.exact = true;
        v.minimal = 2 * c.card() <= static_cast<std::uint64_t>(c.n());
        return v;
    }
    try {
        v.minimal = is_minimal_exact(c).minimal;
        v.exact = true;
    } catch (const CosetTooLarge&) {
        v.minimal = c.card() == 0 || necessary_conditions(c).pass;
        v.exact = false;
    }
    return v;
}

}  // namespace

PagodaReport verify_pagoda(const Pagoda& p, const Rat& eps) {
    const int n = p.n;
    for (const auto& c : p.V)
        if (c.n() != n || c.arity() != 1) throw std::invalid_argument("verify_pagoda: bad V");
    for (const auto& c : p.E)
        if (c.n() != n || c.arity() != 2) throw std::invalid_argument("verify_pagoda: bad E");
    for (const auto& c : p.F)
        if (c.n() != n || c.arity() != 3) throw std::invalid_argument("verify_pagoda: bad F");
    if (p.G.n() != n || p.G.arity() != 4) throw std::invalid_argument("verify_pagoda: bad G");

    PagodaReport rep;

    Cochain all(n, 1);
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(n); ++k) all.set_rank(k);
    Cochain vsum = add(add(p.V[0], p.V[1]), add(p.V[2], p.V[3]));
    rep.residual_partition = norm_of(add(vsum, all));

    for (int i = 0; i < 4; ++i) {
        Cochain r = coboundary(p.V[static_cast<std::size_t>(i)]);
        for (int t = 0; t < 6; ++t)
            if (kPagodaPairs[t][0] == i || kPagodaPairs[t][1] == i)
                r = add(r, p.E[static_cast<std::size_t>(t)]);
        rep.residual_dV[static_cast<std::size_t>(i)] = norm_of(r);
    }
    for (int t = 0; t < 6; ++t) {
        Cochain r = coboundary(p.E[static_cast<std::size_t>(t)]);
        int i = kPagodaPairs[t][0], j = kPagodaPairs[t][1];
        for (int u = 0; u < 4; ++u) {
            const int* tr = kPagodaTriples[u];
            bool has_i = tr[0] == i || tr[1] == i || tr[2] == i;
            bool has_j = tr[0] == j || tr[1] == j || tr[2] == j;
            if (has_i && has_j) r = add(r, p.F[static_cast<std::size_t>(u)]);
        }
        rep.residual_dE[static_cast<std::size_t>(t)] = norm_of(r);
    }
    for (int u = 0; u < 4; ++u)
        rep.residual_dF[static_cast<std::size_t>(u)] =
            norm_of(add(coboundary(p.F[static_cast<std::size_t>(u)]), p.G));

    rep.max_residual = rep.residual_partition;
    for (const Rat& r : rep.residual_dV) rep.max_residual = std::max(rep.max_residual, r);
    for (const Rat& r : rep.residual_dE) rep.max_residual = std::max(rep.max_residual, r);
    for (const Rat& r : rep.residual_dF) rep.max_residual = std::max(rep.max_residual, r);
    rep.relations_ok = rep.max_residual <= eps;

    rep.minimality_ok = true;
    rep.minimality_all_exact = true;
    for (int i = 0; i < 4; ++i) rep.min_V[static_cast<std::size_t>(i)] = check_min(p.V[static_cast<std::size_t>(i)]);
    for (int t = 0; t < 6; ++t) rep.min_E[static_cast<std::size_t>(t)] = check_min(p.E[static_cast<std::size_t>(t)]);
    for (int u = 0; u < 4; ++u) rep.min_F[static_cast<std::size_t>(u)] = check_min(p.F[static_cast<std::size_t>(u)]);
    for (const auto& v : rep.min_V) { rep.minimality_ok &= v.minimal; rep.minimality_all_exact &= v.exact; }
    for (const auto& v : rep.min_E) { rep.minimality_ok &= v.minimal; rep.minimality_all_exact &= v.exact; }
    for (const auto& v : rep.min_F) { rep.minimality_ok &= v.minimal; rep.minimality_all_exact &= v.exact; }

    rep.G_norm = norm_of(p.G);
    rep.pass = rep.relations_ok && rep.minimality_ok;
    return rep;
}

Pagoda pagoda_from_partition(int n, const std::vector<int>& part) {
    if (static_cast<int>(part.size()) != n)
        throw std::invalid_argument("pagoda_from_partition: need one part id per vertex");
    for (int p : part)
        if (p < 0 || p > 3) throw std::invalid_argument("pagoda_from_partition: part ids in 0..3");

    Pagoda pg(n);
    for (int v = 1; v <= n; ++v)
        pg.V[static_cast<std::size_t>(part[static_cast<std::size_t>(v - 1)])].set_rank(
            subset_rank({v}, n));

    auto fill_level = [&](int arity, auto assign) {
        const std::uint64_t m = binom(n, arity);
        for (std::uint64_t k = 0; k < m; ++k) {
            std::vector<int> s = subset_unrank(k, arity, n);
            unsigned mask = 0;
            bool transversal = true;
            for (int v : s) {
                unsigned bit = 1u << part[static_cast<std::size_t>(v - 1)];
                if (mask & bit) { transversal = false; break; }
                mask |= bit;
            }
            if (transversal) assign(mask, k);
        }
    };
    fill_level(2, [&](unsigned mask, std::uint64_t k) {
        int ids[2], w = 0;
        for (int p = 0; p < 4; ++p)
            if (mask & (1u << p)) ids[w++] = p;
        pg.E[static_cast<std::size_t>(pagoda_pair_index(ids[0], ids[1]))].set_rank(k);
    });
    fill_level(3, [&](unsigned mask, std::uint64_t k) {
        int missing = std::countr_zero(~mask & 0xFu);
        pg.F[static_cast<std::size_t>(3 - missing)].set_rank(k);
    });
    fill_level(4, [&](unsigned, std::uint64_t k) { pg.G.set_rank(k); });
    return pg;
}

Pagoda quadripartite_pagoda(int n) {
    if (n <= 0 || n % 4 != 0) throw std::invalid_argument("quadripartite_pagoda: n must be a positive multiple of 4");
    std::vector<int> part(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) part[static_cast<std::size_t>(v)] = v / (n / 4);
    return pagoda_from_partition(n, part);
}

Prop9Chain prop9_chain(double eps0) {
    if (eps0 < 0.0 || eps0 >= 1.0 / 48.0)
        throw std::domain_error("prop9_chain: need 0 <= eps0 < 1/48");
    Prop9Chain c;
    c.eps0 = eps0;
    c.eps1 = (1.0 - std::sqrt(1.0 - 48.0 * eps0)) / 4.0;
    c.eps2 = 3.0 / 8.0 - 2.0 * (0.25 - 3.0 * c.eps1) * (0.75 + 3.0 * c.eps1);
    c.f_value = 6.0 * eps0 + (27.0 / 4.0) * c.eps1 - 24.0 * c.eps1 * c.eps1 +
                1.5 * c.eps2 - 2.0 * c.eps1 * c.eps2;
    return c;
}

C3Lower solve_c3_lower(double tol) {
    auto g = [](double e) { return prop9_chain(e).f_value + 2.0 * e - 1.0 / 16.0; };
    double lo = 0.0, hi = 1.0 / 48.0 - 1e-15;
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    C3Lower out;
    out.eps0_star = 0.5 * (lo + hi);
    out.c3_bound = 1.0 / 16.0 + out.eps0_star;
    return out;
}

PagodaSearchResult pagoda_search(int n, std::uint64_t budget, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("pagoda_search: need n >= 4");
    std::vector<int> part(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) part[static_cast<std::size_t>(v)] = v % 4;

    std::mt19937_64 rng(seed);
    auto evaluate = [&](const std::vector<int>& p) {
        Pagoda pg = pagoda_from_partition(n, p);
        PagodaReport rep = verify_pagoda(pg, Rat(0));
        return std::make_pair(std::move(pg), std::move(rep));
    };

    PagodaSearchResult res{pagoda_from_partition(n, part), PagodaReport{}, 0, false};
    res.report = verify_pagoda(res.best, Rat(0));
    ++res.evaluated;

    std::vector<int> cur = part;
    Rat cur_norm = res.report.G_norm;
    std::uniform_int_distribution<int> pick_v(0, n - 1), pick_p(0, 3);
    while (res.evaluated < budget) {
        std::vector<int> cand = cur;
        int v = pick_v(rng);
        int np = pick_p(rng);
        if (cand[static_cast<std::size_t>(v)] == np) continue;
        cand[static_cast<std::size_t>(v)] = np;
        auto [pg, rep] = evaluate(cand);
        ++res.evaluated;
        if (rep.pass && rep.G_norm < cur_norm && rep.G_norm > Rat(0)) {
            cur = cand;
            cur_norm = rep.G_norm;
            res.best = std::move(pg);
            res.report = rep;
        }
    }
    res.budget_exhausted = true;
    // post-condition self-check: the reported pagoda re-verifies
    PagodaReport recheck = verify_pagoda(res.best, res.report.max_residual);
    if (!recheck.relations_ok) throw std::logic_error("pagoda_search: result failed re-verification");
    return res;
}

}  // namespace cofill
