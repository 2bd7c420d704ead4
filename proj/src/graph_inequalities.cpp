#include "cofill/graph_inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cofill {

std::int64_t PieDecomposition::identity_rhs(int n) const {
    std::int64_t s = 0;
    for (std::uint64_t d : degree_sequence)
        s += static_cast<std::int64_t>(d) * static_cast<std::int64_t>(d ? d - 1 : 0);
    return static_cast<std::int64_t>(n - 2) * static_cast<std::int64_t>(E_size) - s +
           4 * static_cast<std::int64_t>(triangles);
}

PieDecomposition pie_decompose(const Cochain& e) {
    if (e.arity() != 2) throw std::invalid_argument("pie_decompose: arity-2 cochain expected");
    const int n = e.n();
    PieDecomposition out;
    out.E_size = e.card();
    out.degree_sequence.assign(static_cast<std::size_t>(n) + 1, 0);

    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n) + 1,
                                       std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    e.bits().for_each_set([&](std::uint64_t k) {
        std::vector<int> s = subset_unrank(k, 2, n);
        adj[static_cast<std::size_t>(s[0])][static_cast<std::size_t>(s[1])] = 1;
        adj[static_cast<std::size_t>(s[1])][static_cast<std::size_t>(s[0])] = 1;
        ++out.degree_sequence[static_cast<std::size_t>(s[0])];
        ++out.degree_sequence[static_cast<std::size_t>(s[1])];
    });
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                int cnt = adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +
                          adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] +
                          adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
                if (cnt == 1) ++out.m1;
                else if (cnt == 2) ++out.m2;
                else if (cnt == 3) ++out.m3;
            }
    out.triangles = out.m3;
    out.delta_size = (n >= 3) ? coboundary(e).card() : 0;
    if (out.delta_size != out.m1 + out.m3)
        throw std::logic_error("pie_decompose: |delta E| != m1 + m3");
    if (n >= 3 && out.identity_lhs() != out.identity_rhs(n))
        throw std::logic_error("pie_decompose: inclusion-exclusion identity violated");
    return out;
}

double lobo2_bound(int n, std::uint64_t E_size) {
    double alpha = static_cast<double>(E_size) / static_cast<double>(binom(n, 2));
    if (alpha > 0.25 + 1e-12) throw std::domain_error("lobo2_bound: alpha must be <= 1/4");
    alpha = std::min(alpha, 0.25);
    double sigma = (1.0 - std::sqrt(1.0 - 4.0 * alpha)) / 2.0;
    return (sigma / 4.0) * (1.0 + 2.0 * sigma - 4.0 * sigma * sigma) *
           static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
}

Lobo2Report lobo2_check(const Cochain& e) {
    if (e.arity() != 2) throw std::invalid_argument("lobo2_check: arity-2 cochain expected");
    const int n = e.n();
    Lobo2Report rep;
    rep.alpha = static_cast<double>(e.card()) / static_cast<double>(binom(n, 2));
    std::vector<std::uint64_t> deg(static_cast<std::size_t>(n) + 1, 0);
    e.bits().for_each_set([&](std::uint64_t k) {
        for (int v : subset_unrank(k, 2, n)) ++deg[static_cast<std::size_t>(v)];
    });
    for (int v = 1; v <= n; ++v) {
        rep.sum_deg_sq += deg[static_cast<std::size_t>(v)] * deg[static_cast<std::size_t>(v)];
        if (2 * deg[static_cast<std::size_t>(v)] > static_cast<std::uint64_t>(n)) rep.degree_cap_ok = false;
    }
    rep.bound = lobo2_bound(n, e.card());
    rep.slack = rep.bound - static_cast<double>(rep.sum_deg_sq);
    return rep;
}

Cochain extremal_degree_squared_graph(int n, std::uint64_t E_size) {
    const int top = n / 2 + 1;
    if (E_size > binom(top, 2))
        throw std::invalid_argument("extremal_degree_squared_graph: too many edges for the normal form");
    Cochain e(n, 2);
    std::uint64_t placed = 0;
    for (int i = 1; i <= n && placed < E_size; ++i)
        for (int j = i + 1; j <= top && placed < E_size; ++j) {
            e.set_rank(subset_rank({i, j}, n));
            ++placed;
        }
    return e;
}

HighDegCertificate highdeg_certificate(const Cochain& e, const Rat& beta) {
    const int n = e.n(), d = e.arity();
    if (d < 2) throw std::invalid_argument("highdeg_certificate: arity >= 2 expected");
    HighDegCertificate cert;
    cert.n = n;
    cert.d = d;
    cert.beta = beta;
    cert.E_size = e.card();
    cert.r = static_cast<int>((beta.num * static_cast<std::int64_t>(n)) / beta.den);

    // hypothesis: E minimal (exact when the coset guard allows)
    try {
        MinimalityVerdict v = is_minimal_exact(e);
        cert.minimality_exact = true;
        cert.hypotheses_ok = v.minimal;
    } catch (const CosetTooLarge&) {
        cert.minimality_exact = false;
        cert.hypotheses_ok = cert.E_size == 0 || necessary_conditions(e).pass;
    }

    std::vector<std::uint64_t> deg(static_cast<std::size_t>(n) + 1, 0);
    e.bits().for_each_set([&](std::uint64_t k) {
        for (int v : subset_unrank(k, d, n)) ++deg[static_cast<std::size_t>(v)];
    });
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    });

    std::vector<char> is_top(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < cert.r; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        is_top[static_cast<std::size_t>(v)] = 1;
        cert.link_sizes.push_back(deg[static_cast<std::size_t>(v)]);
    }

    e.bits().for_each_set([&](std::uint64_t k) {
        for (int v : subset_unrank(k, d, n))
            if (is_top[static_cast<std::size_t>(v)]) { ++cert.E_hi_size; break; }
    });
    Cochain f = coboundary(e);
    f.bits().for_each_set([&](std::uint64_t k) {
        for (int v : subset_unrank(k, d + 1, n))
            if (is_top[static_cast<std::size_t>(v)]) { ++cert.F_hi_size; break; }
    });

    // exact chain: d|F_hi| >= sum_i [ (n-2d+1) L_i - d|E| - d(i-1) C(n-2,d-1) ]
    std::int64_t rhs = 0;
    for (int i = 1; i <= cert.r; ++i) {
        std::int64_t L = static_cast<std::int64_t>(cert.link_sizes[static_cast<std::size_t>(i - 1)]);
        rhs += static_cast<std::int64_t>(n - 2 * d + 1) * L -
               static_cast<std::int64_t>(d) * static_cast<std::int64_t>(cert.E_size) -
               static_cast<std::int64_t>(d) * (i - 1) * static_cast<std::int64_t>(binom(n - 2, d - 1));
    }
    cert.exact_rhs = rhs;
    cert.exact_holds =
        static_cast<std::int64_t>(d) * static_cast<std::int64_t>(cert.F_hi_size) >= rhs;

    double alpha = static_cast<double>(cert.E_size) / static_cast<double>(binom(n, d));
    double alpha_hi = static_cast<double>(cert.E_hi_size) / static_cast<double>(binom(n, d));
    double f_hi = static_cast<double>(cert.F_hi_size) / static_cast<double>(binom(n, d + 1));
    double bd = beta.to_double();
    double rhs_asym = (d + 1.0) / d * alpha_hi - (d + 1.0) * d / 2.0 * bd * bd -
                      (d + 1.0) * alpha * bd;
    cert.asymptotic_slack = std::max(0.0, rhs_asym - f_hi);
    return cert;
}

Low3Certificate low3_certificate(const Cochain& e, const Rat* tau_in) {
    if (e.arity() != 3) throw std::invalid_argument("low3_certificate: arity-3 cochain expected");
    const int n = e.n();
    Low3Certificate cert;
    cert.n = n;
    cert.E_size = e.card();

    std::vector<std::uint64_t> vdeg(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint64_t> pdeg(binom(n, 2), 0);
    e.bits().for_each_set([&](std::uint64_t k) {
        std::vector<int> s = subset_unrank(k, 3, n);
        for (int v : s) ++vdeg[static_cast<std::size_t>(v)];
        ++pdeg[subset_rank({s[0], s[1]}, n)];
        ++pdeg[subset_rank({s[0], s[2]}, n)];
        ++pdeg[subset_rank({s[1], s[2]}, n)];
    });
    std::uint64_t max_vdeg = *std::max_element(vdeg.begin(), vdeg.end());
    cert.sigma = Rat(static_cast<std::int64_t>(max_vdeg), static_cast<std::int64_t>(binom(n, 2)));

    if (tau_in) {
        cert.tau = *tau_in;
    } else if (cert.sigma == Rat(0)) {
        cert.tau = Rat(1);
    } else {
        // tau = sigma^(1/3); small-denominator rational approximation so the
        // exact downstream arithmetic stays inside 64 bits
        double t = std::cbrt(cert.sigma.to_double());
        cert.tau = Rat(static_cast<std::int64_t>(std::llround(t * 1000)), 1000);
        if (cert.tau <= Rat(0)) cert.tau = Rat(1, 1000);
    }
    const Rat tau = cert.tau;

    cert.pair_cap_ok = true;
    for (std::uint64_t dp : pdeg)
        if (2 * dp > static_cast<std::uint64_t>(n)) cert.pair_cap_ok = false;

    auto heavy = [&](std::uint64_t dp) {
        // deg(p) >= tau * n
        return Rat(static_cast<std::int64_t>(dp)) >= tau * Rat(n);
    };
    for (std::uint64_t k = 0; k < pdeg.size(); ++k) {
        std::uint64_t sq = pdeg[k] * pdeg[k];
        if (heavy(pdeg[k])) cert.sum_heavy_sq += sq;
        else cert.sum_light_sq += sq;
    }
    e.bits().for_each_set([&](std::uint64_t k) {
        std::vector<int> s = subset_unrank(k, 3, n);
        int h = 0;
        if (heavy(pdeg[subset_rank({s[0], s[1]}, n)])) ++h;
        if (heavy(pdeg[subset_rank({s[0], s[2]}, n)])) ++h;
        if (heavy(pdeg[subset_rank({s[1], s[2]}, n)])) ++h;
        ++cert.E_counts[h];
    });

    const Rat E(static_cast<std::int64_t>(cert.E_size));
    cert.light_ok = Rat(static_cast<std::int64_t>(cert.sum_light_sq)) <= Rat(3) * tau * Rat(n) * E;
    cert.heavy_ok =
        Rat(2) * Rat(static_cast<std::int64_t>(cert.sum_heavy_sq)) <=
        Rat(n) * Rat(static_cast<std::int64_t>(cert.E_counts[1] + 2 * cert.E_counts[2] +
                                                3 * cert.E_counts[3]));
    // finite-n exact form of the double count: |E2|+|E3| <= (3 sigma/tau^2)|E| * n/(n-1)
    cert.e23_ok = Rat(static_cast<std::int64_t>(cert.E_counts[2] + cert.E_counts[3])) <=
                  Rat(3) * cert.sigma / (tau * tau) * E * Rat(n, n - 1);

    cert.delta_size = (n >= 4) ? coboundary(e).card() : 0;
    std::int64_t sum_all_sq =
        static_cast<std::int64_t>(cert.sum_light_sq + cert.sum_heavy_sq);
    cert.truncated_pie_ok =
        static_cast<std::int64_t>(cert.delta_size) >=
        static_cast<std::int64_t>(n - 3) * static_cast<std::int64_t>(cert.E_size) - sum_all_sq;

    // conclusion with every finite-n term explicit:
    // ||delta E|| >= ||E|| * (4/(n-3)) * (n/2 - 3 - 3 tau n - 3 sigma n^2 / (tau^2 (n-1)))
    if (n >= 4) {
        Rat lhs(static_cast<std::int64_t>(cert.delta_size), static_cast<std::int64_t>(binom(n, 4)));
        Rat norm_e(static_cast<std::int64_t>(cert.E_size), static_cast<std::int64_t>(binom(n, 3)));
        Rat factor = Rat(n, 2) - Rat(3) - Rat(3) * tau * Rat(n) -
                     Rat(3) * cert.sigma * Rat(n) * Rat(n, n - 1) / (tau * tau);
        cert.conclusion_ok = lhs >= norm_e * Rat(4, n - 3) * factor;
    } else {
        cert.conclusion_ok = true;
    }
    cert.all_ok = cert.pair_cap_ok && cert.light_ok && cert.heavy_ok && cert.e23_ok &&
                  cert.truncated_pie_ok && cert.conclusion_ok;
    return cert;
}

}  // namespace cofill
