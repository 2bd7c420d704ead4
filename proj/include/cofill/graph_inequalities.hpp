#pragma once

#include <cstdint>
#include <vector>

#include "cofill/cochain.hpp"
#include "cofill/minimality.hpp"
#include "cofill/rational.hpp"

namespace cofill {

/// Inclusion-exclusion bookkeeping for an arity-2 cochain (a graph):
/// |delta E| = (n-2)|E| - sum_v deg(v)(deg(v)-1) + 4t, where m_i counts
/// the triples containing exactly i edges and t = m3 is the triangle count.
struct PieDecomposition {
    std::uint64_t E_size = 0;
    std::uint64_t m1 = 0, m2 = 0, m3 = 0;
    std::uint64_t triangles = 0;
    std::uint64_t delta_size = 0;
    std::vector<std::uint64_t> degree_sequence;  // indexed by vertex 1..n (slot 0 unused)

    std::int64_t identity_lhs() const { return static_cast<std::int64_t>(delta_size); }
    std::int64_t identity_rhs(int n) const;
};

PieDecomposition pie_decompose(const Cochain& e);

/// Closed-form cap on sum of squared degrees for a graph with
/// |E| = alpha*C(n,2) <= C(n,2)/4 and max degree <= n/2:
/// (sigma/4)(1+2sigma-4sigma^2) n^3 with sigma = (1-sqrt(1-4alpha))/2.
double lobo2_bound(int n, std::uint64_t E_size);

struct Lobo2Report {
    double alpha = 0.0;
    std::uint64_t sum_deg_sq = 0;
    double bound = 0.0;       // the closed form, in absolute units (times n^3)
    double slack = 0.0;       // bound - sum_deg_sq (may be slightly negative: o(1) term)
    bool degree_cap_ok = true;
};
Lobo2Report lobo2_check(const Cochain& e);

/// The (i)-(iii) normal form: left ends packed onto the lowest-index
/// vertices, right neighborhoods contiguous. Extremal witness for the
/// degree-squared maximization.
Cochain extremal_degree_squared_graph(int n, std::uint64_t E_size);

/// Instance certificate for the high-degree counting lemma (arity-3 and up):
/// the exact finite-n inequality chain behind
///   ||F_hi|| >= ((d+1)/d) alpha_hi - ((d+1)d/2) beta^2 - (d+1) alpha beta - O(1/n).
struct HighDegCertificate {
    int n = 0, d = 0, r = 0;            // r = floor(beta*n) top vertices
    Rat beta;
    std::uint64_t E_size = 0, E_hi_size = 0, F_hi_size = 0;
    std::vector<std::uint64_t> link_sizes;   // |lk(v_i, E)| for the top r vertices
    // exact integer inequality: d*|F_hi| >= exact_rhs (can be negative)
    std::int64_t exact_rhs = 0;
    bool exact_holds = false;
    // normalized asymptotic form: slack needed to make it hold, reported never hidden
    double asymptotic_slack = 0.0;
    bool minimality_exact = false;       // how the hypothesis was verified
    bool hypotheses_ok = false;
};

HighDegCertificate highdeg_certificate(const Cochain& e, const Rat& beta);

/// Instance certificate for the low-degree pair-counting lemma (arity 3):
/// every displayed inequality of the proof, checked separately.
struct Low3Certificate {
    int n = 0;
    Rat tau;                  // heavy threshold: deg(p) >= tau*n
    Rat sigma;                // max vertex degree / C(n,2)
    std::uint64_t E_size = 0, delta_size = 0;
    std::uint64_t sum_light_sq = 0, sum_heavy_sq = 0;
    std::uint64_t E_counts[4] = {0, 0, 0, 0};  // E_k: members with exactly k heavy pairs
    bool pair_cap_ok = false;     // deg(p) <= n/2 for every pair
    bool light_ok = false;        // sum_light deg^2 <= 3 tau n |E|
    bool heavy_ok = false;        // sum_heavy deg^2 <= (n/2)(|E1|+2|E2|+3|E3|)
    bool e23_ok = false;          // |E2|+|E3| <= (3 sigma / tau^2)|E|
    bool truncated_pie_ok = false;  // |delta E| >= (n-3)|E| - sum_p deg(p)^2
    bool conclusion_ok = false;   // ||delta E|| >= ||E|| (4/(n-3))(n/2 - 3 tau n - 3 sigma n/tau^2 - 3)
    bool all_ok = false;
};

/// tau defaults to sigma^(1/3) (as a rational approximation) when omitted.
Low3Certificate low3_certificate(const Cochain& e, const Rat* tau = nullptr);

}  // namespace cofill
