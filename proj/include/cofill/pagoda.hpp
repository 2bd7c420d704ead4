#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cofill/cochain.hpp"
#include "cofill/minimality.hpp"
#include "cofill/rational.hpp"

namespace cofill {

/// Index conventions: pairs in lexicographic order 12,13,14,23,24,34;
/// triples by their missing index, 123,124,134,234.
inline constexpr int kPagodaPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
inline constexpr int kPagodaTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

int pagoda_pair_index(int i, int j);    // 0-based part ids
int pagoda_triple_index(int i, int j, int k);

/// A tower of cochains whose coboundary relations telescope (up to a slack)
/// into a single arity-4 top G.
struct Pagoda {
    int n = 0;
    std::array<Cochain, 4> V;   // arity 1
    std::array<Cochain, 6> E;   // arity 2, indexed by kPagodaPairs
    std::array<Cochain, 4> F;   // arity 3, indexed by kPagodaTriples
    Cochain G;                  // arity 4

    explicit Pagoda(int n_);
};

struct PagodaMinVerdict {
    bool minimal = false;
    bool exact = false;  // exact coset search vs necessary conditions only
};

struct PagodaReport {
    Rat residual_partition;             // ||V1+V2+V3+V4 + V||
    std::array<Rat, 4> residual_dV;     // ||delta V_i + sum_j E_ij||
    std::array<Rat, 6> residual_dE;     // ||delta E_ij + sum_k F_ijk||
    std::array<Rat, 4> residual_dF;     // ||delta F_ijk + G||
    std::array<PagodaMinVerdict, 4> min_V;
    std::array<PagodaMinVerdict, 6> min_E;
    std::array<PagodaMinVerdict, 4> min_F;
    Rat G_norm;
    Rat max_residual;
    bool relations_ok = false;
    bool minimality_ok = false;
    bool minimality_all_exact = false;
    bool pass = false;
};

/// Checks every defining relation with normalized symmetric-difference
/// residual at most eps, plus minimality of all V_i, E_ij, F_ijk
/// (arity 1: |V_i| <= n/2; otherwise exact when the coset fits the guard,
/// necessary conditions only when it does not).
PagodaReport verify_pagoda(const Pagoda& p, const Rat& eps);

/// The canonical example: four consecutive quarters, complete multipartite
/// systems at every level. All relations hold exactly; |G| = (n/4)^4.
Pagoda quadripartite_pagoda(int n);

/// Builds the complete-multipartite pagoda over an arbitrary assignment of
/// vertices to the four parts (part[v] in 0..3 for v = 1..n). Relations are
/// exact identities for any such assignment; minimality is what can fail.
Pagoda pagoda_from_partition(int n, const std::vector<int>& part);

struct Prop9Chain {
    double eps0 = 0.0;
    double eps1 = 0.0;
    double eps2 = 0.0;
    double f_value = 0.0;
};

/// The closed forms of the Proposition 9 chain (no truncated series):
///   eps1 = (1 - sqrt(1 - 48 eps0)) / 4
///   eps2 = 3/8 - 2 (1/4 - 3 eps1)(3/4 + 3 eps1)
///   f    = 6 eps0 + (27/4) eps1 - 24 eps1^2 + (3/2) eps2 - 2 eps1 eps2
Prop9Chain prop9_chain(double eps0);

/// Bisection root of f(eps) + 2 eps = 1/16 on (0, 1/48); the returned
/// bound is 1/16 + eps0_star.
struct C3Lower {
    double eps0_star = 0.0;
    double c3_bound = 0.0;
};
C3Lower solve_c3_lower(double tol = 1e-12);

struct PagodaSearchResult {
    Pagoda best;
    PagodaReport report;
    std::uint64_t evaluated = 0;
    bool budget_exhausted = false;
};

/// Exploratory local search over 4-part partitions (single-vertex moves),
/// minimizing ||G|| among pagodas that verify at slack 0. Heuristic: the
/// result is a best-found, never claimed optimal.
PagodaSearchResult pagoda_search(int n, std::uint64_t budget, std::uint64_t seed);

}  // namespace cofill
