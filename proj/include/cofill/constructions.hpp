#pragma once

#include <vector>

#include "cofill/cochain.hpp"

namespace cofill {

/// The complete-multipartite extremal family: parts V_1..V_{d+1} partition
/// [n], E = all d-tuples using exactly one point from each of V_1..V_d,
/// F = delta E = the complete (d+1)-partite (d+1)-tuple system.
struct PartitionedExample {
    std::vector<int> part_sizes;
    int d = 0;
    Cochain E;
    Cochain F;
    std::uint64_t predicted_E_count = 0;  // prod_{i<=d} |V_i|
    std::uint64_t predicted_F_count = 0;  // prod_{i<=d+1} |V_i|

    PartitionedExample(Cochain e, Cochain f) : E(std::move(e)), F(std::move(f)) {}
};

/// Parts are consecutive label blocks; an optional permutation of [n]
/// relabels the vertices (for symmetry tests).
PartitionedExample multipartite_example(int n, int d, const std::vector<int>& part_sizes,
                                        const std::vector<int>* perm = nullptr);

/// S = {1..s} and its edge cut delta S, the complete bipartite graph
/// between S and its complement; |delta S| = s(n-s).
std::pair<Cochain, Cochain> edge_cut_example(int n, int s);

/// Complete bipartite edges between V1 = {1..a} and V2 = {a+1..a+n/2}.
/// Satisfies the vertex-degree condition for a <= n/4 without being minimal.
Cochain nonminimal_bipartite_example(int n, int a);

}  // namespace cofill
