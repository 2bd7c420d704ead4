#include "cofill/constructions.hpp"

#include <numeric>
#include <stdexcept>

namespace cofill {

namespace {

/// part id (0-based) of each vertex under consecutive blocks.
std::vector<int> part_of(int n, const std::vector<int>& sizes) {
    std::vector<int> p(static_cast<std::size_t>(n) + 1, -1);
    int v = 1;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (int j = 0; j < sizes[i]; ++j) p[static_cast<std::size_t>(v++)] = static_cast<int>(i);
    return p;
}

/// All tuples using at most one vertex per part, restricted to parts < limit
/// when limit >= 0; "transversal" tuples of the given arity.
Cochain transversal_system(int n, int arity, const std::vector<int>& part,
                           int part_limit, const std::vector<int>* perm) {
    Cochain out(n, arity);
    const std::uint64_t m = binom(n, arity);
    std::vector<int> s;
    for (std::uint64_t k = 0; k < m; ++k) {
        s = subset_unrank(k, arity, n);
        unsigned mask = 0;
        bool ok = true;
        for (int v : s) {
            int label = perm ? (*perm)[static_cast<std::size_t>(v - 1)] : v;
            int p = part[static_cast<std::size_t>(label)];
            if (p < 0 || (part_limit >= 0 && p >= part_limit) || (mask & (1u << p))) {
                ok = false;
                break;
            }
            mask |= 1u << p;
        }
        if (ok) out.set_rank(k);
    }
    return out;
}

}  // namespace

PartitionedExample multipartite_example(int n, int d, const std::vector<int>& part_sizes,
                                        const std::vector<int>* perm) {
    if (static_cast<int>(part_sizes.size()) != d + 1)
        throw std::invalid_argument("multipartite_example: need d+1 parts");
    int sum = 0;
    for (int s : part_sizes) {
        if (s <= 0) throw std::invalid_argument("multipartite_example: part sizes must be positive");
        sum += s;
    }
    if (sum != n) throw std::invalid_argument("multipartite_example: part sizes must sum to n");
    if (perm && static_cast<int>(perm->size()) != n)
        throw std::invalid_argument("multipartite_example: bad permutation");

    std::vector<int> part = part_of(n, part_sizes);
    PartitionedExample ex(transversal_system(n, d, part, d, perm),
                          transversal_system(n, d + 1, part, -1, perm));
    ex.part_sizes = part_sizes;
    ex.d = d;
    ex.predicted_E_count = 1;
    for (int i = 0; i < d; ++i) ex.predicted_E_count *= static_cast<std::uint64_t>(part_sizes[static_cast<std::size_t>(i)]);
    ex.predicted_F_count = ex.predicted_E_count * static_cast<std::uint64_t>(part_sizes[static_cast<std::size_t>(d)]);

    if (ex.E.card() != ex.predicted_E_count || ex.F.card() != ex.predicted_F_count)
        throw std::logic_error("multipartite_example: count formula mismatch");
    if (coboundary(ex.E) != ex.F)
        throw std::logic_error("multipartite_example: delta E is not the multipartite system");
    return ex;
}

std::pair<Cochain, Cochain> edge_cut_example(int n, int s) {
    if (s < 0 || s > n) throw std::invalid_argument("edge_cut_example: s out of range");
    Cochain S(n, 1);
    for (int v = 1; v <= s; ++v) S.set_rank(subset_rank({v}, n));
    Cochain cut = n >= 2 ? coboundary(S) : Cochain(n, 2);
    if (cut.card() != static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(n - s))
        throw std::logic_error("edge_cut_example: cut size mismatch");
    return {S, cut};
}

Cochain nonminimal_bipartite_example(int n, int a) {
    const int half = n / 2;
    if (a < 0 || a + half > n) throw std::invalid_argument("nonminimal_bipartite_example: infeasible sizes");
    Cochain e(n, 2);
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + half; ++v) e.set_rank(subset_rank({u, v}, n));
    return e;
}

}  // namespace cofill
