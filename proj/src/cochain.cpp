#include "cofill/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace cofill {

Cochain add(const Cochain& a, const Cochain& b) {
    if (a.n() != b.n() || a.arity() != b.arity())
        throw std::invalid_argument("add: ground set or arity mismatch");
    Cochain out = a;
    out.bits() ^= b.bits();
    return out;
}

Cochain coboundary(const Cochain& e) {
    const int n = e.n(), r = e.arity();
    if (r >= n) throw std::invalid_argument("coboundary: no (r+1)-subsets at arity n");
    Cochain out(n, r + 1);
    const std::int64_t m = static_cast<std::int64_t>(out.num_ranks());

#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < m; ++k) {
        std::vector<int> f = subset_unrank(static_cast<std::uint64_t>(k), r + 1, n);
        // facet rank of f \ {f[j]} = sum_{i<j} C(f[i]-1,i+1) + sum_{i>j} C(f[i]-1,i)
        bool odd = false;
        for (int j = 0; j <= r; ++j) {
            std::uint64_t fr = 0;
            for (int i = 0; i < j; ++i) fr += binom(f[i] - 1, i + 1);
            for (int i = j + 1; i <= r; ++i) fr += binom(f[i] - 1, i);
            odd ^= e.contains_rank(fr);
        }
        if (odd) out.set_rank(static_cast<std::uint64_t>(k));
    }
    return out;
}

Cochain coboundary_reference(const Cochain& e) {
    const int n = e.n(), r = e.arity();
    if (r >= n) throw std::invalid_argument("coboundary: no (r+1)-subsets at arity n");
    Cochain out(n, r + 1);
    e.bits().for_each_set([&](std::uint64_t k) {
        std::vector<int> s = subset_unrank(k, r, n);
        std::vector<int> f(r + 1);
        for (int v = 1; v <= n; ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            std::merge(s.begin(), s.end(), &v, &v + 1, f.begin());
            out.flip_rank(subset_rank(f, n));
        }
    });
    return out;
}

Rat normalized_size(const Cochain& e) {
    return Rat(static_cast<std::int64_t>(e.card()), static_cast<std::int64_t>(e.num_ranks()));
}

std::pair<Cochain, Cochain> link(int v, const Cochain& e) {
    const int n = e.n(), r = e.arity();
    if (v < 1 || v > n) throw std::invalid_argument("link: vertex outside ground set");
    if (r < 1) throw std::invalid_argument("link: arity must be >= 1");
    Cochain star(n, r);
    Cochain lk(n, r - 1);
    e.bits().for_each_set([&](std::uint64_t k) {
        std::vector<int> s = subset_unrank(k, r, n);
        auto it = std::lower_bound(s.begin(), s.end(), v);
        if (it == s.end() || *it != v) return;
        star.set_rank(k);
        s.erase(it);
        lk.set_rank(subset_rank(s, n));
    });
    return {star, lk};
}

std::uint64_t face_degree(const std::vector<int>& x, const Cochain& e) {
    if (static_cast<int>(x.size()) >= e.arity())
        throw std::invalid_argument("face_degree: face size must be below arity");
    std::uint64_t deg = 0;
    e.bits().for_each_set([&](std::uint64_t k) {
        std::vector<int> s = subset_unrank(k, e.arity(), e.n());
        if (std::includes(s.begin(), s.end(), x.begin(), x.end())) ++deg;
    });
    return deg;
}

bool is_cocycle(const Cochain& f) {
    if (f.arity() == f.n()) return true;
    return coboundary(f).empty();
}

bool is_coboundary(const Cochain& f) {
    if (f.arity() < 1) throw std::invalid_argument("is_coboundary: arity must be >= 1");
    if (f.arity() == 1) return f.empty();
    return is_cocycle(f);
}

Cochain fill_by_min_link(const Cochain& f) {
    const int n = f.n(), r = f.arity();
    if (r < 2) throw std::invalid_argument("fill_by_min_link: arity must be >= 2");
    if (!is_coboundary(f)) throw std::invalid_argument("fill_by_min_link: input is not a coboundary");

    std::vector<std::uint64_t> deg(static_cast<std::size_t>(n) + 1, 0);
    f.bits().for_each_set([&](std::uint64_t k) {
        for (int v : subset_unrank(k, r, n)) ++deg[static_cast<std::size_t>(v)];
    });
    int best = 1;
    for (int v = 2; v <= n; ++v)
        if (deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]) best = v;
    return link(best, f).second;
}

}  // namespace cofill
