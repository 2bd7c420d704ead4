#include "cofill/minimality.hpp"

#include <algorithm>
#include <bit>

namespace cofill {

namespace {

/// Lowest set bit index, or SIZE_MAX when empty.
std::uint64_t pivot_of(const BitVec& v) {
    const auto& w = v.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return i * 64 + static_cast<std::uint64_t>(std::countr_zero(w[i]));
    return UINT64_MAX;
}

}  // namespace

CoboundaryBasis coboundary_basis(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("coboundary_basis: arity out of range");
    CoboundaryBasis out;
    out.n = n;
    out.arity = r;
    if (r == 1) return out;  // non-reduced convention: only the empty arity-1 coboundary

    // pivot rank -> reduced row
    std::vector<std::pair<std::uint64_t, Cochain>> rows;
    const std::uint64_t gens = binom(n, r - 1);
    for (std::uint64_t k = 0; k < gens; ++k) {
        Cochain d(n, r - 1);
        d.set_rank(k);
        Cochain row = coboundary(d);
        for (const auto& [p, rrow] : rows)
            if (row.contains_rank(p)) row.bits() ^= rrow.bits();
        std::uint64_t p = pivot_of(row.bits());
        if (p == UINT64_MAX) continue;
        for (auto& [q, rrow] : rows)
            if (rrow.contains_rank(p)) rrow.bits() ^= row.bits();
        rows.emplace_back(p, std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [p, row] : rows) out.basis.push_back(std::move(row));
    return out;
}

namespace {

struct WalkResult {
    Cochain best;                       // min size, colex-least
    std::optional<Cochain> smaller;     // colex-least strictly smaller than start
    explicit WalkResult(const Cochain& start) : best(start) {}
};

WalkResult gray_walk(const Cochain& e, const CoboundaryBasis& b) {
    if (b.n != e.n() || b.arity != e.arity())
        throw std::invalid_argument("gray_walk: basis/cochain mismatch");
    const int rank = b.rank();
    if (rank > kExactCosetRankGuard) throw CosetTooLarge(rank);

    WalkResult res(e);
    const std::uint64_t start_size = e.card();
    std::uint64_t best_size = start_size;
    Cochain cur = e;
    const std::uint64_t total = 1ull << rank;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur.bits() ^= b.basis[static_cast<std::size_t>(std::countr_zero(i))].bits();
        std::uint64_t sz = cur.card();
        if (sz < best_size || (sz == best_size && less_as_integer(cur.bits(), res.best.bits())))
            res.best = cur;
        if (sz < best_size) best_size = sz;
        if (sz < start_size &&
            (!res.smaller || less_as_integer(cur.bits(), res.smaller->bits())))
            res.smaller = cur;
    }
    return res;
}

}  // namespace

MinimalityVerdict is_minimal_exact(const Cochain& e, const CoboundaryBasis& b) {
    WalkResult w = gray_walk(e, b);
    MinimalityVerdict v;
    v.coset_rank = b.rank();
    v.method = MinimalityVerdict::Method::exact;
    v.minimal = !w.smaller.has_value();
    v.witness = std::move(w.smaller);
    return v;
}

MinimalityVerdict is_minimal_exact(const Cochain& e) {
    return is_minimal_exact(e, coboundary_basis(e.n(), e.arity()));
}

NecessaryReport necessary_conditions(const Cochain& e) {
    const int n = e.n(), r = e.arity();
    if (r < 2) throw std::invalid_argument("necessary_conditions: arity must be >= 2");
    NecessaryReport rep;
    rep.half_size_ok = 2 * e.card() <= e.num_ranks();

    std::vector<std::uint32_t> deg(binom(n, r - 1), 0);
    e.bits().for_each_set([&](std::uint64_t k) {
        std::vector<int> s = subset_unrank(k, r, n);
        std::vector<int> face(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            face.clear();
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            ++deg[subset_rank(face, n)];
        }
    });
    for (std::uint64_t k = 0; k < deg.size(); ++k)
        if (2ull * deg[k] > static_cast<std::uint64_t>(n - r + 1))
            rep.degree_violations.push_back(subset_unrank(k, r - 1, n));
    rep.pass = rep.half_size_ok && rep.degree_violations.empty();
    return rep;
}

Cochain seidel_switch(const Cochain& e, const Cochain& s) {
    if (e.arity() != 2) throw std::invalid_argument("seidel_switch: arity-2 cochain expected");
    if (s.arity() != 1 || s.n() != e.n())
        throw std::invalid_argument("seidel_switch: S must be an arity-1 cochain on the same ground set");
    return add(e, coboundary(s));
}

Cochain minimize_in_class(const Cochain& e, const CoboundaryBasis& b) {
    return gray_walk(e, b).best;
}

Cochain minimize_in_class(const Cochain& e) {
    return minimize_in_class(e, coboundary_basis(e.n(), e.arity()));
}

}  // namespace cofill
