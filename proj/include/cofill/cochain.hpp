#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cofill/binom.hpp"
#include "cofill/bitvec.hpp"
#include "cofill/rational.hpp"

namespace cofill {

struct GroundSet {
    int n;
    explicit GroundSet(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("GroundSet: n must be >= 1");
    }
};

/// A set of r-subsets of [n] ("arity r" cochain; topological dimension r-1),
/// stored as a bit-vector over colex ranks.
class Cochain {
public:
    Cochain(int n, int arity)
        : n_(n), arity_(arity), bits_(checked_len(n, arity)) {}

    static Cochain from_sets(int n, int arity, const std::vector<std::vector<int>>& sets) {
        Cochain c(n, arity);
        for (const auto& s : sets) {
            if (static_cast<int>(s.size()) != arity)
                throw std::invalid_argument("Cochain: member has wrong arity");
            c.bits_.set(subset_rank(s, n));
        }
        return c;
    }

    int n() const { return n_; }
    int arity() const { return arity_; }
    std::uint64_t num_ranks() const { return bits_.size(); }
    std::uint64_t card() const { return bits_.count(); }
    bool empty() const { return !bits_.any(); }

    bool contains_rank(std::uint64_t k) const { return bits_.test(k); }
    void set_rank(std::uint64_t k, bool v = true) { bits_.set(k, v); }
    void flip_rank(std::uint64_t k) { bits_.flip(k); }

    const BitVec& bits() const { return bits_; }
    BitVec& bits() { return bits_; }

    std::vector<std::vector<int>> members() const {
        std::vector<std::vector<int>> out;
        out.reserve(card());
        bits_.for_each_set([&](std::uint64_t k) { out.push_back(subset_unrank(k, arity_, n_)); });
        return out;
    }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.n_ == b.n_ && a.arity_ == b.arity_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

private:
    static std::uint64_t checked_len(int n, int arity) {
        if (n < 1) throw std::invalid_argument("Cochain: n must be >= 1");
        if (arity < 0 || arity > n) throw std::invalid_argument("Cochain: arity out of range");
        std::uint64_t len = binom(n, arity);
        if (len > kMaxRanks) throw std::overflow_error("Cochain: C(n,r) exceeds 2^33 guard");
        return len;
    }

    int n_;
    int arity_;
    BitVec bits_;
};

/// Symmetric difference (Z2 addition).
Cochain add(const Cochain& a, const Cochain& b);

/// delta E: the (r+1)-subsets containing an odd number of members of E.
/// Data-parallel over output ranks (OpenMP when enabled); bit-exact
/// deterministic regardless of thread count.
Cochain coboundary(const Cochain& e);

/// Serial reference for coboundary: per member, flip every superset.
/// Kept as the independent oracle for the parallel kernel.
Cochain coboundary_reference(const Cochain& e);

/// |E| / C(n,r), exact.
Rat normalized_size(const Cochain& e);

/// (star E_v, link lk(v,E)).
std::pair<Cochain, Cochain> link(int v, const Cochain& e);

/// Number of members of E containing the s-subset x (s < r).
std::uint64_t face_degree(const std::vector<int>& x, const Cochain& e);

bool is_cocycle(const Cochain& f);

/// For arity >= 2 equals is_cocycle; at arity 1 only the empty cochain
/// is a coboundary (non-reduced convention: V is a cocycle but not a
/// coboundary).
bool is_coboundary(const Cochain& f);

/// Constructive filling (the basic cofilling bound): picks the vertex of
/// minimum degree in F (ties: smallest label) and returns its link E,
/// which satisfies delta E = F and |E| <= |F| * C(n,r-1)/C(n,r) norm-wise.
Cochain fill_by_min_link(const Cochain& f);

}  // namespace cofill
