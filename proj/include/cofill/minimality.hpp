#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cofill/cochain.hpp"

namespace cofill {

/// Thrown when an exact verdict would require enumerating a coset larger
/// than the feasibility guard allows. Deliberately not a verdict.
struct CosetTooLarge : std::runtime_error {
    explicit CosetTooLarge(int rank)
        : std::runtime_error("coset rank " + std::to_string(rank) + " exceeds exact-enumeration guard"),
          rank(rank) {}
    int rank;
};

/// GF(2) row-reduced spanning set of the arity-r coboundary space
/// {delta D : D subset of (V choose r-1)}.
struct CoboundaryBasis {
    int n = 0;
    int arity = 0;
    std::vector<Cochain> basis;  // row-reduced, ordered by pivot rank
    int rank() const { return static_cast<int>(basis.size()); }
};

CoboundaryBasis coboundary_basis(int n, int r);

struct MinimalityVerdict {
    bool minimal = true;
    /// A strictly smaller member of the switching class (colex-least such),
    /// present iff minimal == false.
    std::optional<Cochain> witness;
    enum class Method { exact, necessary_only } method = Method::exact;
    int coset_rank = 0;
};

inline constexpr int kExactCosetRankGuard = 28;

/// Exact minimality by Gray-code walk over E + span(coboundary basis).
/// Throws CosetTooLarge when rank > kExactCosetRankGuard.
MinimalityVerdict is_minimal_exact(const Cochain& e, const CoboundaryBasis& b);
MinimalityVerdict is_minimal_exact(const Cochain& e);

struct NecessaryReport {
    bool pass = true;
    bool half_size_ok = true;
    /// (r-1)-subsets whose face degree exceeds (n-r+1)/2.
    std::vector<std::vector<int>> degree_violations;
};

/// Necessary (not sufficient) minimality conditions: |E| <= C(n,r)/2 and
/// every (r-1)-subset incident to at most (n-r+1)/2 members.
NecessaryReport necessary_conditions(const Cochain& e);

/// E + delta S for an arity-1 cochain S; the coboundary is unchanged.
Cochain seidel_switch(const Cochain& e, const Cochain& s);

/// Minimum-size member of the switching class, ties broken colex-least.
Cochain minimize_in_class(const Cochain& e, const CoboundaryBasis& b);
Cochain minimize_in_class(const Cochain& e);

}  // namespace cofill
