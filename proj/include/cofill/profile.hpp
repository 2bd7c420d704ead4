#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cofill/cochain.hpp"
#include "cofill/rational.hpp"

namespace cofill {

enum class BoundName { phi1_exact, basic, thm5, thm6, kms, upper_prop7 };

BoundName bound_name_from_string(const std::string& s);
std::string to_string(BoundName b);

/// Default quadratic coefficient for the thm6 curve (4/3)a - C a^2,
/// derived from the beta = (27/8) alpha split in the high/low-degree
/// argument: C = 6*(27/8)^2 + 4*(27/8) = 2619/32. Non-normative.
inline const Rat kThm6DefaultC = Rat(2619, 32);

struct BoundFunction {
    BoundName name = BoundName::basic;
    int d = 0;       // for upper_prop7
    Rat C = kThm6DefaultC;  // for thm6
};

/// A bound evaluation: exact rational where the formula is rational,
/// double-only where a square root is involved.
struct BoundValue {
    bool exact = false;
    Rat q;          // valid iff exact
    double value = 0.0;

    static BoundValue from_rat(Rat r) { return {true, r, r.to_double()}; }
    static BoundValue from_double(double v) { return {false, Rat(), v}; }
};

struct OutOfDomain : std::domain_error {
    using std::domain_error::domain_error;
};

BoundValue eval_bound(const BoundFunction& b, const Rat& alpha);

/// Smallest sigma in [0,1) with alpha = d! sigma ((1-sigma)/d)^(d-1),
/// by bisection on the increasing branch; bound = ((d+1)/d) alpha (1-sigma).
struct Prop7Upper {
    double sigma = 0.0;
    double bound = 0.0;
    double relaxed_bound = 0.0;  // ((d+1)/d) alpha
};
Prop7Upper upper_bound_prop7(int d, double alpha, double tol = 1e-12);

/// The nested lower-bound chain
///   phi_d( 1/2 phi_{d-1}( 1/3 phi_{d-2}( ... 1/d phi_1(1/(d+1)) ... ))),
/// with phis[k-1] used at level k. Exact in rationals as long as every
/// bound on the path is rational.
struct NestedResult {
    double value = 0.0;
    bool exact = false;
    Rat exact_value;
    std::vector<double> trace;  // argument fed into each level, then the result
};
NestedResult nested_gromov(int d, const std::vector<BoundFunction>& phis);

struct ProfileRecord {
    int n = 0, d = 0;
    std::uint64_t E_size = 0;
    std::uint64_t min_delta_size = 0;
    Cochain witness;
    bool complete = true;

    ProfileRecord(int n_, int d_, Cochain w) : n(n_), d(d_), witness(std::move(w)) {}
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact finite-n cofilling Pareto front: for each feasible |E|, the
/// minimum |delta E| over exactly-minimal E of that size, lower-envelope
/// post-processed so min_delta_size is nondecreasing in E_size.
/// budget caps the number of candidate cochains examined; when exceeded the
/// partial records are returned with complete = false.
std::vector<ProfileRecord> profile_exact(int n, int d, std::uint64_t budget = UINT64_MAX);

}  // namespace cofill
