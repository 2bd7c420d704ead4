#include "cofill/profile.hpp"

#include <algorithm>
#include <cmath>

#include "cofill/minimality.hpp"

namespace cofill {

BoundName bound_name_from_string(const std::string& s) {
    if (s == "phi1" || s == "phi1_exact") return BoundName::phi1_exact;
    if (s == "basic") return BoundName::basic;
    if (s == "thm5") return BoundName::thm5;
    if (s == "thm6") return BoundName::thm6;
    if (s == "kms") return BoundName::kms;
    if (s == "upper_prop7" || s == "prop7") return BoundName::upper_prop7;
    throw std::invalid_argument("unknown bound name: " + s);
}

std::string to_string(BoundName b) {
    switch (b) {
        case BoundName::phi1_exact: return "phi1_exact";
        case BoundName::basic: return "basic";
        case BoundName::thm5: return "thm5";
        case BoundName::thm6: return "thm6";
        case BoundName::kms: return "kms";
        case BoundName::upper_prop7: return "upper_prop7";
    }
    return "?";
}

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw OutOfDomain(msg);
}

}  // namespace

BoundValue eval_bound(const BoundFunction& b, const Rat& alpha) {
    require(alpha >= Rat(0), "alpha must be nonnegative");
    switch (b.name) {
        case BoundName::phi1_exact:
            require(alpha <= Rat(1, 2), "phi1 is defined for alpha <= 1/2");
            return BoundValue::from_rat(Rat(2) * alpha * (Rat(1) - alpha));
        case BoundName::basic:
            require(alpha <= Rat(1, 2), "basic bound is defined for alpha <= 1/2");
            return BoundValue::from_rat(alpha);
        case BoundName::kms:
            require(alpha <= Rat(1, 2), "kms bound is defined for alpha <= 1/2");
            return BoundValue::from_rat(Rat(9, 7) * alpha * (Rat(1) - alpha));
        case BoundName::thm5: {
            require(alpha <= Rat(1, 4), "thm5 is defined for alpha <= 1/4");
            double a = alpha.to_double();
            return BoundValue::from_double(0.75 * (1.0 - std::sqrt(1.0 - 4.0 * a)) * (1.0 - 4.0 * a));
        }
        case BoundName::thm6:
            require(b.C > Rat(0), "thm6 needs a positive constant");
            require(alpha * b.C <= Rat(4, 3), "thm6 curve is negative beyond (4/3)/C");
            return BoundValue::from_rat(Rat(4, 3) * alpha - b.C * alpha * alpha);
        case BoundName::upper_prop7: {
            Prop7Upper u = upper_bound_prop7(b.d, alpha.to_double());
            return BoundValue::from_double(u.bound);
        }
    }
    throw std::logic_error("eval_bound: unreachable");
}

namespace {

/// Double-path evaluation, for chains that already lost exactness.
double eval_bound_double(const BoundFunction& b, double alpha) {
    require(alpha >= 0.0, "alpha must be nonnegative");
    switch (b.name) {
        case BoundName::phi1_exact:
            require(alpha <= 0.5, "phi1 is defined for alpha <= 1/2");
            return 2.0 * alpha * (1.0 - alpha);
        case BoundName::basic:
            require(alpha <= 0.5, "basic bound is defined for alpha <= 1/2");
            return alpha;
        case BoundName::kms:
            require(alpha <= 0.5, "kms bound is defined for alpha <= 1/2");
            return (9.0 / 7.0) * alpha * (1.0 - alpha);
        case BoundName::thm5:
            require(alpha <= 0.25, "thm5 is defined for alpha <= 1/4");
            return 0.75 * (1.0 - std::sqrt(1.0 - 4.0 * alpha)) * (1.0 - 4.0 * alpha);
        case BoundName::thm6: {
            double c = b.C.to_double();
            require(alpha * c <= 4.0 / 3.0, "thm6 curve is negative beyond (4/3)/C");
            return (4.0 / 3.0) * alpha - c * alpha * alpha;
        }
        case BoundName::upper_prop7:
            return upper_bound_prop7(b.d, alpha).bound;
    }
    throw std::logic_error("eval_bound_double: unreachable");
}

double prop7_profile(int d, double sigma) {
    // d! sigma ((1-sigma)/d)^(d-1)
    double v = sigma;
    for (int i = 2; i <= d; ++i) v *= i;
    return v * std::pow((1.0 - sigma) / d, d - 1);
}

}  // namespace

Prop7Upper upper_bound_prop7(int d, double alpha, double tol) {
    if (d < 1) throw std::invalid_argument("upper_bound_prop7: d must be >= 1");
    require(alpha > 0.0 && alpha <= 1.0 / (d + 1), "upper_bound_prop7 needs 0 < alpha <= 1/(d+1)");
    // alpha -> sigma is increasing on [0, 1/d]; the smallest root lives there.
    double lo = 0.0, hi = 1.0 / d;
    require(alpha <= prop7_profile(d, hi) + 1e-15,
            "upper_bound_prop7: alpha above the maximum of the defining profile");
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        (prop7_profile(d, mid) < alpha ? lo : hi) = mid;
    }
    Prop7Upper out;
    out.sigma = 0.5 * (lo + hi);
    out.relaxed_bound = (d + 1.0) / d * alpha;
    out.bound = out.relaxed_bound * (1.0 - out.sigma);
    return out;
}

NestedResult nested_gromov(int d, const std::vector<BoundFunction>& phis) {
    if (d < 1) throw std::invalid_argument("nested_gromov: d must be >= 1");
    if (static_cast<int>(phis.size()) != d)
        throw std::invalid_argument("nested_gromov: need one bound per level 1..d");

    NestedResult res;
    bool exact = true;
    Rat q(1, d + 1);
    double x = q.to_double();
    for (int k = 1; k <= d; ++k) {
        res.trace.push_back(exact ? q.to_double() : x);
        if (exact) {
            BoundValue v = eval_bound(phis[static_cast<std::size_t>(k - 1)], q);
            if (v.exact) {
                q = v.q;
            } else {
                exact = false;
                x = v.value;
            }
        } else {
            x = eval_bound_double(phis[static_cast<std::size_t>(k - 1)], x);
        }
        if (k < d) {
            if (exact) q = q / Rat(d + 1 - k);
            else x /= static_cast<double>(d + 1 - k);
        }
    }
    res.exact = exact;
    if (exact) {
        res.exact_value = q;
        res.value = q.to_double();
    } else {
        res.value = x;
    }
    res.trace.push_back(res.value);
    return res;
}

namespace {

/// Next s-combination bitmask in increasing integer (= colex) order.
std::uint64_t gosper_next(std::uint64_t m) {
    std::uint64_t c = m & (~m + 1);
    std::uint64_t r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

std::vector<ProfileRecord> profile_d1(int n) {
    std::vector<ProfileRecord> out;
    for (int s = 0; s <= n / 2; ++s) {
        Cochain S(n, 1);
        for (int v = 1; v <= s; ++v) S.set_rank(subset_rank({v}, n));
        ProfileRecord rec(n, 1, S);
        rec.E_size = static_cast<std::uint64_t>(s);
        rec.min_delta_size = static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(n - s);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace

std::vector<ProfileRecord> profile_exact(int n, int d, std::uint64_t budget) {
    if (d < 1 || d >= n) throw std::invalid_argument("profile_exact: need 1 <= d < n");
    if (d == 1) return profile_d1(n);

    const std::uint64_t m = binom(n, d);
    if (m > 40) throw std::invalid_argument("profile_exact: 2^C(n,d) enumeration infeasible");
    CoboundaryBasis basis = coboundary_basis(n, d);

    std::vector<ProfileRecord> out;
    std::uint64_t examined = 0;
    bool truncated = false;

    for (std::uint64_t s = 0; s <= m / 2 && !truncated; ++s) {
        std::optional<Cochain> best_witness;
        std::uint64_t best_delta = UINT64_MAX;

        // collect candidates passing the cheap necessary conditions
        std::vector<std::uint64_t> candidates;
        std::uint64_t mask = s == 0 ? 0 : (1ull << s) - 1;
        std::uint64_t end = 1ull << m;
        for (;;) {
            if (examined >= budget) { truncated = true; break; }
            ++examined;
            Cochain e(n, d);
            for (std::uint64_t b = mask; b; b &= b - 1)
                e.set_rank(static_cast<std::uint64_t>(std::countr_zero(b)));
            if (necessary_conditions(e).pass) candidates.push_back(mask);
            if (s == 0) break;
            mask = gosper_next(mask);
            if (mask >= end) break;
        }

#pragma omp parallel
        {
            std::optional<Cochain> loc_w;
            std::uint64_t loc_delta = UINT64_MAX;
#pragma omp for schedule(dynamic, 64) nowait
            for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(candidates.size()); ++ci) {
                Cochain e(n, d);
                for (std::uint64_t b = candidates[static_cast<std::size_t>(ci)]; b; b &= b - 1)
                    e.set_rank(static_cast<std::uint64_t>(std::countr_zero(b)));
                if (!is_minimal_exact(e, basis).minimal) continue;
                std::uint64_t delta = coboundary(e).card();
                if (delta < loc_delta ||
                    (delta == loc_delta && loc_w && less_as_integer(e.bits(), loc_w->bits()))) {
                    loc_delta = delta;
                    loc_w = e;
                }
            }
#pragma omp critical
            {
                if (loc_w && (loc_delta < best_delta ||
                              (loc_delta == best_delta && best_witness &&
                               less_as_integer(loc_w->bits(), best_witness->bits())))) {
                    best_delta = loc_delta;
                    best_witness = loc_w;
                }
            }
        }

        if (best_witness) {
            ProfileRecord rec(n, d, *best_witness);
            rec.E_size = s;
            rec.min_delta_size = best_delta;
            rec.complete = !truncated;
            out.push_back(std::move(rec));
        }
    }

    if (truncated)
        for (auto& r : out) r.complete = false;

    // lower envelope: drop records not on the Pareto staircase, so that
    // min_delta_size is nondecreasing in E_size
    std::vector<ProfileRecord> front;
    std::uint64_t floor_delta = 0;
    for (const auto& r : out) {
        bool dominated = false;
        for (const auto& r2 : out)
            if (r2.E_size > r.E_size && r2.min_delta_size < r.min_delta_size) dominated = true;
        if (!dominated && r.min_delta_size >= floor_delta) {
            floor_delta = r.min_delta_size;
            front.push_back(r);
        }
    }
    return front;
}

}  // namespace cofill
