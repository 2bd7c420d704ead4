#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cofill/cochain.hpp"

namespace cofill {

struct Pt {
    mpq_class x, y;
};

bool operator==(const Pt& a, const Pt& b);
bool lex_less(const Pt& a, const Pt& b);

/// Sign of the determinant |q-p, r-p|: +1 left turn, -1 right turn, 0 collinear.
int orientation(const Pt& p, const Pt& q, const Pt& r);

/// Labeled points p_1..p_n with exact rational coordinates.
struct PointConfig {
    std::vector<Pt> points;

    int n() const { return static_cast<int>(points.size()); }
    /// no three collinear
    bool general_position() const;
};

struct GeneralPositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A probe point x, segment xy, or triangle xyz.
struct ProbeSimplex {
    std::vector<Pt> vertices;  // 1, 2 or 3
    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Checks that the probe avoids every low-dimensional simplex spanned by P
/// that an exact intersection test would be ambiguous about
/// (point/segment probes must miss P's points and segments; triangle probes
/// must not have P's points on their boundary).
bool probe_generic(const PointConfig& p, const ProbeSimplex& a);

/// F_A: for a point, the arity-3 cochain of P-triangles containing it; for a
/// segment, the arity-2 cochain of P-segments crossing it; for a triangle,
/// the arity-1 cochain of P-points inside it. Exact predicates throughout.
Cochain intersection_cochain(const PointConfig& p, const ProbeSimplex& a);

/// delta F_A + sum_i F_{A_i} over the facets A_i of A; empty iff the
/// boundary duality holds.
Cochain verify_duality(const PointConfig& p, const ProbeSimplex& a);

struct DepthResult {
    Pt witness;
    std::uint64_t depth = 0;
    Cochain witness_cochain;   // arity-3 triangles containing the witness
    std::uint64_t candidates_examined = 0;

    DepthResult(int n) : witness_cochain(n, 3) {}
};

/// Exact maximum, over the plane, of the number of P-triangles containing a
/// point. Candidates: for every vertex of the arrangement of the C(n,2)
/// full lines, one representative per incident sector (direction = sum of
/// the two bounding directions, step well below every non-incident feature),
/// plus far points for unbounded cells. Each candidate's depth is computed
/// by two independent code paths (orientation tests vs ray-crossing parity)
/// which must agree.
DepthResult max_depth(const PointConfig& p);

}  // namespace cofill
