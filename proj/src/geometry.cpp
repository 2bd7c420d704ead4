#include "cofill/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace cofill {

bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }

bool lex_less(const Pt& a, const Pt& b) {
    int cx = cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return cmp(a.y, b.y) < 0;
}

int orientation(const Pt& p, const Pt& q, const Pt& r) {
    mpq_class det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(det);
}

bool PointConfig::general_position() const {
    const int m = n();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                if (orientation(points[static_cast<std::size_t>(i)],
                                points[static_cast<std::size_t>(j)],
                                points[static_cast<std::size_t>(k)]) == 0)
                    return false;
    return true;
}

namespace {

bool on_closed_segment(const Pt& a, const Pt& b, const Pt& t) {
    if (orientation(a, b, t) != 0) return false;
    return cmp(t.x, std::min(a.x, b.x)) >= 0 && cmp(t.x, std::max(a.x, b.x)) <= 0 &&
           cmp(t.y, std::min(a.y, b.y)) >= 0 && cmp(t.y, std::max(a.y, b.y)) <= 0;
}

bool strictly_inside_triangle(const Pt& a, const Pt& b, const Pt& c, const Pt& t) {
    int s1 = orientation(a, b, t);
    int s2 = orientation(b, c, t);
    int s3 = orientation(c, a, t);
    return s1 != 0 && s1 == s2 && s2 == s3;
}

/// Proper crossing of open segments (no shared endpoints, no collinearity).
bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    return o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && o1 != o2 && o3 != o4;
}

/// Does the upward vertical ray from t cross the open segment (p,q)?
bool ray_crosses(const Pt& p, const Pt& q, const Pt& t) {
    bool p_above = cmp(p.y, t.y) > 0;
    bool q_above = cmp(q.y, t.y) > 0;
    if (p_above == q_above) return false;
    // x-coordinate where the segment meets the horizontal line y = t.y
    mpq_class xi = p.x + (t.y - p.y) * (q.x - p.x) / (q.y - p.y);
    return cmp(xi, t.x) > 0;
}

std::uint64_t depth_by_ray_parity(const PointConfig& p, const Pt& t) {
    const int n = p.n();
    std::uint64_t depth = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Pt& a = p.points[static_cast<std::size_t>(i)];
                const Pt& b = p.points[static_cast<std::size_t>(j)];
                const Pt& c = p.points[static_cast<std::size_t>(k)];
                int crossings = (ray_crosses(a, b, t) ? 1 : 0) + (ray_crosses(b, c, t) ? 1 : 0) +
                                (ray_crosses(a, c, t) ? 1 : 0);
                if (crossings % 2 == 1) ++depth;
            }
    return depth;
}

}  // namespace

bool probe_generic(const PointConfig& p, const ProbeSimplex& a) {
    const int n = p.n();
    auto point_ok = [&](const Pt& t) {
        for (const Pt& q : p.points)
            if (q == t) return false;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (on_closed_segment(p.points[static_cast<std::size_t>(i)],
                                      p.points[static_cast<std::size_t>(j)], t))
                    return false;
        return true;
    };
    switch (a.dim()) {
        case 0:
            return point_ok(a.vertices[0]);
        case 1: {
            const Pt& x = a.vertices[0];
            const Pt& y = a.vertices[1];
            if (x == y || !point_ok(x) || !point_ok(y)) return false;
            for (const Pt& q : p.points)
                if (orientation(x, y, q) == 0) return false;
            return true;
        }
        case 2: {
            const Pt& x = a.vertices[0];
            const Pt& y = a.vertices[1];
            const Pt& z = a.vertices[2];
            if (orientation(x, y, z) == 0) return false;
            for (const Pt& q : p.points)
                if (on_closed_segment(x, y, q) || on_closed_segment(y, z, q) ||
                    on_closed_segment(x, z, q))
                    return false;
            return true;
        }
        default:
            return false;
    }
}

Cochain intersection_cochain(const PointConfig& p, const ProbeSimplex& a) {
    const int n = p.n();
    if (!probe_generic(p, a))
        throw GeneralPositionError("intersection_cochain: probe not in general position");
    switch (a.dim()) {
        case 0: {
            Cochain out(n, 3);
            const Pt& x = a.vertices[0];
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k)
                        if (strictly_inside_triangle(p.points[static_cast<std::size_t>(i)],
                                                     p.points[static_cast<std::size_t>(j)],
                                                     p.points[static_cast<std::size_t>(k)], x))
                            out.set_rank(subset_rank({i + 1, j + 1, k + 1}, n));
            return out;
        }
        case 1: {
            Cochain out(n, 2);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (segments_cross(a.vertices[0], a.vertices[1],
                                       p.points[static_cast<std::size_t>(i)],
                                       p.points[static_cast<std::size_t>(j)]))
                        out.set_rank(subset_rank({i + 1, j + 1}, n));
            return out;
        }
        case 2: {
            Cochain out(n, 1);
            for (int i = 0; i < n; ++i)
                if (strictly_inside_triangle(a.vertices[0], a.vertices[1], a.vertices[2],
                                             p.points[static_cast<std::size_t>(i)]))
                    out.set_rank(subset_rank({i + 1}, n));
            return out;
        }
        default:
            throw std::invalid_argument("intersection_cochain: probe must have 1-3 vertices");
    }
}

Cochain verify_duality(const PointConfig& p, const ProbeSimplex& a) {
    if (a.dim() == 1) {
        Cochain f = intersection_cochain(p, a);
        Cochain fx = intersection_cochain(p, ProbeSimplex{{a.vertices[0]}});
        Cochain fy = intersection_cochain(p, ProbeSimplex{{a.vertices[1]}});
        return add(coboundary(f), add(fx, fy));
    }
    if (a.dim() == 2) {
        Cochain f = intersection_cochain(p, a);
        Cochain fxy = intersection_cochain(p, ProbeSimplex{{a.vertices[0], a.vertices[1]}});
        Cochain fyz = intersection_cochain(p, ProbeSimplex{{a.vertices[1], a.vertices[2]}});
        Cochain fxz = intersection_cochain(p, ProbeSimplex{{a.vertices[0], a.vertices[2]}});
        return add(coboundary(f), add(fxy, add(fyz, fxz)));
    }
    throw std::invalid_argument("verify_duality: probe must be a segment or a triangle");
}

namespace {

struct Line {
    mpq_class a, b, c;  // a x + b y + c = 0, normalized

    void normalize() {
        if (sgn(a) != 0) {
            c /= a; b /= a; a = 1;
        } else {
            c /= b; b = 1;
        }
    }
    friend bool operator==(const Line& u, const Line& v) {
        return u.a == v.a && u.b == v.b && u.c == v.c;
    }
    bool through(const Pt& t) const { return sgn(a * t.x + b * t.y + c) == 0; }
};

struct Dir {
    mpq_class x, y;
};

/// Circular order of direction vectors starting at the positive x-axis.
bool dir_less(const Dir& u, const Dir& v) {
    auto half = [](const Dir& d) { return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1; };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return sgn(u.x * v.y - u.y * v.x) > 0;
}

}  // namespace

DepthResult max_depth(const PointConfig& p) {
    const int n = p.n();
    if (n < 3) {
        DepthResult r(std::max(n, 3));
        return r;
    }
    if (!p.general_position())
        throw GeneralPositionError("max_depth: configuration has collinear triples");

    std::vector<Line> lines;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Pt& u = p.points[static_cast<std::size_t>(i)];
            const Pt& v = p.points[static_cast<std::size_t>(j)];
            Line l{v.y - u.y, u.x - v.x, mpq_class(0)};
            l.c = -(l.a * u.x + l.b * u.y);
            l.normalize();
            if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
        }

    std::vector<Pt> verts;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            mpq_class det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (sgn(det) == 0) continue;
            Pt v;
            v.x = (lines[i].b * lines[j].c - lines[j].b * lines[i].c) / det;
            v.y = (lines[j].a * lines[i].c - lines[i].a * lines[j].c) / det;
            verts.push_back(v);
        }
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    // step size below every feature scale: pairwise vertex separation and
    // vertex-to-non-incident-line clearance (L-infinity surrogates)
    mpq_class delta(-1);
    auto feed = [&](const mpq_class& d) {
        if (sgn(d) > 0 && (sgn(delta) < 0 || d < delta)) delta = d;
    };
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            feed(std::max(abs(verts[i].x - verts[j].x), abs(verts[i].y - verts[j].y)));
    for (const Pt& v : verts)
        for (const Line& l : lines) {
            mpq_class val = abs(l.a * v.x + l.b * v.y + l.c);
            feed(val / (abs(l.a) + abs(l.b)));
        }
    if (sgn(delta) <= 0) delta = 1;
    delta /= 16;

    // one candidate per sector around each arrangement vertex
    std::vector<Pt> candidates;
    for (const Pt& v : verts) {
        std::vector<Dir> dirs;
        for (const Line& l : lines)
            if (l.through(v)) {
                dirs.push_back({l.b, -l.a});
                dirs.push_back({-l.b, l.a});
            }
        std::sort(dirs.begin(), dirs.end(), dir_less);
        for (std::size_t t = 0; t < dirs.size(); ++t) {
            const Dir& u = dirs[t];
            const Dir& w = dirs[(t + 1) % dirs.size()];
            Dir m{u.x + w.x, u.y + w.y};
            if (sgn(m.x) == 0 && sgn(m.y) == 0) continue;
            mpq_class scale = delta / std::max(abs(m.x), abs(m.y));
            candidates.push_back({v.x + m.x * scale, v.y + m.y * scale});
        }
    }
    // far representatives for unbounded cells
    mpq_class big(1);
    for (const Pt& v : verts) {
        if (abs(v.x) > big) big = abs(v.x);
        if (abs(v.y) > big) big = abs(v.y);
    }
    big = 4 * big + 7;
    for (const Pt& far : {Pt{big, big + 1}, Pt{-big, big + 1}, Pt{big, -big - 1}, Pt{-big, -big - 1}}) {
        bool clean = true;
        for (const Line& l : lines)
            if (l.through(far)) clean = false;
        if (clean) candidates.push_back(far);
    }

    DepthResult res(n);
    res.candidates_examined = candidates.size();

    std::vector<std::uint64_t> depths(candidates.size(), 0);
    bool mismatch = false;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(candidates.size()); ++ci) {
        const Pt& cand = candidates[static_cast<std::size_t>(ci)];
        std::uint64_t d1 = intersection_cochain(p, ProbeSimplex{{cand}}).card();
        std::uint64_t d2 = depth_by_ray_parity(p, cand);
        if (d1 != d2) mismatch = true;
        depths[static_cast<std::size_t>(ci)] = d1;
    }
    if (mismatch) throw std::logic_error("max_depth: independent depth paths disagree");

    // deterministic merge: max depth, lexicographically least witness
    bool have = false;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        if (!have || depths[ci] > res.depth ||
            (depths[ci] == res.depth && lex_less(candidates[ci], res.witness))) {
            have = true;
            res.depth = depths[ci];
            res.witness = candidates[ci];
        }
    }
    if (have) res.witness_cochain = intersection_cochain(p, ProbeSimplex{{res.witness}});
    return res;
}

}  // namespace cofill
