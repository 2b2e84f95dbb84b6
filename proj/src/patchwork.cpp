#include "realog/patchwork.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace realog {

namespace {

long cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::string point_str(const Point& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string edge_str(const std::array<Point, 2>& e) {
    return point_str(e[0]) + "-" + point_str(e[1]);
}

// Vertices reordered counterclockwise; empty when the polygon has no area.
std::vector<Point> oriented_polygon(const std::vector<Point>& poly) {
    if (poly.size() < 3) return {};
    long area2 = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        area2 += a.x * b.y - a.y * b.x;
    }
    if (area2 == 0) return {};
    std::vector<Point> out = poly;
    if (area2 < 0) std::reverse(out.begin(), out.end());
    return out;
}

long polygon_area2(const std::vector<Point>& ccw) {
    long area2 = 0;
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const Point& a = ccw[i];
        const Point& b = ccw[(i + 1) % ccw.size()];
        area2 += a.x * b.y - a.y * b.x;
    }
    return area2;
}

bool polygon_convex(const std::vector<Point>& ccw) {
    const std::size_t n = ccw.size();
    for (std::size_t i = 0; i < n; ++i)
        if (cross(ccw[i], ccw[(i + 1) % n], ccw[(i + 2) % n]) < 0) return false;
    return true;
}

bool point_inside(const std::vector<Point>& ccw, const Point& p) {
    const std::size_t n = ccw.size();
    for (std::size_t i = 0; i < n; ++i)
        if (cross(ccw[i], ccw[(i + 1) % n], p) < 0) return false;
    return true;
}

// Both endpoints on one supporting line of the polygon. For points of a
// convex polygon this is exactly "the segment lies on the boundary".
bool segment_on_boundary(const std::vector<Point>& ccw, const Point& v, const Point& w) {
    const std::size_t n = ccw.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ccw[i];
        const Point& b = ccw[(i + 1) % n];
        if (cross(a, b, v) == 0 && cross(a, b, w) == 0) return true;
    }
    return false;
}

int sign_at(const std::map<Point, int>& signs, const Point& p, int orthant) {
    int s = signs.at(p);
    int flips = ((orthant & 1) & (p.x & 1)) ^ (((orthant >> 1) & 1) & (p.y & 1));
    return flips ? -s : s;
}

// Triangulation combinatorics on canonical sorted orders: faces and edges are
// vertex-sorted tuples, both lists lexicographically sorted.
struct Mesh {
    std::vector<Point> pts;
    std::vector<std::array<Point, 3>> faces;
    std::vector<std::array<Point, 2>> edges;
    std::vector<std::vector<std::size_t>> edge_faces;    // ascending face indices
    std::vector<std::array<std::size_t, 3>> face_edges;  // ascending edge indices
    std::vector<bool> boundary;
    // mod-2 mask of the primitive edge normal: XOR-ing it onto an orthant code
    // is the reflection fixing the corresponding toric boundary stratum
    std::vector<int> reflection_mask;
};

Mesh build_mesh(const PatchworkInput& pi, const std::vector<Point>& ccw) {
    Mesh m;
    m.pts = lattice_points(pi.polygon);
    for (const auto& t : pi.triangles) {
        std::array<Point, 3> f{m.pts[t[0]], m.pts[t[1]], m.pts[t[2]]};
        std::sort(f.begin(), f.end());
        m.faces.push_back(f);
    }
    std::sort(m.faces.begin(), m.faces.end());

    std::map<std::array<Point, 2>, std::vector<std::size_t>> by_edge;
    for (std::size_t fi = 0; fi < m.faces.size(); ++fi) {
        const auto& f = m.faces[fi];
        by_edge[{f[0], f[1]}].push_back(fi);
        by_edge[{f[0], f[2]}].push_back(fi);
        by_edge[{f[1], f[2]}].push_back(fi);
    }
    std::map<std::array<Point, 2>, std::size_t> edge_index;
    for (auto& [key, faces] : by_edge) {
        edge_index[key] = m.edges.size();
        m.edges.push_back(key);
        m.edge_faces.push_back(faces);
    }
    for (const auto& f : m.faces) {
        std::array<std::size_t, 3> fe{edge_index[{f[0], f[1]}], edge_index[{f[0], f[2]}],
                                      edge_index[{f[1], f[2]}]};
        std::sort(fe.begin(), fe.end());
        m.face_edges.push_back(fe);
    }
    for (const auto& e : m.edges) {
        m.boundary.push_back(segment_on_boundary(ccw, e[0], e[1]));
        int dmask = static_cast<int>((e[1].x - e[0].x) & 1) |
                    (static_cast<int>((e[1].y - e[0].y) & 1) << 1);
        m.reflection_mask.push_back(dmask == 3 ? 3 : 3 ^ dmask);
    }
    return m;
}

// The two orthants in which the signs at the edge endpoints differ. A
// primitive edge crosses in exactly two orthants, exchanged by the
// reflection mask.
std::array<int, 2> edge_crossings(const std::map<Point, int>& signs,
                                  const std::array<Point, 2>& e) {
    std::array<int, 2> out{0, 0};
    int n = 0;
    for (int u = 0; u < 4; ++u)
        if (sign_at(signs, e[0], u) != sign_at(signs, e[1], u)) {
            if (n < 2) out[n] = u;
            ++n;
        }
    if (n != 2)
        fail(errc::invalid_sdd,
             "internal: edge " + edge_str(e) + " crosses in " + std::to_string(n) + " orthants");
    return out;
}

bool proper_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    long s1 = cross(a, b, c), s2 = cross(a, b, d);
    long s3 = cross(c, d, a), s4 = cross(c, d, b);
    return ((s1 > 0) != (s2 > 0)) && s1 != 0 && s2 != 0 && ((s3 > 0) != (s4 > 0)) && s3 != 0 &&
           s4 != 0;
}

bool strictly_inside(const std::array<Point, 3>& tri, const Point& p) {
    long o = cross(tri[0], tri[1], tri[2]);
    long s1 = cross(tri[0], tri[1], p);
    long s2 = cross(tri[1], tri[2], p);
    long s3 = cross(tri[2], tri[0], p);
    if (o < 0) {
        s1 = -s1;
        s2 = -s2;
        s3 = -s3;
    }
    return s1 > 0 && s2 > 0 && s3 > 0;
}

// Overlap test for two unimodular triangles sharing at most one vertex.
// Edges are primitive, so partial collinear overlaps and vertices inside
// open edges cannot occur; proper crossings and strict containment cover
// everything else.
bool triangles_overlap(const std::array<Point, 3>& s, const std::array<Point, 3>& t) {
    for (const Point& p : s)
        if (strictly_inside(t, p)) return true;
    for (const Point& p : t)
        if (strictly_inside(s, p)) return true;
    const std::array<std::array<Point, 2>, 3> se{{{s[0], s[1]}, {s[0], s[2]}, {s[1], s[2]}}};
    const std::array<std::array<Point, 2>, 3> te{{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
    for (const auto& a : se)
        for (const auto& b : te)
            if (proper_cross(a[0], a[1], b[0], b[1])) return true;
    return false;
}

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Point> lattice_points(const std::vector<Point>& polygon) {
    auto ccw = oriented_polygon(polygon);
    if (ccw.empty()) return {};
    long x0 = ccw[0].x, x1 = x0, y0 = ccw[0].y, y1 = y0;
    for (const Point& p : ccw) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    std::vector<Point> out;
    for (long x = x0; x <= x1; ++x)
        for (long y = y0; y <= y1; ++y)
            if (point_inside(ccw, {x, y})) out.push_back({x, y});
    return out;
}

ValidationResult validate_patchwork(const PatchworkInput& pi) {
    using VR = ValidationResult;
    if (pi.polygon.size() < 3)
        return VR::violation(errc::unsupported_polygon, 0, "polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < pi.polygon.size(); ++i)
        for (std::size_t j = i + 1; j < pi.polygon.size(); ++j)
            if (pi.polygon[i] == pi.polygon[j])
                return VR::violation(errc::unsupported_polygon, 0,
                                     "repeated polygon vertex " + point_str(pi.polygon[i]));
    auto ccw = oriented_polygon(pi.polygon);
    if (ccw.empty())
        return VR::violation(errc::unsupported_polygon, 0, "polygon has no area");
    if (!polygon_convex(ccw))
        return VR::violation(errc::unsupported_polygon, 0, "polygon is not convex");

    const std::vector<Point> pts = lattice_points(pi.polygon);
    for (const Point& p : pts) {
        auto it = pi.signs.find(p);
        if (it == pi.signs.end())
            return VR::violation(errc::parse_error, 0,
                                 "sign missing for lattice point " + point_str(p));
        if (it->second != 1 && it->second != -1)
            return VR::violation(errc::parse_error, 0,
                                 "sign at " + point_str(p) + " must be +1 or -1");
    }
    for (const auto& [p, s] : pi.signs)
        if (!std::binary_search(pts.begin(), pts.end(), p))
            return VR::violation(errc::parse_error, 0,
                                 "sign given for " + point_str(p) + " outside the polygon");
    if (!pi.heights.empty()) {
        for (const Point& p : pts)
            if (!pi.heights.count(p))
                return VR::violation(errc::parse_error, 0,
                                     "height missing for lattice point " + point_str(p));
        for (const auto& [p, h] : pi.heights)
            if (!std::binary_search(pts.begin(), pts.end(), p))
                return VR::violation(errc::parse_error, 0,
                                     "height given for " + point_str(p) + " outside the polygon");
    }

    if (pi.triangles.empty())
        return VR::violation(errc::not_a_triangulation, 0, "no triangles given");
    std::vector<std::array<Point, 3>> tris;
    for (std::size_t ti = 0; ti < pi.triangles.size(); ++ti) {
        const auto& t = pi.triangles[ti];
        for (std::size_t v : t)
            if (v >= pts.size())
                return VR::violation(errc::not_a_triangulation, 0,
                                     "triangle " + std::to_string(ti) +
                                         " references lattice point " + std::to_string(v) +
                                         " out of range");
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
            return VR::violation(errc::not_a_triangulation, 0,
                                 "triangle " + std::to_string(ti) + " has repeated vertices");
        std::array<Point, 3> f{pts[t[0]], pts[t[1]], pts[t[2]]};
        long det = cross(f[0], f[1], f[2]);
        if (det == 0)
            return VR::violation(errc::not_a_triangulation, 0,
                                 "triangle " + std::to_string(ti) + " is degenerate");
        if (det != 1 && det != -1)
            return VR::violation(errc::not_unimodular, 0,
                                 "triangle " + std::to_string(ti) + " has normalized area " +
                                     std::to_string(std::labs(det)));
        std::sort(f.begin(), f.end());
        tris.push_back(f);
    }
    {
        auto keys = tris;
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
            return VR::violation(errc::not_a_triangulation, 0, "duplicate triangle");
    }
    if (static_cast<long>(tris.size()) != polygon_area2(ccw))
        return VR::violation(errc::not_a_triangulation, 0,
                             std::to_string(tris.size()) +
                                 " unimodular triangles cannot tile normalized area " +
                                 std::to_string(polygon_area2(ccw)));
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
            std::vector<Point> shared;
            for (const Point& p : tris[i])
                for (const Point& q : tris[j])
                    if (p == q) shared.push_back(p);
            bool bad = false;
            if (shared.size() == 2) {
                Point r1, r2;
                for (const Point& p : tris[i])
                    if (p != shared[0] && p != shared[1]) r1 = p;
                for (const Point& p : tris[j])
                    if (p != shared[0] && p != shared[1]) r2 = p;
                long s1 = cross(shared[0], shared[1], r1);
                long s2 = cross(shared[0], shared[1], r2);
                bad = (s1 > 0) == (s2 > 0);
            } else {
                bad = triangles_overlap(tris[i], tris[j]);
            }
            if (bad)
                return VR::violation(errc::not_a_triangulation, 0,
                                     "triangles " + std::to_string(i) + " and " +
                                         std::to_string(j) + " overlap");
        }

    Mesh m = build_mesh(pi, ccw);
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        std::size_t want = m.boundary[e] ? 1 : 2;
        if (m.edge_faces[e].size() != want)
            return VR::violation(errc::not_a_triangulation, 0,
                                 "edge " + edge_str(m.edges[e]) + " lies in " +
                                     std::to_string(m.edge_faces[e].size()) +
                                     " triangles, expected " + std::to_string(want));
    }

    VR result = VR::pass();
    if (pi.heights.empty()) {
        result.warnings.push_back("regularity unverified: no heights given");
        return result;
    }
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.boundary[e]) continue;
        const Point v = m.edges[e][0], w = m.edges[e][1];
        auto opposite = [&](std::size_t fi) {
            for (const Point& p : m.faces[fi])
                if (p != v && p != w) return p;
            return v;  // unreachable
        };
        const Point a = opposite(m.edge_faces[e][0]);
        const Point b = opposite(m.edge_faces[e][1]);
        const long hv = pi.heights.at(v), hw = pi.heights.at(w);
        const long ha = pi.heights.at(a), hb = pi.heights.at(b);
        // det of rows (w-v | hw-hv), (a-v | ha-hv), (b-v | hb-hv); equals
        // cross(v,w,a) times the height of b over the plane lifted through
        // v, w, a, so the product below is positive iff the lift is strictly
        // convex across the edge
        long det3 = (w.x - v.x) * ((a.y - v.y) * (hb - hv) - (ha - hv) * (b.y - v.y)) -
                    (w.y - v.y) * ((a.x - v.x) * (hb - hv) - (ha - hv) * (b.x - v.x)) +
                    (hw - hv) * ((a.x - v.x) * (b.y - v.y) - (a.y - v.y) * (b.x - v.x));
        if (det3 * cross(v, w, a) <= 0)
            return VR::violation(errc::not_regular, 0,
                                 "lifted heights are not strictly convex across edge " +
                                     edge_str(m.edges[e]));
    }
    return result;
}

ViroGraph build_viro_graph(const PatchworkInput& pi) {
    if (auto v = validate_patchwork(pi); !v) fail(v.code, v.message);
    auto ccw = oriented_polygon(pi.polygon);
    Mesh m = build_mesh(pi, ccw);

    ViroGraph g;
    g.edges = m.edges;
    g.faces = m.faces;
    for (const auto& faces : m.edge_faces) g.edge_face_count.push_back(faces.size());

    std::map<std::pair<std::size_t, int>, std::size_t> vid;
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        auto u = edge_crossings(pi.signs, m.edges[e]);
        if (m.boundary[e]) {
            if (u[1] != (u[0] ^ m.reflection_mask[e]))
                fail(errc::invalid_sdd, "internal: crossings of boundary edge " +
                                            edge_str(m.edges[e]) +
                                            " are not exchanged by its reflection");
            vid[{e, u[0]}] = vid[{e, u[1]}] = g.vertices.size();
            g.vertices.push_back({e, u[0]});
        } else {
            for (int o : u) {
                vid[{e, o}] = g.vertices.size();
                g.vertices.push_back({e, o});
            }
        }
    }

    for (std::size_t f = 0; f < m.faces.size(); ++f) {
        for (int u = 0; u < 4; ++u) {
            std::vector<std::size_t> ends;
            for (std::size_t e : m.face_edges[f]) {
                const auto& ep = m.edges[e];
                if (sign_at(pi.signs, ep[0], u) != sign_at(pi.signs, ep[1], u))
                    ends.push_back(vid.at({e, u}));
            }
            if (ends.empty()) continue;  // monochromatic orthant
            if (ends.size() != 2)
                fail(errc::invalid_sdd, "internal: face " + std::to_string(f) + " crosses " +
                                            std::to_string(ends.size()) + " edges in orthant " +
                                            std::to_string(u));
            g.segments.push_back({f, u, {ends[0], ends[1]}});
        }
    }

    UnionFind uf(g.vertices.size());
    for (const auto& s : g.segments) uf.unite(s.ends[0], s.ends[1]);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (uf.find(i) == i) ++g.component_count;
    return g;
}

std::map<Point, int> harnack_signs(const PatchworkInput& pi) {
    std::set<Point> vs(pi.polygon.begin(), pi.polygon.end());
    long d = 0;
    for (const Point& p : vs) d = std::max({d, p.x, p.y});
    if (d < 1 || vs != std::set<Point>{{0, 0}, {d, 0}, {0, d}})
        fail(errc::unsupported_polygon,
             "Harnack signs are defined for the degree-d simplex only");
    PatchworkInput standard = harnack_patchwork(static_cast<int>(d));
    auto key_set = [](const PatchworkInput& in) {
        std::set<std::array<Point, 3>> keys;
        auto pts = lattice_points(in.polygon);
        for (const auto& t : in.triangles) {
            if (t[0] >= pts.size() || t[1] >= pts.size() || t[2] >= pts.size())
                fail(errc::unsupported_polygon, "triangulation is not the standard one");
            std::array<Point, 3> f{pts[t[0]], pts[t[1]], pts[t[2]]};
            std::sort(f.begin(), f.end());
            keys.insert(f);
        }
        return keys;
    };
    if (key_set(pi) != key_set(standard))
        fail(errc::unsupported_polygon, "triangulation is not the standard one");
    return standard.signs;
}

PatchworkInput harnack_patchwork(int degree) {
    if (degree < 1) fail(errc::unsupported_polygon, "degree must be positive");
    const long d = degree;
    PatchworkInput pi;
    pi.polygon = {{0, 0}, {d, 0}, {0, d}};
    auto pts = lattice_points(pi.polygon);
    std::map<Point, std::size_t> idx;
    for (std::size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = i;
    auto add = [&](Point a, Point b, Point c) {
        pi.triangles.push_back({idx.at(a), idx.at(b), idx.at(c)});
    };
    for (long x = 0; x < d; ++x)
        for (long y = 0; x + y < d; ++y) {
            add({x, y}, {x + 1, y}, {x, y + 1});
            if (x + y < d - 1) add({x + 1, y}, {x, y + 1}, {x + 1, y + 1});
        }
    for (const Point& p : pts) {
        pi.heights[p] = p.x * p.x + p.x * p.y + p.y * p.y;
        pi.signs[p] = ((p.x & 1) && (p.y & 1)) ? -1 : 1;
    }
    return pi;
}

StratifiedDegeneration to_sdd(const PatchworkInput& pi, const SddConvention& convention) {
    ViroGraph g = build_viro_graph(pi);  // validates
    Mesh m = build_mesh(pi, oriented_polygon(pi.polygon));
    const std::size_t ne = m.edges.size(), nf = m.faces.size();

    std::vector<std::size_t> eorder(ne), forder(nf);
    std::iota(eorder.begin(), eorder.end(), std::size_t{0});
    std::iota(forder.begin(), forder.end(), std::size_t{0});
    if (convention.reversed_edges) std::reverse(eorder.begin(), eorder.end());
    if (convention.reversed_faces) std::reverse(forder.begin(), forder.end());
    std::vector<std::size_t> epos(ne), fpos(nf);
    for (std::size_t k = 0; k < ne; ++k) epos[eorder[k]] = k;
    for (std::size_t k = 0; k < nf; ++k) fpos[forder[k]] = k;

    StratifiedDegeneration sdd;
    sdd.fiber_dim = 1;
    for (std::size_t k = 0; k < ne; ++k) {
        Stratum s;
        s.id = "e" + std::to_string(k);
        s.dim = 0;
        s.multiplicity = static_cast<int>(m.edge_faces[eorder[k]].size());
        s.hc_ranks = {1};
        s.real_components = 1;
        sdd.strata.push_back(std::move(s));
    }
    for (std::size_t k = 0; k < nf; ++k) {
        Stratum s;
        s.id = "t" + std::to_string(k);
        s.dim = 1;
        s.multiplicity = 1;
        s.hc_ranks = {0, 2, 1};
        s.real_components = 3;
        sdd.strata.push_back(std::move(s));
    }
    for (std::size_t k = 0; k < nf; ++k)
        for (std::size_t e : m.face_edges[forder[k]])
            sdd.closure.emplace_back("e" + std::to_string(epos[e]), "t" + std::to_string(k));

    // weight-0 complex: an edge puncture of a pair of pants maps to the
    // corresponding basis vector of H_c^1, with the third basis vector the
    // negative of the other two; punctures are indexed by stratum order
    IntegerMatrix c00(2 * nf, ne);
    for (std::size_t e = 0; e < ne; ++e) {
        const std::size_t col = epos[e];
        for (std::size_t f : m.edge_faces[e]) {
            const std::size_t b = fpos[f];
            std::array<std::size_t, 3> local{epos[m.face_edges[f][0]], epos[m.face_edges[f][1]],
                                             epos[m.face_edges[f][2]]};
            std::sort(local.begin(), local.end());
            const std::size_t slot =
                std::find(local.begin(), local.end(), col) - local.begin();
            if (slot == 0)
                c00.at(2 * b, col) += 1;
            else if (slot == 1)
                c00.at(2 * b + 1, col) += 1;
            else {
                c00.at(2 * b, col) -= 1;
                c00.at(2 * b + 1, col) -= 1;
            }
        }
    }
    sdd.cq_differentials[{0, 0}] = std::move(c00);

    // weight-1 complex: the dual tropical curve, interior edges oriented from
    // the smaller to the larger face stratum
    std::vector<std::size_t> interior;
    for (std::size_t k = 0; k < ne; ++k)
        if (m.edge_faces[eorder[k]].size() == 2) interior.push_back(eorder[k]);
    if (!interior.empty()) {
        const long sign = convention.flipped_orientations ? -1 : 1;
        IntegerMatrix c10(nf, interior.size());
        for (std::size_t col = 0; col < interior.size(); ++col) {
            const auto& faces = m.edge_faces[interior[col]];
            const std::size_t b1 = fpos[faces[0]], b2 = fpos[faces[1]];
            c10.at(std::max(b1, b2), col) += sign;
            c10.at(std::min(b1, b2), col) -= sign;
        }
        sdd.cq_differentials[{1, 0}] = std::move(c10);
    }

    // real cover differential: incidence of curve segments with their end
    // vertices; vertex sheets and segment sheets are ordered by orthant code
    std::vector<std::vector<std::size_t>> edge_vertices(ne);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        edge_vertices[g.vertices[i].edge].push_back(i);
    std::vector<std::size_t> col_of(g.vertices.size());
    std::size_t cols = 0;
    for (std::size_t k = 0; k < ne; ++k) {
        for (std::size_t v : edge_vertices[eorder[k]]) col_of[v] = cols++;
    }
    std::vector<std::vector<std::size_t>> face_segments(nf);
    for (std::size_t i = 0; i < g.segments.size(); ++i)
        face_segments[g.segments[i].face].push_back(i);
    IntegerMatrix real0(3 * nf, cols);
    for (std::size_t k = 0; k < nf; ++k) {
        const auto& segs = face_segments[forder[k]];
        for (std::size_t sheet = 0; sheet < segs.size(); ++sheet)
            for (std::size_t end : g.segments[segs[sheet]].ends)
                real0.at(3 * k + sheet, col_of[end]) = 1;
    }
    sdd.real_differentials[0] = std::move(real0);

    for (std::size_t k = 0; k < ne; ++k)
        sdd.real_vertex_counts["e" + std::to_string(k)] =
            static_cast<long>(edge_vertices[eorder[k]].size());
    for (std::size_t k = 0; k < nf; ++k) sdd.real_vertex_counts["t" + std::to_string(k)] = 3;

    if (auto v = validate_sdd(sdd); !v) fail(v.code, v.message);
    return sdd;
}

std::string viro_svg(const PatchworkInput& pi) {
    ViroGraph g = build_viro_graph(pi);
    Mesh m = build_mesh(pi, oriented_polygon(pi.polygon));
    long mx = 1, my = 1;
    for (const Point& p : m.pts) {
        mx = std::max(mx, std::labs(p.x));
        my = std::max(my, std::labs(p.y));
    }
    const double scale = 40.0, margin = 20.0;
    auto tx = [&](double x) { return margin + (x + static_cast<double>(mx)) * scale; };
    auto ty = [&](double y) { return margin + (static_cast<double>(my) - y) * scale; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * mx * scale + 2 * margin
      << "\" height=\"" << 2 * my * scale + 2 * margin << "\">\n";
    for (int u = 0; u < 4; ++u) {
        const double sx = (u & 1) ? -1.0 : 1.0;
        const double sy = (u & 2) ? -1.0 : 1.0;
        for (const auto& e : m.edges)
            o << "  <line x1=\"" << tx(sx * e[0].x) << "\" y1=\"" << ty(sy * e[0].y) << "\" x2=\""
              << tx(sx * e[1].x) << "\" y2=\"" << ty(sy * e[1].y)
              << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        o << "  <polygon points=\"";
        for (std::size_t i = 0; i < pi.polygon.size(); ++i)
            o << (i ? " " : "") << tx(sx * pi.polygon[i].x) << "," << ty(sy * pi.polygon[i].y);
        o << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& s : g.segments) {
        const double sx = (s.orthant & 1) ? -1.0 : 1.0;
        const double sy = (s.orthant & 2) ? -1.0 : 1.0;
        std::array<double, 4> xy{};
        for (int k = 0; k < 2; ++k) {
            const auto& e = m.edges[g.vertices[s.ends[k]].edge];
            xy[2 * k] = sx * (e[0].x + e[1].x) / 2.0;
            xy[2 * k + 1] = sy * (e[0].y + e[1].y) / 2.0;
        }
        o << "  <line x1=\"" << tx(xy[0]) << "\" y1=\"" << ty(xy[1]) << "\" x2=\"" << tx(xy[2])
          << "\" y2=\"" << ty(xy[3]) << "\" stroke=\"#000000\" stroke-width=\"3\"/>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace realog
