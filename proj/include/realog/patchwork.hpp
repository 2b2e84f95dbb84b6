#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "realog/degeneration.hpp"

namespace realog {

struct Point {
    long x = 0;
    long y = 0;
    auto operator<=>(const Point&) const = default;
};

/// Combinatorial patchworking input: a convex lattice polygon, a unimodular
/// triangulation on its lattice points, a sign per lattice point, and an
/// optional height function certifying that the triangulation is regular.
struct PatchworkInput {
    std::vector<Point> polygon;  // convex polygon vertices
    std::vector<std::array<std::size_t, 3>> triangles;  // indices into lattice_points()
    std::map<Point, long> heights;  // empty = regularity not certified
    std::map<Point, int> signs;     // +1 or -1 per lattice point
};

/// All lattice points of the polygon, lexicographically sorted; triangle
/// indices refer to this list.
std::vector<Point> lattice_points(const std::vector<Point>& polygon);

/// Convexity, sign/height coverage, unimodularity, triangulation validity
/// (pairwise face intersections, edge incidence counts, area), and, when
/// heights are present, strict local convexity across interior edges.
ValidationResult validate_patchwork(const PatchworkInput& pi);

/// The real curve of the patchwork, as a graph over the four orthant copies
/// of the polygon. Orthant codes: bit 0 flips x, bit 1 flips y; toric
/// boundary gluing identifies the two crossing orthants of boundary edges.
struct ViroGraph {
    struct Vertex {
        std::size_t edge = 0;  // index into edges
        int orthant = 0;       // canonical representative after identification
    };
    struct Segment {
        std::size_t face = 0;  // index into faces
        int orthant = 0;
        std::array<std::size_t, 2> ends{};  // vertex indices
    };

    std::vector<std::array<Point, 2>> edges;  // endpoints sorted, list sorted
    std::vector<std::array<Point, 3>> faces;  // vertices sorted, list sorted
    std::vector<std::size_t> edge_face_count;  // 1 = boundary, 2 = interior
    std::vector<Vertex> vertices;
    std::vector<Segment> segments;
    long component_count = 0;  // connected components = ovals + pseudolines
};

ViroGraph build_viro_graph(const PatchworkInput& pi);

/// Harnack sign distribution s(v) = (-1)^{xy} for the degree-d simplex with
/// its standard triangulation; UnsupportedPolygon for anything else.
std::map<Point, int> harnack_signs(const PatchworkInput& pi);

/// Ready-made degree-d simplex: standard triangulation, strictly convex
/// heights, Harnack signs.
PatchworkInput harnack_patchwork(int degree);

/// Enumeration and orientation conventions for the integral differentials;
/// cohomology must not depend on them.
struct SddConvention {
    bool reversed_edges = false;
    bool reversed_faces = false;
    bool flipped_orientations = false;
};

/// Stratified degeneration of the patchwork: one point stratum per
/// triangulation edge, one pair-of-pants stratum per triangle, weight
/// differentials from the local puncture bases, real differentials from the
/// Viro graph incidence.
StratifiedDegeneration to_sdd(const PatchworkInput& pi, const SddConvention& convention = {});

/// The symmetrized curve in the four reflected polygon copies, for visual
/// inspection.
std::string viro_svg(const PatchworkInput& pi);

}  // namespace realog
