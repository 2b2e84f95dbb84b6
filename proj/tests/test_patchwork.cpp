#include <doctest.h>

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "realog/assembly.hpp"
#include "realog/patchwork.hpp"

using realog::binomial;
using realog::build_cq;
using realog::build_real_complex;
using realog::build_viro_graph;
using realog::errc;
using realog::harnack_patchwork;
using realog::harnack_signs;
using realog::lattice_points;
using realog::PatchworkInput;
using realog::Point;
using realog::SddConvention;
using realog::to_sdd;
using realog::validate_patchwork;
using realog::ViroGraph;

namespace {

// Walks the segments cycle by cycle; independent of the union-find used by
// the builder. Returns -1 when some vertex does not have degree 2.
long cycle_count(const ViroGraph& g) {
    std::vector<std::vector<std::size_t>> inc(g.vertices.size());
    for (std::size_t i = 0; i < g.segments.size(); ++i) {
        inc[g.segments[i].ends[0]].push_back(i);
        inc[g.segments[i].ends[1]].push_back(i);
    }
    for (const auto& at : inc)
        if (at.size() != 2) return -1;
    std::vector<bool> seen(g.segments.size());
    long cycles = 0;
    for (std::size_t s0 = 0; s0 < g.segments.size(); ++s0) {
        if (seen[s0]) continue;
        ++cycles;
        std::size_t s = s0, v = g.segments[s0].ends[0];
        while (!seen[s]) {
            seen[s] = true;
            std::size_t w =
                g.segments[s].ends[0] == v ? g.segments[s].ends[1] : g.segments[s].ends[0];
            s = inc[w][0] == s ? inc[w][1] : inc[w][0];
            v = w;
        }
    }
    return cycles;
}

void check_graph_invariants(const ViroGraph& g) {
    CHECK(g.segments.size() == 3 * g.faces.size());
    std::size_t expected_vertices = 0;
    for (std::size_t c : g.edge_face_count) expected_vertices += c == 2 ? 2 : 1;
    CHECK(g.vertices.size() == expected_vertices);
    for (std::size_t f = 0; f < g.faces.size(); ++f) {
        std::set<int> orthants;
        for (const auto& s : g.segments)
            if (s.face == f) orthants.insert(s.orthant);
        CHECK(orthants.size() == 3);
    }
    long cycles = cycle_count(g);
    CHECK(cycles >= 1);
    CHECK(cycles == g.component_count);
}

PatchworkInput square_patchwork() {
    PatchworkInput pi;
    pi.polygon = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    pi.triangles = {{0, 1, 2}, {1, 2, 3}};
    for (const Point& p : lattice_points(pi.polygon)) {
        pi.signs[p] = 1;
        pi.heights[p] = p.x * p.x + p.x * p.y + p.y * p.y;
    }
    return pi;
}

// Projective points over F_q with all coordinates and their sum nonzero.
long pants_point_count(int k, long q) {
    long count = 0;
    std::vector<long> x(static_cast<std::size_t>(k) + 1, 1);
    while (true) {
        long sum = 0;
        for (long v : x) sum += v;
        if (sum % q != 0) ++count;
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == q) {
            x[i] = 1;
            ++i;
        }
        if (i == x.size()) break;
    }
    REQUIRE(count % (q - 1) == 0);
    return count / (q - 1);
}

// Chambers of the coordinate-plus-sum arrangement in P^k, enumerated as
// realized sign vectors modulo global negation on a grid.
long pants_real_regions(int k) {
    const long r = k + 2;
    std::set<std::vector<int>> regions;
    std::vector<long> x(static_cast<std::size_t>(k) + 1, -r);
    while (true) {
        bool nonzero = true;
        long sum = 0;
        for (long v : x) {
            nonzero = nonzero && v != 0;
            sum += v;
        }
        if (nonzero && sum != 0) {
            std::vector<int> s;
            for (long v : x) s.push_back(v > 0 ? 1 : -1);
            s.push_back(sum > 0 ? 1 : -1);
            if (s[0] < 0)
                for (int& v : s) v = -v;
            regions.insert(s);
        }
        std::size_t i = 0;
        while (i < x.size() && ++x[i] > r) {
            x[i] = -r;
            ++i;
        }
        if (i == x.size()) break;
    }
    return static_cast<long>(regions.size());
}

std::vector<mpq_class> solve_linear(std::vector<std::vector<mpq_class>> a,
                                    std::vector<mpq_class> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        REQUIRE(piv < n);
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<mpq_class> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Betti numbers of the k-dimensional pair of pants, recovered from exact
// point counts over several primes: #X(F_q) = sum_i (-1)^i b_i q^{k-i}.
std::vector<long> pants_betti_from_counts(int k) {
    const std::vector<long> primes{3, 5, 7, 11, 13};
    const std::size_t n = static_cast<std::size_t>(k) + 1;
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    std::vector<mpq_class> rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
        mpq_class pw = 1;
        for (std::size_t i = 0; i < n; ++i) {
            a[j][i] = pw;
            pw *= primes[j];
        }
        rhs[j] = pants_point_count(k, primes[j]);
    }
    auto coeff = solve_linear(a, rhs);
    std::vector<long> betti;
    for (int i = 0; i <= k; ++i) {
        mpq_class b = coeff[static_cast<std::size_t>(k - i)];
        if (i % 2) b = -b;
        b.canonicalize();
        REQUIRE(b.get_den() == 1);
        REQUIRE(b.get_num() >= 0);
        betti.push_back(static_cast<long>(b.get_num().get_si()));
    }
    // the fitted polynomial must reproduce the counts at the held-out primes
    for (std::size_t j = n; j < primes.size(); ++j) {
        mpq_class value = 0, pw = 1;
        for (std::size_t i = 0; i < n; ++i) {
            value += coeff[i] * pw;
            pw *= primes[j];
        }
        CHECK(value == pants_point_count(k, primes[j]));
    }
    return betti;
}

long count_occurrences(const std::string& text, const std::string& needle) {
    long n = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("lattice point enumeration") {
    CHECK(lattice_points({{0, 0}, {1, 0}, {0, 1}}) ==
          std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(lattice_points({{0, 0}, {2, 0}, {0, 2}}) ==
          std::vector<Point>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
    // orientation of the input does not matter
    CHECK(lattice_points({{0, 0}, {0, 1}, {1, 1}, {1, 0}}) ==
          std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(lattice_points({{0, 0}, {1, 0}, {2, 0}}).empty());
}

TEST_CASE("patchwork validation") {
    SUBCASE("valid input without heights warns about regularity") {
        PatchworkInput pi = harnack_patchwork(2);
        pi.heights.clear();
        auto r = validate_patchwork(pi);
        REQUIRE(r.ok);
        REQUIRE(r.warnings.size() == 1);
        CHECK(r.warnings[0].find("regularity unverified") != std::string::npos);
    }
    SUBCASE("valid input with heights has no warnings") {
        auto r = validate_patchwork(harnack_patchwork(3));
        REQUIRE(r.ok);
        CHECK(r.warnings.empty());
    }
    SUBCASE("degenerate and non-convex polygons") {
        PatchworkInput pi;
        pi.polygon = {{0, 0}, {1, 0}};
        CHECK(validate_patchwork(pi).code == errc::unsupported_polygon);
        pi.polygon = {{0, 0}, {1, 0}, {2, 0}};
        auto r = validate_patchwork(pi);
        CHECK_FALSE(r.ok);
        CHECK(r.code == errc::unsupported_polygon);
        pi.polygon = {{0, 0}, {3, 0}, {1, 1}, {0, 3}};
        r = validate_patchwork(pi);
        CHECK_FALSE(r.ok);
        CHECK(r.code == errc::unsupported_polygon);
        CHECK(r.message.find("not convex") != std::string::npos);
        pi.polygon = {{0, 0}, {1, 0}, {1, 0}, {0, 1}};
        CHECK(validate_patchwork(pi).code == errc::unsupported_polygon);
    }
    SUBCASE("sign table must cover exactly the lattice points") {
        PatchworkInput pi = harnack_patchwork(2);
        pi.signs.erase({1, 1});
        auto r = validate_patchwork(pi);
        CHECK_FALSE(r.ok);
        CHECK(r.code == errc::parse_error);
        CHECK(r.message.find("sign missing") != std::string::npos);

        pi = harnack_patchwork(2);
        pi.signs[{1, 1}] = 2;
        r = validate_patchwork(pi);
        CHECK(r.code == errc::parse_error);
        CHECK(r.message.find("must be +1 or -1") != std::string::npos);

        pi = harnack_patchwork(2);
        pi.signs[{9, 9}] = 1;
        r = validate_patchwork(pi);
        CHECK(r.code == errc::parse_error);
        CHECK(r.message.find("outside the polygon") != std::string::npos);
    }
    SUBCASE("height table coverage") {
        PatchworkInput pi = harnack_patchwork(2);
        pi.heights.erase({1, 1});
        auto r = validate_patchwork(pi);
        CHECK(r.code == errc::parse_error);
        CHECK(r.message.find("height missing") != std::string::npos);
    }
    SUBCASE("non-unimodular triangle") {
        PatchworkInput pi;
        pi.polygon = {{0, 0}, {2, 0}, {0, 1}};
        pi.triangles = {{0, 3, 1}};  // points sorted: (0,0) (0,1) (1,0) (2,0)
        for (const Point& p : lattice_points(pi.polygon)) pi.signs[p] = 1;
        auto r = validate_patchwork(pi);
        CHECK_FALSE(r.ok);
        CHECK(r.code == errc::not_unimodular);
        CHECK(r.message.find("normalized area 2") != std::string::npos);
    }
    SUBCASE("triangle count must match the polygon area") {
        PatchworkInput pi;
        pi.polygon = {{0, 0}, {2, 0}, {0, 1}};
        pi.triangles = {{0, 2, 1}};
        for (const Point& p : lattice_points(pi.polygon)) pi.signs[p] = 1;
        auto r = validate_patchwork(pi);
        CHECK(r.code == errc::not_a_triangulation);
        CHECK(r.message.find("cannot tile") != std::string::npos);
    }
    SUBCASE("overlapping triangles") {
        PatchworkInput pi = square_patchwork();
        pi.heights.clear();
        pi.triangles = {{0, 2, 1}, {0, 2, 3}};  // both on the same side of (0,0)-(1,0)
        auto r = validate_patchwork(pi);
        CHECK_FALSE(r.ok);
        CHECK(r.code == errc::not_a_triangulation);
        CHECK(r.message.find("overlap") != std::string::npos);
    }
    SUBCASE("duplicate and malformed triangles") {
        PatchworkInput pi = square_patchwork();
        pi.triangles = {{0, 1, 2}, {0, 1, 2}};
        CHECK(validate_patchwork(pi).message.find("duplicate") != std::string::npos);
        pi.triangles = {{0, 1, 1}, {1, 2, 3}};
        CHECK(validate_patchwork(pi).message.find("repeated vertices") != std::string::npos);
        pi.triangles = {{0, 1, 9}, {1, 2, 3}};
        CHECK(validate_patchwork(pi).message.find("out of range") != std::string::npos);
        pi.triangles = {};
        CHECK(validate_patchwork(pi).code == errc::not_a_triangulation);
    }
}

TEST_CASE("regularity of lifted heights") {
    SUBCASE("squared norm heights fail on antidiagonal edges") {
        PatchworkInput pi = harnack_patchwork(2);
        for (const Point& p : lattice_points(pi.polygon)) pi.heights[p] = p.x * p.x + p.y * p.y;
        auto r = validate_patchwork(pi);
        CHECK_FALSE(r.ok);
        CHECK(r.code == errc::not_regular);
        CHECK(r.message.find("not strictly convex") != std::string::npos);
    }
    SUBCASE("the shipped heights are strictly convex for degrees 1..5") {
        for (int d = 1; d <= 5; ++d) {
            auto r = validate_patchwork(harnack_patchwork(d));
            CHECK(r.ok);
            CHECK(r.warnings.empty());
        }
    }
    SUBCASE("square with flat diagonal lift is rejected") {
        PatchworkInput pi = square_patchwork();
        for (const Point& p : lattice_points(pi.polygon)) pi.heights[p] = p.x * p.x + p.y * p.y;
        CHECK(validate_patchwork(pi).code == errc::not_regular);
        CHECK(validate_patchwork(square_patchwork()).ok);
    }
}

TEST_CASE("harnack sign rule") {
    PatchworkInput pi = harnack_patchwork(3);
    CHECK(lattice_points(pi.polygon).size() == 10);
    CHECK(pi.triangles.size() == 9);
    auto s = harnack_signs(pi);
    CHECK(s == pi.signs);
    CHECK(s.at({0, 0}) == 1);
    CHECK(s.at({1, 0}) == 1);
    CHECK(s.at({1, 1}) == -1);
    CHECK(s.at({1, 2}) == 1);
    CHECK(s.at({2, 1}) == 1);

    CHECK_THROWS_AS(harnack_patchwork(0), realog::error);
    CHECK_THROWS_WITH_AS(harnack_signs(square_patchwork()), doctest::Contains("simplex"),
                         realog::error);

    // a valid but non-standard triangulation of the degree-2 simplex:
    // the edge (1,0)-(0,1) is flipped to (0,0)-(1,1)
    PatchworkInput flipped;
    flipped.polygon = {{0, 0}, {2, 0}, {0, 2}};
    flipped.triangles = {{0, 3, 4}, {0, 4, 1}, {3, 5, 4}, {1, 4, 2}};
    for (const Point& p : lattice_points(flipped.polygon)) flipped.signs[p] = 1;
    REQUIRE(validate_patchwork(flipped).ok);
    CHECK_THROWS_WITH_AS(harnack_signs(flipped), doctest::Contains("standard"), realog::error);
}

TEST_CASE("viro graph structure and harnack ovals") {
    const long expected_components[] = {1, 1, 2, 4, 7};  // degrees 1..5
    for (int d = 1; d <= 5; ++d) {
        CAPTURE(d);
        auto g = build_viro_graph(harnack_patchwork(d));
        const std::size_t faces = static_cast<std::size_t>(d) * d;
        const std::size_t interior = 3 * static_cast<std::size_t>(d) * (d - 1) / 2;
        const std::size_t boundary = 3 * static_cast<std::size_t>(d);
        REQUIRE(g.faces.size() == faces);
        REQUIRE(g.edges.size() == interior + boundary);
        CHECK(std::count(g.edge_face_count.begin(), g.edge_face_count.end(), 2) ==
              static_cast<long>(interior));
        CHECK(g.vertices.size() == 3 * faces);
        check_graph_invariants(g);
        CHECK(g.component_count == expected_components[d - 1]);
    }
}

TEST_CASE("crossings pair up under the boundary reflection") {
    PatchworkInput pi = harnack_patchwork(3);
    auto g = build_viro_graph(pi);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        // independent recount of the crossing orthants of each edge
        std::vector<int> crossing;
        for (int u = 0; u < 4; ++u) {
            auto tw = [&](const Point& p) {
                int s = pi.signs.at(p);
                if ((u & 1) && (p.x & 1)) s = -s;
                if ((u & 2) && (p.y & 1)) s = -s;
                return s;
            };
            if (tw(g.edges[e][0]) != tw(g.edges[e][1])) crossing.push_back(u);
        }
        REQUIRE(crossing.size() == 2);
        const Point delta{g.edges[e][1].x - g.edges[e][0].x, g.edges[e][1].y - g.edges[e][0].y};
        // the two crossings differ by the reflection mask of the edge normal
        const int dmask = static_cast<int>(delta.x & 1) | (static_cast<int>(delta.y & 1) << 1);
        const int nmask = dmask == 3 ? 3 : 3 ^ dmask;
        CHECK((crossing[0] ^ crossing[1]) == nmask);

        std::vector<int> stored;
        for (const auto& v : g.vertices)
            if (v.edge == e) stored.push_back(v.orthant);
        if (g.edge_face_count[e] == 1) {
            REQUIRE(stored.size() == 1);
            CHECK(stored[0] == std::min(crossing[0], crossing[1]));
        } else {
            REQUIRE(stored.size() == 2);
            CHECK(stored == crossing);
        }
    }
}

TEST_CASE("random sign distributions still give disjoint cycles") {
    std::mt19937 rng(20240817);
    PatchworkInput base = harnack_patchwork(3);
    base.heights.clear();
    for (int trial = 0; trial < 25; ++trial) {
        CAPTURE(trial);
        PatchworkInput pi = base;
        for (auto& [p, s] : pi.signs) s = (rng() & 1) ? 1 : -1;
        auto g = build_viro_graph(pi);
        check_graph_invariants(g);
        auto report = realog::verdict(to_sdd(pi));
        CHECK(report.verified);
        CHECK(report.inequality_holds);
        CHECK(report.betti_real[0] == g.component_count);
        CHECK(report.betti_real[1] == g.component_count);
    }
}

TEST_CASE("line patchwork pins the differential conventions") {
    PatchworkInput pi = harnack_patchwork(1);
    auto g = build_viro_graph(pi);
    REQUIRE(g.vertices.size() == 3);
    REQUIRE(g.segments.size() == 3);
    CHECK(g.component_count == 1);
    // boundary identification leaves one vertex per edge, at the smaller
    // crossing orthant: {2,3} for the vertical edge, {1,3} for the
    // horizontal, {1,2} for the diagonal
    CHECK(g.vertices[0].orthant == 2);
    CHECK(g.vertices[1].orthant == 1);
    CHECK(g.vertices[2].orthant == 1);

    auto sdd = to_sdd(pi);
    REQUIRE(realog::validate_sdd(sdd).ok);
    REQUIRE(sdd.strata.size() == 4);
    CHECK(sdd.strata[0].id == "e0");
    CHECK(sdd.strata[3].id == "t0");
    CHECK(sdd.closure ==
          std::vector<std::pair<std::string, std::string>>{
              {"e0", "t0"}, {"e1", "t0"}, {"e2", "t0"}});
    CHECK(sdd.cq_differentials.at({0, 0}) ==
          realog::IntegerMatrix::from_rows({{1, 0, -1}, {0, 1, -1}}));
    CHECK(sdd.cq_differentials.count({1, 0}) == 0);
    CHECK(sdd.real_differentials.at(0) ==
          realog::IntegerMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(sdd.real_vertex_counts.at("e0") == 1);
    CHECK(sdd.real_vertex_counts.at("t0") == 3);

    auto cq0 = build_cq(sdd, 0);
    CHECK(cq0.rank_at(0) == 3);
    CHECK(cq0.rank_at(1) == 2);
    auto h0 = cq0.cohomology();
    CHECK(h0.at(0).rank == 1);
    CHECK(h0.at(1).rank == 0);
    auto cq1 = build_cq(sdd, 1);
    CHECK(cq1.rank_at(0) == 0);
    CHECK(cq1.rank_at(1) == 1);
    CHECK(cq1.cohomology().at(1).rank == 1);

    auto report = realog::verdict(sdd);
    CHECK(report.betti_real == std::vector<long>{1, 1});
    CHECK(report.hodge == std::vector<std::vector<long>>{{1, 0}, {0, 1}});
    CHECK(report.maximal);
    CHECK(report.verified);
}

TEST_CASE("patchwork degenerations across degrees") {
    for (int d = 1; d <= 5; ++d) {
        CAPTURE(d);
        auto pi = harnack_patchwork(d);
        auto g = build_viro_graph(pi);
        auto sdd = to_sdd(pi);
        const long genus = static_cast<long>(d - 1) * (d - 2) / 2;
        const std::size_t edges = 3 * static_cast<std::size_t>(d) * (d + 1) / 2;
        const std::size_t interior = 3 * static_cast<std::size_t>(d) * (d - 1) / 2;
        const std::size_t faces = static_cast<std::size_t>(d) * d;

        auto v = realog::validate_sdd(sdd);
        REQUIRE(v.ok);
        CHECK(v.warnings.empty());
        CHECK(sdd.strata.size() == edges + faces);
        CHECK(sdd.closure.size() == 3 * faces);
        CHECK(realog::validate_hypotheses(sdd).hodge_applicable());

        // multiplicities record how many components meet along each stratum
        for (std::size_t e = 0; e < edges; ++e)
            CHECK(sdd.find("e" + std::to_string(e))->multiplicity ==
                  static_cast<int>(g.edge_face_count[e]));

        auto cq0 = build_cq(sdd, 0);
        REQUIRE(cq0.rank_at(0) == edges);
        REQUIRE(cq0.rank_at(1) == 2 * faces);
        auto h0 = cq0.cohomology();
        CHECK(h0.at(0).rank == 1);
        CHECK(h0.at(1).rank == genus);
        CHECK(h0.at(0).torsion.empty());
        CHECK(h0.at(1).torsion.empty());

        auto cq1 = build_cq(sdd, 1);
        REQUIRE(cq1.rank_at(0) == interior);
        REQUIRE(cq1.rank_at(1) == faces);
        auto h1 = cq1.cohomology();
        CHECK(h1.at(0).rank == genus);
        CHECK(h1.at(1).rank == 1);
        CHECK(h1.at(0).torsion.empty());
        CHECK(h1.at(1).torsion.empty());

        auto rc = build_real_complex(sdd);
        REQUIRE(rc.complex.rank_at(0) == g.vertices.size());
        REQUIRE(rc.complex.rank_at(1) == 3 * faces);
        auto hr = rc.complex.cohomology();
        CHECK(hr.at(0).rank == g.component_count);
        CHECK(hr.at(1).rank == g.component_count);

        auto report = realog::verdict(sdd);
        CHECK(report.betti_real == std::vector<long>{genus + 1, genus + 1});
        CHECK(report.hodge == std::vector<std::vector<long>>{{1, genus}, {genus, 1}});
        for (const auto& row : report.inequalities) CHECK(row.slack == 0);
        CHECK(report.torsion_free);
        CHECK(report.mod2_compatible);
        CHECK(report.maximal);
        CHECK(report.verified);
        CHECK(report.betti_total == 2 * genus + 2);
        CHECK(report.mod2_total == 2 * genus + 2);
    }
}

TEST_CASE("harnack cubic filtration degenerates at the first page") {
    auto sdd = to_sdd(harnack_patchwork(3));
    auto rc = build_real_complex(sdd);
    auto f = realog::augmentation_filtration(sdd, rc);
    REQUIRE(realog::validate_filtration(f).ok);

    auto level_dims = realog::filtration_level_dims(f);
    REQUIRE(level_dims.size() == 2);
    CHECK(level_dims[0][0] == 27);
    CHECK(level_dims[0][1] == 27);
    // the deepest level has the size of the weight-0 complex, the graded
    // quotient the size of the weight-1 complex
    CHECK(level_dims[1][0] == 18);
    CHECK(level_dims[1][1] == 18);

    auto pages = realog::spectral_sequence(f);
    REQUIRE(!pages.empty());
    CHECK(pages.front().stable);
    CHECK(pages.front().at(0, 0) == 1);
    CHECK(pages.front().at(0, 1) == 1);
    CHECK(pages.front().at(1, -1) == 1);
    CHECK(pages.front().at(1, 0) == 1);
}

TEST_CASE("enumeration conventions do not change cohomology") {
    auto pi = harnack_patchwork(3);
    auto base_sdd = to_sdd(pi);
    auto base0 = build_cq(base_sdd, 0).cohomology();
    auto base1 = build_cq(base_sdd, 1).cohomology();
    auto base_real = build_real_complex(base_sdd).complex.cohomology();

    bool saw_different_matrix = false;
    for (int mask = 0; mask < 8; ++mask) {
        CAPTURE(mask);
        SddConvention convention;
        convention.reversed_edges = mask & 1;
        convention.reversed_faces = mask & 2;
        convention.flipped_orientations = mask & 4;
        auto sdd = to_sdd(pi, convention);
        if (sdd.cq_differentials != base_sdd.cq_differentials) saw_different_matrix = true;
        CHECK(build_cq(sdd, 0).cohomology() == base0);
        CHECK(build_cq(sdd, 1).cohomology() == base1);
        CHECK(build_real_complex(sdd).complex.cohomology() == base_real);
        CHECK(realog::verdict(sdd).betti_real == std::vector<long>{2, 2});
    }
    // the property test is only meaningful if conventions change the matrices
    CHECK(saw_different_matrix);
}

TEST_CASE("square polygon patchwork") {
    PatchworkInput pi = square_patchwork();
    REQUIRE(validate_patchwork(pi).ok);
    auto g = build_viro_graph(pi);
    CHECK(g.faces.size() == 2);
    CHECK(g.edges.size() == 5);
    CHECK(g.vertices.size() == 6);
    CHECK(g.segments.size() == 6);
    check_graph_invariants(g);
    CHECK(g.component_count == 1);

    auto report = realog::verdict(to_sdd(pi));
    CHECK(report.betti_real == std::vector<long>{1, 1});
    CHECK(report.hodge == std::vector<std::vector<long>>{{1, 0}, {0, 1}});
    CHECK(report.maximal);
    CHECK(report.verified);
}

TEST_CASE("pair of pants invariants from independent counts") {
    // dimension 1 certifies the stratum data used by to_sdd
    auto betti = pants_betti_from_counts(1);
    REQUIRE(betti == std::vector<long>{1, 2});
    CHECK(pants_real_regions(1) == 3);

    auto sdd = to_sdd(harnack_patchwork(1));
    const realog::Stratum* pants = sdd.find("t0");
    REQUIRE(pants != nullptr);
    // H_c^j of a smooth surface is H^{2-j} by duality
    CHECK(pants->hc_ranks == std::vector<long>{0, betti[1], betti[0]});
    CHECK(pants->real_components == pants_real_regions(1));
    CHECK(realog::stratum_mod2_total(*pants) == betti[0] + betti[1]);

    // higher dimensions: counts fit binomials and the real chamber count
    // matches the total Betti number, so pants of any dimension are maximal
    for (int k = 1; k <= 3; ++k) {
        CAPTURE(k);
        auto b = pants_betti_from_counts(k);
        long total = 0;
        for (int i = 0; i <= k; ++i) {
            CHECK(b[i] == binomial(k + 1, i));
            total += b[i];
        }
        CHECK(pants_real_regions(k) == total);
        CHECK(total == (1L << (k + 1)) - 1);
    }
}

TEST_CASE("svg rendering of the symmetrized curve") {
    auto svg = realog::viro_svg(harnack_patchwork(3));
    CHECK(svg.substr(0, 4) == "<svg");
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(svg, "<polygon") == 4);
    CHECK(count_occurrences(svg, "stroke=\"#000000\"") == 27);
}
