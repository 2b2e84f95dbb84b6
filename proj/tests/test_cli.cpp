#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string cli = REALOG_CLI;

struct CliResult {
    int exit_code = -1;
    std::string out;  // stdout and stderr interleaved
};

CliResult run(const std::string& args) {
    CliResult r;
    FILE* pipe = popen((cli + " " + args + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("examples list names the whole catalog") {
    auto r = run("examples list");
    CHECK(r.exit_code == 0);
    for (const char* name :
         {"elliptic-cycle-3-untwisted", "elliptic-cycle-3-twisted", "trivial-p1-toric",
          "line-d1", "harnack-d3", "harnack-d4", "harnack-d5"})
        CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("every catalog entry emits and re-validates") {
    for (const char* name :
         {"elliptic-cycle-3-untwisted", "elliptic-cycle-3-twisted", "trivial-p1-toric",
          "line-d1", "harnack-d3", "harnack-d4", "harnack-d5"}) {
        CAPTURE(name);
        auto r = run(std::string("examples emit ") + name + " | " + cli + " validate -");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("\"ok\": true") != std::string::npos);
    }
    auto unknown = run("examples emit no-such-entry");
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.out.find("UnknownName") != std::string::npos);
}

TEST_CASE("validate classifies violations and parse errors") {
    auto bad = write_temp("realog_cli_bad.json", "this is not json\n");
    auto r = run("validate " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("ParseError") != std::string::npos);

    // differential block of the wrong shape: d on c should be 1 x 2
    auto sdd = write_temp("realog_cli_badshape.json", R"({
      "fiber_dim": 1,
      "strata": [
        {"id": "p0", "dim": 0, "multiplicity": 1, "hc_ranks": [1], "real_components": 1},
        {"id": "p1", "dim": 0, "multiplicity": 1, "hc_ranks": [1], "real_components": 1},
        {"id": "c", "dim": 1, "multiplicity": 1, "hc_ranks": [0, 1, 1], "real_components": 2}
      ],
      "closure": [["p0", "c"], ["p1", "c"]],
      "cq_differentials": {"0,0": {"rows": 1, "cols": 1, "entries": [[1]]}},
      "real_differentials": {"0": {"rows": 2, "cols": 2, "entries": [[1, 1], [1, 1]]}}
    })");
    r = run("validate " + sdd.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("ShapeMismatch") != std::string::npos);

    auto missing = run("validate /no/such/file.json");
    CHECK(missing.exit_code == 2);

    std::filesystem::remove(bad);
    std::filesystem::remove(sdd);
}

TEST_CASE("analyze renders the reference verdicts") {
    auto r = run(std::string("examples emit harnack-d3 | ") + cli + " analyze -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"maximal\": true") != std::string::npos);
    CHECK(r.out.find("\"betti_real\": [\n    2,\n    2\n  ]") != std::string::npos);

    r = run(std::string("examples emit elliptic-cycle-3-twisted | ") + cli +
            " analyze - --format md --coeff f2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("- betti_real: 1 1") != std::string::npos);
    CHECK(r.out.find("- maximal: no") != std::string::npos);
    CHECK(r.out.find("rank") == std::string::npos);  // integral columns suppressed
}

TEST_CASE("hypothesis violations warn by default and fail under --strict") {
    // real point count 2 exceeds the total mod-2 cohomology of a point
    auto sdd = write_temp("realog_cli_hypo.json", R"({
      "fiber_dim": 0,
      "strata": [
        {"id": "pt", "dim": 0, "multiplicity": 1, "hc_ranks": [1], "real_components": 2}
      ]
    })");
    auto r = run("analyze " + sdd.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("HypothesisViolated") != std::string::npos);
    CHECK(r.out.find("\"verified\": false") != std::string::npos);

    r = run("analyze " + sdd.string() + " --strict");
    CHECK(r.exit_code == 1);
    std::filesystem::remove(sdd);
}

TEST_CASE("snf prints invariant factors") {
    auto m = write_temp("realog_cli_snf.json",
                        R"({"rows": 2, "cols": 2, "entries": [[2, 4], [6, 8]]})");
    auto r = run("snf " + m.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"factors\": [\n    2,\n    4\n  ]") != std::string::npos);
    std::filesystem::remove(m);

    auto id = write_temp("realog_cli_id.json",
                         R"({"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]})");
    r = run("snf " + id.string());
    CHECK(r.out.find("\"factors\": [\n    1,\n    1\n  ]") != std::string::npos);
    std::filesystem::remove(id);

    auto empty = write_temp("realog_cli_empty.json", R"({"rows": 0, "cols": 0, "entries": []})");
    r = run("snf " + empty.string());
    CHECK(r.out.find("\"factors\": []") != std::string::npos);
    std::filesystem::remove(empty);
}

TEST_CASE("patchwork pipeline renders curve, svg, and verdict") {
    auto svg_path = std::filesystem::temp_directory_path() / "realog_cli_line.svg";
    auto r = run("patchwork --catalog line-d1 --svg " + svg_path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"components\": 1") != std::string::npos);

    std::ifstream svg_in(svg_path);
    std::string svg(std::istreambuf_iterator<char>(svg_in), {});
    CHECK(svg.find("<svg") != std::string::npos);
    std::size_t dark_lines = 0;
    for (std::size_t pos = 0; (pos = svg.find("stroke=\"#000000\"", pos)) != std::string::npos;
         ++pos)
        ++dark_lines;
    CHECK(dark_lines == 3);  // one pseudoline out of three segments
    std::filesystem::remove(svg_path);

    r = run("patchwork --catalog harnack-d4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"components\": 4") != std::string::npos);
    CHECK(r.out.find("\"betti_real\": [\n    4,\n    4\n  ]") != std::string::npos);

    // 2x-scaled simplex with a single non-unimodular triangle
    auto bad = write_temp("realog_cli_nonuni.json", R"({
      "polygon": [[0, 0], [2, 0], [0, 2]],
      "triangles": [[0, 5, 2]],
      "signs": {"0,0": 1, "0,1": 1, "0,2": 1, "1,0": 1, "1,1": 1, "2,0": 1}
    })");
    r = run("patchwork " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("NotUnimodular") != std::string::npos);
    std::filesystem::remove(bad);

    r = run("patchwork");
    CHECK(r.exit_code == 2);
}
