#include "realog/catalog.hpp"

namespace realog {

namespace {

Stratum node_stratum(const std::string& id) {
    Stratum s;
    s.id = id;
    s.dim = 0;
    s.multiplicity = 2;
    s.hc_ranks = {1};
    s.real_components = 1;
    return s;
}

Stratum punctured_line_stratum(const std::string& id) {
    Stratum s;
    s.id = id;
    s.dim = 1;
    s.multiplicity = 1;
    s.hc_ranks = {0, 1, 1};
    s.real_components = 2;
    return s;
}

// Cycle of three lines with nodes n0,n1,n2 and line strata c0,c1,c2, c_j
// meeting n_j and n_{j+1}. The twisted variant swaps the two real branches
// along one gluing, which fuses the two covering circles into one.
StratifiedDegeneration elliptic_cycle(bool twisted) {
    StratifiedDegeneration sdd;
    sdd.fiber_dim = 1;
    for (int j = 0; j < 3; ++j) sdd.strata.push_back(node_stratum("n" + std::to_string(j)));
    for (int j = 0; j < 3; ++j)
        sdd.strata.push_back(punctured_line_stratum("c" + std::to_string(j)));
    for (int j = 0; j < 3; ++j) {
        sdd.closure.push_back({"n" + std::to_string(j), "c" + std::to_string(j)});
        sdd.closure.push_back({"n" + std::to_string((j + 1) % 3), "c" + std::to_string(j)});
    }

    IntegerMatrix circulant(3, 3, {1, -1, 0, 0, 1, -1, -1, 0, 1});
    sdd.cq_differentials.emplace(std::make_pair(0, 0), circulant);
    sdd.cq_differentials.emplace(std::make_pair(1, 0), circulant);

    IntegerMatrix real_d(6, 6);
    for (int j = 0; j < 3; ++j)
        for (int g = 0; g < 2; ++g) {
            int col = 2 * j + g;
            int prev = (j + 2) % 3;
            int branch_prev = (twisted && j == 0) ? 1 - g : g;
            real_d.at(static_cast<std::size_t>(2 * prev + branch_prev),
                      static_cast<std::size_t>(col)) = 1;
            real_d.at(static_cast<std::size_t>(2 * j + g), static_cast<std::size_t>(col)) = 1;
        }
    sdd.real_differentials.emplace(0, real_d);
    return sdd;
}

// P^1 stratified into its two toric fixed points and the torus between them.
StratifiedDegeneration trivial_p1() {
    StratifiedDegeneration sdd;
    sdd.fiber_dim = 1;
    Stratum p;
    p.dim = 0;
    p.multiplicity = 1;
    p.hc_ranks = {1};
    p.real_components = 1;
    p.id = "p0";
    sdd.strata.push_back(p);
    p.id = "p1";
    sdd.strata.push_back(p);
    sdd.strata.push_back(punctured_line_stratum("c"));
    sdd.closure = {{"p0", "c"}, {"p1", "c"}};
    sdd.cq_differentials.emplace(std::make_pair(0, 0), IntegerMatrix(1, 2, {1, -1}));
    sdd.real_differentials.emplace(0, IntegerMatrix(2, 2, {1, 1, 1, 1}));
    return sdd;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"elliptic-cycle-3-untwisted", false,
         "cycle of three lines, untwisted real gluing (maximal)"},
        {"elliptic-cycle-3-twisted", false,
         "cycle of three lines, one gluing twisted (non-maximal)"},
        {"trivial-p1-toric", false, "P1 stratified into toric orbits"},
        {"line-d1", true, "degree-1 patchwork, a single pseudoline"},
        {"harnack-d3", true, "degree-3 Harnack curve, 2 real components"},
        {"harnack-d4", true, "degree-4 Harnack curve, 4 real components"},
        {"harnack-d5", true, "degree-5 Harnack curve, 7 real components"},
    };
    return entries;
}

PatchworkInput catalog_patchwork(const std::string& name) {
    if (name == "line-d1") return harnack_patchwork(1);
    if (name == "harnack-d3") return harnack_patchwork(3);
    if (name == "harnack-d4") return harnack_patchwork(4);
    if (name == "harnack-d5") return harnack_patchwork(5);
    fail(errc::unknown_name, "no patchwork named \"" + name + "\" in the catalog");
}

StratifiedDegeneration catalog_sdd(const std::string& name) {
    if (name == "elliptic-cycle-3-untwisted") return elliptic_cycle(false);
    if (name == "elliptic-cycle-3-twisted") return elliptic_cycle(true);
    if (name == "trivial-p1-toric") return trivial_p1();
    for (const auto& e : catalog_entries())
        if (e.name == name && e.patchwork) return to_sdd(catalog_patchwork(name));
    fail(errc::unknown_name, "no entry named \"" + name + "\" in the catalog");
}

}  // namespace realog
