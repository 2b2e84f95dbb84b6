#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "realog/errors.hpp"
#include "realog/int_matrix.hpp"

namespace realog {

/// One open stratum of the special fiber: a smooth complex variety X of
/// complex dimension `dim`, lying on `multiplicity` components, together with
/// its compactly supported integral cohomology and the component count of its
/// real locus.
struct Stratum {
    std::string id;
    int dim = 0;
    int multiplicity = 1;
    std::vector<long> hc_ranks;                      // H_c^j(X(C), Z) free ranks, j = 0..2 dim
    std::vector<std::vector<mpz_class>> hc_torsion;  // invariant factors per degree j
    long real_components = 0;                        // b_0 of X(R)
    bool pure_ii = true;
    // set when X(R) has cohomology above degree 0; breaks hypothesis (a)
    bool real_higher_cohomology = false;
};

long binomial(int n, int k);

/// dim_F2 H_c^j(X(C), F2) via universal coefficients.
long stratum_mod2_dim(const Stratum& s, int j);
long stratum_mod2_total(const Stratum& s);

/// Free ranks of H_c^n of the log stratum, i.e. of X x (S^1)^{multiplicity-1}
/// by the Kuenneth formula; n = 0 .. 2 dim + multiplicity - 1.
std::vector<long> log_stratum_hc_ranks(const Stratum& s);

struct WeightEntry {
    int j = 0;       // base cohomological degree
    int i = 0;       // fiber exterior power
    int weight = 0;  // 2j - 2 dim + 2i
};
std::vector<WeightEntry> log_stratum_weights(const Stratum& s);

/// Number of points of the real 2^{multiplicity-1}-fold cover of X(R);
/// requires hypothesis (a) for the stratum.
long real_cover_h0(const Stratum& s);

struct StratifiedDegeneration {
    int fiber_dim = 0;
    std::vector<Stratum> strata;
    /// (smaller id, larger id): the first stratum lies in the closure of the second
    std::vector<std::pair<std::string, std::string>> closure;
    /// (q, p) -> matrix of the degree-p differential of the q-th complex
    std::map<std::pair<int, int>, IntegerMatrix> cq_differentials;
    /// p -> degree-p differential of the real cover complex
    std::map<int, IntegerMatrix> real_differentials;
    /// optional per-stratum override of the real cover point count
    std::map<std::string, long> real_vertex_counts;
    bool allow_zero_differentials = false;

    const Stratum* find(const std::string& id) const;
    std::vector<std::size_t> strata_of_dim(int d) const;  // indices, in input order
};

struct HypothesisReport {
    struct PerStratum {
        std::string id;
        bool a = true;  // real locus has cohomology only in degree 0
        bool b = true;  // maximality: b_0(X(R)) = total mod-2 Betti of X(C)
        bool c = true;  // torsion free and pure of type (i,i)
        std::string note;
    };
    std::vector<PerStratum> strata;
    bool a = true, b = true, c = true;

    bool theorem_applicable() const { return a && b; }
    bool hodge_applicable() const { return a && b && c; }
};

HypothesisReport validate_hypotheses(const StratifiedDegeneration& sdd);

/// Structural validation: shapes, id uniqueness, closure order, dimension
/// bounds. Warnings flag maximal strata of unexpected dimension.
ValidationResult validate_sdd(const StratifiedDegeneration& sdd);

}  // namespace realog
