#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "realog/cochain.hpp"
#include "realog/degeneration.hpp"
#include "realog/filtered.hpp"

namespace realog {

/// Weight-q complex of the degeneration: the degree-p term collects, over the
/// dimension-p strata in input order, the degree-(p+q) compactly supported
/// cohomology of the fiber-1 log stratum. Differential blocks come from the
/// SDD; a missing block between two nonzero terms is an error unless the SDD
/// permits zero differentials.
CochainComplex build_cq(const StratifiedDegeneration& sdd, int q);

/// Mod-2 complex of the real log cover. The degree-p term has one basis
/// vector per (real component, deck element) pair of each dimension-p
/// stratum, indexed component-major.
struct RealComplex {
    struct Block {
        std::string stratum;
        int degree = 0;
        std::size_t offset = 0;  // first index inside the degree-p term
        long components = 0;
        int deck_rank = 0;  // multiplicity - 1
    };

    CochainComplex complex;
    std::vector<Block> blocks;  // SDD order

    const Block* block_of(const std::string& id) const;
};

/// Refuses with HypothesisViolated unless hypotheses (a) and (b) hold;
/// force_unverified builds anyway so that failing inputs can still be
/// inspected.
RealComplex build_real_complex(const StratifiedDegeneration& sdd, bool force_unverified = false);

/// Decreasing filtration of the real complex by augmentation-ideal depth:
/// level L collects, blockwise, the classes of fiber degree >= fiber_dim - L.
/// Strata must carry one of the supported cohomology profiles (all mod-2
/// classes in degree 0, or r-1 classes in degree d and one in degree 2d);
/// anything else is UnsupportedStratum.
FilteredComplex augmentation_filtration(const StratifiedDegeneration& sdd, const RealComplex& rc);

struct VerdictReport {
    struct CqEntry {
        long rank = 0;
        std::vector<mpz_class> torsion;
        long mod2_dim = 0;
    };
    struct InequalityRow {
        int p = 0;
        long lhs = 0;   // b_p of the real fiber
        long rhs = 0;   // sum over q of dim_F2 H^p(C_q, F2)
        long slack = 0; // rhs - lhs
    };

    std::vector<long> betti_real;                  // p = 0..fiber_dim
    std::map<std::pair<int, int>, CqEntry> cq;     // (p, q)
    std::vector<std::vector<long>> hodge;          // [p][q] = rank_Q H^p(C_q)
    std::vector<InequalityRow> inequalities;
    bool inequality_holds = true;
    bool torsion_free = true;
    bool mod2_compatible = true;
    long betti_total = 0;
    long mod2_total = 0;
    bool maximal = false;
    HypothesisReport hypotheses;
    bool verified = true;  // false when built despite failing hypotheses
};

/// Full machine verdict; force_unverified is passed through to the real
/// complex build, and the report flags the result as unverified.
VerdictReport verdict(const StratifiedDegeneration& sdd, bool force_unverified = false);

}  // namespace realog
