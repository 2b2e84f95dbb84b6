#include "realog/assembly.hpp"

#include <bit>
#include <string>

namespace realog {

namespace {

long rank_or_zero(const std::vector<long>& v, int n) {
    if (n < 0 || n >= static_cast<int>(v.size())) return 0;
    return v[static_cast<std::size_t>(n)];
}

void require_valid(const StratifiedDegeneration& sdd) {
    if (ValidationResult v = validate_sdd(sdd); !v) fail(v.code, v.message);
}

// Shared by both builders: checks a supplied differential block against the
// derived term ranks, or decides whether its absence is acceptable.
IntegerMatrix resolve_block(const StratifiedDegeneration& sdd, const IntegerMatrix* supplied,
                            std::size_t rows, std::size_t cols, const std::string& what) {
    if (supplied) {
        if (supplied->rows() != rows || supplied->cols() != cols)
            fail(errc::shape_mismatch, what + " has shape " + std::to_string(supplied->rows()) +
                                           "x" + std::to_string(supplied->cols()) + ", expected " +
                                           std::to_string(rows) + "x" + std::to_string(cols));
        return *supplied;
    }
    if (rows > 0 && cols > 0 && !sdd.allow_zero_differentials)
        fail(errc::missing_block,
             what + " is missing between nonzero terms; a silent zero map would fake cohomology");
    return IntegerMatrix(rows, cols);
}

}  // namespace

CochainComplex build_cq(const StratifiedDegeneration& sdd, int q) {
    require_valid(sdd);
    if (q < 0 || q > sdd.fiber_dim)
        fail(errc::invalid_sdd, "q = " + std::to_string(q) + " outside 0.." +
                                    std::to_string(sdd.fiber_dim));

    std::vector<std::size_t> ranks;
    std::map<int, std::vector<std::string>> labels;
    for (int p = 0; p <= sdd.fiber_dim; ++p) {
        std::size_t total = 0;
        std::vector<std::string> names;
        for (std::size_t idx : sdd.strata_of_dim(p)) {
            const Stratum& s = sdd.strata[idx];
            long r = rank_or_zero(log_stratum_hc_ranks(s), p + q);
            for (long i = 0; i < r; ++i)
                names.push_back(s.id + ":q" + std::to_string(q) + ":" + std::to_string(i));
            total += static_cast<std::size_t>(r);
        }
        ranks.push_back(total);
        labels.emplace(p, std::move(names));
    }

    std::map<int, IntegerMatrix> diffs;
    for (int p = 0; p < sdd.fiber_dim; ++p) {
        auto it = sdd.cq_differentials.find({q, p});
        const IntegerMatrix* supplied = it == sdd.cq_differentials.end() ? nullptr : &it->second;
        IntegerMatrix d = resolve_block(sdd, supplied, ranks[static_cast<std::size_t>(p) + 1],
                                        ranks[static_cast<std::size_t>(p)],
                                        "differential of C_" + std::to_string(q) + " at degree " +
                                            std::to_string(p));
        if (!d.is_zero()) diffs.emplace(p, std::move(d));
    }

    CochainComplex c(Coefficient::Integers, 0, std::move(ranks), std::move(diffs),
                     std::move(labels));
    if (ValidationResult v = c.validate(); !v) fail(v.code, v.message);
    return c;
}

const RealComplex::Block* RealComplex::block_of(const std::string& id) const {
    for (const auto& b : blocks)
        if (b.stratum == id) return &b;
    return nullptr;
}

RealComplex build_real_complex(const StratifiedDegeneration& sdd, bool force_unverified) {
    require_valid(sdd);
    HypothesisReport hyp = validate_hypotheses(sdd);
    if (!(hyp.a && hyp.b) && !force_unverified) {
        std::string who;
        for (const auto& per : hyp.strata)
            if (!(per.a && per.b)) who += (who.empty() ? "" : ", ") + per.id;
        fail(errc::hypothesis_violated,
             "real Betti bound needs hypotheses (a) and (b); failing strata: " + who);
    }

    RealComplex rc;
    std::vector<std::size_t> ranks;
    std::map<int, std::vector<std::string>> labels;
    for (int p = 0; p <= sdd.fiber_dim; ++p) {
        std::size_t total = 0;
        std::vector<std::string> names;
        for (std::size_t idx : sdd.strata_of_dim(p)) {
            const Stratum& s = sdd.strata[idx];
            int k = s.multiplicity - 1;
            std::size_t size = static_cast<std::size_t>(s.real_components) << k;
            if (auto it = sdd.real_vertex_counts.find(s.id); it != sdd.real_vertex_counts.end())
                if (it->second != static_cast<long>(size))
                    fail(errc::invalid_sdd, "real vertex count for " + s.id + " is " +
                                                std::to_string(it->second) + ", expected " +
                                                std::to_string(size));
            rc.blocks.push_back({s.id, p, total, s.real_components, k});
            for (long c = 0; c < s.real_components; ++c)
                for (std::size_t g = 0; g < (std::size_t(1) << k); ++g)
                    names.push_back(s.id + ":c" + std::to_string(c) + ":g" + std::to_string(g));
            total += size;
        }
        ranks.push_back(total);
        labels.emplace(p, std::move(names));
    }

    std::map<int, IntegerMatrix> diffs;
    for (int p = 0; p < sdd.fiber_dim; ++p) {
        auto it = sdd.real_differentials.find(p);
        const IntegerMatrix* supplied = it == sdd.real_differentials.end() ? nullptr : &it->second;
        IntegerMatrix d = resolve_block(sdd, supplied, ranks[static_cast<std::size_t>(p) + 1],
                                        ranks[static_cast<std::size_t>(p)],
                                        "real differential at degree " + std::to_string(p));
        if (!d.is_zero()) diffs.emplace(p, std::move(d));
    }

    rc.complex = CochainComplex(Coefficient::ModTwo, 0, std::move(ranks), std::move(diffs),
                                std::move(labels));
    if (ValidationResult v = rc.complex.validate(); !v) fail(v.code, v.message);
    return rc;
}

namespace {

// Basis vectors x_S = sum_{T subset S} g_T of the j-th augmentation ideal
// power of F2[(Z/2)^k], as subsets S with |S| >= j.
std::vector<std::size_t> ideal_power_masks(int k, int j) {
    std::vector<std::size_t> out;
    if (j > k) return out;
    for (std::size_t s = 0; s < (std::size_t(1) << k); ++s)
        if (std::popcount(s) >= std::max(j, 0)) out.push_back(s);
    return out;
}

struct LevelColumns {
    std::vector<std::vector<std::size_t>> cols;  // set bits, block-local
};

// Block-local generators of the level with fiber degree qbar.
LevelColumns block_level_columns(const Stratum& s, int qbar) {
    int k = s.multiplicity - 1;
    long r = s.real_components;
    auto sheet = [&](long c, std::size_t g) { return static_cast<std::size_t>(c) << k | g; };
    LevelColumns out;
    if (s.dim == 0) {
        for (long c = 0; c < r; ++c)
            for (std::size_t mask : ideal_power_masks(k, k - qbar)) {
                std::vector<std::size_t> col;
                for (std::size_t g = 0; g < (std::size_t(1) << k); ++g)
                    if ((g & ~mask) == 0) col.push_back(sheet(c, g));
                out.cols.push_back(std::move(col));
            }
        return out;
    }
    // r-1 classes in degree dim, depth profile of the base; one class in
    // degree 2 dim, shifted by dim
    for (long c = 0; c + 1 < r; ++c)
        for (std::size_t mask : ideal_power_masks(k, k - qbar)) {
            std::vector<std::size_t> col;
            for (std::size_t g = 0; g < (std::size_t(1) << k); ++g)
                if ((g & ~mask) == 0) {
                    col.push_back(sheet(c, g));
                    col.push_back(sheet(c + 1, g));
                }
            out.cols.push_back(std::move(col));
        }
    if (r > 0 && qbar >= s.dim)
        for (std::size_t mask : ideal_power_masks(k, k - (qbar - s.dim))) {
            std::vector<std::size_t> col;
            for (std::size_t g = 0; g < (std::size_t(1) << k); ++g)
                if ((g & ~mask) == 0) col.push_back(sheet(0, g));
            out.cols.push_back(std::move(col));
        }
    return out;
}

bool supported_profile(const Stratum& s) {
    if (s.dim == 0 || s.real_components == 0) return true;
    for (int j = 0; j <= 2 * s.dim; ++j) {
        long expected = 0;
        if (j == s.dim) expected = s.real_components - 1;
        if (j == 2 * s.dim) expected = 1;
        if (stratum_mod2_dim(s, j) != expected) return false;
    }
    return true;
}

}  // namespace

FilteredComplex augmentation_filtration(const StratifiedDegeneration& sdd, const RealComplex& rc) {
    HypothesisReport hyp = validate_hypotheses(sdd);
    if (!(hyp.a && hyp.b))
        fail(errc::hypothesis_violated, "augmentation filtration needs hypotheses (a) and (b)");
    for (const auto& s : sdd.strata)
        if (!supported_profile(s))
            fail(errc::unsupported_stratum,
                 "stratum " + s.id +
                     " has mod-2 cohomology outside the supported profiles (all classes in degree "
                     "0, or r-1 in degree dim plus one in degree 2 dim)");

    FilteredComplex f;
    f.base = rc.complex;
    f.levels.resize(static_cast<std::size_t>(sdd.fiber_dim) + 1);
    for (int level = 1; level <= sdd.fiber_dim; ++level) {
        int qbar = sdd.fiber_dim - level;
        for (int p = 0; p <= sdd.fiber_dim; ++p) {
            std::size_t n = rc.complex.rank_at(p);
            std::vector<std::vector<std::size_t>> cols;
            for (const auto& block : rc.blocks) {
                if (block.degree != p) continue;
                const Stratum* s = sdd.find(block.stratum);
                for (auto& col : block_level_columns(*s, qbar).cols) {
                    for (auto& bit : col) bit += block.offset;
                    cols.push_back(std::move(col));
                }
            }
            if (cols.empty()) continue;
            Mod2Matrix span(n, cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t bit : cols[j]) span.set(bit, j, true);
            f.levels[static_cast<std::size_t>(level)].emplace(p, std::move(span));
        }
    }

    if (ValidationResult v = validate_filtration(f); !v) {
        if (v.code == errc::not_a_subcomplex)
            fail(errc::not_a_subcomplex,
                 "real differentials do not respect the deck labels: " + v.message);
        fail(v.code, v.message);
    }
    return f;
}

VerdictReport verdict(const StratifiedDegeneration& sdd, bool force_unverified) {
    require_valid(sdd);
    VerdictReport report;
    report.hypotheses = validate_hypotheses(sdd);
    report.verified = report.hypotheses.a && report.hypotheses.b;

    RealComplex rc = build_real_complex(sdd, force_unverified);
    CohomologyResult real_h = rc.complex.cohomology();
    for (int p = 0; p <= sdd.fiber_dim; ++p) report.betti_real.push_back(real_h.at(p).rank);

    int n = sdd.fiber_dim + 1;
    report.hodge.assign(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    std::vector<long> rhs(static_cast<std::size_t>(n), 0);
    for (int q = 0; q <= sdd.fiber_dim; ++q) {
        CochainComplex cz = build_cq(sdd, q);
        CohomologyResult hz = cz.cohomology();
        std::vector<std::size_t> term_ranks;
        for (int p = 0; p <= sdd.fiber_dim; ++p) term_ranks.push_back(cz.rank_at(p));
        CochainComplex direct_f2(Coefficient::ModTwo, 0, std::move(term_ranks),
                                 cz.stored_differentials(), cz.labels());
        CohomologyResult hf = direct_f2.cohomology();
        CohomologyResult hr = cz.reduce_mod2().cohomology();
        if (!(hf == hr)) report.mod2_compatible = false;
        if (!universal_coefficients_check(cz).ok) report.mod2_compatible = false;

        for (int p = 0; p <= sdd.fiber_dim; ++p) {
            VerdictReport::CqEntry entry;
            entry.rank = hz.at(p).rank;
            entry.torsion = hz.at(p).torsion;
            entry.mod2_dim = hf.at(p).rank;
            if (!entry.torsion.empty()) report.torsion_free = false;
            report.hodge[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = entry.rank;
            rhs[static_cast<std::size_t>(p)] += entry.mod2_dim;
            report.cq.emplace(std::make_pair(p, q), std::move(entry));
        }
    }

    for (int p = 0; p <= sdd.fiber_dim; ++p) {
        VerdictReport::InequalityRow row;
        row.p = p;
        row.lhs = report.betti_real[static_cast<std::size_t>(p)];
        row.rhs = rhs[static_cast<std::size_t>(p)];
        row.slack = row.rhs - row.lhs;
        if (row.slack < 0) report.inequality_holds = false;
        report.betti_total += row.lhs;
        report.mod2_total += row.rhs;
        report.inequalities.push_back(row);
    }
    report.maximal = report.betti_total == report.mod2_total;
    return report;
}

}  // namespace realog
