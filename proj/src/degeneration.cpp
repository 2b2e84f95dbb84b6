#include "realog/degeneration.hpp"

#include <set>

namespace realog {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

namespace {

long even_torsion_count(const Stratum& s, int j) {
    if (j < 0 || j >= static_cast<int>(s.hc_torsion.size())) return 0;
    long c = 0;
    for (const auto& f : s.hc_torsion[static_cast<std::size_t>(j)])
        if (mpz_even_p(f.get_mpz_t())) ++c;
    return c;
}

long rank_at(const Stratum& s, int j) {
    if (j < 0 || j >= static_cast<int>(s.hc_ranks.size())) return 0;
    return s.hc_ranks[static_cast<std::size_t>(j)];
}

}  // namespace

long stratum_mod2_dim(const Stratum& s, int j) {
    return rank_at(s, j) + even_torsion_count(s, j) + even_torsion_count(s, j + 1);
}

long stratum_mod2_total(const Stratum& s) {
    long total = 0;
    for (int j = 0; j <= 2 * s.dim; ++j) total += stratum_mod2_dim(s, j);
    return total;
}

std::vector<long> log_stratum_hc_ranks(const Stratum& s) {
    int k = s.multiplicity - 1;
    std::vector<long> out(static_cast<std::size_t>(2 * s.dim + k) + 1, 0);
    for (int n = 0; n < static_cast<int>(out.size()); ++n)
        for (int i = 0; i <= k; ++i) out[n] += binomial(k, i) * rank_at(s, n - i);
    return out;
}

std::vector<WeightEntry> log_stratum_weights(const Stratum& s) {
    std::vector<WeightEntry> out;
    for (int j = 0; j <= 2 * s.dim; ++j) {
        if (rank_at(s, j) == 0) continue;
        for (int i = 0; i < s.multiplicity; ++i) out.push_back({j, i, 2 * j - 2 * s.dim + 2 * i});
    }
    return out;
}

long real_cover_h0(const Stratum& s) {
    if (s.real_higher_cohomology)
        fail(errc::hypothesis_violated,
             "stratum " + s.id + " has real cohomology above degree 0");
    return (1L << (s.multiplicity - 1)) * s.real_components;
}

const Stratum* StratifiedDegeneration::find(const std::string& id) const {
    for (const auto& s : strata)
        if (s.id == id) return &s;
    return nullptr;
}

std::vector<std::size_t> StratifiedDegeneration::strata_of_dim(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < strata.size(); ++i)
        if (strata[i].dim == d) out.push_back(i);
    return out;
}

HypothesisReport validate_hypotheses(const StratifiedDegeneration& sdd) {
    HypothesisReport report;
    for (const auto& s : sdd.strata) {
        HypothesisReport::PerStratum per;
        per.id = s.id;
        per.a = !s.real_higher_cohomology;
        per.b = s.real_components == stratum_mod2_total(s);
        bool torsion_free = true;
        for (const auto& degree : s.hc_torsion) torsion_free = torsion_free && degree.empty();
        per.c = torsion_free && s.pure_ii;
        if (!per.a) per.note += "real cohomology above degree 0; ";
        if (!per.b)
            per.note += "b_0(X(R)) = " + std::to_string(s.real_components) +
                        " but total mod-2 Betti of X(C) = " +
                        std::to_string(stratum_mod2_total(s)) + "; ";
        if (!per.c) per.note += torsion_free ? "not pure of type (i,i); " : "integral torsion; ";
        report.a = report.a && per.a;
        report.b = report.b && per.b;
        report.c = report.c && per.c;
        report.strata.push_back(std::move(per));
    }
    return report;
}

ValidationResult validate_sdd(const StratifiedDegeneration& sdd) {
    ValidationResult result = ValidationResult::pass();
    if (sdd.fiber_dim < 0)
        return ValidationResult::violation(errc::invalid_sdd, 0, "negative fiber dimension");

    std::set<std::string> ids;
    for (const auto& s : sdd.strata) {
        if (s.id.empty())
            return ValidationResult::violation(errc::invalid_sdd, 0, "stratum with empty id");
        if (!ids.insert(s.id).second)
            return ValidationResult::violation(errc::invalid_sdd, 0, "duplicate stratum id " + s.id);
        if (s.dim < 0 || s.dim > sdd.fiber_dim)
            return ValidationResult::violation(errc::invalid_sdd, s.dim,
                                               "stratum " + s.id + " has dimension outside [0, " +
                                                   std::to_string(sdd.fiber_dim) + "]");
        if (s.multiplicity < 1)
            return ValidationResult::violation(errc::invalid_sdd, 0,
                                               "stratum " + s.id + " has multiplicity < 1");
        if (s.dim + s.multiplicity - 1 > sdd.fiber_dim)
            return ValidationResult::violation(
                errc::invalid_sdd, 0,
                "stratum " + s.id + " has dim + multiplicity - 1 > fiber_dim");
        if (static_cast<int>(s.hc_ranks.size()) != 2 * s.dim + 1)
            return ValidationResult::violation(errc::invalid_sdd, 0,
                                               "stratum " + s.id + " needs " +
                                                   std::to_string(2 * s.dim + 1) + " hc_ranks");
        for (long r : s.hc_ranks)
            if (r < 0)
                return ValidationResult::violation(errc::invalid_sdd, 0,
                                                   "stratum " + s.id + " has a negative rank");
        if (static_cast<int>(s.hc_torsion.size()) > 2 * s.dim + 1)
            return ValidationResult::violation(errc::invalid_sdd, 0,
                                               "stratum " + s.id + " has too many torsion lists");
        if (s.real_components < 0)
            return ValidationResult::violation(errc::invalid_sdd, 0,
                                               "stratum " + s.id + " has negative real_components");
    }

    std::set<std::string> non_maximal;
    for (const auto& [lo, hi] : sdd.closure) {
        const Stratum* a = sdd.find(lo);
        const Stratum* b = sdd.find(hi);
        if (!a || !b)
            return ValidationResult::violation(errc::invalid_sdd, 0,
                                               "closure pair references unknown stratum");
        if (a->dim >= b->dim)
            return ValidationResult::violation(
                errc::invalid_sdd, 0,
                "closure pair (" + lo + ", " + hi + ") does not increase dimension");
        non_maximal.insert(lo);
    }
    for (const auto& s : sdd.strata)
        if (!non_maximal.count(s.id) && s.dim != sdd.fiber_dim)
            result.warnings.push_back("maximal stratum " + s.id + " has dimension " +
                                      std::to_string(s.dim) + " != fiber_dim");

    for (const auto& [key, m] : sdd.cq_differentials) {
        (void)m;
        if (key.first < 0 || key.first > sdd.fiber_dim || key.second < 0 ||
            key.second >= sdd.fiber_dim)
            return ValidationResult::violation(errc::invalid_sdd, key.second,
                                               "cq differential key out of range");
    }
    for (const auto& [p, m] : sdd.real_differentials) {
        (void)m;
        if (p < 0 || p >= sdd.fiber_dim)
            return ValidationResult::violation(errc::invalid_sdd, p,
                                               "real differential key out of range");
    }
    for (const auto& [id, count] : sdd.real_vertex_counts) {
        if (!sdd.find(id))
            return ValidationResult::violation(errc::invalid_sdd, 0,
                                               "real_vertex_counts references unknown stratum " +
                                                   id);
        if (count < 0)
            return ValidationResult::violation(errc::invalid_sdd, 0,
                                               "negative real vertex count for " + id);
    }
    return result;
}

}  // namespace realog
