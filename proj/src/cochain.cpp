#include "realog/cochain.hpp"

#include <algorithm>

#include "realog/mod2.hpp"
#include "realog/smith.hpp"

namespace realog {

const CohomologyResult::Degree& CohomologyResult::at(int p) const {
    static const Degree zero{};
    int idx = p - p_min;
    if (idx < 0 || idx >= static_cast<int>(degrees.size())) return zero;
    return degrees[static_cast<std::size_t>(idx)];
}

long CohomologyResult::euler_characteristic() const {
    long chi = 0;
    int sign = 1;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        int parity = (p_min + static_cast<int>(i)) & 1;
        sign = parity ? -1 : 1;
        chi += sign * degrees[i].rank;
    }
    return chi;
}

CochainComplex::CochainComplex(Coefficient coeff, int p_min, std::vector<std::size_t> ranks,
                               std::map<int, IntegerMatrix> differentials,
                               std::map<int, std::vector<std::string>> labels)
    : coeff_(coeff),
      p_min_(p_min),
      ranks_(std::move(ranks)),
      diff_(std::move(differentials)),
      labels_(std::move(labels)) {
    for (const auto& [p, lab] : labels_)
        if (lab.size() != rank_at(p))
            fail(errc::invalid_complex,
                 "label count at degree " + std::to_string(p) + " does not match the term rank");
}

std::size_t CochainComplex::rank_at(int p) const {
    int idx = p - p_min_;
    if (idx < 0 || idx >= static_cast<int>(ranks_.size())) return 0;
    return ranks_[static_cast<std::size_t>(idx)];
}

IntegerMatrix CochainComplex::differential_at(int p) const {
    auto it = diff_.find(p);
    if (it != diff_.end()) return it->second;
    return IntegerMatrix(rank_at(p + 1), rank_at(p));
}

ValidationResult CochainComplex::validate() const {
    for (const auto& [p, m] : diff_) {
        if (p < p_min_ - 1 || p > p_max())
            return ValidationResult::violation(errc::invalid_complex, p,
                                               "differential stored outside the degree range");
        if (m.rows() != rank_at(p + 1) || m.cols() != rank_at(p))
            return ValidationResult::violation(
                errc::shape_mismatch, p,
                "differential at degree " + std::to_string(p) + " has shape " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                    std::to_string(rank_at(p + 1)) + "x" + std::to_string(rank_at(p)));
    }
    for (int p = p_min_; p + 1 <= p_max(); ++p) {
        if (rank_at(p) == 0 || rank_at(p + 1) == 0 || rank_at(p + 2) == 0) continue;
        if (coeff_ == Coefficient::Integers) {
            if (!(differential_at(p + 1) * differential_at(p)).is_zero())
                return ValidationResult::violation(errc::invalid_complex, p,
                                                   "d o d != 0 starting at degree " +
                                                       std::to_string(p));
        } else {
            Mod2Matrix prod = Mod2Matrix::from_integer(differential_at(p + 1)) *
                              Mod2Matrix::from_integer(differential_at(p));
            for (std::size_t i = 0; i < prod.rows(); ++i)
                if (!prod.row_zero(i))
                    return ValidationResult::violation(errc::invalid_complex, p,
                                                       "d o d != 0 (mod 2) starting at degree " +
                                                           std::to_string(p));
        }
    }
    return ValidationResult::pass();
}

CohomologyResult CochainComplex::cohomology(ExecPolicy policy) const {
    ValidationResult v = validate();
    if (!v) fail(v.code == errc::shape_mismatch ? errc::shape_mismatch : errc::invalid_complex,
                 v.message);

    CohomologyResult out;
    out.coefficient = coeff_;
    out.p_min = p_min_;
    int n = static_cast<int>(ranks_.size());
    out.degrees.resize(static_cast<std::size_t>(n));
    if (n == 0) return out;

    // rank of every differential d_{p_min-1} .. d_{p_max}; index i = degree p_min-1+i
    std::vector<std::size_t> dr(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<mpz_class>> dtors(static_cast<std::size_t>(n) + 1);

    bool par = policy == ExecPolicy::Parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
    for (int i = 0; i <= n; ++i) {
        int p = p_min_ - 1 + i;
        if (rank_at(p) == 0 || rank_at(p + 1) == 0) continue;
        IntegerMatrix d = differential_at(p);
        if (coeff_ == Coefficient::Integers) {
            SmithForm s = smith_normal_form(d, false, ExecPolicy::Serial);
            dr[static_cast<std::size_t>(i)] = s.rank;
            for (const auto& f : s.invariant_factors)
                if (f > 1) dtors[static_cast<std::size_t>(i)].push_back(f);
        } else {
            dr[static_cast<std::size_t>(i)] = mod2_rank(Mod2Matrix::from_integer(d),
                                                        ExecPolicy::Serial);
        }
    }
    (void)par;

    for (int i = 0; i < n; ++i) {
        int p = p_min_ + i;
        auto& deg = out.degrees[static_cast<std::size_t>(i)];
        deg.rank = static_cast<long>(rank_at(p)) - static_cast<long>(dr[i + 1]) -
                   static_cast<long>(dr[i]);
        if (coeff_ == Coefficient::Integers) deg.torsion = dtors[static_cast<std::size_t>(i)];
    }
    return out;
}

CochainComplex CochainComplex::reduce_mod2() const {
    std::map<int, IntegerMatrix> reduced;
    for (const auto& [p, m] : diff_) {
        IntegerMatrix r(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                r.at(i, j) = mpz_odd_p(m.at(i, j).get_mpz_t()) ? 1 : 0;
        reduced.emplace(p, std::move(r));
    }
    return CochainComplex(Coefficient::ModTwo, p_min_, ranks_, std::move(reduced), labels_);
}

UctReport universal_coefficients_check(const CochainComplex& c, ExecPolicy policy) {
    if (c.coefficient() != Coefficient::Integers)
        fail(errc::invalid_complex, "universal coefficients check expects an integral complex");
    CohomologyResult integral = c.cohomology(policy);
    CohomologyResult mod2 = c.reduce_mod2().cohomology(policy);

    auto even_torsion = [&](int p) {
        long t = 0;
        for (const auto& f : integral.at(p).torsion)
            if (mpz_even_p(f.get_mpz_t())) ++t;
        return t;
    };

    for (int p = c.p_min(); p <= c.p_max(); ++p) {
        long predicted = integral.at(p).rank + even_torsion(p) + even_torsion(p + 1);
        if (mod2.at(p).rank != predicted) return {false, p};
    }
    return {true, 0};
}

}  // namespace realog
