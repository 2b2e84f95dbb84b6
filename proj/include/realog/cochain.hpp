#pragma once

#include <map>
#include <string>
#include <vector>

#include "realog/errors.hpp"
#include "realog/exec.hpp"
#include "realog/int_matrix.hpp"

namespace realog {

enum class Coefficient { Integers, ModTwo };

struct CohomologyResult {
    struct Degree {
        long rank = 0;                   // free rank over Z, dimension over F2
        std::vector<mpz_class> torsion;  // invariant factors > 1 of the torsion part

        bool operator==(const Degree&) const = default;
    };

    Coefficient coefficient = Coefficient::Integers;
    int p_min = 0;
    std::vector<Degree> degrees;

    const Degree& at(int p) const;
    long euler_characteristic() const;

    bool operator==(const CohomologyResult&) const = default;
};

/// A bounded cochain complex with explicitly stored terms and differentials.
/// `differentials` maps p to the matrix of d_p : C^p -> C^{p+1}; a missing
/// entry is the zero map. For ModTwo complexes the integer entries are read
/// modulo 2.
class CochainComplex {
public:
    CochainComplex() = default;
    CochainComplex(Coefficient coeff, int p_min, std::vector<std::size_t> ranks,
                   std::map<int, IntegerMatrix> differentials,
                   std::map<int, std::vector<std::string>> labels = {});

    Coefficient coefficient() const { return coeff_; }
    int p_min() const { return p_min_; }
    int p_max() const { return p_min_ + static_cast<int>(ranks_.size()) - 1; }

    std::size_t rank_at(int p) const;
    /// Always materialized with shape rank(p+1) x rank(p).
    IntegerMatrix differential_at(int p) const;
    const std::map<int, IntegerMatrix>& stored_differentials() const { return diff_; }
    const std::map<int, std::vector<std::string>>& labels() const { return labels_; }

    ValidationResult validate() const;
    /// Exact cohomology; throws InvalidComplex when validate() fails.
    CohomologyResult cohomology(ExecPolicy policy = ExecPolicy::Parallel) const;
    CochainComplex reduce_mod2() const;

private:
    Coefficient coeff_ = Coefficient::Integers;
    int p_min_ = 0;
    std::vector<std::size_t> ranks_;
    std::map<int, IntegerMatrix> diff_;
    std::map<int, std::vector<std::string>> labels_;
};

struct UctReport {
    bool ok = true;
    int degree = 0;  // first degree where the comparison failed
};

/// Universal-coefficients comparison between the mod-2 cohomology of the
/// reduction and the prediction from integral rank and torsion.
UctReport universal_coefficients_check(const CochainComplex& c,
                                       ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace realog
