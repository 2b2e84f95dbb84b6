#pragma once

#include <optional>
#include <vector>

#include "realog/exec.hpp"
#include "realog/int_matrix.hpp"

namespace realog {

/// Smith normal form of an integer matrix: positive invariant factors
/// d_1 | d_2 | ... | d_r and, on request, unimodular transforms with
/// U * M * V = diag(d_1, ..., d_r).
struct SmithForm {
    std::vector<mpz_class> invariant_factors;
    std::size_t rank = 0;
    std::optional<IntegerMatrix> left_transform;
    std::optional<IntegerMatrix> right_transform;

    IntegerMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

/// Deterministic SNF: pivots are chosen as the smallest nonzero absolute
/// value, ties broken by lowest (row, col).
SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms = false,
                            ExecPolicy policy = ExecPolicy::Parallel);

/// Rank of m over the rationals (via SNF).
std::size_t rank_q(const IntegerMatrix& m, ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace realog
