#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "realog/exec.hpp"
#include "realog/int_matrix.hpp"

namespace realog {

/// Dense matrix over F2 with 64-bit packed rows.
class Mod2Matrix {
public:
    Mod2Matrix() = default;
    Mod2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    static Mod2Matrix from_integer(const IntegerMatrix& m);
    static Mod2Matrix identity(std::size_t n);
    static Mod2Matrix vstack(const Mod2Matrix& a, const Mod2Matrix& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (w_[i * wpr_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        std::uint64_t& word = w_[i * wpr_ + j / 64];
        std::uint64_t bit = std::uint64_t(1) << (j % 64);
        word = v ? (word | bit) : (word & ~bit);
    }

    void xor_row(std::size_t dst, std::size_t src) {
        for (std::size_t k = 0; k < wpr_; ++k) w_[dst * wpr_ + k] ^= w_[src * wpr_ + k];
    }
    bool row_zero(std::size_t i) const {
        for (std::size_t k = 0; k < wpr_; ++k)
            if (w_[i * wpr_ + k]) return false;
        return true;
    }

    Mod2Matrix transposed() const;
    bool operator==(const Mod2Matrix&) const = default;

    std::size_t words_per_row() const { return wpr_; }
    std::uint64_t* row_words(std::size_t i) { return w_.data() + i * wpr_; }
    const std::uint64_t* row_words(std::size_t i) const { return w_.data() + i * wpr_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

Mod2Matrix operator*(const Mod2Matrix& a, const Mod2Matrix& b);

/// Row-reduces m in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> mod2_rref(Mod2Matrix& m, ExecPolicy policy = ExecPolicy::Parallel);

std::size_t mod2_rank(Mod2Matrix m, ExecPolicy policy = ExecPolicy::Parallel);
std::size_t rank_mod2(const IntegerMatrix& m, ExecPolicy policy = ExecPolicy::Parallel);

/// Basis of {x : m x = 0}, returned as rows of length m.cols().
Mod2Matrix mod2_kernel_basis(const Mod2Matrix& m, ExecPolicy policy = ExecPolicy::Parallel);
Mod2Matrix kernel_basis_mod2(const IntegerMatrix& m, ExecPolicy policy = ExecPolicy::Parallel);

/// Basis of {x : x m = 0}, returned as rows of length m.rows().
Mod2Matrix mod2_left_kernel(const Mod2Matrix& m);

/// Nonzero rows of the RREF; a canonical basis of the row space.
Mod2Matrix mod2_row_basis(const Mod2Matrix& m);

/// True when every row of `vectors` lies in the row space of `space`.
bool mod2_rowspace_contains(const Mod2Matrix& space, const Mod2Matrix& vectors);

}  // namespace realog
