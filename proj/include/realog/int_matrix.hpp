#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace realog {

/// Dense row-major matrix over arbitrary-precision integers. A matrix with
/// zero rows or zero columns is legal and denotes a map from/to the zero
/// module.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const mpz_class& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    mpz_class& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    bool is_zero() const;
    IntegerMatrix transposed() const;

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> e_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// Exact determinant of a square matrix, by fraction-free Bareiss elimination.
mpz_class determinant(const IntegerMatrix& m);

}  // namespace realog
