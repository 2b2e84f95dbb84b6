#include "realog/mod2.hpp"

namespace realog {

Mod2Matrix Mod2Matrix::from_integer(const IntegerMatrix& m) {
    Mod2Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (mpz_odd_p(m.at(i, j).get_mpz_t())) out.set(i, j, true);
    return out;
}

Mod2Matrix Mod2Matrix::identity(std::size_t n) {
    Mod2Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, i, true);
    return out;
}

Mod2Matrix Mod2Matrix::vstack(const Mod2Matrix& a, const Mod2Matrix& b) {
    Mod2Matrix out(a.rows() + b.rows(), a.cols() == 0 ? b.cols() : a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.words_per_row(); ++k)
            out.row_words(i)[k] = a.row_words(i)[k];
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t k = 0; k < b.words_per_row(); ++k)
            out.row_words(a.rows() + i)[k] = b.row_words(i)[k];
    return out;
}

Mod2Matrix Mod2Matrix::transposed() const {
    Mod2Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) out.set(j, i, true);
    return out;
}

Mod2Matrix operator*(const Mod2Matrix& a, const Mod2Matrix& b) {
    Mod2Matrix res(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k))
                for (std::size_t w = 0; w < res.words_per_row(); ++w)
                    res.row_words(i)[w] ^= b.row_words(k)[w];
    return res;
}

namespace {

void eliminate_rows_serial(Mod2Matrix& m, std::size_t pivot_row, std::size_t pivot_col,
                           std::size_t from_row) {
    for (std::size_t i = from_row; i < m.rows(); ++i)
        if (i != pivot_row && m.get(i, pivot_col)) m.xor_row(i, pivot_row);
}

void eliminate_rows_parallel(Mod2Matrix& m, std::size_t pivot_row, std::size_t pivot_col,
                             std::size_t from_row) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long i = static_cast<long>(from_row); i < static_cast<long>(m.rows()); ++i) {
        std::size_t r = static_cast<std::size_t>(i);
        if (r != pivot_row && m.get(r, pivot_col)) m.xor_row(r, pivot_row);
    }
#else
    eliminate_rows_serial(m, pivot_row, pivot_col, from_row);
#endif
}

}  // namespace

std::vector<std::size_t> mod2_rref(Mod2Matrix& m, ExecPolicy policy) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    bool par = policy == ExecPolicy::Parallel && m.rows() * m.words_per_row() >= 4096;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t k = 0; k < m.words_per_row(); ++k)
                std::swap(m.row_words(p)[k], m.row_words(r)[k]);
        if (par)
            eliminate_rows_parallel(m, r, c, 0);
        else
            eliminate_rows_serial(m, r, c, 0);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t mod2_rank(Mod2Matrix m, ExecPolicy policy) { return mod2_rref(m, policy).size(); }

std::size_t rank_mod2(const IntegerMatrix& m, ExecPolicy policy) {
    return mod2_rank(Mod2Matrix::from_integer(m), policy);
}

Mod2Matrix mod2_kernel_basis(const Mod2Matrix& m, ExecPolicy policy) {
    Mod2Matrix r = m;
    std::vector<std::size_t> pivots = mod2_rref(r, policy);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    Mod2Matrix kernel(m.cols() - pivots.size(), m.cols());
    std::size_t row = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        kernel.set(row, f, true);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            if (r.get(p, f)) kernel.set(row, pivots[p], true);
        ++row;
    }
    return kernel;
}

Mod2Matrix kernel_basis_mod2(const IntegerMatrix& m, ExecPolicy policy) {
    return mod2_kernel_basis(Mod2Matrix::from_integer(m), policy);
}

Mod2Matrix mod2_left_kernel(const Mod2Matrix& m) {
    // Row-reduce [m | I]; rows whose m-part vanished record the combinations.
    Mod2Matrix aug(m.rows(), m.cols() + m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.get(i, j));
        aug.set(i, m.cols() + i, true);
    }
    // eliminate using only the first m.cols() columns
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < aug.rows() && !aug.get(p, c)) ++p;
        if (p == aug.rows()) continue;
        if (p != r)
            for (std::size_t k = 0; k < aug.words_per_row(); ++k)
                std::swap(aug.row_words(p)[k], aug.row_words(r)[k]);
        for (std::size_t i = 0; i < aug.rows(); ++i)
            if (i != r && aug.get(i, c)) aug.xor_row(i, r);
        ++r;
    }
    Mod2Matrix out(m.rows() - r, m.rows());
    for (std::size_t i = r; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) out.set(i - r, j, aug.get(i, m.cols() + j));
    return out;
}

Mod2Matrix mod2_row_basis(const Mod2Matrix& m) {
    Mod2Matrix r = m;
    std::vector<std::size_t> pivots = mod2_rref(r);
    Mod2Matrix out(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t k = 0; k < r.words_per_row(); ++k)
            out.row_words(i)[k] = r.row_words(i)[k];
    return out;
}

bool mod2_rowspace_contains(const Mod2Matrix& space, const Mod2Matrix& vectors) {
    if (vectors.rows() == 0) return true;
    std::size_t base = mod2_rank(space);
    return mod2_rank(Mod2Matrix::vstack(space, vectors)) == base;
}

}  // namespace realog
