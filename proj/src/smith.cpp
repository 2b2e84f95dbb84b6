#include "realog/smith.hpp"

#include <algorithm>

#include "realog/errors.hpp"

namespace realog {

namespace {

struct ElimOp {
    std::size_t line;  // row or column being updated
    mpz_class q;       // line -= q * pivot line
};

// Serial reference kernels. The parallel variants below distribute the
// independent line updates across threads and must produce bit-identical
// results; tests and the benchmark target compare the two.
void row_updates_serial(IntegerMatrix& a, std::size_t t, const std::vector<ElimOp>& ops,
                        std::size_t from_col) {
    for (const auto& op : ops)
        for (std::size_t j = from_col; j < a.cols(); ++j) a.at(op.line, j) -= op.q * a.at(t, j);
}

void col_updates_serial(IntegerMatrix& a, std::size_t t, const std::vector<ElimOp>& ops,
                        std::size_t from_row) {
    for (const auto& op : ops)
        for (std::size_t i = from_row; i < a.rows(); ++i) a.at(i, op.line) -= op.q * a.at(i, t);
}

void row_updates_parallel(IntegerMatrix& a, std::size_t t, const std::vector<ElimOp>& ops,
                          std::size_t from_col) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long k = 0; k < static_cast<long>(ops.size()); ++k) {
        const auto& op = ops[static_cast<std::size_t>(k)];
        for (std::size_t j = from_col; j < a.cols(); ++j) a.at(op.line, j) -= op.q * a.at(t, j);
    }
#else
    row_updates_serial(a, t, ops, from_col);
#endif
}

void col_updates_parallel(IntegerMatrix& a, std::size_t t, const std::vector<ElimOp>& ops,
                          std::size_t from_row) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long k = 0; k < static_cast<long>(ops.size()); ++k) {
        const auto& op = ops[static_cast<std::size_t>(k)];
        for (std::size_t i = from_row; i < a.rows(); ++i) a.at(i, op.line) -= op.q * a.at(i, t);
    }
#else
    col_updates_serial(a, t, ops, from_row);
#endif
}

bool divisible(const mpz_class& a, const mpz_class& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

class SnfEngine {
public:
    SnfEngine(const IntegerMatrix& m, bool track, ExecPolicy policy)
        : a_(m), track_(track), par_(policy == ExecPolicy::Parallel) {
        if (track_) {
            u_ = IntegerMatrix::identity(m.rows());
            v_ = IntegerMatrix::identity(m.cols());
        }
    }

    SmithForm run() {
        std::size_t nmin = std::min(a_.rows(), a_.cols());
        std::size_t rank = 0;
        for (std::size_t t = 0; t < nmin; ++t) {
            if (!eliminate_at(t)) break;
            ++rank;
        }

        // Enforce the divisibility chain d_1 | d_2 | ...; folding column t into
        // column t-1 puts gcd/lcm at the two positions and re-elimination
        // restores diagonal shape.
        bool fixed = true;
        while (fixed) {
            fixed = false;
            for (std::size_t t = 1; t < rank; ++t) {
                if (divisible(a_.at(t, t), a_.at(t - 1, t - 1))) continue;
                add_col(t - 1, t);
                for (std::size_t s = t - 1; s < rank; ++s) eliminate_at(s);
                fixed = true;
                break;
            }
        }

        SmithForm out;
        out.rank = rank;
        for (std::size_t t = 0; t < rank; ++t) {
            if (a_.at(t, t) < 0) negate_row(t);
            out.invariant_factors.push_back(a_.at(t, t));
        }
        if (track_) {
            out.left_transform = std::move(u_);
            out.right_transform = std::move(v_);
        }
        return out;
    }

private:
    IntegerMatrix a_, u_, v_;
    bool track_;
    bool par_;

    // Parallelism only pays off once the update sweep is reasonably large.
    bool use_parallel(std::size_t nops, std::size_t width) const {
        return par_ && nops * width >= 2048;
    }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                const mpz_class& e = a_.at(i, j);
                if (e == 0) continue;
                mpz_class mag = abs(e);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_.at(i, c), a_.at(j, c));
        if (track_)
            for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_.at(i, c), u_.at(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_.at(r, i), a_.at(r, j));
        if (track_)
            for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_.at(r, i), v_.at(r, j));
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a_.cols(); ++c) a_.at(i, c) = -a_.at(i, c);
        if (track_)
            for (std::size_t c = 0; c < u_.cols(); ++c) u_.at(i, c) = -u_.at(i, c);
    }

    void add_row(std::size_t dst, std::size_t src, std::size_t from_col) {
        for (std::size_t c = from_col; c < a_.cols(); ++c) a_.at(dst, c) += a_.at(src, c);
        if (track_)
            for (std::size_t c = 0; c < u_.cols(); ++c) u_.at(dst, c) += u_.at(src, c);
    }

    void add_col(std::size_t dst, std::size_t src) {
        for (std::size_t r = 0; r < a_.rows(); ++r) a_.at(r, dst) += a_.at(r, src);
        if (track_)
            for (std::size_t r = 0; r < v_.rows(); ++r) v_.at(r, dst) += v_.at(r, src);
    }

    void apply_row_ops(std::size_t t, const std::vector<ElimOp>& ops, std::size_t from_col) {
        if (use_parallel(ops.size(), a_.cols() - from_col))
            row_updates_parallel(a_, t, ops, from_col);
        else
            row_updates_serial(a_, t, ops, from_col);
        if (track_) {
            // same row operations on U (full width)
            if (use_parallel(ops.size(), u_.cols()))
                row_updates_parallel(u_, t, ops, 0);
            else
                row_updates_serial(u_, t, ops, 0);
        }
    }

    void apply_col_ops(std::size_t t, const std::vector<ElimOp>& ops, std::size_t from_row) {
        if (use_parallel(ops.size(), a_.rows() - from_row))
            col_updates_parallel(a_, t, ops, from_row);
        else
            col_updates_serial(a_, t, ops, from_row);
        if (track_) {
            if (use_parallel(ops.size(), v_.rows()))
                col_updates_parallel(v_, t, ops, 0);
            else
                col_updates_serial(v_, t, ops, 0);
        }
    }

    // Clears row and column t against the pivot at (t,t) and makes the pivot
    // divide the remaining block. Returns false when the submatrix is zero.
    bool eliminate_at(std::size_t t) {
        while (true) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(t, pi, pj)) return false;
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);

            std::vector<ElimOp> ops;
            for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                if (a_.at(i, t) == 0) continue;
                mpz_class q = a_.at(i, t) / a_.at(t, t);
                if (q != 0) ops.push_back({i, q});
            }
            if (!ops.empty()) apply_row_ops(t, ops, t);
            bool leftover = false;
            for (std::size_t i = t + 1; i < a_.rows() && !leftover; ++i)
                leftover = a_.at(i, t) != 0;
            if (leftover) continue;  // remainders are strictly smaller; re-pivot

            ops.clear();
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (a_.at(t, j) == 0) continue;
                mpz_class q = a_.at(t, j) / a_.at(t, t);
                if (q != 0) ops.push_back({j, q});
            }
            if (!ops.empty()) apply_col_ops(t, ops, t);
            for (std::size_t j = t + 1; j < a_.cols() && !leftover; ++j)
                leftover = a_.at(t, j) != 0;
            if (leftover) continue;

            bool clean = true;
            for (std::size_t i = t + 1; i < a_.rows() && clean; ++i)
                for (std::size_t j = t + 1; j < a_.cols() && clean; ++j)
                    if (!divisible(a_.at(i, j), a_.at(t, t))) {
                        add_row(t, i, t + 1);
                        clean = false;
                    }
            if (clean) return true;
        }
    }
};

}  // namespace

IntegerMatrix SmithForm::diagonal(std::size_t rows, std::size_t cols) const {
    IntegerMatrix d(rows, cols);
    for (std::size_t t = 0; t < invariant_factors.size(); ++t) d.at(t, t) = invariant_factors[t];
    return d;
}

SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms, ExecPolicy policy) {
    return SnfEngine(m, with_transforms, policy).run();
}

std::size_t rank_q(const IntegerMatrix& m, ExecPolicy policy) {
    return smith_normal_form(m, false, policy).rank;
}

}  // namespace realog
