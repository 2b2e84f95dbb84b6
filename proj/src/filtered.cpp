#include "realog/filtered.hpp"

#include <algorithm>

namespace realog {

namespace {

// Row-generator view of the level-a subspace in degree p. Level <= 0 is the
// whole term, levels beyond the stored depth are zero.
Mod2Matrix level_rows(const FilteredComplex& f, int a, int p) {
    std::size_t n = f.base.rank_at(p);
    if (a <= 0) return Mod2Matrix::identity(n);
    if (a >= static_cast<int>(f.levels.size())) return Mod2Matrix(0, n);
    const auto& lvl = f.levels[static_cast<std::size_t>(a)];
    auto it = lvl.find(p);
    if (it == lvl.end()) return Mod2Matrix(0, n);
    return it->second.transposed();
}

// Generators of {x in span(A) : D x in span(H)}, where generators sit in
// rows and D acts on column vectors.
Mod2Matrix preimage_rows(const Mod2Matrix& A, const Mod2Matrix& Dt, const Mod2Matrix& H) {
    Mod2Matrix B = A * Dt;  // images of the generators
    Mod2Matrix L = mod2_left_kernel(Mod2Matrix::vstack(B, H));
    Mod2Matrix coeffs(L.rows(), A.rows());
    for (std::size_t i = 0; i < L.rows(); ++i)
        for (std::size_t j = 0; j < A.rows(); ++j) coeffs.set(i, j, L.get(i, j));
    return coeffs * A;
}

}  // namespace

ValidationResult validate_filtration(const FilteredComplex& f) {
    if (f.base.coefficient() != Coefficient::ModTwo)
        return ValidationResult::violation(errc::not_a_filtration, 0,
                                           "filtration requires a mod-2 base complex");
    if (ValidationResult v = f.base.validate(); !v) return v;
    if (f.levels.empty())
        return ValidationResult::violation(errc::not_a_filtration, 0, "no filtration levels");

    for (int p = f.base.p_min(); p <= f.base.p_max(); ++p) {
        std::size_t n = f.base.rank_at(p);
        for (int a = 0; a < static_cast<int>(f.levels.size()); ++a) {
            const auto& lvl = f.levels[static_cast<std::size_t>(a)];
            auto it = lvl.find(p);
            if (it != lvl.end() && it->second.rows() != n)
                return ValidationResult::violation(
                    errc::not_a_filtration, p,
                    "level " + std::to_string(a) + " span at degree " + std::to_string(p) +
                        " has wrong ambient dimension");
        }
        if (mod2_rank(level_rows(f, 0, p)) != n)
            return ValidationResult::violation(errc::not_a_filtration, p,
                                               "level 0 does not span the whole term at degree " +
                                                   std::to_string(p));
        for (int a = 1; a < static_cast<int>(f.levels.size()); ++a)
            if (!mod2_rowspace_contains(level_rows(f, a - 1, p), level_rows(f, a, p)))
                return ValidationResult::violation(
                    errc::not_a_filtration, p,
                    "level " + std::to_string(a) + " is not contained in level " +
                        std::to_string(a - 1) + " at degree " + std::to_string(p));
    }

    for (int a = 1; a < static_cast<int>(f.levels.size()); ++a)
        for (int p = f.base.p_min(); p < f.base.p_max(); ++p) {
            Mod2Matrix G = level_rows(f, a, p);
            if (G.rows() == 0) continue;
            Mod2Matrix Dt = Mod2Matrix::from_integer(f.base.differential_at(p)).transposed();
            if (!mod2_rowspace_contains(level_rows(f, a, p + 1), G * Dt))
                return ValidationResult::violation(
                    errc::not_a_subcomplex, p,
                    "level " + std::to_string(a) + " is not closed under d at degree " +
                        std::to_string(p));
        }
    return ValidationResult::pass();
}

std::vector<SpectralPage> spectral_sequence(const FilteredComplex& f) {
    if (ValidationResult v = validate_filtration(f); !v) fail(v.code, v.message);

    int s = f.depth();
    int pmin = f.base.p_min();
    int pmax = f.base.p_max();
    int last = s + 2;  // all differentials leave the filtration window beyond this page

    std::map<int, Mod2Matrix> dt;  // transposed differential per degree
    for (int p = pmin - 1; p <= pmax; ++p)
        dt.emplace(p, Mod2Matrix::from_integer(f.base.differential_at(p)).transposed());

    // Z(a, r, n) = {x in F_a^n : d x in F_{a+r}^{n+1}}
    auto z_rows = [&](int a, int r, int n) -> Mod2Matrix {
        if (n < pmin || n > pmax) return Mod2Matrix(0, f.base.rank_at(n));
        Mod2Matrix A = level_rows(f, a, n);
        Mod2Matrix H = level_rows(f, a + r, n + 1);
        return preimage_rows(A, dt.at(n), H);
    };

    std::vector<SpectralPage> pages;
    for (int r = 1; r <= last; ++r) {
        SpectralPage page;
        page.r = r;
        for (int a = 0; a <= s; ++a)
            for (int n = pmin; n <= pmax; ++n) {
                Mod2Matrix zr = z_rows(a, r, n);
                Mod2Matrix den1 = z_rows(a + 1, r - 1, n);
                Mod2Matrix den2;
                if (n - 1 >= pmin) {
                    Mod2Matrix zy = z_rows(a - r + 1, r - 1, n - 1);
                    den2 = zy * dt.at(n - 1);
                } else {
                    den2 = Mod2Matrix(0, f.base.rank_at(n));
                }
                long dim = static_cast<long>(mod2_rank(zr)) -
                           static_cast<long>(mod2_rank(Mod2Matrix::vstack(den1, den2)));
                page.entries[{a, n - a}] = dim;
            }
        pages.push_back(std::move(page));
    }
    for (auto& page : pages) page.stable = page.entries == pages.back().entries;
    return pages;
}

std::vector<std::map<int, long>> filtration_level_dims(const FilteredComplex& f) {
    std::vector<std::map<int, long>> out;
    for (int a = 0; a < static_cast<int>(f.levels.size()); ++a) {
        std::map<int, long> dims;
        for (int p = f.base.p_min(); p <= f.base.p_max(); ++p)
            dims[p] = static_cast<long>(mod2_rank(level_rows(f, a, p)));
        out.push_back(std::move(dims));
    }
    return out;
}

std::vector<long> induced_filtration_dims(const FilteredComplex& f, int n) {
    int s = f.depth();
    Mod2Matrix dt = Mod2Matrix::from_integer(f.base.differential_at(n)).transposed();
    Mod2Matrix im(0, f.base.rank_at(n));
    if (n - 1 >= f.base.p_min())
        im = Mod2Matrix::identity(f.base.rank_at(n - 1)) *
             Mod2Matrix::from_integer(f.base.differential_at(n - 1)).transposed();
    long im_rank = static_cast<long>(mod2_rank(im));

    std::vector<long> dims;
    for (int a = 0; a <= s + 1; ++a) {
        Mod2Matrix A = level_rows(f, a, n);
        Mod2Matrix zero_target(0, f.base.rank_at(n + 1));
        Mod2Matrix cycles = preimage_rows(A, dt, zero_target);
        long dim = static_cast<long>(mod2_rank(Mod2Matrix::vstack(cycles, im))) - im_rank;
        dims.push_back(dim);
    }
    return dims;
}

}  // namespace realog
