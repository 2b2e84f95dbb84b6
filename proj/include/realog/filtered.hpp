#pragma once

#include <map>
#include <utility>
#include <vector>

#include "realog/cochain.hpp"
#include "realog/mod2.hpp"

namespace realog {

/// A mod-2 cochain complex with a decreasing filtration
/// F_0 = C  >=  F_1  >=  ...  >=  F_depth  >=  0
/// by subcomplexes. `levels[i]` holds, per degree, a matrix whose columns
/// span F_i in that degree; a missing degree entry at level i > 0 means the
/// zero subspace.
struct FilteredComplex {
    CochainComplex base;
    std::vector<std::map<int, Mod2Matrix>> levels;

    int depth() const { return static_cast<int>(levels.size()) - 1; }
};

/// Checks span shapes, F_0 = C, nesting, and d(F_i) <= F_i degreewise.
ValidationResult validate_filtration(const FilteredComplex& f);

struct SpectralPage {
    int r = 1;
    std::map<std::pair<int, int>, long> entries;  // (filtration level a, complement b)
    bool stable = false;

    long at(int a, int b) const {
        auto it = entries.find({a, b});
        return it == entries.end() ? 0 : it->second;
    }
};

/// Pages E_1, E_2, ... of the filtration spectral sequence, computed until
/// entrywise stable; the final page carries the limit. Throws
/// NotASubcomplex / NotAFiltration when the input is malformed.
std::vector<SpectralPage> spectral_sequence(const FilteredComplex& f);

/// Dimensions of the induced filtration on H^n: entry a is dim F_a H^n,
/// for a = 0 .. depth+1.
std::vector<long> induced_filtration_dims(const FilteredComplex& f, int n);

/// Per level a = 0..depth, the map degree -> dim F_a at that degree.
std::vector<std::map<int, long>> filtration_level_dims(const FilteredComplex& f);

}  // namespace realog
