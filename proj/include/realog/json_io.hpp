#pragma once

#include <string>

#include "realog/assembly.hpp"
#include "realog/cochain.hpp"
#include "realog/degeneration.hpp"
#include "realog/int_matrix.hpp"
#include "realog/patchwork.hpp"

namespace realog {

enum class InputKind { Matrix, Complex, Degeneration, Patchwork };

/// Decide what a JSON document describes from its top-level keys:
/// "fiber_dim" = degeneration, "polygon" = patchwork, "coefficient" =
/// cochain complex, "entries" = bare matrix. Anything else is a ParseError.
InputKind classify_json(const std::string& text);

// Emitters produce canonical JSON: object keys sorted, two-space indent,
// trailing newline. Re-emitting a parsed document reproduces it byte for
// byte. Integer entries that do not fit in 64 bits are written as decimal
// strings; parsers accept both forms.

std::string matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const std::string& text);

std::string complex_to_json(const CochainComplex& c);
CochainComplex complex_from_json(const std::string& text);

std::string sdd_to_json(const StratifiedDegeneration& sdd);
StratifiedDegeneration sdd_from_json(const std::string& text);

std::string patchwork_to_json(const PatchworkInput& pi);
PatchworkInput patchwork_from_json(const std::string& text);

struct ReportOptions {
    bool with_integral = true;  // integral ranks, torsion, Hodge-style table
    bool with_mod2 = true;      // mod-2 dimensions and the bound table
};

/// Extra section for reports produced from a patchwork run.
struct ViroSummary {
    long vertices = 0;
    long segments = 0;
    long components = 0;
};

std::string report_to_json(const VerdictReport& report, const ReportOptions& opt = {},
                           const ViroSummary* viro = nullptr);
std::string report_to_markdown(const VerdictReport& report, const ReportOptions& opt = {},
                               const ViroSummary* viro = nullptr);

}  // namespace realog
