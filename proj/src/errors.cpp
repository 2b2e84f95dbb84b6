#include "realog/errors.hpp"

namespace realog {

const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_matrix: return "InvalidMatrix";
        case errc::invalid_complex: return "InvalidComplex";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::missing_block: return "MissingBlock";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::not_a_subcomplex: return "NotASubcomplex";
        case errc::not_a_filtration: return "NotAFiltration";
        case errc::not_unimodular: return "NotUnimodular";
        case errc::not_a_triangulation: return "NotATriangulation";
        case errc::not_regular: return "NotRegular";
        case errc::unsupported_polygon: return "UnsupportedPolygon";
        case errc::unsupported_stratum: return "UnsupportedStratum";
        case errc::invalid_sdd: return "InvalidSDD";
        case errc::parse_error: return "ParseError";
        case errc::unknown_name: return "UnknownName";
    }
    return "Error";
}

}  // namespace realog
