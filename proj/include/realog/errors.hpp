#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace realog {

enum class errc {
    invalid_matrix,
    invalid_complex,
    shape_mismatch,
    missing_block,
    hypothesis_violated,
    not_a_subcomplex,
    not_a_filtration,
    not_unimodular,
    not_a_triangulation,
    not_regular,
    unsupported_polygon,
    unsupported_stratum,
    invalid_sdd,
    parse_error,
    unknown_name,
};

const char* errc_name(errc c);

/// Exception carrying a machine-readable error code next to the message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) { throw error(code, message); }

/// Result of a non-throwing validator. `degree` / `where` locate the first violation.
struct ValidationResult {
    bool ok = true;
    errc code = errc::invalid_complex;
    int degree = 0;
    std::string message;
    std::vector<std::string> warnings;

    explicit operator bool() const { return ok; }

    static ValidationResult pass() { return {}; }
    static ValidationResult violation(errc c, int degree, std::string msg) {
        ValidationResult r;
        r.ok = false;
        r.code = c;
        r.degree = degree;
        r.message = std::move(msg);
        return r;
    }
};

}  // namespace realog
