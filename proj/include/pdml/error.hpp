#pragma once

#include <stdexcept>
#include <string>

namespace pdml {

// Error codes are grouped by the exit-code contract of the CLI:
// data errors exit 3, model errors exit 4, usage errors exit 2.
enum class errc {
    // data
    missing_column,
    parse_error,
    non_finite_value,
    empty_file,
    duplicate_name,
    zero_variance,
    column_mismatch,
    dimension_mismatch,
    degenerate_rank,
    class_absent,
    class_too_small,
    length_mismatch,
    empty_input,
    schema_mismatch,
    io_error,
    // model
    schema_version_mismatch,
    corrupt_model,
    divergence_detected,
    // usage
    usage_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

    int exit_code() const noexcept {
        switch (code_) {
        case errc::schema_version_mismatch:
        case errc::corrupt_model:
        case errc::divergence_detected:
            return 4;
        case errc::usage_error:
            return 2;
        default:
            return 3;
        }
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace pdml
