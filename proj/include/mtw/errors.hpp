#pragma once

#include <stdexcept>
#include <string>

namespace mtw {

enum class errc {
    cycle_detected,
    disconnected,
    nonpositive_length,
    duplicate_edge,
    point_not_on_tree,
    empty_input,
    dimension_mismatch,
    no_free_ray,
    instance_too_large,
    negative_radius,
    theta_out_of_range,
    unknown_suite,
    invalid_spec,
    parse_error,
    missing_branch_length,
    invalid_argument,
};

const char* errc_name(errc c);

/// Domain error carrying a machine-readable code plus a message that
/// names the offending element.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace mtw
