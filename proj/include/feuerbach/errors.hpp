#pragma once
// Error codes and the exception type used across the library.

#include <stdexcept>
#include <string>
#include <utility>

namespace feuerbach {

enum class ErrorCode {
    division_by_zero,
    ctx_mismatch,
    negative_radicand,
    already_square,
    degenerate_triangle,
    ideal_point,
    identical_arguments,
    collinear_triple,
    collinear_points,
    inadmissible_point,
    on_sideline,
    centroid_degenerate,
    equilateral_triangle,
    point_not_on_conic,
    parse_error,
    io_error,
};

inline const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::division_by_zero:     return "division_by_zero";
    case ErrorCode::ctx_mismatch:         return "ctx_mismatch";
    case ErrorCode::negative_radicand:    return "negative_radicand";
    case ErrorCode::already_square:       return "already_square";
    case ErrorCode::degenerate_triangle:  return "degenerate_triangle";
    case ErrorCode::ideal_point:          return "ideal_point";
    case ErrorCode::identical_arguments:  return "identical_arguments";
    case ErrorCode::collinear_triple:     return "collinear_triple";
    case ErrorCode::collinear_points:     return "collinear_points";
    case ErrorCode::inadmissible_point:   return "inadmissible_point";
    case ErrorCode::on_sideline:          return "on_sideline";
    case ErrorCode::centroid_degenerate:  return "centroid_degenerate";
    case ErrorCode::equilateral_triangle: return "equilateral_triangle";
    case ErrorCode::point_not_on_conic:   return "point_not_on_conic";
    case ErrorCode::parse_error:          return "parse_error";
    case ErrorCode::io_error:             return "io_error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, std::string(error_name(code)) + ": " + message);
}

} // namespace feuerbach
