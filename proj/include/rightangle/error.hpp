#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rightangle {

enum class ErrorCode {
    InvalidPoint,
    DuplicatePoint,
    DegenerateInput,
    CoincidentPoints,
    SubsetTooSmall,
    InvalidK,
    BudgetExceeded,
    TooFewPoints,
    DuplicateXCoordinate,
    InvalidScale,
    InvalidCount,
    InvalidParams,
    ShapeError,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rightangle
