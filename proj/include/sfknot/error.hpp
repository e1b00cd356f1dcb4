#pragma once

#include <stdexcept>
#include <string>

namespace sfknot {

enum class ErrorKind {
    // codec
    OddLabel,
    DuplicateLabel,
    RangeGap,
    Unrealizable,
    NotAKnot,
    Malformed,
    // algebra
    SingularForm,
    // invariants
    NotUnimodular,
    GenusInconsistent,
    // hfk
    NotAlternating,
    MixedParity,
    // anything that should be impossible for valid input
    Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sfknot
