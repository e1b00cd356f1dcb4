#include "sfknot/error.hpp"

namespace sfknot {

const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::OddLabel: return "OddLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::RangeGap: return "RangeGap";
    case ErrorKind::Unrealizable: return "Unrealizable";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::GenusInconsistent: return "GenusInconsistent";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::MixedParity: return "MixedParity";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace sfknot
