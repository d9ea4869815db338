#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsys {

enum class ErrorKind {
    DuplicateId,
    EmptyUniverse,
    SizeCapExceeded,
    EmptyDomain,
    DomainMismatch,
    EmptySignSet,
    DuplicateSign,
    IncompleteMap,
    DuplicateAssignment,
    UnknownSign,
    SignObjectClash,
    ArityMismatch,
    UnknownObject,
    NotASubset,
    ArityNotLarger,
    BadCoordinates,
    UniverseSignMismatch,
    UniverseMismatch,
    EmptySet,
    NoRelationQuantity,
    CyclicNesting,
    NotAPart,
    BadIndex,
    ShapeMismatch,
    MapNotTotal,
    NestedSystem,
    ParseError,
    ValidationError,
    RaggedRows,
    DuplicateKey,
    UsageError,
};

std::string_view to_string(ErrorKind kind);

/// Every precondition violation in the library throws this; kind() is the
/// stable, testable category and what() carries the detail.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace gsys
