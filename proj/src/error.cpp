#include "gsys/error.hpp"

namespace gsys {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::EmptyUniverse: return "EmptyUniverse";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::EmptySignSet: return "EmptySignSet";
    case ErrorKind::DuplicateSign: return "DuplicateSign";
    case ErrorKind::IncompleteMap: return "IncompleteMap";
    case ErrorKind::DuplicateAssignment: return "DuplicateAssignment";
    case ErrorKind::UnknownSign: return "UnknownSign";
    case ErrorKind::SignObjectClash: return "SignObjectClash";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::NotASubset: return "NotASubset";
    case ErrorKind::ArityNotLarger: return "ArityNotLarger";
    case ErrorKind::BadCoordinates: return "BadCoordinates";
    case ErrorKind::UniverseSignMismatch: return "UniverseSignMismatch";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NoRelationQuantity: return "NoRelationQuantity";
    case ErrorKind::CyclicNesting: return "CyclicNesting";
    case ErrorKind::NotAPart: return "NotAPart";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::MapNotTotal: return "MapNotTotal";
    case ErrorKind::NestedSystem: return "NestedSystem";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::DuplicateKey: return "DuplicateKey";
    case ErrorKind::UsageError: return "UsageError";
    }
    return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace gsys
