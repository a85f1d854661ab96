#include "frobgram/error.hpp"

namespace frobgram {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::InvalidDegree: return "InvalidDegree";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::NotSquarefree: return "NotSquarefree";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::NotHomogeneous: return "NotHomogeneous";
        case Errc::SingularCurve: return "SingularCurve";
        case Errc::DegreeParity: return "DegreeParity";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::WrongKind: return "WrongKind";
        case Errc::NonIntegerCoefficient: return "NonIntegerCoefficient";
        case Errc::CountLengthMismatch: return "CountLengthMismatch";
        case Errc::RootFindingFailure: return "RootFindingFailure";
        case Errc::InsufficientCounts: return "InsufficientCounts";
        case Errc::GenusOrder: return "GenusOrder";
        case Errc::NegativeRelativeGenus: return "NegativeRelativeGenus";
        case Errc::TooLarge: return "TooLarge";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::EqualGenera: return "EqualGenera";
        case Errc::InvalidDiagram: return "InvalidDiagram";
        case Errc::ZeroGenus: return "ZeroGenus";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace frobgram
