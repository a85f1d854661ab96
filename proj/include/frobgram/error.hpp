#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobgram {

enum class Errc {
    NotPrime,
    InvalidDegree,
    FieldMismatch,
    DivisionByZero,
    EvenCharacteristic,
    ZeroInput,
    NotSquarefree,
    ZeroPolynomial,
    NotHomogeneous,
    SingularCurve,
    DegreeParity,
    NotCoprime,
    BudgetExceeded,
    WrongKind,
    NonIntegerCoefficient,
    CountLengthMismatch,
    RootFindingFailure,
    InsufficientCounts,
    GenusOrder,
    NegativeRelativeGenus,
    TooLarge,
    IndexOutOfRange,
    DimensionMismatch,
    EqualGenera,
    InvalidDiagram,
    ZeroGenus,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

}  // namespace frobgram
