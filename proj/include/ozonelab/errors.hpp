#pragma once

#include <stdexcept>
#include <string>

namespace ozonelab {

// Broad failure classes; each maps to one CLI exit code.
enum class ErrorClass {
    Input = 2,          // parse errors and invalid user data
    Inconsistent = 3,   // presentation collapses (1 = 0)
    Budget = 4,         // search/rule caps exceeded
    DegreeRange = 5,    // request exceeds the completed degree
    CrossCheck = 6,     // two independent routes disagree
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), cls_(cls), kind_(std::move(kind)) {}

    ErrorClass error_class() const noexcept { return cls_; }
    const std::string& kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(cls_); }

private:
    ErrorClass cls_;
    std::string kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(ErrorClass::Input, "SyntaxError",
                what + " at position " + std::to_string(position)),
          detail_(what),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t position_;
};

#define OZONELAB_DEFINE_ERROR(Name, Class)                                   \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what)                               \
            : Error(ErrorClass::Class, #Name, what) {}                       \
    };

OZONELAB_DEFINE_ERROR(DivisionByZero, Input)
OZONELAB_DEFINE_ERROR(ZeroInput, Input)
OZONELAB_DEFINE_ERROR(DimensionMismatch, Input)
OZONELAB_DEFINE_ERROR(InvalidPresentation, Input)
OZONELAB_DEFINE_ERROR(InconsistentPresentation, Inconsistent)
OZONELAB_DEFINE_ERROR(BudgetExceeded, Budget)
OZONELAB_DEFINE_ERROR(SearchSpaceTooLarge, Budget)
OZONELAB_DEFINE_ERROR(DegreeOutOfRange, DegreeRange)
OZONELAB_DEFINE_ERROR(NotAutomorphism, Input)
OZONELAB_DEFINE_ERROR(UnverifiedAutomorphism, Input)
OZONELAB_DEFINE_ERROR(NonGradedTwist, Input)
OZONELAB_DEFINE_ERROR(NotNormal, Input)
OZONELAB_DEFINE_ERROR(NotSkew, Input)
OZONELAB_DEFINE_ERROR(NotDegreeOneGenerated, Input)
OZONELAB_DEFINE_ERROR(NonCommutingGenerators, Input)
OZONELAB_DEFINE_ERROR(NonAbelianGroup, Input)
OZONELAB_DEFINE_ERROR(NotAntisymmetric, Input)
OZONELAB_DEFINE_ERROR(BadOrder, Input)
OZONELAB_DEFINE_ERROR(DegenerateParameters, Input)
OZONELAB_DEFINE_ERROR(PoleAtOne, Input)
OZONELAB_DEFINE_ERROR(NonIntegerRank, Input)
OZONELAB_DEFINE_ERROR(SeriesUnavailable, Input)
OZONELAB_DEFINE_ERROR(MolienMismatch, CrossCheck)
OZONELAB_DEFINE_ERROR(CrossCheckFailure, CrossCheck)
OZONELAB_DEFINE_ERROR(ContradictsDivisibility, CrossCheck)

#undef OZONELAB_DEFINE_ERROR

}  // namespace ozonelab
