#ifndef CONSTACODE_ERRORS_HPP
#define CONSTACODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace constacode {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define CONSTACODE_DEFINE_ERROR(NAME)                                \
    struct NAME : Error {                                            \
        explicit NAME(const std::string& msg) : Error(msg) {}        \
    }

// field construction
CONSTACODE_DEFINE_ERROR(NotPrime);
CONSTACODE_DEFINE_ERROR(NotMonic);
CONSTACODE_DEFINE_ERROR(NotIrreducible);
CONSTACODE_DEFINE_ERROR(NotPrimitive);
CONSTACODE_DEFINE_ERROR(FieldTooLarge);
CONSTACODE_DEFINE_ERROR(NotADivisor);
CONSTACODE_DEFINE_ERROR(FieldMismatch);
CONSTACODE_DEFINE_ERROR(WrongSubfield);

// polynomials
CONSTACODE_DEFINE_ERROR(DivisionByZeroPoly);
CONSTACODE_DEFINE_ERROR(ZeroConstantTerm);

// cosets / defining sets
CONSTACODE_DEFINE_ERROR(NotCoprime);
CONSTACODE_DEFINE_ERROR(BadDivisor);
CONSTACODE_DEFINE_ERROR(EllOutOfRange);
CONSTACODE_DEFINE_ERROR(OutOfRange);

// codes
CONSTACODE_DEFINE_ERROR(NotADivisorOfXnMinusLambda);
CONSTACODE_DEFINE_ERROR(LengthMismatch);
CONSTACODE_DEFINE_ERROR(ShapeMismatch);
CONSTACODE_DEFINE_ERROR(LengthNotDivisible);

// families
CONSTACODE_DEFINE_ERROR(CountTooLarge);
CONSTACODE_DEFINE_ERROR(BadEllDecomposition);
CONSTACODE_DEFINE_ERROR(HOutOfRange);
CONSTACODE_DEFINE_ERROR(EllNotCanonical);
CONSTACODE_DEFINE_ERROR(EllNotDecomposable);
CONSTACODE_DEFINE_ERROR(OutOfTheoremRange);

// analysis
CONSTACODE_DEFINE_ERROR(TooLargeToEnumerate);
CONSTACODE_DEFINE_ERROR(InvalidDistribution);
CONSTACODE_DEFINE_ERROR(HypothesisViolated);

// serialization / CLI plumbing
CONSTACODE_DEFINE_ERROR(ParseError);

#undef CONSTACODE_DEFINE_ERROR

}  // namespace constacode

#endif
