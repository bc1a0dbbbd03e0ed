#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgqed {

// Base of every error raised by the library. Each concrete type maps to one
// named failure mode of a public operation.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CGQED_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(what) {}    \
    }

// dirac
CGQED_DEFINE_ERROR(ResidualOutsideBasis);
CGQED_DEFINE_ERROR(DegenerateKinematics);
// epsx
CGQED_DEFINE_ERROR(DeltaSquared);
// quad
CGQED_DEFINE_ERROR(ToleranceNotReached);
CGQED_DEFINE_ERROR(NonFiniteIntegrand);
CGQED_DEFINE_ERROR(InvalidQuadSpec);
// dimreg
CGQED_DEFINE_ERROR(OutsideValidity);
CGQED_DEFINE_ERROR(SingularDenominator);
CGQED_DEFINE_ERROR(NonpositiveW);
CGQED_DEFINE_ERROR(UnsupportedArity);
// oracle
CGQED_DEFINE_ERROR(NonconvergentPowerCounting);
CGQED_DEFINE_ERROR(DenominatorVanishes);
// selfenergy / vertex / checks
CGQED_DEFINE_ERROR(KinematicsOutOfDomain);
// symdirac
CGQED_DEFINE_ERROR(UnbalancedContraction);
CGQED_DEFINE_ERROR(UnsupportedChainLength);

#undef CGQED_DEFINE_ERROR

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace cgqed
