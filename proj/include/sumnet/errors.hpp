#ifndef SUMNET_ERRORS_HPP
#define SUMNET_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction / arithmetic
struct NotPrime : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};

// matrices
struct DimensionMismatch : Error {
    using Error::Error;
};
struct SingularMatrix : Error {
    using Error::Error;
};

// networks
struct InvalidParameter : Error {
    using Error::Error;
};
struct CycleDetected : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct PathLimitExceeded : Error {
    using Error::Error;
};

// codes
struct LengthMismatch : Error {
    using Error::Error;
};
struct PathInvalid : Error {
    using Error::Error;
};
struct MissingNetworkBinding : Error {
    using Error::Error;
};
struct ZeroCoefficient : Error {
    using Error::Error;
};
struct InputNotSolving : Error {
    using Error::Error;
};

// solver
struct SearchSpaceTooLarge : Error {
    SearchSpaceTooLarge(const std::string& msg, double required_assignments)
        : Error(msg), required(required_assignments) {}
    double required;  // assignments the full enumeration would need
};
struct CharacteristicDividesM2 : Error {
    CharacteristicDividesM2(const std::string& msg, std::uint32_t characteristic, std::int64_t m_minus_2)
        : Error(msg), p(characteristic), m2(m_minus_2) {}
    std::uint32_t p;
    std::int64_t m2;
};
struct FieldTooSmall : Error {
    using Error::Error;
};
struct InvalidAlpha : Error {
    using Error::Error;
};

}  // namespace sumnet

#endif
