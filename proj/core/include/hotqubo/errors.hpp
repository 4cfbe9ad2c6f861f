#pragma once

#include <stdexcept>
#include <string>

namespace hotqubo {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HOTQUBO_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& msg)                       \
            : Error(std::string(#Name) + ": " + msg) {}             \
    }

// Linear algebra / model
HOTQUBO_DEFINE_ERROR(NotPositiveDefinite);
HOTQUBO_DEFINE_ERROR(DimensionMismatch);

// Market data ingestion
HOTQUBO_DEFINE_ERROR(TickerMismatch);
HOTQUBO_DEFINE_ERROR(NonPositivePrice);
HOTQUBO_DEFINE_ERROR(TooFewPeriods);
HOTQUBO_DEFINE_ERROR(MalformedCell);
HOTQUBO_DEFINE_ERROR(RegularizationFailed);

// Encodings and QUBO instances
HOTQUBO_DEFINE_ERROR(LengthMismatch);
HOTQUBO_DEFINE_ERROR(OutOfRange);
HOTQUBO_DEFINE_ERROR(ParseError);
HOTQUBO_DEFINE_ERROR(VersionMismatch);

// Solvers
HOTQUBO_DEFINE_ERROR(TooLarge);

// Pipeline / CLI
HOTQUBO_DEFINE_ERROR(SizeExceedsUniverse);
HOTQUBO_DEFINE_ERROR(ConfigError);
HOTQUBO_DEFINE_ERROR(IoError);

#undef HOTQUBO_DEFINE_ERROR

}  // namespace hotqubo
