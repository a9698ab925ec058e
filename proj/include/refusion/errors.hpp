#pragma once

#include <stdexcept>
#include <string>

namespace refusion {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidBBox : Error {
    using Error::Error;
};

struct EmptyTemplateHistogram : Error {
    using Error::Error;
};

struct TemplateLargerThanRegion : Error {
    using Error::Error;
};

struct EmptyStore : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotInitialized : Error {
    using Error::Error;
};

struct MissingDetectionsFile : Error {
    using Error::Error;
};

struct BackendUnavailable : Error {
    using Error::Error;
};

struct ProtocolViolation : Error {
    using Error::Error;
};

struct EmptySequence : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct IoFailure : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace refusion
