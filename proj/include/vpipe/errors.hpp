#pragma once

#include <stdexcept>
#include <string>

namespace vpipe {

// Base of every error this library throws on its own behalf.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Frame dimensions outside [1, 4095] or otherwise unusable.
struct DimensionError : Error {
    using Error::Error;
};

// Malformed or truncated image/stream bytes.
struct FormatError : Error {
    using Error::Error;
};

// A component was asked to operate against its configuration
// (dimension mismatch, incompatible ring capacities, bad mode...).
struct ConfigError : Error {
    using Error::Error;
};

// Register-protocol violation: dimension change attempted without reset.
struct ProtocolError : Error {
    using Error::Error;
};

// Token pushed into an enhancement core that is held in reset.
struct ResetViolationError : ProtocolError {
    using ProtocolError::ProtocolError;
};

// sof/eol flags inconsistent with the configured frame geometry.
struct FramingError : Error {
    using Error::Error;
};

// Inputs that disagree with each other (bin-sum mismatch, length mismatch,
// mixed classification/detection manifests).
struct ConsistencyError : Error {
    using Error::Error;
};

// Scalar argument outside its documented range.
struct RangeError : Error {
    using Error::Error;
};

}  // namespace vpipe
