#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace holoframe {

// Error taxonomy. Every library failure derives from Error so callers can
// catch broadly; the concrete types mirror the failure modes of the
// operations (domain, index, rank deficiency, overflow, ...).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct ArgumentError : Error {
    using Error::Error;
};

struct DegenerateError : Error {
    using Error::Error;
};

/// The analysis operator is rank deficient at the requested threshold.
struct NoFrameError : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct DegreeOverflowError : Error {
    using Error::Error;
};

struct InsufficientDataError : Error {
    using Error::Error;
};

struct UnsupportedPairingError : Error {
    using Error::Error;
};

/// Invalid experiment configuration; the message starts with the field path.
struct ConfigError : Error {
    ConfigError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace holoframe
