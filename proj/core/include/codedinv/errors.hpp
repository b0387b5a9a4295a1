#pragma once

#include <stdexcept>
#include <string>

namespace codedinv {

/// Bad argument to an operation (dimension mismatch, out-of-range index, ...).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Scheme parameters rejected by validation (non-integral row weight, d < n/2, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Structural failure while building a code (zero polynomial coefficient, singular P).
class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// Too few responders to decode; no partial result is produced.
class UnrecoverableError : public std::runtime_error {
public:
    explicit UnrecoverableError(const std::string& what) : std::runtime_error(what) {}
};

/// Reconstructed data failed an integrity bound (imaginary residue too large).
class ReconstructionError : public std::runtime_error {
public:
    explicit ReconstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// Decoded result failed a self-check (interpolation residual too large).
class DecodeIntegrityError : public std::runtime_error {
public:
    explicit DecodeIntegrityError(const std::string& what) : std::runtime_error(what) {}
};

/// File read/write failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace codedinv
