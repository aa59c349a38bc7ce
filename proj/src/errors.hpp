/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dent {

/// Base class for all library errors. Each subclass maps 1:1 onto a
/// dent_status code in the C API.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation requires at least one observation.
class EmptySampleError : public Error {
public:
    explicit EmptySampleError(const std::string& what = "empty sample") : Error(what) {}
};

/// Invalid estimator parameter (unknown id, alpha <= 0, K < m, ...).
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what) : Error(what) {}
};

/// Axis/arity mismatch on joint data.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Numerical routine failed to produce a usable value.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(what) {}
};

/// Distribution generation could not hit the requested band.
class GenerationError : public Error {
public:
    explicit GenerationError(const std::string& what) : Error(what) {}
};

/// Filesystem failure, with the offending path in the message.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace dent
