/*
 * Copyright 2026 The dres Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dres {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (zero polynomial, t = 0, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A user-facing parameter is out of range (q a root of unity, m < 2, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Division by the zero rational function.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Expression text could not be parsed. `offset()` is a byte offset into
/// the source string.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace dres
