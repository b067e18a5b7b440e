/*
 * Copyright 2026 The polygame Authors
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

namespace polygame {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands have the wrong shape (mismatched endpoints, base sets, ...).
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A construction would exceed a configured enumeration bound.
class SizingError : public Error {
public:
    using Error::Error;
};

/// An exhaustive search was not attempted because the input is too large.
class SearchRefused : public Error {
public:
    using Error::Error;
};

/// Input data violates an invariant (invalid game, non-equalizing span, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A span or simulation does not equalize the symmetries it should.
class NotEqualizing : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Supplied symmetry witnesses fail their commuting condition.
class WitnessError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Bounds shared by the enumerating constructions and the searches.
struct Limits {
    /// Maximum number of moves (or family elements) enumerated per state.
    std::size_t max_enum = 10000;
    /// Maximum apex size for exhaustive bijection search.
    std::size_t search_bound = 8;
};

} // namespace polygame
