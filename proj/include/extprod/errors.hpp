/*
 * Copyright 2026 The extprod Authors
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

#include <stdexcept>
#include <string>

namespace extprod {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape/size mismatch of an input (non-square matrix, wrong vector count, ...).
struct DimensionError : Error {
    using Error::Error;
};

/// An input exceeds a hard size guard (factorial/exponential blowup protection).
struct SizeGuardError : Error {
    using Error::Error;
};

/// Operation invoked on a scalar kind it does not support.
struct ScalarKindError : Error {
    using Error::Error;
};

/// Malformed input file or value string.
struct ParseError : Error {
    using Error::Error;
};

} // namespace extprod
