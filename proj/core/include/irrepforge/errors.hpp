// Copyright 2026 The IrrepForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IRREPFORGE_ERRORS_HPP
#define IRREPFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irrepforge {

/// Base class of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad indices, shape mismatches, invalid labels or chains.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a value that violates its precondition
/// (e.g. a non-highest-weight state handed to basis_set).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A consistency check inside an algorithm failed. Seeing one is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace irrepforge

#endif  // IRREPFORGE_ERRORS_HPP
