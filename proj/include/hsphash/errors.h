// Copyright 2026 The hsphash Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hsphash {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Elements or states that do not belong to the group they are used with.
class StructuralError : public Error {
   public:
    using Error::Error;
};

/// An operation would exceed a configured desk-scale bound.
class ResourceError : public Error {
   public:
    using Error::Error;
};

/// Invalid hash or attack parameters.
class ParameterError : public Error {
   public:
    using Error::Error;
};

/// The kernel is trivial, so no collision exists.
class NoCollisionError : public Error {
   public:
    using Error::Error;
};

}  // namespace hsphash
