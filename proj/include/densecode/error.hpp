// Copyright 2026 The densecode Authors
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

namespace densecode {

/// Base class for every error raised by the library. The C API maps each
/// subclass onto one status code.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A value violates a documented precondition or type invariant.
class InvalidInput : public Error {
   public:
    using Error::Error;
};

/// Readout was asked to decode a state that is not a signed basis vector.
class NotBasisState : public Error {
   public:
    using Error::Error;
};

/// Tomography records do not determine all density-matrix coefficients.
class RankDeficient : public Error {
   public:
    using Error::Error;
};

/// Configuration document is malformed or inconsistent.
class ConfigError : public Error {
   public:
    using Error::Error;
};

class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace densecode
