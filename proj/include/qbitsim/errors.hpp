// Copyright 2026 The qbitsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qbitsim {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index (basis value or Qbit) is outside its allowed range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Operands have incompatible sizes (Qbit counts, matrix dimensions).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Unknown gate or identity name.
class LookupError : public Error {
 public:
  using Error::Error;
};

class UnitarityError : public Error {
 public:
  using Error::Error;
};

/// A state violates the normalization invariant at an API boundary.
class NormError : public Error {
 public:
  using Error::Error;
};

/// Forced measurement outcome has (numerically) zero probability.
class PostselectionError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a fixed capacity, e.g. the dense-matrix oracle cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qbitsim
