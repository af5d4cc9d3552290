// Copyright 2026 The ciin-search Authors
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

namespace ciin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Side size n < 2, or a config value outside its domain.
class InvalidSize : public Error {
 public:
  using Error::Error;
};

/// Vertex index outside [0, N).
class IndexError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The requested variant needs a divisibility property the size lacks
/// (n mod 4 = 0, n odd, n a power of two, ...).
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// p is below the minimum iteration count, so the phase angle is not real.
class ThetaNotReal : public Error {
 public:
  using Error::Error;
};

/// No integer pair (j, k) gives a real-valued finishing-map phase.
class NoValidPair : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ciin
