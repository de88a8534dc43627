// Copyright 2026 The qcloak Authors
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

namespace qcloak {

/// A size guard was exceeded (dense unitary or statevector too large).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed or inconsistent data file (key, distribution) or a bit-length
/// mismatch between a distribution and a key.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A synthesized fragment or circuit failed its equivalence check.
class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcloak
