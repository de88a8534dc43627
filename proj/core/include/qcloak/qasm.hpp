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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qcloak/circuit.hpp"

namespace qcloak {

/// Raised for any input outside the supported OpenQASM 2.0 subset. Line and
/// column are 1-based and point at the offending token.
class QasmError : public std::runtime_error {
 public:
  QasmError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the OpenQASM 2.0 subset: one `qreg`, an optional `creg`, the gates
/// x/sx/rz/rx/cx, `measure` and `barrier` (ignored). Rotation arguments may
/// be arithmetic over decimal literals and `pi`. `include` lines are skipped.
/// Measuring into an undeclared register declares it with one bit per qubit.
/// Measurement is terminal; a later gate on a measured qubit is an error.
Circuit parse_qasm(std::string_view text);

/// Writes a circuit in the same subset. Angles are printed with 17
/// significant digits, so they read back to the identical double.
std::string serialize_qasm(const Circuit& circuit);

/// Shortest round-trip decimal form of `value`.
std::string format_angle(double value);

}  // namespace qcloak
