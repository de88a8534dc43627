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

#include "qcloak/analysis.hpp"
#include "qcloak/bench.hpp"
#include "qcloak/circuit.hpp"
#include "qcloak/dag.hpp"
#include "qcloak/distribution.hpp"
#include "qcloak/errors.hpp"
#include "qcloak/io.hpp"
#include "qcloak/linalg.hpp"
#include "qcloak/netlsd.hpp"
#include "qcloak/obfuscate.hpp"
#include "qcloak/partition.hpp"
#include "qcloak/pipeline.hpp"
#include "qcloak/qasm.hpp"
#include "qcloak/simulator.hpp"
#include "qcloak/synthesis.hpp"
