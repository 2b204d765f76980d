// Copyright 2026 The ncprobe Authors
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

// JSON views of result records. Complex numbers are {"re": x, "im": y};
// absent optionals are null. Schemas live in docs/schemas/.

#pragma once

#include <complex>

#include <json.hpp>

#include "ncprobe/feasibility.hpp"
#include "ncprobe/fock.hpp"
#include "ncprobe/loop.hpp"
#include "ncprobe/phase.hpp"

namespace ncprobe {

nlohmann::json complex_to_json(std::complex<double> z);
nlohmann::json to_json(const CommutatorResiduals &r);
nlohmann::json to_json(const LoopResult &r);
nlohmann::json to_json(const MeanFieldResult &r);
nlohmann::json to_json(const PhaseSignal &s);
nlohmann::json to_json(const FeasibilityReport &r);
nlohmann::json to_json(const Scenario &s);

}  // namespace ncprobe
