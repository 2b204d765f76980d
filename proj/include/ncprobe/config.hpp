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

// JSON configuration files.
//
//   {
//     "name": "...",                                   (optional)
//     "mechanical":  {"mass_kg", "omega_m_rad_s"},
//     "cavity":      {"finesse", "wavelength_m"}       (optional section;
//                    or {"kappa", "omega_c_rad_s", "length_m"})
//     "deformation": {"theta", "omega"}
//                    or {"theta_tilde_gev2", "omega_dimensionless"},
//     "pulse":       {"lambda1", "lambda2", "cycles", "n_photon", "runs", "alpha"}
//   }
//
// Unknown keys at any level are rejected.

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ncprobe/units.hpp"

namespace ncprobe {

/// Parses the raw configuration. Throws ConfigError on unknown keys or wrong types.
ConfigInput parse_config(const nlohmann::json &doc);

/// Parses and validates; throws ConfigError carrying every violation.
Configuration load_config(const nlohmann::json &doc);
Configuration load_config_file(const std::filesystem::path &path);

nlohmann::json read_json_file(const std::filesystem::path &path);

}  // namespace ncprobe
