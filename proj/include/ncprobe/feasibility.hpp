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

// Shot-noise sensitivity and parameter sweeps.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncprobe/units.hpp"

namespace ncprobe {

struct Scenario {
    std::string name;
    MechanicalParams mech;
    CavityParams cav;
    PulseSequence pulse;
    DeformationParams def;

    /// F = 0.1, m = 1e-7 kg, w_m = 2 pi 1e5 rad/s, lambda_L = 1064 nm,
    /// N_p = 1e6, N_r = 100, N = 1, theta omega = 1e12.
    static Scenario paper_a();
    /// paper_a with F = 1e5 and theta omega = 1.
    static Scenario paper_b();
    /// Looks up "paper-a" / "paper-b".
    static Scenario preset(const std::string &name);
    static Scenario from_config(const Configuration &cfg);

    std::vector<Violation> violations() const;
};

struct FeasibilityReport {
    double gamma = 0.0;
    double theta_signal = 0.0;
    double delta_phi = 0.0;
    double snr = 0.0;
    double snr_ideal = 0.0;
    /// theta omega at which snr == 1; empty when out of reach.
    std::optional<double> detectable_theta_omega;
    /// (Delta x)_min / l_P at the detectable theta omega.
    std::optional<double> minimal_length_planck;
    std::optional<std::string> note;
};

/// 1 / sqrt(N_p N_r).
double phase_uncertainty(double n_p, std::int64_t runs);

/// gamma for theta omega = 1; gamma scales linearly in theta omega.
double gamma_per_unit_theta_omega(const Scenario &s);

FeasibilityReport snr(const Scenario &s);

/// theta omega with |Theta(N)| = target_snr * delta_phi, solved on gamma in
/// (0, pi/2] where the signal is strictly increasing. The scenario's own
/// deformation is ignored. Throws SensitivityUnreachableError.
double detectable_theta_omega(const Scenario &s, double target_snr = 1.0);

struct SweepAxis {
    /// One of sweep_parameter_paths().
    std::string path;
    std::vector<double> values;
};

struct SweepGrid {
    Scenario base;
    std::vector<SweepAxis> axes;
    std::size_t max_points = 10'000'000;

    std::size_t size() const;
    /// Empty when the grid can be swept.
    std::vector<Violation> violations() const;
};

const std::vector<std::string> &sweep_parameter_paths();

/// Writes `value` into the field named by `path`; keeps alpha consistent with n_photon.
void set_parameter(Scenario &s, const std::string &path, double value);
double get_parameter(const Scenario &s, const std::string &path);

struct SweepRow {
    std::vector<std::size_t> index;  // position along each axis
    Scenario scenario;
    std::optional<FeasibilityReport> report;
    std::string error;
};

/// One row per Cartesian point, lexicographic in axis indices (last axis
/// fastest). Point failures are stored in the row. Throws ConfigError for an
/// invalid grid.
std::vector<SweepRow> sweep(const SweepGrid &grid);

/// {"axes": [{"path": ..., "values": [...]}, ...], "max_points": ...}
SweepGrid parse_grid(const nlohmann::json &doc, const Scenario &base);

/// Column order of the sweep CSV.
const std::vector<std::string> &csv_columns();
void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows);

}  // namespace ncprobe
