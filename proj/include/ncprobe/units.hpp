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

// Physical constants, parameter records and unit conversions.
//
// The noncommutative deformation is carried in its dimensionless form
// (theta, omega). For an isotropic oscillator of mass m and frequency w the
// dimensionful parameters are
//
//     theta_tilde = theta * hbar / (m w)      [m^2]
//     omega_tilde = omega * hbar * m w        [kg^2 m^2 / s^2]
//
// so theta_tilde * omega_tilde / hbar^2 == theta * omega and every measurable
// quantity depends on the product only.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncprobe {

struct PhysicalConstants {
    double hbar;                       // J s
    double c;                          // m / s
    double planck_length;              // m
    double gev_in_joules;              // J
    double gev_inverse_squared_in_m2;  // (hbar c / GeV)^2, m^2

    /// CODATA 2018.
    static const PhysicalConstants &codata2018();

    /// Empty when every invariant holds.
    std::vector<std::string> violations() const;
};

inline const PhysicalConstants &constants() { return PhysicalConstants::codata2018(); }

struct MechanicalParams {
    double mass_kg = 0.0;
    double omega_m = 0.0;  // rad / s, shared by both axes

    double mass_frequency() const { return mass_kg * omega_m; }
};

struct DeformationParams {
    double theta = 0.0;
    double omega = 0.0;

    double product() const { return theta * omega; }
    /// theta * omega / 4, the correction to the diagonal commutator.
    double eps() const { return theta * omega / 4.0; }

    double theta_tilde(const MechanicalParams &mech) const;
    double omega_tilde(const MechanicalParams &mech) const;
};

struct CavityParams {
    std::optional<double> finesse;
    std::optional<double> wavelength_m;
    std::optional<double> kappa;          // amplitude decay rate, 1/s
    std::optional<double> omega_c;        // rad / s
    std::optional<double> cavity_length;  // m

    bool has_finesse_path() const { return finesse.has_value() && wavelength_m.has_value(); }
    bool has_coupling_path() const {
        return kappa.has_value() && omega_c.has_value() && cavity_length.has_value();
    }
};

struct PulseSequence {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    std::int64_t cycles = 1;
    std::complex<double> alpha{0.0, 0.0};
    double n_photon = 0.0;
    std::int64_t runs = 1;

    bool isotropic() const { return lambda1 == lambda2; }
    double lambda_squared_sum() const { return lambda1 * lambda1 + lambda2 * lambda2; }
};

/// A single constraint violation, e.g. {"pulse.cycles", "cycles >= 1"}.
struct Violation {
    std::string field;
    std::string constraint;

    std::string message() const { return field + ": " + constraint; }
    bool operator==(const Violation &) const = default;
};

std::vector<Violation> violations(const MechanicalParams &mech);
std::vector<Violation> violations(const DeformationParams &def);
std::vector<Violation> violations(const CavityParams &cav, const MechanicalParams &mech);
std::vector<Violation> violations(const PulseSequence &pulse);

// ---------------------------------------------------------------------------
// Conversions

/// theta_tilde given in GeV^-2 (natural units) to m^2.
double theta_tilde_area_from_natural(double theta_tilde_gev2,
                                     const PhysicalConstants &k = constants());

/// omega_tilde given in MeV^2 (natural units) to (kg m / s)^2.
double omega_tilde_from_natural(double omega_tilde_mev2, const PhysicalConstants &k = constants());

/// theta = theta_tilde * m w / hbar.
double dimensionless_theta(double theta_tilde_m2, const MechanicalParams &mech,
                           const PhysicalConstants &k = constants());

/// omega = omega_tilde / (hbar m w).
double dimensionless_omega(double omega_tilde, const MechanicalParams &mech,
                           const PhysicalConstants &k = constants());

/// (Delta x)_min / l_P = sqrt(theta * omega / 4).
double minimal_length_in_planck_units(double theta_omega);
double minimal_length_in_planck_units(const DeformationParams &def);

enum class InteractionPath { finesse, coupling_rate };

struct InteractionLength {
    double value;
    InteractionPath path;
};

/// Opto-mechanical coupling g0 = h0 = w_c sqrt(hbar) / (L sqrt(m w_m)).
double coupling_rate(const CavityParams &cav, const MechanicalParams &mech,
                     const PhysicalConstants &k = constants());

/// Dimensionless interaction length. Prefers 4 F sqrt(hbar) / (lambda_L sqrt(m w_m));
/// falls back to (g0 + h0) / 2 kappa when only the coupling-rate parameters are given.
InteractionLength effective_interaction_length(const CavityParams &cav, const MechanicalParams &mech,
                                               const PhysicalConstants &k = constants());

const char *to_string(InteractionPath path);

// ---------------------------------------------------------------------------
// Configuration

/// Raw configuration, as read from JSON. Optional members are filled in by validate().
struct ConfigInput {
    std::string name = "config";
    MechanicalParams mech;
    std::optional<CavityParams> cavity;

    std::optional<double> theta;
    std::optional<double> omega;
    std::optional<double> theta_tilde_gev2;
    std::optional<double> omega_dimensionless;

    std::optional<double> lambda1;
    std::optional<double> lambda2;
    std::int64_t cycles = 1;
    std::optional<std::complex<double>> alpha;
    std::optional<double> n_photon;
    std::int64_t runs = 1;
};

/// Fully populated, validated configuration.
struct Configuration {
    std::string name;
    MechanicalParams mech;
    std::optional<CavityParams> cavity;
    DeformationParams deformation;
    PulseSequence pulse;

    std::optional<InteractionLength> interaction_length;
    double theta_tilde_m2 = 0.0;
    double omega_tilde = 0.0;
    double eps = 0.0;
};

struct ValidationOutcome {
    std::optional<Configuration> config;
    std::vector<Violation> errors;

    bool ok() const { return config.has_value(); }
    /// All violations joined with "; ".
    std::string message() const;
};

/// Checks every invariant and derives the missing quantities. Never throws;
/// reports the complete list of violations instead.
ValidationOutcome validate(const ConfigInput &input, const PhysicalConstants &k = constants());

}  // namespace ncprobe
