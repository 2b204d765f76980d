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

#include "ncprobe/phase.hpp"

#include <cmath>
#include <numbers>

#include "ncprobe/errors.hpp"

namespace ncprobe {

namespace {

const std::complex<double> kI{0.0, 1.0};

void require_photon_number(std::complex<double> alpha, double n_p) {
    if (std::abs(std::norm(alpha) - n_p) > 1e-12 * std::max(1.0, n_p)) {
        throw DomainError("n_p must equal |alpha|^2");
    }
}

void require_cycles(std::int64_t cycles) {
    if (cycles < 0) throw DomainError("cycles must be >= 0");
}

// alpha exp(-i N c - N_p (1 - exp(-2 i N c)))
std::complex<double> coherent_mean_field(std::complex<double> alpha, double n_c, double n_p) {
    return alpha * std::exp(-kI * n_c - n_p * (1.0 - std::exp(-2.0 * kI * n_c)));
}

}  // namespace

std::complex<double> mean_field_qm(std::complex<double> alpha, double lambda1, double lambda2, double n_p,
                                   std::int64_t cycles) {
    require_photon_number(alpha, n_p);
    require_cycles(cycles);
    const double s = lambda1 * lambda1 + lambda2 * lambda2;
    return coherent_mean_field(alpha, static_cast<double>(cycles) * s, n_p);
}

std::complex<double> mean_field_deformed(std::complex<double> alpha, double lambda, const DeformationParams &def,
                                         std::int64_t cycles, double n_p) {
    require_photon_number(alpha, n_p);
    require_cycles(cycles);
    const double n_c = 2.0 * static_cast<double>(cycles) * lambda * lambda * (1.0 + def.eps());
    return coherent_mean_field(alpha, n_c, n_p);
}

double deformation_angle(std::int64_t cycles, double lambda, const DeformationParams &def) {
    return static_cast<double>(cycles) * lambda * lambda * def.product() / 2.0;
}

std::complex<double> theta_phase(std::int64_t cycles, double lambda, const DeformationParams &def, double n_p) {
    require_cycles(cycles);
    const double g = deformation_angle(cycles, lambda, def);
    const double background = 4.0 * static_cast<double>(cycles) * lambda * lambda;
    // exp(-2ig) - 1 = -2i sin(g) exp(-ig); written this way to keep the small-g limit accurate.
    const std::complex<double> bracket = -2.0 * kI * std::sin(g) * std::exp(-kI * g);
    return g + kI * n_p * std::exp(-kI * background) * bracket;
}

double signal_from_gamma(double gamma, double n_p) { return gamma + 2.0 * n_p * std::sin(gamma); }

ThetaMagnitude theta_magnitude(std::int64_t cycles, double lambda, const DeformationParams &def, double n_p) {
    require_cycles(cycles);
    ThetaMagnitude out;
    out.g = deformation_angle(cycles, lambda, def);
    out.value = signal_from_gamma(out.g, n_p);
    if (out.g < 0.0 || out.g > std::numbers::pi) {
        out.warning = "g = " + std::to_string(out.g) + " lies outside [0, pi]; |Theta| is not monotone there";
    }
    return out;
}

double gamma_from_experiment(const DeformationParams &def, const MechanicalParams &mech, const CavityParams &cav,
                             std::int64_t cycles) {
    require_cycles(cycles);
    const double n = static_cast<double>(cycles);
    if (cav.has_finesse_path()) {
        const double f = *cav.finesse;
        const double wl = *cav.wavelength_m;
        return 8.0 * def.product() * n * constants().hbar * f * f / (mech.mass_frequency() * wl * wl);
    }
    const double lambda = effective_interaction_length(cav, mech).value;
    return n * lambda * lambda * def.product() / 2.0;
}

PhaseSignal phase_signal(const Configuration &cfg) {
    const auto &pulse = cfg.pulse;
    if (!pulse.isotropic()) {
        throw ConfigError("phase model requires an isotropic pulse (lambda1 == lambda2)");
    }
    const double lambda = pulse.lambda1;
    PhaseSignal s;
    s.theta_complex = theta_phase(pulse.cycles, lambda, cfg.deformation, pulse.n_photon);
    const auto mag = theta_magnitude(pulse.cycles, lambda, cfg.deformation, pulse.n_photon);
    s.theta_magnitude_paper = mag.value;
    s.warning = mag.warning;
    s.theta_modulus = std::abs(s.theta_complex);
    s.gamma = cfg.cavity ? gamma_from_experiment(cfg.deformation, cfg.mech, *cfg.cavity, pulse.cycles) : mag.g;
    s.mean_field_qm = mean_field_qm(pulse.alpha, lambda, lambda, pulse.n_photon, pulse.cycles);
    s.mean_field_deformed = mean_field_deformed(pulse.alpha, lambda, cfg.deformation, pulse.cycles, pulse.n_photon);
    return s;
}

}  // namespace ncprobe
