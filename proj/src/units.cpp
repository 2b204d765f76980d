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

#include "ncprobe/units.hpp"

#include <cmath>

#include "ncprobe/errors.hpp"

namespace ncprobe {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void require_positive(std::vector<Violation> &out, const std::string &field, double v) {
    if (!positive_finite(v)) {
        out.push_back({field, "must be finite and > 0"});
    }
}

}  // namespace

const PhysicalConstants &PhysicalConstants::codata2018() {
    static const PhysicalConstants k = [] {
        PhysicalConstants c{};
        c.hbar = 1.054571817e-34;
        c.c = 299792458.0;
        c.planck_length = 1.616255e-35;
        c.gev_in_joules = 1.602176634e-10;
        // hbar c = 197.3269804 MeV fm
        const double hbar_c_gev_m = 197.3269804e-3 * 1e-15;
        c.gev_inverse_squared_in_m2 = hbar_c_gev_m * hbar_c_gev_m;
        return c;
    }();
    return k;
}

std::vector<std::string> PhysicalConstants::violations() const {
    std::vector<std::string> out;
    for (double v : {hbar, c, planck_length, gev_in_joules, gev_inverse_squared_in_m2}) {
        if (!positive_finite(v)) {
            out.emplace_back("all constants must be strictly positive");
            break;
        }
    }
    const double length = hbar * c / gev_in_joules;
    const double expected = length * length;
    if (std::abs(gev_inverse_squared_in_m2 - expected) > 1e-9 * expected) {
        out.emplace_back("gev_inverse_squared_in_m2 inconsistent with (hbar c / GeV)^2");
    }
    return out;
}

double DeformationParams::theta_tilde(const MechanicalParams &mech) const {
    return theta * constants().hbar / mech.mass_frequency();
}

double DeformationParams::omega_tilde(const MechanicalParams &mech) const {
    return omega * constants().hbar * mech.mass_frequency();
}

std::vector<Violation> violations(const MechanicalParams &mech) {
    std::vector<Violation> out;
    require_positive(out, "mechanical.mass_kg", mech.mass_kg);
    require_positive(out, "mechanical.omega_m_rad_s", mech.omega_m);
    return out;
}

std::vector<Violation> violations(const DeformationParams &def) {
    std::vector<Violation> out;
    if (!(std::isfinite(def.theta) && def.theta >= 0.0)) {
        out.push_back({"deformation.theta", "must be finite and >= 0"});
    }
    if (!(std::isfinite(def.omega) && def.omega >= 0.0)) {
        out.push_back({"deformation.omega", "must be finite and >= 0"});
    }
    return out;
}

std::vector<Violation> violations(const CavityParams &cav, const MechanicalParams &mech) {
    std::vector<Violation> out;
    if (cav.finesse) require_positive(out, "cavity.finesse", *cav.finesse);
    if (cav.wavelength_m) require_positive(out, "cavity.wavelength_m", *cav.wavelength_m);
    if (cav.kappa) require_positive(out, "cavity.kappa", *cav.kappa);
    if (cav.omega_c) require_positive(out, "cavity.omega_c_rad_s", *cav.omega_c);
    if (cav.cavity_length) require_positive(out, "cavity.length_m", *cav.cavity_length);
    if (cav.finesse.has_value() != cav.wavelength_m.has_value()) {
        out.push_back({"cavity", "finesse and wavelength_m must be given together"});
    }
    if (!cav.has_finesse_path() && !cav.has_coupling_path()) {
        out.push_back({"cavity", "requires finesse and wavelength_m, or kappa, omega_c and length_m"});
    }
    if (out.empty() && cav.has_coupling_path() && violations(mech).empty()) {
        if (!std::isfinite(coupling_rate(cav, mech))) {
            out.push_back({"cavity", "coupling rate g0 is not finite"});
        }
    }
    return out;
}

std::vector<Violation> violations(const PulseSequence &pulse) {
    std::vector<Violation> out;
    if (!std::isfinite(pulse.lambda1)) out.push_back({"pulse.lambda1", "must be finite"});
    if (!std::isfinite(pulse.lambda2)) out.push_back({"pulse.lambda2", "must be finite"});
    if (pulse.cycles < 1) out.push_back({"pulse.cycles", "cycles >= 1"});
    if (pulse.runs < 1) out.push_back({"pulse.runs", "runs >= 1"});
    if (!(std::isfinite(pulse.n_photon) && pulse.n_photon >= 0.0)) {
        out.push_back({"pulse.n_photon", "must be finite and >= 0"});
    } else {
        const double a2 = std::norm(pulse.alpha);
        if (std::abs(a2 - pulse.n_photon) > 1e-12 * std::max(1.0, pulse.n_photon)) {
            out.push_back({"pulse.n_photon", "n_photon must equal |alpha|^2"});
        }
    }
    return out;
}

double theta_tilde_area_from_natural(double theta_tilde_gev2, const PhysicalConstants &k) {
    if (!(theta_tilde_gev2 >= 0.0)) {
        throw DomainError("theta_tilde must be >= 0 GeV^-2");
    }
    return theta_tilde_gev2 * k.gev_inverse_squared_in_m2;
}

double omega_tilde_from_natural(double omega_tilde_mev2, const PhysicalConstants &k) {
    if (!(omega_tilde_mev2 >= 0.0)) {
        throw DomainError("omega_tilde must be >= 0 MeV^2");
    }
    // (1 MeV / c) in kg m / s
    const double mev_momentum = 1e-3 * k.gev_in_joules / k.c;
    return omega_tilde_mev2 * mev_momentum * mev_momentum;
}

double dimensionless_theta(double theta_tilde_m2, const MechanicalParams &mech,
                           const PhysicalConstants &k) {
    if (!(theta_tilde_m2 >= 0.0)) throw DomainError("theta_tilde must be >= 0");
    if (!violations(mech).empty()) throw DomainError("invalid mechanical parameters");
    const double theta = theta_tilde_m2 * mech.mass_frequency() / k.hbar;
    if (!std::isfinite(theta)) throw OverflowError("dimensionless theta is not finite");
    return theta;
}

double dimensionless_omega(double omega_tilde, const MechanicalParams &mech,
                           const PhysicalConstants &k) {
    if (!(omega_tilde >= 0.0)) throw DomainError("omega_tilde must be >= 0");
    if (!violations(mech).empty()) throw DomainError("invalid mechanical parameters");
    const double omega = omega_tilde / (k.hbar * mech.mass_frequency());
    if (!std::isfinite(omega)) throw OverflowError("dimensionless omega is not finite");
    return omega;
}

double minimal_length_in_planck_units(double theta_omega) {
    if (!(theta_omega >= 0.0)) throw DomainError("theta * omega must be >= 0");
    return std::sqrt(theta_omega / 4.0);
}

double minimal_length_in_planck_units(const DeformationParams &def) {
    return minimal_length_in_planck_units(def.product());
}

double coupling_rate(const CavityParams &cav, const MechanicalParams &mech,
                     const PhysicalConstants &k) {
    if (!cav.has_coupling_path()) {
        throw ConfigError("coupling rate needs kappa, omega_c and length_m");
    }
    return *cav.omega_c * std::sqrt(k.hbar) / (*cav.cavity_length * std::sqrt(mech.mass_frequency()));
}

InteractionLength effective_interaction_length(const CavityParams &cav, const MechanicalParams &mech,
                                               const PhysicalConstants &k) {
    if (cav.has_finesse_path()) {
        const double value = 4.0 * *cav.finesse * std::sqrt(k.hbar) /
                             (*cav.wavelength_m * std::sqrt(mech.mass_frequency()));
        return {value, InteractionPath::finesse};
    }
    if (cav.has_coupling_path()) {
        const double g0 = coupling_rate(cav, mech, k);
        const double h0 = g0;  // isotropic oscillator
        return {(g0 + h0) / (2.0 * *cav.kappa), InteractionPath::coupling_rate};
    }
    throw ConfigError("interaction length needs finesse and wavelength_m, or kappa, omega_c and length_m");
}

const char *to_string(InteractionPath path) {
    switch (path) {
        case InteractionPath::finesse:
            return "finesse";
        case InteractionPath::coupling_rate:
            return "coupling_rate";
    }
    return "unknown";
}

std::string ValidationOutcome::message() const {
    std::string out;
    for (const auto &v : errors) {
        if (!out.empty()) out += "; ";
        out += v.message();
    }
    return out;
}

ValidationOutcome validate(const ConfigInput &input, const PhysicalConstants &k) {
    ValidationOutcome outcome;
    auto &errors = outcome.errors;
    auto append = [&errors](std::vector<Violation> more) {
        errors.insert(errors.end(), more.begin(), more.end());
    };

    if (input.name.empty()) errors.push_back({"name", "must be non-empty"});

    const auto mech_errors = violations(input.mech);
    append(mech_errors);
    const bool mech_ok = mech_errors.empty();

    Configuration cfg;
    cfg.name = input.name;
    cfg.mech = input.mech;
    cfg.cavity = input.cavity;

    // Deformation: either the dimensionless pair or theta_tilde in GeV^-2 plus omega.
    const bool dimensionless_form = input.theta.has_value() || input.omega.has_value();
    const bool natural_form = input.theta_tilde_gev2.has_value() || input.omega_dimensionless.has_value();
    if (dimensionless_form && natural_form) {
        errors.push_back({"deformation", "give either {theta, omega} or {theta_tilde_gev2, omega_dimensionless}"});
    } else if (natural_form) {
        if (!input.theta_tilde_gev2 || !input.omega_dimensionless) {
            errors.push_back({"deformation", "theta_tilde_gev2 and omega_dimensionless must be given together"});
        } else if (!(*input.theta_tilde_gev2 >= 0.0) || !std::isfinite(*input.theta_tilde_gev2)) {
            errors.push_back({"deformation.theta_tilde_gev2", "must be finite and >= 0"});
        } else if (mech_ok) {
            try {
                cfg.deformation.theta = dimensionless_theta(
                    theta_tilde_area_from_natural(*input.theta_tilde_gev2, k), input.mech, k);
            } catch (const Error &e) {
                errors.push_back({"deformation.theta_tilde_gev2", e.what()});
            }
            cfg.deformation.omega = *input.omega_dimensionless;
        }
    } else {
        if (!input.theta || !input.omega) {
            errors.push_back({"deformation", "theta and omega are required"});
        } else {
            cfg.deformation.theta = *input.theta;
            cfg.deformation.omega = *input.omega;
        }
    }
    append(violations(cfg.deformation));

    if (cfg.cavity) {
        const auto cav_errors = violations(*cfg.cavity, input.mech);
        append(cav_errors);
        if (cav_errors.empty() && mech_ok) {
            cfg.interaction_length = effective_interaction_length(*cfg.cavity, input.mech, k);
        }
    }

    // Pulse: explicit lambdas win; otherwise both equal the cavity interaction length.
    auto &pulse = cfg.pulse;
    if (input.lambda1.has_value() != input.lambda2.has_value()) {
        errors.push_back({"pulse", "lambda1 and lambda2 must be given together"});
    } else if (input.lambda1) {
        pulse.lambda1 = *input.lambda1;
        pulse.lambda2 = *input.lambda2;
    } else if (cfg.interaction_length) {
        pulse.lambda1 = pulse.lambda2 = cfg.interaction_length->value;
    } else if (!cfg.cavity) {
        errors.push_back({"pulse", "lambda1/lambda2 required when no cavity section is given"});
    }
    pulse.cycles = input.cycles;
    pulse.runs = input.runs;
    if (input.alpha && input.n_photon) {
        pulse.alpha = *input.alpha;
        pulse.n_photon = *input.n_photon;
    } else if (input.alpha) {
        pulse.alpha = *input.alpha;
        pulse.n_photon = std::norm(*input.alpha);
    } else if (input.n_photon) {
        pulse.n_photon = *input.n_photon;
        pulse.alpha = (*input.n_photon >= 0.0) ? std::sqrt(*input.n_photon) : 0.0;
    } else {
        errors.push_back({"pulse.n_photon", "n_photon or alpha is required"});
    }
    append(violations(pulse));

    if (!errors.empty()) return outcome;

    cfg.theta_tilde_m2 = cfg.deformation.theta_tilde(cfg.mech);
    cfg.omega_tilde = cfg.deformation.omega_tilde(cfg.mech);
    cfg.eps = cfg.deformation.eps();
    outcome.config = std::move(cfg);
    return outcome;
}

}  // namespace ncprobe
