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

#include "ncprobe/report_json.hpp"

namespace ncprobe {

using nlohmann::json;

namespace {

template <typename T>
json optional_to_json(const std::optional<T> &v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

json complex_to_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const CommutatorResiduals &r) {
    json out = json::object();
    for (const auto &[name, value] : r.named()) out[name] = value;
    return out;
}

json to_json(const LoopResult &r) {
    return {{"n", r.photon_n},
            {"extracted_phase", r.extracted_phase},
            {"identity_residual", r.identity_residual},
            {"leakage", r.leakage},
            {"diagonal_phase_spread", r.diagonal_phase_spread}};
}

json to_json(const MeanFieldResult &r) {
    return {{"value", complex_to_json(r.value)},
            {"method", to_string(r.method)},
            {"cutoff_used", r.cutoff_used},
            {"tail_mass", r.tail_mass}};
}

json to_json(const PhaseSignal &s) {
    return {{"gamma", s.gamma},
            {"theta_complex", complex_to_json(s.theta_complex)},
            {"theta_magnitude", s.theta_magnitude_paper},
            {"theta_modulus", s.theta_modulus},
            {"mean_field_qm", complex_to_json(s.mean_field_qm)},
            {"mean_field_deformed", complex_to_json(s.mean_field_deformed)},
            {"warning", optional_to_json(s.warning)}};
}

json to_json(const FeasibilityReport &r) {
    return {{"gamma", r.gamma},
            {"theta_signal", r.theta_signal},
            {"delta_phi", r.delta_phi},
            {"snr", r.snr},
            {"snr_ideal", r.snr_ideal},
            {"detectable_theta_omega", optional_to_json(r.detectable_theta_omega)},
            {"minimal_length_planck", optional_to_json(r.minimal_length_planck)},
            {"note", optional_to_json(r.note)}};
}

json to_json(const Scenario &s) {
    return {{"name", s.name},
            {"mass_kg", s.mech.mass_kg},
            {"omega_m_rad_s", s.mech.omega_m},
            {"finesse", optional_to_json(s.cav.finesse)},
            {"wavelength_m", optional_to_json(s.cav.wavelength_m)},
            {"lambda", s.pulse.lambda1},
            {"n_photon", s.pulse.n_photon},
            {"runs", s.pulse.runs},
            {"cycles", s.pulse.cycles},
            {"theta", s.def.theta},
            {"omega", s.def.omega},
            {"theta_omega", s.def.product()}};
}

}  // namespace ncprobe
