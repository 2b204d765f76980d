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

#include "ncprobe/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>

#include "ncprobe/errors.hpp"

namespace ncprobe {

using nlohmann::json;

namespace {

void reject_unknown(const json &obj, const std::string &where, std::initializer_list<const char *> allowed) {
    if (!obj.is_object()) {
        throw ConfigError(where + ": expected a JSON object");
    }
    for (const auto &item : obj.items()) {
        bool known = false;
        for (const char *k : allowed) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError("unknown key '" + where + "." + item.key() + "'");
        }
    }
}

std::optional<double> number(const json &obj, const std::string &where, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    if (!it->is_number()) {
        throw ConfigError(where + "." + key + ": expected a number");
    }
    return it->get<double>();
}

std::optional<std::int64_t> integer(const json &obj, const std::string &where, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    if (it->is_number_integer()) return it->get<std::int64_t>();
    // 1e2 style literals arrive as floats.
    if (it->is_number_float()) {
        const double v = it->get<double>();
        if (v == std::floor(v) && std::abs(v) < 9.0e18) return static_cast<std::int64_t>(v);
    }
    throw ConfigError(where + "." + key + ": expected an integer");
}

double required(const json &obj, const std::string &where, const char *key) {
    auto v = number(obj, where, key);
    if (!v) throw ConfigError(where + "." + key + ": required");
    return *v;
}

const json &section(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ConfigError(std::string("missing section '") + key + "'");
    return *it;
}

}  // namespace

ConfigInput parse_config(const json &doc) {
    reject_unknown(doc, "config", {"name", "mechanical", "cavity", "deformation", "pulse"});
    ConfigInput in;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw ConfigError("config.name: expected a string");
        in.name = it->get<std::string>();
    }

    const json &mech = section(doc, "mechanical");
    reject_unknown(mech, "mechanical", {"mass_kg", "omega_m_rad_s"});
    in.mech.mass_kg = required(mech, "mechanical", "mass_kg");
    in.mech.omega_m = required(mech, "mechanical", "omega_m_rad_s");

    if (auto it = doc.find("cavity"); it != doc.end()) {
        reject_unknown(*it, "cavity", {"finesse", "wavelength_m", "kappa", "omega_c_rad_s", "length_m"});
        CavityParams cav;
        cav.finesse = number(*it, "cavity", "finesse");
        cav.wavelength_m = number(*it, "cavity", "wavelength_m");
        cav.kappa = number(*it, "cavity", "kappa");
        cav.omega_c = number(*it, "cavity", "omega_c_rad_s");
        cav.cavity_length = number(*it, "cavity", "length_m");
        in.cavity = cav;
    }

    const json &def = section(doc, "deformation");
    reject_unknown(def, "deformation", {"theta", "omega", "theta_tilde_gev2", "omega_dimensionless"});
    in.theta = number(def, "deformation", "theta");
    in.omega = number(def, "deformation", "omega");
    in.theta_tilde_gev2 = number(def, "deformation", "theta_tilde_gev2");
    in.omega_dimensionless = number(def, "deformation", "omega_dimensionless");

    const json &pulse = section(doc, "pulse");
    reject_unknown(pulse, "pulse", {"lambda1", "lambda2", "cycles", "n_photon", "runs", "alpha"});
    in.lambda1 = number(pulse, "pulse", "lambda1");
    in.lambda2 = number(pulse, "pulse", "lambda2");
    in.cycles = integer(pulse, "pulse", "cycles").value_or(1);
    in.runs = integer(pulse, "pulse", "runs").value_or(1);
    in.n_photon = number(pulse, "pulse", "n_photon");
    if (auto it = pulse.find("alpha"); it != pulse.end()) {
        if (it->is_number()) {
            in.alpha = std::complex<double>(it->get<double>(), 0.0);
        } else if (it->is_array() && it->size() == 2 && (*it)[0].is_number() && (*it)[1].is_number()) {
            in.alpha = std::complex<double>((*it)[0].get<double>(), (*it)[1].get<double>());
        } else {
            throw ConfigError("pulse.alpha: expected a number or [re, im]");
        }
    }
    return in;
}

Configuration load_config(const json &doc) {
    auto outcome = validate(parse_config(doc));
    if (!outcome.ok()) throw ConfigError(outcome.message());
    return std::move(*outcome.config);
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

Configuration load_config_file(const std::filesystem::path &path) {
    return load_config(read_json_file(path));
}

}  // namespace ncprobe
