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

#include "ncprobe/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

#include "ncprobe/errors.hpp"
#include "ncprobe/phase.hpp"

namespace ncprobe {

namespace {

void refresh_lambda(Scenario &s) {
    if (violations(s.mech).empty() && violations(s.cav, s.mech).empty()) {
        const double lambda = effective_interaction_length(s.cav, s.mech).value;
        s.pulse.lambda1 = s.pulse.lambda2 = lambda;
    }
}

void throw_if_invalid(const Scenario &s) {
    const auto v = s.violations();
    if (v.empty()) return;
    std::string msg = "scenario '" + s.name + "' is invalid";
    for (const auto &e : v) msg += "; " + e.message();
    throw ConfigError(msg);
}

bool is_integer_path(const std::string &path) { return path == "pulse.runs" || path == "pulse.cycles"; }

std::string csv_number(double v) {
    if (std::isnan(v)) return "nan";
    return fmt::format("{:.17e}", v);
}

std::string csv_text(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

// ---------------------------------------------------------------------------
// Scenario

Scenario Scenario::paper_a() {
    Scenario s;
    s.name = "paper-a";
    s.mech = {1e-7, 2.0 * std::numbers::pi * 1e5};
    s.cav.finesse = 0.1;
    s.cav.wavelength_m = 1064e-9;
    s.pulse.cycles = 1;
    s.pulse.n_photon = 1e6;
    s.pulse.alpha = std::sqrt(s.pulse.n_photon);
    s.pulse.runs = 100;
    s.def = {1e6, 1e6};
    refresh_lambda(s);
    return s;
}

Scenario Scenario::paper_b() {
    Scenario s = paper_a();
    s.name = "paper-b";
    s.cav.finesse = 1e5;
    s.def = {1.0, 1.0};
    refresh_lambda(s);
    return s;
}

Scenario Scenario::preset(const std::string &name) {
    if (name == "paper-a") return paper_a();
    if (name == "paper-b") return paper_b();
    throw ConfigError("unknown scenario preset '" + name + "' (expected paper-a or paper-b)");
}

Scenario Scenario::from_config(const Configuration &cfg) {
    if (!cfg.cavity) throw ConfigError("feasibility needs a cavity section");
    return {cfg.name, cfg.mech, *cfg.cavity, cfg.pulse, cfg.deformation};
}

std::vector<Violation> Scenario::violations() const {
    std::vector<Violation> out;
    auto append = [&out](std::vector<Violation> more) { out.insert(out.end(), more.begin(), more.end()); };
    if (name.empty()) out.push_back({"name", "must be non-empty"});
    append(ncprobe::violations(mech));
    append(ncprobe::violations(cav, mech));
    append(ncprobe::violations(pulse));
    append(ncprobe::violations(def));
    if (!(pulse.n_photon > 0.0)) out.push_back({"pulse.n_photon", "must be > 0 for a shot-noise estimate"});
    return out;
}

// ---------------------------------------------------------------------------
// Sensitivity

double phase_uncertainty(double n_p, std::int64_t runs) {
    if (!(n_p > 0.0) || !std::isfinite(n_p)) throw DomainError("phase_uncertainty: n_p must be > 0");
    if (runs < 1) throw DomainError("phase_uncertainty: runs >= 1");
    return 1.0 / std::sqrt(n_p * static_cast<double>(runs));
}

double gamma_per_unit_theta_omega(const Scenario &s) {
    return gamma_from_experiment(DeformationParams{1.0, 1.0}, s.mech, s.cav, s.pulse.cycles);
}

double detectable_theta_omega(const Scenario &s, double target_snr) {
    throw_if_invalid(s);
    if (!(target_snr > 0.0) || !std::isfinite(target_snr)) throw DomainError("target_snr must be > 0");
    const double n_p = s.pulse.n_photon;
    const double target = target_snr * phase_uncertainty(n_p, s.pulse.runs);

    // The signal gamma + 2 N_p sin(gamma) increases strictly on (0, pi/2].
    double lo = 0.0;
    double hi = std::numbers::pi / 2.0;
    const double boundary = signal_from_gamma(hi, n_p);
    if (boundary < target) {
        throw SensitivityUnreachableError(
            "target signal " + fmt::format("{:.6e}", target) + " exceeds the largest monotone signal " +
                fmt::format("{:.6e}", boundary) + " at gamma = pi/2",
            boundary);
    }
    for (int iter = 0; iter < 400 && hi - lo > 4.0 * std::numeric_limits<double>::min(); ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (signal_from_gamma(mid, n_p) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double gamma = 0.5 * (lo + hi);
    return gamma / gamma_per_unit_theta_omega(s);
}

FeasibilityReport snr(const Scenario &s) {
    throw_if_invalid(s);
    FeasibilityReport r;
    const auto &p = s.pulse;
    r.gamma = gamma_from_experiment(s.def, s.mech, s.cav, p.cycles);
    r.theta_signal = signal_from_gamma(r.gamma, p.n_photon);
    r.delta_phi = phase_uncertainty(p.n_photon, p.runs);
    r.snr = r.theta_signal / r.delta_phi;
    r.snr_ideal = static_cast<double>(p.cycles) * std::sqrt(p.n_photon * static_cast<double>(p.runs));
    try {
        r.detectable_theta_omega = detectable_theta_omega(s, 1.0);
        r.minimal_length_planck = minimal_length_in_planck_units(*r.detectable_theta_omega);
    } catch (const SensitivityUnreachableError &e) {
        r.note = e.what();
    }
    return r;
}

// ---------------------------------------------------------------------------
// Sweeps

const std::vector<std::string> &sweep_parameter_paths() {
    static const std::vector<std::string> paths = {
        "mechanical.mass_kg", "mechanical.omega_m_rad_s", "cavity.finesse", "cavity.wavelength_m",
        "pulse.n_photon",     "pulse.runs",               "pulse.cycles",   "deformation.theta",
        "deformation.omega",
    };
    return paths;
}

void set_parameter(Scenario &s, const std::string &path, double value) {
    if (is_integer_path(path) && (value != std::floor(value) || !std::isfinite(value))) {
        throw ConfigError(path + ": expected an integer value");
    }
    if (path == "mechanical.mass_kg") {
        s.mech.mass_kg = value;
    } else if (path == "mechanical.omega_m_rad_s") {
        s.mech.omega_m = value;
    } else if (path == "cavity.finesse") {
        s.cav.finesse = value;
    } else if (path == "cavity.wavelength_m") {
        s.cav.wavelength_m = value;
    } else if (path == "pulse.n_photon") {
        s.pulse.n_photon = value;
        s.pulse.alpha = value >= 0.0 ? std::sqrt(value) : 0.0;
    } else if (path == "pulse.runs") {
        s.pulse.runs = static_cast<std::int64_t>(value);
    } else if (path == "pulse.cycles") {
        s.pulse.cycles = static_cast<std::int64_t>(value);
    } else if (path == "deformation.theta") {
        s.def.theta = value;
    } else if (path == "deformation.omega") {
        s.def.omega = value;
    } else {
        throw ConfigError("unknown sweep parameter '" + path + "'");
    }
    refresh_lambda(s);
}

double get_parameter(const Scenario &s, const std::string &path) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (path == "mechanical.mass_kg") return s.mech.mass_kg;
    if (path == "mechanical.omega_m_rad_s") return s.mech.omega_m;
    if (path == "cavity.finesse") return s.cav.finesse.value_or(nan);
    if (path == "cavity.wavelength_m") return s.cav.wavelength_m.value_or(nan);
    if (path == "pulse.n_photon") return s.pulse.n_photon;
    if (path == "pulse.runs") return static_cast<double>(s.pulse.runs);
    if (path == "pulse.cycles") return static_cast<double>(s.pulse.cycles);
    if (path == "deformation.theta") return s.def.theta;
    if (path == "deformation.omega") return s.def.omega;
    throw ConfigError("unknown sweep parameter '" + path + "'");
}

std::size_t SweepGrid::size() const {
    if (axes.empty()) return 0;
    std::size_t n = 1;
    for (const auto &a : axes) {
        if (a.values.empty()) return 0;
        if (n > std::numeric_limits<std::size_t>::max() / a.values.size()) {
            return std::numeric_limits<std::size_t>::max();
        }
        n *= a.values.size();
    }
    return n;
}

std::vector<Violation> SweepGrid::violations() const {
    std::vector<Violation> out;
    if (axes.empty()) out.push_back({"grid.axes", "at least one axis is required"});
    const auto &known = sweep_parameter_paths();
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const auto &a = axes[i];
        const std::string where = "grid.axes[" + std::to_string(i) + "]";
        if (std::find(known.begin(), known.end(), a.path) == known.end()) {
            out.push_back({where + ".path", "unknown parameter '" + a.path + "'"});
            continue;
        }
        if (a.values.empty()) out.push_back({where + ".values", "must be non-empty"});
        for (double v : a.values) {
            Scenario probe = base;
            try {
                set_parameter(probe, a.path, v);
            } catch (const ConfigError &e) {
                out.push_back({where + ".values", e.what()});
                continue;
            }
            for (const auto &bad : probe.violations()) {
                if (bad.field == a.path || bad.field.rfind(a.path.substr(0, a.path.find('.')), 0) == 0) {
                    out.push_back({where + ".values", fmt::format("value {} violates {}", v, bad.message())});
                }
            }
        }
    }
    if (size() > max_points) {
        out.push_back({"grid", "grid has more than " + std::to_string(max_points) + " points"});
    }
    return out;
}

std::vector<SweepRow> sweep(const SweepGrid &grid) {
    const auto bad = grid.violations();
    if (!bad.empty()) {
        std::string msg = "invalid sweep grid";
        for (const auto &v : bad) msg += "; " + v.message();
        throw ConfigError(msg);
    }
    const std::size_t total = grid.size();
    std::vector<SweepRow> rows;
    rows.reserve(total);
    std::vector<std::size_t> index(grid.axes.size(), 0);
    for (std::size_t point = 0; point < total; ++point) {
        // Mixed-radix decomposition, last axis fastest.
        std::size_t rest = point;
        for (std::size_t k = grid.axes.size(); k-- > 0;) {
            index[k] = rest % grid.axes[k].values.size();
            rest /= grid.axes[k].values.size();
        }
        SweepRow row;
        row.index = index;
        row.scenario = grid.base;
        std::string suffix;
        for (std::size_t k = 0; k < index.size(); ++k) {
            suffix += (k ? "-" : "") + std::to_string(index[k]);
            set_parameter(row.scenario, grid.axes[k].path, grid.axes[k].values[index[k]]);
        }
        row.scenario.name = grid.base.name + "/" + suffix;
        try {
            row.report = snr(row.scenario);
        } catch (const Error &e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

SweepGrid parse_grid(const nlohmann::json &doc, const Scenario &base) {
    if (!doc.is_object()) throw ConfigError("grid: expected a JSON object");
    SweepGrid grid;
    grid.base = base;
    for (const auto &item : doc.items()) {
        if (item.key() != "axes" && item.key() != "max_points") {
            throw ConfigError("unknown key 'grid." + item.key() + "'");
        }
    }
    if (auto it = doc.find("max_points"); it != doc.end()) {
        if (!it->is_number_unsigned()) throw ConfigError("grid.max_points: expected a positive integer");
        grid.max_points = it->get<std::size_t>();
    }
    auto axes = doc.find("axes");
    if (axes == doc.end() || !axes->is_array()) throw ConfigError("grid.axes: expected an array");
    for (const auto &a : *axes) {
        if (!a.is_object()) throw ConfigError("grid.axes: each axis must be an object");
        for (const auto &item : a.items()) {
            if (item.key() != "path" && item.key() != "values") {
                throw ConfigError("unknown key 'grid.axes." + item.key() + "'");
            }
        }
        SweepAxis axis;
        if (!a.contains("path") || !a["path"].is_string()) throw ConfigError("grid.axes.path: expected a string");
        axis.path = a["path"].get<std::string>();
        if (!a.contains("values") || !a["values"].is_array()) {
            throw ConfigError("grid.axes.values: expected an array");
        }
        for (const auto &v : a["values"]) {
            if (!v.is_number()) throw ConfigError("grid.axes.values: expected numbers");
            axis.values.push_back(v.get<double>());
        }
        grid.axes.push_back(std::move(axis));
    }
    return grid;
}

const std::vector<std::string> &csv_columns() {
    static const std::vector<std::string> columns = {
        "scenario_name", "finesse",      "mass_kg",  "omega_m_rad_s",          "wavelength_m",
        "n_photon",      "runs",         "cycles",   "theta",                  "omega",
        "theta_omega",   "gamma",        "theta_signal", "delta_phi",          "snr",
        "snr_ideal",     "detectable_theta_omega", "minimal_length_planck",
    };
    return columns;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const auto &cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto &row : rows) {
        const auto &s = row.scenario;
        const auto &r = row.report;
        out << csv_text(s.name) << ',' << csv_number(s.cav.finesse.value_or(nan)) << ','
            << csv_number(s.mech.mass_kg) << ',' << csv_number(s.mech.omega_m) << ','
            << csv_number(s.cav.wavelength_m.value_or(nan)) << ',' << csv_number(s.pulse.n_photon) << ','
            << s.pulse.runs << ',' << s.pulse.cycles << ',' << csv_number(s.def.theta) << ','
            << csv_number(s.def.omega) << ',' << csv_number(s.def.product()) << ','
            << csv_number(r ? r->gamma : nan) << ',' << csv_number(r ? r->theta_signal : nan) << ','
            << csv_number(r ? r->delta_phi : nan) << ',' << csv_number(r ? r->snr : nan) << ','
            << csv_number(r ? r->snr_ideal : nan) << ','
            << csv_number(r ? r->detectable_theta_omega.value_or(nan) : nan) << ','
            << csv_number(r ? r->minimal_length_planck.value_or(nan) : nan) << '\n';
    }
}

}  // namespace ncprobe
