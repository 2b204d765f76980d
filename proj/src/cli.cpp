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

#include "ncprobe/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncprobe/config.hpp"
#include "ncprobe/errors.hpp"
#include "ncprobe/feasibility.hpp"
#include "ncprobe/fock.hpp"
#include "ncprobe/loop.hpp"
#include "ncprobe/phase.hpp"
#include "ncprobe/report_json.hpp"

namespace ncprobe::cli {

using nlohmann::json;

namespace {

// Raised by a subcommand that produced its output but failed a check.
struct ToleranceFailure : Error {
    using Error::Error;
};

// Sends text to --out when given, otherwise to stdout.
class Sink {
  public:
    Sink(std::ostream &fallback, const std::string &path) : fallback_(fallback), path_(path) {}

    std::ostream &stream() { return path_.empty() ? fallback_ : buffer_; }

    void flush() {
        if (path_.empty()) return;
        std::ofstream file(path_);
        if (!file) throw ConfigError("cannot write '" + path_ + "'");
        file << buffer_.str();
    }

  private:
    std::ostream &fallback_;
    std::string path_;
    std::ostringstream buffer_;
};

struct Options {
    std::string config;
    std::string out;
    std::size_t n_max = 3;
    std::size_t dim = 24;
    std::size_t margin = 2;
    double theta = 0.0;
    double omega = 0.0;
    std::size_t photon_cutoff = 0;
    std::string scenario;
    std::string grid;
};

void verify_loop(const Options &o, std::ostream &out) {
    const auto cfg = load_config_file(o.config);
    const FockSpec spec = loop_fock_spec(o.dim);
    LoopEvaluator loop(spec, cfg.deformation, cfg.pulse.lambda1, cfg.pulse.lambda2);
    bool ok = true;
    for (std::size_t n = 0; n <= o.n_max; ++n) {
        LoopResult r = loop.evaluate(n);
        if (cfg.pulse.cycles != 1) {
            const double leak = r.leakage;
            r = extract_loop_phase(loop.unitary(n, cfg.pulse.cycles), n);
            r.leakage = leak;
        }
        const double predicted = predicted_loop_phase(n, cfg.pulse, cfg.deformation);
        const double error = std::abs(wrap_phase(r.extracted_phase - predicted));
        ok = ok && error <= kLoopPhaseTolerance;
        json line = to_json(r);
        line["predicted_phase"] = predicted;
        line["phase_error"] = error;
        out << line.dump() << '\n';
    }
    if (!ok) throw ToleranceFailure("extracted loop phase differs from prediction by more than 1e-8");
}

void commutators(const Options &o, std::ostream &out) {
    const FockSpec spec(o.dim, 2, o.margin);
    const DeformationParams def{o.theta, o.omega};
    const auto bad = violations(def);
    if (!bad.empty()) throw ConfigError(bad.front().message());
    const auto r = commutator_residuals(spec, def);
    json doc = {{"dim", o.dim},
                {"margin", o.margin},
                {"theta", o.theta},
                {"omega", o.omega},
                {"residuals", to_json(r)},
                {"max_residual", r.max()},
                {"tolerance", kCommutatorTolerance}};
    out << doc.dump(2) << '\n';
    if (r.max() > kCommutatorTolerance) throw ToleranceFailure("commutator residual above 1e-12");
}

void phase(const Options &o, std::ostream &out) {
    const auto cfg = load_config_file(o.config);
    out << to_json(phase_signal(cfg)).dump(2) << '\n';
}

void oracle(const Options &o, std::ostream &out) {
    const auto cfg = load_config_file(o.config);
    const auto &p = cfg.pulse;
    if (!p.isotropic()) throw ConfigError("oracle requires lambda1 == lambda2");
    const auto sum = mean_field_photon_sum(p, cfg.deformation, o.photon_cutoff);
    const auto closed = mean_field_deformed(p.alpha, p.lambda1, cfg.deformation, p.cycles, p.n_photon);
    const double scale = std::abs(closed) > 0.0 ? std::abs(closed) : 1.0;
    const double rel = std::abs(sum.value - closed) / scale;
    json doc = {{"photon_sum", to_json(sum)},
                {"closed_form", complex_to_json(closed)},
                {"relative_error", rel},
                {"tolerance", kOracleTolerance}};
    out << doc.dump(2) << '\n';
    if (!(rel <= kOracleTolerance)) throw ToleranceFailure("photon-number sum disagrees with the closed form");
}

void feasibility(const Options &o, std::ostream &out) {
    if (o.scenario.empty() == o.config.empty()) {
        throw CLI::ValidationError("feasibility", "give exactly one of --scenario or --config");
    }
    const Scenario s =
        o.scenario.empty() ? Scenario::from_config(load_config_file(o.config)) : Scenario::preset(o.scenario);
    json doc = to_json(snr(s));
    doc["scenario"] = to_json(s);
    out << doc.dump(2) << '\n';
}

void sweep_command(const Options &o, std::ostream &out, std::ostream &err) {
    if (o.scenario.empty() == o.config.empty()) {
        throw CLI::ValidationError("sweep", "give exactly one of --scenario or --config");
    }
    const Scenario base =
        o.scenario.empty() ? Scenario::from_config(load_config_file(o.config)) : Scenario::preset(o.scenario);
    const auto rows = sweep(parse_grid(read_json_file(o.grid), base));
    write_sweep_csv(out, rows);
    for (const auto &row : rows) {
        if (!row.error.empty()) err << "ncprobe: " << row.scenario.name << ": " << row.error << '\n';
    }
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Noncommutative opto-mechanical probe: loop verification, phase model and feasibility"};
    app.require_subcommand(1);
    Options o;

    auto *verify = app.add_subcommand("verify-loop", "Brute-force loop phases for photon blocks 0..n-max");
    verify->add_option("--config", o.config, "Configuration JSON")->required();
    verify->add_option("--n-max", o.n_max, "Largest photon number")->capture_default_str();
    verify->add_option("--dim", o.dim, "Fock dimension per mode")->capture_default_str()->check(CLI::Range(4, 64));

    auto *comm = app.add_subcommand("commutators", "Interior residuals of the deformed commutators");
    comm->add_option("--theta", o.theta, "Dimensionless theta")->required();
    comm->add_option("--omega", o.omega, "Dimensionless omega")->required();
    comm->add_option("--dim", o.dim, "Fock dimension per mode")->capture_default_str()->check(CLI::Range(4, 64));
    comm->add_option("--margin", o.margin, "Interior margin")->capture_default_str();

    auto *ph = app.add_subcommand("phase", "Closed-form phase signal");
    ph->add_option("--config", o.config, "Configuration JSON")->required();

    auto *orc = app.add_subcommand("oracle", "Photon-number sum against the closed-form mean field");
    orc->add_option("--config", o.config, "Configuration JSON")->required();
    orc->add_option("--photon-cutoff", o.photon_cutoff, "Initial photon cutoff (raised automatically)");

    auto *feas = app.add_subcommand("feasibility", "Shot-noise SNR and detectable theta*omega");
    feas->add_option("--scenario", o.scenario, "Preset")->check(CLI::IsMember({"paper-a", "paper-b"}));
    feas->add_option("--config", o.config, "Configuration JSON");

    auto *sw = app.add_subcommand("sweep", "Feasibility over a Cartesian parameter grid (CSV)");
    sw->add_option("--scenario", o.scenario, "Preset base scenario")->check(CLI::IsMember({"paper-a", "paper-b"}));
    sw->add_option("--config", o.config, "Base configuration JSON");
    sw->add_option("--grid", o.grid, "Grid JSON")->required();

    for (auto *sub : {verify, comm, ph, orc, feas, sw}) {
        sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Sink sink(out, o.out);
    try {
        if (verify->parsed()) verify_loop(o, sink.stream());
        if (comm->parsed()) commutators(o, sink.stream());
        if (ph->parsed()) phase(o, sink.stream());
        if (orc->parsed()) oracle(o, sink.stream());
        if (feas->parsed()) feasibility(o, sink.stream());
        if (sw->parsed()) sweep_command(o, sink.stream(), err);
        sink.flush();
        return kOk;
    } catch (const ToleranceFailure &e) {
        sink.flush();
        err << "ncprobe: " << e.what() << '\n';
        return kTolerance;
    } catch (const CLI::ValidationError &e) {
        err << "ncprobe: " << e.what() << '\n';
        return kUsage;
    } catch (const TruncationError &e) {
        err << "ncprobe: " << e.what() << '\n';
        return kTruncation;
    } catch (const LoopNotClosedError &e) {
        err << "ncprobe: " << e.what() << '\n';
        return kTolerance;
    } catch (const ConfigError &e) {
        err << "ncprobe: " << e.what() << '\n';
        return kConfig;
    } catch (const OracleInfeasibleError &e) {
        err << "ncprobe: " << e.what() << '\n';
        return kConfig;
    } catch (const DomainError &e) {
        err << "ncprobe: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception &e) {
        err << "ncprobe: internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace ncprobe::cli
