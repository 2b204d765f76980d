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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ncprobe/errors.hpp"
#include "ncprobe/feasibility.hpp"
#include "ncprobe/fock.hpp"
#include "ncprobe/loop.hpp"
#include "ncprobe/phase.hpp"

using namespace ncprobe;

namespace {

const std::complex<double> kI{0.0, 1.0};

struct Outcome {
    bool pass = true;
    std::string detail;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
double rel(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

bool within_factor(double value, double target, double factor) {
    return value > target / factor && value < target * factor;
}

// Spectra of X + Y (depends on theta only) and PX + PY (omega only), so an
// isotropic pulse of strength lambda is the loop of these generators at n * lambda.
class SpectrumCache {
  public:
    explicit SpectrumCache(FockSpec spec) : spec_(spec) {}

    std::shared_ptr<const HermitianSpectrum> position(double theta) {
        auto &slot = position_[theta];
        if (!slot) {
            const auto q = deformed_quadratures(spec_, {theta, 0.0});
            slot = std::make_shared<const HermitianSpectrum>(position_generator(q, 1.0, 1.0));
        }
        return slot;
    }
    std::shared_ptr<const HermitianSpectrum> momentum(double omega) {
        auto &slot = momentum_[omega];
        if (!slot) {
            const auto q = deformed_quadratures(spec_, {0.0, omega});
            slot = std::make_shared<const HermitianSpectrum>(momentum_generator(q, 1.0, 1.0));
        }
        return slot;
    }

  private:
    FockSpec spec_;
    std::map<double, std::shared_ptr<const HermitianSpectrum>> position_;
    std::map<double, std::shared_ptr<const HermitianSpectrum>> momentum_;
};

PulseSequence isotropic(double lambda, std::int64_t cycles = 1) {
    PulseSequence p;
    p.lambda1 = p.lambda2 = lambda;
    p.cycles = cycles;
    return p;
}

Outcome loop_identity() {
    const auto spec = loop_fock_spec(32);
    SpectrumCache cache(spec);
    double worst_residual = 0.0, worst_error = 0.0, worst_leak = 0.0;
    int blocks = 0;
    for (double theta : {0.0, 0.3, 1.0}) {
        for (double omega : {0.0, 0.2, 0.5}) {
            const DeformationParams def{theta, omega};
            for (double lambda : {0.05, 0.1}) {
                const LoopEvaluator loop(cache.position(theta), cache.momentum(omega), lambda);
                for (std::size_t n = 0; n <= 3; ++n) {
                    const auto r = loop.evaluate(n);
                    const double predicted = -(1.0 + def.eps()) * 2.0 * lambda * lambda * double(n * n);
                    worst_residual = std::max(worst_residual, r.identity_residual);
                    worst_error = std::max(worst_error, std::abs(r.extracted_phase - predicted));
                    worst_leak = std::max(worst_leak, r.leakage);
                    ++blocks;
                }
            }
        }
    }
    return {worst_residual <= 1e-9 && worst_error <= 1e-8,
            fmt::format("{} blocks at D=32: max residual {:.2e}, max phase error {:.2e}, max leakage {:.2e}", blocks,
                        worst_residual, worst_error, worst_leak)};
}

Outcome mean_field_oracle() {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 3.0}) {
        for (double po : {0.0, 0.4}) {
            for (std::int64_t cycles : {1, 4}) {
                auto p = isotropic(0.05, cycles);
                p.alpha = a;
                p.n_photon = a * a;
                const DeformationParams def{po, 1.0};
                const auto sum = mean_field_photon_sum(p, def);
                worst = std::max(worst, rel(sum.value, mean_field_deformed(a, 0.05, def, cycles, a * a)));
            }
        }
    }
    return {worst <= 1e-10, fmt::format("max relative error {:.2e}", worst)};
}

Outcome scenario_a() {
    const auto r = snr(Scenario::paper_a());
    const bool ok = r.delta_phi == 1e-4 && within_factor(r.theta_signal, 1e-4, 3.0) && within_factor(r.snr, 1.0, 3.0);
    return {ok, fmt::format("delta_phi {:.6e}, |Theta(1)| {:.4e}, gamma {:.4e}, snr {:.4f}", r.delta_phi,
                            r.theta_signal, r.gamma, r.snr)};
}

Outcome scenario_b() {
    const double t = detectable_theta_omega(Scenario::paper_b());
    const double l = minimal_length_in_planck_units(t);
    return {within_factor(t, 1.0, 10.0) && within_factor(l, 1.0, 10.0),
            fmt::format("detectable theta*omega {:.4f}, minimal length {:.4f} l_P", t, l)};
}

Outcome minimal_length() {
    const double l = minimal_length_in_planck_units(1e12);
    return {std::abs(l - 5e5) <= 1e-9 * 5e5 && within_factor(l, 1e6, 3.0),
            fmt::format("(Delta x)_min / l_P = {:.6e}", l)};
}

Outcome properties() {
    std::vector<std::string> failed;
    auto check = [&](bool ok, const std::string &name) {
        if (!ok) failed.push_back(name);
    };

    // Product invariance of loop phases, Theta, gamma and SNR under (theta, omega) -> (c theta, omega / c).
    {
        const auto spec = loop_fock_spec(20);
        const DeformationParams base{0.3, 1.0};
        const double lambda = 0.05;
        const LoopEvaluator ref_loop(spec, base, lambda, lambda);
        double worst = 0.0;
        for (double c : {0.5, 2.0, 10.0}) {
            const DeformationParams scaled{c * base.theta, base.omega / c};
            const LoopEvaluator loop(spec, scaled, lambda, lambda);
            for (std::size_t n = 1; n <= 3; ++n) {
                worst = std::max(worst, std::abs(loop.evaluate(n).extracted_phase - ref_loop.evaluate(n).extracted_phase));
            }
            worst = std::max(worst, std::abs(theta_phase(3, lambda, scaled, 50.0) - theta_phase(3, lambda, base, 50.0)));
            auto sa = Scenario::paper_a(), sb = Scenario::paper_a();
            sb.def = {c * sa.def.theta, sa.def.omega / c};
            const auto ra = snr(sa), rb = snr(sb);
            worst = std::max({worst, rel(rb.gamma, ra.gamma), rel(rb.snr, ra.snr)});
        }
        check(worst <= 1e-10, fmt::format("product invariance ({:.1e})", worst));
    }

    // Undeformed reduction.
    {
        double worst = 0.0;
        for (double lambda : {0.01, 0.1, 0.4}) {
            for (double n_p : {0.25, 4.0, 100.0}) {
                const std::complex<double> alpha = std::sqrt(n_p);
                worst = std::max(worst, std::abs(theta_phase(2, lambda, {0.0, 0.7}, n_p)));
                worst = std::max(worst, rel(mean_field_deformed(alpha, lambda, {1.3, 0.0}, 2, n_p),
                                            mean_field_qm(alpha, lambda, lambda, n_p, 2)));
            }
        }
        check(worst <= 1e-12, fmt::format("undeformed reduction ({:.1e})", worst));
    }

    // Unitarity of displacements and loops.
    {
        const auto spec = loop_fock_spec(16);
        const auto q = deformed_quadratures(spec, {1.0, 0.5});
        double worst = 0.0;
        for (double s : {0.05, 0.3, 1.0}) {
            worst = std::max(worst, unitary_from_generator(position_generator(q, 0.1, 0.1), s).unitarity_defect());
            worst = std::max(worst, unitary_from_generator(momentum_generator(q, 0.1, 0.1), s).unitarity_defect());
        }
        const LoopEvaluator loop(spec, {1.0, 0.5}, 0.1, 0.1);
        for (std::size_t n = 1; n <= 3; ++n) worst = std::max(worst, loop.unitary(n).unitarity_defect());
        check(worst <= 1e-11, fmt::format("unitarity ({:.1e})", worst));
    }

    // Interior commutator residuals.
    {
        double worst = 0.0;
        for (std::size_t d : {8u, 16u, 32u}) {
            for (const DeformationParams def : {DeformationParams{0.3, 0.2}, DeformationParams{1.0, 0.5}}) {
                worst = std::max(worst, commutator_residuals(FockSpec(d, 2, 2), def).max());
            }
        }
        check(worst <= 1e-12, fmt::format("commutators ({:.1e})", worst));
    }

    // Decomposition identity.
    {
        double worst = 0.0;
        for (double po : {0.0, 0.4, 3.0}) {
            for (std::int64_t cycles : {1, 4, 25}) {
                for (double n_p : {1.0, 9.0, 100.0}) {
                    const std::complex<double> alpha = std::sqrt(n_p);
                    const double lambda = 0.05;
                    const DeformationParams def{po, 1.0};
                    const auto lhs = mean_field_deformed(alpha, lambda, def, cycles, n_p);
                    const auto rhs = mean_field_qm(alpha, lambda, lambda, n_p, cycles) *
                                     std::exp(-kI * theta_phase(cycles, lambda, def, n_p));
                    worst = std::max(worst, rel(rhs, lhs));
                }
            }
        }
        check(worst <= 1e-12, fmt::format("decomposition ({:.1e})", worst));
    }

    std::string detail = "product invariance, undeformed reduction, unitarity, commutators D=8/16/32, decomposition";
    if (!failed.empty()) {
        detail = "failed:";
        for (const auto &f : failed) detail += " " + f;
    }
    return {failed.empty(), detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 loop identity", loop_identity},
        {"2 mean-field oracle", mean_field_oracle},
        {"3 scenario A", scenario_a},
        {"4 scenario B", scenario_b},
        {"5 minimal length", minimal_length},
        {"6 property suites", properties},
    };
    int failures = 0;
    for (const auto &[name, run] : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            o = run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        std::printf("%s  %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), took.count());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
