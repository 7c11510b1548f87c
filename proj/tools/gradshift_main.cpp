// Copyright 2026 The gradshift Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch experiment runner over the gradient-rule library. Subcommands:
//
//   gradcheck       master-identity suite over circuit files / random circuits
//   bias-sweep      closed-form vs deterministic bias over a step grid
//   variance-sweep  closed-form vs Monte-Carlo estimator variance
//   nogo            two-point no-go counterexample report
//   optimize        gradient descent with selectable rule and shot budget
//   hessian         nested-rule 2x2 Hessian with FD cross-check
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error.
// Every command is deterministic under a fixed config and seed; CSV output
// uses 17 significant digits so doubles round-trip exactly.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "gradshift/circuit_io.hpp"
#include "gradshift/errors.hpp"
#include "gradshift/grad_rules.hpp"
#include "gradshift/nogo.hpp"
#include "gradshift/random_circuits.hpp"
#include "gradshift/rng.hpp"
#include "gradshift/trig_poly.hpp"
#include "gradshift/two_param.hpp"

namespace {

using namespace gradshift;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitConfigError = 2;

constexpr double kGradcheckTolerance = 1e-9;
constexpr double kBiasIdentityTolerance = 1e-12;
constexpr double kHessianSymmetryTolerance = 1e-9;
constexpr double kHessianFdTolerance = 1e-5;

std::string fmt(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

class CsvWriter {
  public:
    CsvWriter(const std::string &path, const std::vector<std::string> &header) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw ConfigError("cannot open output file '" + path + "'");
            }
        }
        write_cells(header);
    }

    void row(const std::vector<std::string> &cells) { write_cells(cells); }

  private:
    void write_cells(const std::vector<std::string> &cells) {
        std::string line;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            line += cells[k];
            if (k + 1 < cells.size()) {
                line += ',';
            }
        }
        line += '\n';
        if (file_.is_open()) {
            file_ << line;
        } else {
            std::cout << line;
        }
    }

    std::ofstream file_;
};

json load_config(const std::string &path) {
    if (path.empty()) {
        return json::object();
    }
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    try {
        json doc;
        in >> doc;
        return doc;
    } catch (const json::exception &e) {
        throw ConfigError("cannot parse config '" + path + "': " + e.what());
    }
}

template <typename T>
T pick(const CLI::Option *flag, const T &flag_value, const json &config, const char *key,
       const T &fallback) {
    if (flag != nullptr && flag->count() > 0) {
        return flag_value;
    }
    if (config.contains(key)) {
        try {
            return config.at(key).get<T>();
        } catch (const json::exception &e) {
            throw ConfigError(std::string("config key '") + key + "': " + e.what());
        }
    }
    return fallback;
}

// Options shared by every subcommand; flags win over config values.
struct CommonFlags {
    std::string config_path;
    std::uint64_t seed = 1;
    std::int64_t shots = 0;
    std::string out;
    CLI::Option *seed_opt = nullptr;
    CLI::Option *shots_opt = nullptr;
    CLI::Option *out_opt = nullptr;

    void attach(CLI::App *sub) {
        sub->add_option("--config", config_path, "JSON config file");
        seed_opt = sub->add_option("--seed", seed, "RNG seed")->envname("GRADSHIFT_SEED");
        shots_opt = sub->add_option("--shots", shots, "shots per estimate");
        out_opt = sub->add_option("--out", out, "output path (default stdout)");
    }

    std::uint64_t pick_seed(const json &cfg) const {
        return pick<std::uint64_t>(seed_opt, seed, cfg, "seed", 1);
    }
    std::int64_t pick_shots(const json &cfg, std::int64_t fallback) const {
        return pick<std::int64_t>(shots_opt, shots, cfg, "shots", fallback);
    }
    std::string pick_out(const json &cfg) const {
        return pick<std::string>(out_opt, out, cfg, "out", "");
    }
};

// ---------------------------------------------------------------------------
// gradcheck

int run_gradcheck(const CommonFlags &common) {
    const json cfg = load_config(common.config_path);
    const std::uint64_t seed = common.pick_seed(cfg);
    const auto circuit_paths = cfg.value("circuits", std::vector<std::string>{});
    const int random_circuits = cfg.value("random_circuits", circuit_paths.empty() ? 50 : 0);
    const int samples = cfg.value("samples_per_circuit", 5);
    const bool corrupt_rule = cfg.value("corrupt_rule", false);
    if (samples < 1) {
        throw ConfigError("samples_per_circuit must be >= 1");
    }
    if (circuit_paths.empty() && random_circuits < 1) {
        throw ConfigError("nothing to check: no circuits and random_circuits < 1");
    }

    std::vector<std::pair<std::string, CircuitPtr>> sources;
    for (const std::string &path : circuit_paths) {
        sources.emplace_back(path, load_circuit(path));
    }
    for (int k = 0; k < random_circuits; ++k) {
        sources.emplace_back("random-" + std::to_string(k),
                             make_random_instance({}, rng::substream(seed, 5000 + k)).circuit);
    }

    CsvWriter csv(common.pick_out(cfg),
                  {"circuit_id", "theta", "gamma1", "gamma2", "g_gpsr", "a", "b", "oracle_f1",
                   "oracle_f2", "residual"});
    double max_residual = 0.0;
    for (std::size_t c = 0; c < sources.size(); ++c) {
        const auto &[id, circuit] = sources[c];
        rng::Sequence rng(rng::substream(seed, c));
        for (int s = 0; s < samples; ++s) {
            std::vector<double> theta(circuit->num_params());
            for (double &t : theta) {
                t = rng.uniform(-std::numbers::pi, std::numbers::pi);
            }
            const int component = rng.uniform_int(0, circuit->num_params() - 1);
            const SingleComponentFunction f(circuit, theta, component);
            const double bound = std::numbers::pi / f.r();
            const double g1 = rng.uniform(-bound, bound);
            const double g2 = rng.uniform(-bound, bound);

            const TrigPoly poly = TrigPoly::fit(f);
            const double f1 = poly.derivative(1)(theta[component]);
            const double f2 = poly.derivative(2)(theta[component]);
            const RuleDecomposition d = decompose(g1, g2, f.r());
            double g = g_gpsr(f, theta[component], g1, g2);
            if (corrupt_rule) {
                g += 1e-6;  // negative-control fixture
            }
            const double residual = std::abs(g - (d.a * f1 + d.b * f2));
            max_residual = std::max(max_residual, residual);
            csv.row({id, fmt(theta[component]), fmt(g1), fmt(g2), fmt(g), fmt(d.a), fmt(d.b),
                     fmt(f1), fmt(f2), fmt(residual)});
        }
    }

    const bool pass = max_residual < kGradcheckTolerance;
    std::cerr << "gradcheck: " << sources.size() << " circuits x " << samples
              << " samples, max residual " << fmt(max_residual) << " -> "
              << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// bias-sweep / variance-sweep

int run_sweep(const CommonFlags &common, bool variance_defaults) {
    const json cfg = load_config(common.config_path);
    const std::uint64_t seed = common.pick_seed(cfg);
    const std::int64_t shots = common.pick_shots(cfg, 100000);
    if (!cfg.contains("circuit")) {
        throw ConfigError("config must name a circuit file");
    }
    const CircuitPtr circuit = load_circuit(cfg.at("circuit").get<std::string>());
    const int component = cfg.value("component", 0);
    std::vector<double> base = cfg.value("base_point", std::vector<double>{});
    if (base.empty()) {
        base.assign(circuit->num_params(), 0.0);
    }
    const double theta = cfg.value("theta", std::numbers::pi / 3.0);
    const std::vector<std::string> default_rules =
        variance_defaults ? std::vector<std::string>{"cfd", "bfd", "ffd", "cpsr"}
                          : std::vector<std::string>{"cfd", "bfd", "ffd"};
    const auto rule_names = cfg.value("rules", default_rules);
    const auto steps = cfg.value("steps", std::vector<double>{0.05, 0.1, 0.2});

    if (steps.empty()) {
        throw ConfigError("step grid must be non-empty");
    }
    for (double h : steps) {
        if (std::abs(h) <= tol::kZeroStep) {
            throw ConfigError("step grid contains zero");
        }
    }
    if (shots < 1) {
        throw ConfigError("shots must be >= 1");
    }

    const SingleComponentFunction f(circuit, base, component);
    const double oracle_f1 = TrigPoly::fit(f).derivative(1)(theta);

    CsvWriter csv(common.pick_out(cfg),
                  {"rule", "h", "closed_form_bias", "deterministic_bias",
                   "closed_form_variance", "closed_form_variance_alt", "empirical_variance",
                   "shots"});
    bool bias_identity_ok = true;
    std::uint64_t row_index = 0;
    for (const std::string &name : rule_names) {
        const RuleKind kind = rule_kind_from_string(name);
        for (double h : steps) {
            GradientRuleSpec rule = [&] {
                switch (kind) {
                case RuleKind::kCpsr:
                    return GradientRuleSpec::cpsr(f.r(), h);
                case RuleKind::kCfd:
                    return GradientRuleSpec::cfd(f.r(), h);
                case RuleKind::kBfd:
                    return GradientRuleSpec::bfd(f.r(), h);
                case RuleKind::kFfd:
                    return GradientRuleSpec::ffd(f.r(), h);
                default:
                    throw ConfigError("sweep supports cpsr, cfd, bfd, ffd");
                }
            }();

            const double closed_bias = bias_closed_form(kind, f, theta, h);
            const double deterministic_bias = rule.apply(f, theta) - oracle_f1;
            const double closed_variance = variance_closed_form(rule, f, theta, 1);
            // Quarter-step form: the centered rule's weight pattern applied
            // to the one-sided rules; listed as the alternative normalization.
            const double closed_variance_alt =
                (kind == RuleKind::kBfd || kind == RuleKind::kFfd) ? closed_variance / 4.0
                                                                   : closed_variance;
            const EstimatorResult mc = monte_carlo_single_shot(
                rule, f, theta, shots, rng::substream(seed, row_index++));

            if (kind == RuleKind::kCfd &&
                std::abs(deterministic_bias - closed_bias) > kBiasIdentityTolerance) {
                bias_identity_ok = false;
            }
            csv.row({name, fmt(h), fmt(closed_bias), fmt(deterministic_bias),
                     fmt(closed_variance), fmt(closed_variance_alt),
                     fmt(mc.sample_variance), std::to_string(shots)});
        }
    }
    if (!bias_identity_ok) {
        std::cerr << "bias identity violated beyond " << kBiasIdentityTolerance << "\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// nogo

json matrix_to_json(const Matrix &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

int run_nogo(const CommonFlags &common, double zeta, double gamma, std::string g_spec,
             std::string f_spec, std::string a_spec, const std::string &operators_path,
             const CLI::Option *g_opt, const CLI::Option *f_opt, const CLI::Option *a_opt) {
    if (!operators_path.empty()) {
        const json ops = load_config(operators_path);
        const auto read = [&ops](const char *key, std::string &target,
                                 const CLI::Option *opt) {
            if (opt->count() == 0 && ops.contains(key)) {
                target = ops.at(key).is_string() ? ops.at(key).get<std::string>()
                                                 : ops.at(key).dump();
            }
        };
        read("G", g_spec, g_opt);
        read("F", f_spec, f_opt);
        read("A", a_spec, a_opt);
    }

    const HermitianOperator g = parse_operator_spec(g_spec);
    const HermitianOperator f = parse_operator_spec(f_spec);
    const HermitianOperator a = parse_operator_spec(a_spec);
    int qubits = 0;
    while ((Eigen::Index{1} << qubits) < g.dim()) {
        ++qubits;
    }
    // |psi> = e^{i zeta G}|0...0>, mirroring the explicit instance where
    // |zeta> reduces to the all-zero ket.
    const StateVector psi =
        apply_unitary(StateVector::zero_state(qubits), RGate::make(g).matrix(-zeta));

    const CounterexamplePair pair = build_custom(g, f, a, psi, zeta, gamma);
    const NogoReport report = verify(pair);

    std::cout << "no-go counterexample at zeta = " << fmt(zeta) << ", gamma = " << fmt(gamma)
              << "\n"
              << "  f(zeta)           = " << fmt(pair.f(zeta))
              << "   f~(zeta)          = " << fmt(pair.f_tilde(zeta))
              << "   gap = " << fmt(report.value_gap_at_zeta) << "\n"
              << "  f(zeta+gamma)     = " << fmt(pair.f(zeta + gamma))
              << "   f~(zeta+gamma)    = " << fmt(pair.f_tilde(zeta + gamma))
              << "   gap = " << fmt(report.value_gap_at_zeta_plus_gamma) << "\n"
              << "  f'(zeta)  commutator = " << fmt(report.f_prime_commutator)
              << "   oracle = " << fmt(report.f_prime_oracle) << "\n"
              << "  f~'(zeta) commutator = " << fmt(report.f_tilde_prime_commutator)
              << "   oracle = " << fmt(report.f_tilde_prime_oracle) << "\n"
              << "  derivative gap = " << fmt(report.derivative_gap)
              << "   |c_perp| = " << fmt(pair.c_perp_norm) << "\n"
              << "Equal inputs at both points, different derivatives: no two-point rule\n"
              << "g[f(zeta), f(zeta+gamma)] can return f'(zeta) for every r-gate function.\n";

    const std::string out = common.pick_out(json::object());
    if (!out.empty()) {
        json doc;
        doc["zeta"] = zeta;
        doc["gamma"] = gamma;
        doc["c_perp_norm"] = pair.c_perp_norm;
        doc["derivative_gap"] = report.derivative_gap;
        doc["value_gap_at_zeta"] = report.value_gap_at_zeta;
        doc["value_gap_at_zeta_plus_gamma"] = report.value_gap_at_zeta_plus_gamma;
        doc["f_prime_commutator"] = report.f_prime_commutator;
        doc["f_tilde_prime_commutator"] = report.f_tilde_prime_commutator;
        doc["f_prime_oracle"] = report.f_prime_oracle;
        doc["f_tilde_prime_oracle"] = report.f_tilde_prime_oracle;
        doc["generator_g"] = matrix_to_json(pair.generator_g.matrix());
        doc["generator_f"] = matrix_to_json(pair.generator_f.matrix());
        doc["observable_a"] = matrix_to_json(pair.observable_a.matrix());
        doc["observable_b"] = matrix_to_json(pair.observable_b.matrix());
        json state = json::array();
        for (Eigen::Index k = 0; k < pair.zeta_state.dim(); ++k) {
            state.push_back({pair.zeta_state.amplitudes()(k).real(),
                             pair.zeta_state.amplitudes()(k).imag()});
        }
        doc["zeta_state"] = state;
        std::ofstream file(out);
        if (!file) {
            throw ConfigError("cannot open output file '" + out + "'");
        }
        file << doc.dump(2) << "\n";
    }

    const bool pass = report.value_gap_at_zeta < 1e-10 &&
                      report.value_gap_at_zeta_plus_gamma < 1e-10 &&
                      std::abs(report.f_prime_commutator - report.f_prime_oracle) < 1e-9 &&
                      std::abs(report.f_tilde_prime_commutator -
                               report.f_tilde_prime_oracle) < 1e-9;
    return pass ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// optimize

int run_optimize(const CommonFlags &common) {
    const json cfg = load_config(common.config_path);
    const std::uint64_t seed = common.pick_seed(cfg);
    const std::int64_t shots = common.pick_shots(cfg, 0);
    if (!cfg.contains("circuit")) {
        throw ConfigError("config must name a circuit file");
    }
    const CircuitPtr circuit = load_circuit(cfg.at("circuit").get<std::string>());
    const RuleKind kind = rule_kind_from_string(cfg.value("rule", "cpsr"));
    const double step_size = cfg.value("step_size", 0.1);
    const int iterations = cfg.value("iterations", 200);
    std::vector<double> theta = cfg.value("initial_theta", std::vector<double>{});
    if (theta.empty()) {
        theta.assign(circuit->num_params(), 0.0);
    }
    if (static_cast<int>(theta.size()) != circuit->num_params()) {
        throw ConfigError("initial_theta length does not match the circuit");
    }
    if (iterations < 1 || step_size <= 0.0) {
        throw ConfigError("iterations must be >= 1 and step_size > 0");
    }

    GradientOptions options;
    options.kind = kind;
    options.shots_per_eval = shots;
    if (cfg.contains("step")) {
        options.step = cfg.at("step").get<double>();
    }

    CsvWriter csv(common.pick_out(cfg),
                  {"iter", "F_exact", "grad_norm", "total_circuit_evals"});
    std::int64_t total_evals = 0;
    for (int iter = 0; iter < iterations; ++iter) {
        const double value = circuit->evaluate(theta);
        options.seed = rng::substream(seed, iter);
        const GradientResult grad = full_gradient(circuit, theta, options);
        total_evals += grad.evaluations;
        double norm2 = 0.0;
        for (int i = 0; i < circuit->num_params(); ++i) {
            norm2 += grad.gradient[i] * grad.gradient[i];
        }
        csv.row({std::to_string(iter), fmt(value), fmt(std::sqrt(norm2)),
                 std::to_string(total_evals)});
        for (int i = 0; i < circuit->num_params(); ++i) {
            theta[i] -= step_size * grad.gradient[i];
        }
    }
    std::cerr << "optimize: final F = " << fmt(circuit->evaluate(theta)) << " after "
              << iterations << " iterations, " << total_evals << " rule evaluations\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// hessian

int run_hessian(const CommonFlags &common, const std::string &shift_reading) {
    const json cfg = load_config(common.config_path);
    if (!cfg.contains("circuit")) {
        throw ConfigError("config must name a circuit file");
    }
    const CircuitPtr circuit = load_circuit(cfg.at("circuit").get<std::string>());
    const int i = cfg.value("i", 0);
    const int j = cfg.value("j", 1);
    std::vector<double> base = cfg.value("base_point", std::vector<double>{});
    if (base.empty()) {
        base.assign(circuit->num_params(), 0.0);
    }
    const TwoParamFunction f2(circuit, base, i, j);
    const double t1 = cfg.value("t1", base[i]);
    const double t2 = cfg.value("t2", base[j]);
    const double gamma1 = cfg.value("gamma1", 0.6);
    const double gamma2 = cfg.value("gamma2", 0.9);

    const Eigen::Matrix2d h = hessian_2x2(f2, t1, t2);
    const Eigen::Matrix2d fd = hessian_2x2_fd(f2, t1, t2);
    const double max_deviation = (h - fd).cwiseAbs().maxCoeff();
    const double symmetry_gap = std::abs(h(0, 1) - h(1, 0));

    CsvWriter csv(common.pick_out(cfg), {"quantity", "value"});
    csv.row({"h00", fmt(h(0, 0))});
    csv.row({"h01", fmt(h(0, 1))});
    csv.row({"h10", fmt(h(1, 0))});
    csv.row({"h11", fmt(h(1, 1))});
    csv.row({"fd00", fmt(fd(0, 0))});
    csv.row({"fd01", fmt(fd(0, 1))});
    csv.row({"fd10", fmt(fd(1, 0))});
    csv.row({"fd11", fmt(fd(1, 1))});
    csv.row({"max_rule_fd_deviation", fmt(max_deviation)});
    csv.row({"symmetry_gap", fmt(symmetry_gap)});

    const auto emit_identity = [&](ShiftReading reading, const std::string &label) {
        const IdentityResidualReport rep =
            check_discussion_identity(f2, t1, t2, gamma1, gamma2, reading);
        csv.row({"identity_lhs_" + label, fmt(rep.lhs)});
        csv.row({"identity_rhs_" + label, fmt(rep.rhs)});
        csv.row({"identity_residual_" + label, fmt(rep.residual)});
    };
    if (shift_reading == "literal" || shift_reading == "both") {
        emit_identity(ShiftReading::kLiteral, "literal");
    }
    if (shift_reading == "scaled" || shift_reading == "both") {
        emit_identity(ShiftReading::kScaled, "scaled");
    }

    const bool pass =
        symmetry_gap < kHessianSymmetryTolerance && max_deviation < kHessianFdTolerance;
    if (!pass) {
        std::cerr << "hessian verification failed: symmetry gap " << fmt(symmetry_gap)
                  << ", max FD deviation " << fmt(max_deviation) << "\n";
    }
    return pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"single-component gradient rules for r-gate circuits"};
    app.require_subcommand(1);

    int rc = kExitOk;
    const auto guard = [&rc](auto &&body) {
        try {
            rc = body();
        } catch (const ConfigError &e) {
            std::cerr << "config error: " << e.what() << "\n";
            rc = kExitConfigError;
        } catch (const ValidationError &e) {
            std::cerr << "invalid input: " << e.what() << "\n";
            rc = kExitConfigError;
        } catch (const ZeroStepError &e) {
            std::cerr << "invalid step: " << e.what() << "\n";
            rc = kExitConfigError;
        } catch (const SingularShiftError &e) {
            std::cerr << "singular shift: " << e.what() << "\n";
            rc = kExitConfigError;
        } catch (const ConditionViolationError &e) {
            std::cerr << "construction rejected: " << e.what() << "\n";
            rc = kExitConfigError;
        } catch (const DimensionError &e) {
            std::cerr << "dimension error: " << e.what() << "\n";
            rc = kExitConfigError;
        } catch (const Error &e) {
            std::cerr << "error: " << e.what() << "\n";
            rc = kExitVerificationFailure;
        }
    };

    // gradcheck
    auto *gradcheck = app.add_subcommand("gradcheck", "master-identity residual suite");
    CommonFlags gradcheck_flags;
    gradcheck_flags.attach(gradcheck);
    gradcheck->callback([&] { guard([&] { return run_gradcheck(gradcheck_flags); }); });

    // bias-sweep
    auto *bias = app.add_subcommand("bias-sweep", "closed-form vs deterministic bias");
    CommonFlags bias_flags;
    bias_flags.attach(bias);
    bias->callback([&] { guard([&] { return run_sweep(bias_flags, false); }); });

    // variance-sweep
    auto *variance =
        app.add_subcommand("variance-sweep", "closed-form vs Monte-Carlo variance");
    CommonFlags variance_flags;
    variance_flags.attach(variance);
    variance->callback([&] { guard([&] { return run_sweep(variance_flags, true); }); });

    // nogo
    auto *nogo = app.add_subcommand("nogo", "two-point no-go counterexample");
    CommonFlags nogo_flags;
    nogo_flags.attach(nogo);
    double zeta = 0.3;
    double gamma = 0.7;
    std::string g_spec = "X";
    std::string f_spec = R"([[0.7071067811865476, "Y"], [0.7071067811865476, "Z"]])";
    std::string a_spec = "Y";
    std::string operators_path;
    nogo->add_option("--zeta", zeta, "base point");
    nogo->add_option("--gamma", gamma, "shift, 0 < gamma < pi/r");
    auto *g_opt = nogo->add_option("--G", g_spec, "generator of f (Pauli string or JSON sum)");
    auto *f_opt = nogo->add_option("--F", f_spec, "generator of f~");
    auto *a_opt = nogo->add_option("--A", a_spec, "observable");
    nogo->add_option("--operators", operators_path, "JSON file with G/F/A specs");
    nogo->callback([&] {
        guard([&] {
            return run_nogo(nogo_flags, zeta, gamma, g_spec, f_spec, a_spec, operators_path,
                            g_opt, f_opt, a_opt);
        });
    });

    // optimize
    auto *optimize = app.add_subcommand("optimize", "gradient descent benchmark");
    CommonFlags optimize_flags;
    optimize_flags.attach(optimize);
    optimize->callback([&] { guard([&] { return run_optimize(optimize_flags); }); });

    // hessian
    auto *hessian = app.add_subcommand("hessian", "nested-rule Hessian report");
    CommonFlags hessian_flags;
    hessian_flags.attach(hessian);
    std::string shift_reading = "both";
    hessian->add_option("--shift-reading", shift_reading,
                        "third-evaluation shift: literal | scaled | both")
        ->check(CLI::IsMember({"literal", "scaled", "both"}));
    hessian->callback(
        [&] { guard([&] { return run_hessian(hessian_flags, shift_reading); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfigError;
    }
    return rc;
}
