// Copyright 2026 The Undo Authors
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

#include "undo/cli/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "undo/cli/svg.h"
#include "undo/protocol/protocol.h"
#include "undo/tomography/heralded_channel.h"

namespace undo {

namespace {

nlohmann::json matrix_to_json(const ComplexMatrix &m) {
    auto doc = nlohmann::json::array();
    for (cplx z : m.entries()) {
        doc.push_back({z.real(), z.imag()});
    }
    return doc;
}

nlohmann::json noise_to_json(const NoiseConfig &noise) {
    return {{"target", noise_target_name(noise.applied_to)}, {"p", noise.depolarizing_p}};
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary);
    f << content;
    if (!f) {
        throw std::runtime_error("failed to write " + path.string());
    }
}

std::string dump(const nlohmann::json &doc) {
    return doc.dump(2) + "\n";
}

StateVector random_input_state(Rng &rng) {
    std::normal_distribution<double> g;
    double a = g(rng), b = g(rng), c = g(rng), d = g(rng);
    return StateVector::normalized({{a, b}, {c, d}});
}

struct TrialSummary {
    bool success = false;
    size_t rounds = 0;
    size_t queries = 0;
    double fidelity = 0;
    std::array<uint64_t, 4> outcomes{};
};

struct Moments {
    double mean = 0;
    double variance = 0;
};

template <typename F>
Moments moments(const std::vector<TrialSummary> &trials, F value) {
    Moments m;
    for (const auto &t : trials) {
        m.mean += value(t);
    }
    m.mean /= trials.size();
    if (trials.size() > 1) {
        for (const auto &t : trials) {
            double d = value(t) - m.mean;
            m.variance += d * d;
        }
        m.variance /= trials.size() - 1;
    }
    return m;
}

// Per-qubit depolarizing strength whose two-qubit resource composition
// 1 - (1 - p)^2 equals p_effective.
double resource_strength(double p_effective) {
    return 1 - std::sqrt(1 - p_effective);
}

}  // namespace

nlohmann::json chi_to_json(const ComplexMatrix &chi) {
    if (chi.rows() != 4 || chi.cols() != 4) {
        throw std::invalid_argument("chi_to_json: expected a 4x4 matrix");
    }
    return matrix_to_json(chi);
}

ChiMatrix chi_from_json(const nlohmann::json &doc) {
    if (!doc.is_array() || doc.size() != 16) {
        throw std::invalid_argument("chi_from_json: expected 16 [re, im] pairs");
    }
    ComplexMatrix m(4, 4);
    for (size_t k = 0; k < 16; k++) {
        const auto &e = doc[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw std::invalid_argument("chi_from_json: expected 16 [re, im] pairs");
        }
        m(k / 4, k % 4) = {e[0].get<double>(), e[1].get<double>()};
    }
    return ChiMatrix(m);
}

void parallel_for(size_t n, size_t jobs, const std::function<void(size_t)> &fn) {
    jobs = std::max<size_t>(1, std::min(jobs, n));
    if (jobs == 1) {
        for (size_t k = 0; k < n; k++) {
            fn(k);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::mutex mu;
    size_t failed_index = std::numeric_limits<size_t>::max();
    std::exception_ptr failure;
    auto worker = [&]() {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= n) {
                return;
            }
            try {
                fn(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (k < failed_index) {
                    failed_index = k;
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> threads;
    for (size_t t = 0; t < jobs; t++) {
        threads.emplace_back(worker);
    }
    for (auto &t : threads) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

nlohmann::json cmd_invert(const RunConfig &config) {
    const ComplexMatrix inverse = unitary_inverse(config.unitary);
    std::vector<TrialSummary> trials(config.trials);
    parallel_for(config.trials, config.jobs, [&](size_t t) {
        Rng rng = substream(config.seed, t);
        StateVector input = random_input_state(rng);
        UnitaryOracle oracle(config.unitary);
        auto r = run_inversion(oracle, input, rng, {CLI_MAX_ROUNDS, config.force_success});
        TrialSummary &s = trials[t];
        s.success = r.success;
        s.rounds = r.rounds;
        s.queries = r.queries;
        for (const auto &o : r.outcome_history) {
            s.outcomes[o.index()]++;
        }
        if (r.success) {
            s.fidelity = state_fidelity(r.output_state, StateVector(inverse.apply(input.amplitudes())));
        }
    });

    uint64_t successes = 0;
    std::array<uint64_t, 4> outcomes{};
    std::map<size_t, uint64_t> rounds_histogram;
    double fidelity_sum = 0;
    double fidelity_min = 1;
    for (const auto &s : trials) {
        for (size_t k = 0; k < 4; k++) {
            outcomes[k] += s.outcomes[k];
        }
        rounds_histogram[s.rounds]++;
        if (s.success) {
            successes++;
            fidelity_sum += s.fidelity;
            fidelity_min = std::min(fidelity_min, s.fidelity);
        }
    }
    uint64_t total_outcomes = 0;
    for (auto c : outcomes) {
        total_outcomes += c;
    }

    auto rounds = moments(trials, [](const TrialSummary &t) {
        return static_cast<double>(t.rounds);
    });
    auto queries = moments(trials, [](const TrialSummary &t) {
        return static_cast<double>(t.queries);
    });

    nlohmann::json report;
    report["schema_version"] = REPORT_SCHEMA_VERSION;
    report["command"] = "invert";
    report["config"] = {
        {"unitary", {{"label", config.unitary_label}, {"matrix", matrix_to_json(config.unitary)}}},
        {"trials", config.trials},
        {"seed", config.seed},
        {"force_success", config.force_success},
        {"max_rounds", CLI_MAX_ROUNDS},
    };
    report["successes"] = successes;
    report["failures"] = config.trials - successes;
    report["rounds"] = {{"mean", rounds.mean}, {"variance", rounds.variance}};
    report["queries"] = {{"mean", queries.mean}, {"variance", queries.variance}};
    if (!config.force_success) {
        // Geometric rounds with success probability 1/4: E[r] = 4, Var[r] = 12,
        // queries = 2r - 1.
        report["expected"] = {
            {"rounds", {{"mean", 4.0}, {"variance", 12.0}}},
            {"queries", {{"mean", 7.0}, {"variance", 48.0}}},
        };
    }
    auto hist = nlohmann::json::array();
    for (size_t k = 0; k < 4; k++) {
        auto o = BellOutcome::from_index(k);
        hist.push_back({
            {"bell_state", bell_name(o.bell_kind())},
            {"i", o.i},
            {"j", o.j},
            {"count", outcomes[k]},
            {"frequency", total_outcomes ? static_cast<double>(outcomes[k]) / total_outcomes : 0.0},
        });
    }
    report["outcome_histogram"] = hist;
    auto rh = nlohmann::json::array();
    for (const auto &[r, c] : rounds_histogram) {
        rh.push_back({{"rounds", r}, {"count", c}});
    }
    report["rounds_histogram"] = rh;
    if (successes) {
        report["success_fidelity"] = {{"mean", fidelity_sum / successes}, {"min", fidelity_min}};
    }
    return report;
}

TomographyRun run_tomography(
    const ComplexMatrix &unitary, const std::string &label, uint64_t shots, uint64_t seed, const NoiseConfig &noise) {
    noise.validate();
    Channel channel = make_heralded_channel(unitary, noise);
    CountTable counts = simulate_counts(channel, shots, seed);
    MleResult mle = mle_reconstruct(counts);
    ChiMatrix ideal = choi_of_unitary(unitary_inverse(unitary));
    double fidelity = process_fidelity(mle.chi, ideal);
    double model_fidelity = process_fidelity(choi_of_channel(channel), ideal);

    auto counts_json = nlohmann::json::array();
    for (size_t k = 0; k < NUM_SETTINGS; k++) {
        auto s = MeasurementSetting::from_index(k);
        counts_json.push_back({
            {"probe", probe_name(s.probe)},
            {"basis", basis_name(s.basis)},
            {"n_plus", counts.at(k).n_plus},
            {"n_minus", counts.at(k).n_minus},
        });
    }

    nlohmann::json report;
    report["schema_version"] = REPORT_SCHEMA_VERSION;
    report["command"] = "tomography";
    report["config"] = {
        {"unitary", {{"label", label}, {"matrix", matrix_to_json(unitary)}}},
        {"shots", shots},
        {"seed", seed},
        {"noise", noise_to_json(noise)},
    };
    report["counts"] = counts_json;
    report["mle"] = {
        {"iterations", mle.iterations},
        {"nll", mle.nll},
        {"converged", mle.converged},
    };
    report["chi_mle"] = chi_to_json(mle.chi.matrix());
    report["chi_ideal"] = chi_to_json(ideal.matrix());
    report["process_fidelity"] = fidelity;
    report["noise_model_fidelity"] = model_fidelity;

    std::string svg_real = chi_bar_chart(mle.chi.matrix(), ChiPart::Real, "Re(chi), " + label + " inverse");
    std::string svg_imag = chi_bar_chart(mle.chi.matrix(), ChiPart::Imag, "Im(chi), " + label + " inverse");
    return {counts, std::move(mle), ideal, fidelity, std::move(report), std::move(svg_real), std::move(svg_imag)};
}

TomographyRun cmd_tomography(const RunConfig &config) {
    return run_tomography(config.unitary, config.unitary_label, config.shots, config.seed, config.noise);
}

CalibratedRun cmd_reproduce(const RunConfig &config) {
    NoiseConfig noise = NoiseConfig::none();
    if (!config.noise_disabled && config.noise.applied_to != NoiseTarget::None) {
        double p = calibrate_p_for_fidelity(REFERENCE_AVERAGE_FIDELITY);
        if (config.noise.applied_to == NoiseTarget::Resource) {
            p = resource_strength(p);
        }
        noise = {p, config.noise.applied_to};
    }

    const std::array<std::string, 3> labels = {"U1", "U2", "U3"};
    const std::array<ComplexMatrix, 3> unitaries = {presets::U1(), presets::U2(), presets::U3()};
    std::vector<std::optional<TomographyRun>> slots(3);
    parallel_for(3, config.jobs, [&](size_t k) {
        slots[k] = run_tomography(unitaries[k], labels[k], config.shots, substream(config.seed, k)(), noise);
    });

    CalibratedRun result;
    result.noise = noise;
    auto runs_json = nlohmann::json::array();
    double sum = 0;
    for (size_t k = 0; k < 3; k++) {
        result.runs.push_back(std::move(*slots[k]));
        const auto &run = result.runs.back();
        sum += run.fidelity;
        runs_json.push_back({
            {"unitary", labels[k]},
            {"seed", run.report["config"]["seed"]},
            {"process_fidelity", run.fidelity},
            {"reference_fidelity", REFERENCE_FIDELITIES[k]},
        });
    }
    result.average_fidelity = sum / 3;

    nlohmann::json summary;
    summary["schema_version"] = REPORT_SCHEMA_VERSION;
    summary["command"] = "reproduce-paper";
    summary["config"] = {{"shots", config.shots}, {"seed", config.seed}, {"noise", noise_to_json(noise)}};
    summary["runs"] = runs_json;
    summary["average_fidelity"] = result.average_fidelity;
    summary["reference_average_fidelity"] = REFERENCE_AVERAGE_FIDELITY;
    result.summary = std::move(summary);

    char line[160];
    std::string table;
    std::snprintf(line, sizeof(line), "noise: %s, p = %.6f; shots per setting: %llu; seed: %llu\n",
                  std::string(noise_target_name(noise.applied_to)).c_str(), noise.depolarizing_p,
                  static_cast<unsigned long long>(config.shots), static_cast<unsigned long long>(config.seed));
    table += line;
    std::snprintf(line, sizeof(line), "%-10s %-12s %s\n", "unitary", "fidelity", "reference");
    table += line;
    for (size_t k = 0; k < 3; k++) {
        std::snprintf(line, sizeof(line), "%-10s %-12.6f %.4f\n", (labels[k] + "^-1").c_str(),
                      result.runs[k].fidelity, REFERENCE_FIDELITIES[k]);
        table += line;
    }
    std::snprintf(line, sizeof(line), "%-10s %-12.6f %.4f\n", "average", result.average_fidelity,
                  REFERENCE_AVERAGE_FIDELITY);
    table += line;
    result.table = std::move(table);
    return result;
}

void write_tomography_artifacts(const TomographyRun &run, const std::string &dir) {
    std::filesystem::path base(dir);
    std::filesystem::create_directories(base);
    write_file(base / "report.json", dump(run.report));
    write_file(base / "counts.tsv", run.counts.to_tsv());
    write_file(base / "chi_real.svg", run.svg_real);
    write_file(base / "chi_imag.svg", run.svg_imag);
}

void write_calibrated_artifacts(const CalibratedRun &run, const std::string &dir) {
    std::filesystem::path base(dir);
    std::filesystem::create_directories(base);
    for (const auto &r : run.runs) {
        write_tomography_artifacts(r, (base / r.report["config"]["unitary"]["label"].get<std::string>()).string());
    }
    write_file(base / "summary.json", dump(run.summary));
    write_file(base / "summary.txt", run.table);
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RawOptions raw;
    CLI::App app{"Inverts an unknown single-qubit unitary by gate teleportation and characterizes the result."};
    app.require_subcommand(1, 1);

    auto add_seed = [&](CLI::App *sub) {
        sub->add_option("--seed", raw.seed, "64-bit RNG seed")->capture_default_str();
        sub->add_option("--jobs", raw.jobs, "Worker threads")->capture_default_str();
        sub->add_option("--out", raw.out, "Directory for output artifacts");
    };
    auto add_unitary = [&](CLI::App *sub) {
        sub->add_option("--unitary", raw.unitary, "U1, U2, U3, random, theta,phi1,phi2 or a JSON matrix file")
            ->capture_default_str();
        sub->add_flag("--haar", raw.haar, "Draw 'random' from the Haar measure");
    };
    auto add_noise = [&](CLI::App *sub, bool with_p) {
        if (with_p) {
            sub->add_option("--noise-p", raw.noise_p, "Depolarizing strength in [0, 1]")->capture_default_str();
        }
        sub->add_option("--noise-target", raw.noise_target, "output, resource or none")->capture_default_str();
        sub->add_flag("--no-noise", raw.no_noise, "Disable all noise");
    };

    auto *invert = app.add_subcommand("invert", "Monte Carlo runs of the repeat-until-success protocol");
    add_unitary(invert);
    invert->add_option("--trials", raw.trials, "Number of runs")->capture_default_str();
    invert->add_flag("--force-success", raw.force_success, "Debug: force the first Bell outcome to succeed");
    add_seed(invert);

    auto *tomography = app.add_subcommand("tomography", "Process tomography of the inverted channel");
    add_unitary(tomography);
    tomography->add_option("--shots", raw.shots, "Shots per measurement setting")->capture_default_str();
    add_noise(tomography, true);
    add_seed(tomography);

    auto *reproduce = app.add_subcommand("reproduce-paper", "Tomography of U1, U2, U3 with calibrated noise");
    reproduce->add_option("--shots", raw.shots, "Shots per measurement setting")->capture_default_str();
    add_noise(reproduce, false);
    add_seed(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    RunConfig config;
    try {
        config = build_config(raw);
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    }

    try {
        if (invert->parsed()) {
            auto report = cmd_invert(config);
            out << dump(report);
            if (!config.output_dir.empty()) {
                std::filesystem::create_directories(config.output_dir);
                write_file(std::filesystem::path(config.output_dir) / "invert.json", dump(report));
            }
        } else if (tomography->parsed()) {
            auto run = cmd_tomography(config);
            out << dump(run.report);
            if (!config.output_dir.empty()) {
                write_tomography_artifacts(run, config.output_dir);
            }
        } else {
            auto run = cmd_reproduce(config);
            out << run.table;
            if (!config.output_dir.empty()) {
                write_calibrated_artifacts(run, config.output_dir);
            }
        }
    } catch (const MleConvergenceError &e) {
        err << "numerical failure: " << e.what() << "\n";
        err << "  iterations: " << e.result().iterations << "\n";
        err << "  last nll: " << e.result().nll << "\n";
        return EXIT_NUMERICAL;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "usage error: --out: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception &e) {
        err << "numerical failure: " << e.what() << "\n";
        return EXIT_NUMERICAL;
    }
    return EXIT_OK;
}

}  // namespace undo
