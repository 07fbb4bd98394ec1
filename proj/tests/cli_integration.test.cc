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

// Drives the built undo binary end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "json.hpp"
#include "undo/cli/commands.h"

using namespace undo;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch(const std::string &name) {
    auto dir = fs::temp_directory_path() / ("undo_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

Run run(const std::string &args) {
    static int counter = 0;
    auto dir = scratch("run" + std::to_string(counter++));
    std::string cmd = std::string(UNDO_CLI_PATH) + " " + args + " >" + (dir / "out").string() + " 2>" +
                      (dir / "err").string();
    int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(dir / "out"), slurp(dir / "err")};
}

}  // namespace

TEST(cli, help_and_usage_errors) {
    ASSERT_EQ(run("--help").code, EXIT_OK);
    ASSERT_EQ(run("").code, EXIT_USAGE);
    ASSERT_EQ(run("frobnicate").code, EXIT_USAGE);
    ASSERT_EQ(run("invert --bogus").code, EXIT_USAGE);
    ASSERT_EQ(run("invert --trials abc").code, EXIT_USAGE);
    auto r = run("tomography --unitary U2 --shots 0");
    ASSERT_EQ(r.code, EXIT_USAGE);
    ASSERT_NE(r.err.find("--shots"), std::string::npos);
    ASSERT_EQ(run("tomography --noise-target photon").code, EXIT_USAGE);
    ASSERT_EQ(run("tomography --unitary nope.json").code, EXIT_USAGE);
}

TEST(cli, invert_forced_success) {
    auto r = run("invert --trials 1 --force-success");
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["schema_version"], REPORT_SCHEMA_VERSION);
    ASSERT_EQ(doc["queries"]["mean"], 1.0);
    ASSERT_NEAR(doc["success_fidelity"]["min"].get<double>(), 1, 1e-12);
}

TEST(cli, invert_statistics) {
    auto r = run("invert --unitary U1 --trials 100000 --seed 42 --jobs 4");
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    ASSERT_NEAR(doc["queries"]["mean"].get<double>(), 7.0, 0.15);
    for (const auto &bin : doc["outcome_histogram"]) {
        ASSERT_NEAR(bin["frequency"].get<double>(), 0.25, 0.01);
    }
    ASSERT_EQ(doc["failures"], 0);
    ASSERT_NEAR(doc["success_fidelity"]["min"].get<double>(), 1, 1e-10);
}

TEST(cli, invert_is_reproducible_and_schedule_independent) {
    auto a = run("invert --unitary random --trials 2000 --seed 9 --jobs 1");
    auto b = run("invert --unitary random --trials 2000 --seed 9 --jobs 1");
    auto c = run("invert --unitary random --trials 2000 --seed 9 --jobs 3");
    auto d = run("invert --unitary random --trials 2000 --seed 10");
    ASSERT_EQ(a.code, EXIT_OK);
    ASSERT_EQ(a.out, b.out);
    ASSERT_EQ(a.out, c.out);
    ASSERT_NE(a.out, d.out);
}

TEST(cli, tomography_noiseless_artifacts) {
    auto dir = scratch("tomo");
    auto r = run("tomography --unitary U1 --shots 100000 --no-noise --out " + dir.string());
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = nlohmann::json::parse(slurp(dir / "report.json"));
    ASSERT_EQ(slurp(dir / "report.json"), r.out);
    ASSERT_GE(doc["process_fidelity"].get<double>(), 0.999);

    // Every emitted chi must survive re-parsing with full validation.
    auto chi = chi_from_json(doc["chi_mle"]);
    auto ideal = chi_from_json(doc["chi_ideal"]);
    ASSERT_NEAR(process_fidelity(chi, ideal), doc["process_fidelity"].get<double>(), 1e-12);

    auto counts = CountTable::from_tsv(slurp(dir / "counts.tsv"));
    for (size_t k = 0; k < NUM_SETTINGS; k++) {
        ASSERT_EQ(counts.at(k).n_plus, doc["counts"][k]["n_plus"].get<uint64_t>());
        ASSERT_EQ(counts.at(k).shots(), 100000u);
    }
    for (const char *name : {"chi_real.svg", "chi_imag.svg"}) {
        auto svg = slurp(dir / name);
        size_t bars = 0;
        for (size_t pos = svg.find("class=\"bar\""); pos != std::string::npos; pos = svg.find("class=\"bar\"", pos + 1)) {
            bars++;
        }
        ASSERT_EQ(bars, 16u) << name;
    }
}

TEST(cli, tomography_with_calibrated_noise) {
    auto r = run("tomography --unitary U1 --shots 100000 --noise-p 0.0311");
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    double f = nlohmann::json::parse(r.out)["process_fidelity"].get<double>();
    ASSERT_GE(f, 0.969);
    ASSERT_LE(f, 0.985);
}

TEST(cli, reproduce_command) {
    auto r = run("reproduce-paper");
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    for (const char *ref : {"0.9778", "0.9772", "0.9752", "0.9767"}) {
        ASSERT_NE(r.out.find(ref), std::string::npos) << ref;
    }

    auto dir = scratch("reproduce_noiseless");
    ASSERT_EQ(run("reproduce-paper --no-noise --out " + dir.string()).code, EXIT_OK);
    auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
    for (const auto &u : summary["runs"]) {
        ASSERT_GE(u["process_fidelity"].get<double>(), 0.999);
    }
}

TEST(cli, reproduce_command_is_byte_identical) {
    auto a = scratch("reproduce_a");
    auto b = scratch("reproduce_b");
    ASSERT_EQ(run("reproduce-paper --seed 7 --out " + a.string()).code, EXIT_OK);
    ASSERT_EQ(run("reproduce-paper --seed 7 --jobs 3 --out " + b.string()).code, EXIT_OK);
    size_t files = 0;
    for (const auto &entry : fs::recursive_directory_iterator(a)) {
        if (entry.is_regular_file()) {
            auto rel = fs::relative(entry.path(), a);
            ASSERT_EQ(slurp(entry.path()), slurp(b / rel)) << rel;
            files++;
        }
    }
    ASSERT_EQ(files, 14u);
}
