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

#include "undo/cli/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace undo {

namespace {

// Stream index reserved for drawing a random unitary, far from trial indices.
constexpr uint64_t RANDOM_UNITARY_STREAM = 0xffffffffffff0001ULL;

bool parse_double(std::string_view text, double &out) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        return false;
    }
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && end == text.data() + text.size() && std::isfinite(out);
}

ComplexMatrix checked_matrix(const ComplexMatrix &m) {
    if (!m.is_unitary(1e-6)) {
        throw UsageError("--unitary", "matrix is not unitary (tolerance 1e-6)");
    }
    return nearest_unitary(m);
}

ComplexMatrix matrix_from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("--unitary", "not a preset, 'random', 'theta,phi1,phi2' or a readable file: " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
        if (doc.is_object()) {
            return realize_unitary({doc.at("theta").get<double>(), doc.at("phi1").get<double>(),
                                    doc.at("phi2").get<double>()});
        }
        if (!doc.is_array() || doc.size() != 2) {
            throw UsageError("--unitary", path + ": expected a 2x2 array of [re, im] pairs");
        }
        ComplexMatrix m(2, 2);
        for (size_t r = 0; r < 2; r++) {
            if (!doc[r].is_array() || doc[r].size() != 2) {
                throw UsageError("--unitary", path + ": expected a 2x2 array of [re, im] pairs");
            }
            for (size_t c = 0; c < 2; c++) {
                const auto &e = doc[r][c];
                if (!e.is_array() || e.size() != 2) {
                    throw UsageError("--unitary", path + ": expected a 2x2 array of [re, im] pairs");
                }
                m(r, c) = {e[0].get<double>(), e[1].get<double>()};
            }
        }
        return checked_matrix(m);
    } catch (const nlohmann::json::exception &e) {
        throw UsageError("--unitary", path + ": " + e.what());
    }
}

}  // namespace

UsageError::UsageError(std::string_view field, std::string_view problem)
    : std::invalid_argument(std::string(field) + ": " + std::string(problem)), field_(field) {
}

UnitaryParams sample_unitary_params(Rng &rng, bool haar) {
    double u = uniform01(rng);
    double theta = haar ? std::asin(std::sqrt(u)) : u * std::numbers::pi / 2;
    double phi1 = uniform01(rng) * 2 * std::numbers::pi;
    double phi2 = uniform01(rng) * 2 * std::numbers::pi;
    return {theta, phi1, phi2};
}

ComplexMatrix nearest_unitary(const ComplexMatrix &m) {
    auto eig = hermitian_eigen(m.adjoint() * m);
    ComplexMatrix inv_sqrt(m.cols(), m.cols());
    for (size_t k = 0; k < m.cols(); k++) {
        if (eig.values[k] <= 0) {
            throw std::invalid_argument("nearest_unitary: singular matrix");
        }
        inv_sqrt(k, k) = 1 / std::sqrt(eig.values[k]);
    }
    return m * (eig.vectors * inv_sqrt * eig.vectors.adjoint());
}

ComplexMatrix resolve_unitary(std::string_view text, uint64_t seed, bool haar) {
    if (text == "U1" || text == "u1") {
        return presets::U1();
    }
    if (text == "U2" || text == "u2") {
        return presets::U2();
    }
    if (text == "U3" || text == "u3") {
        return presets::U3();
    }
    if (text == "random") {
        Rng rng = substream(seed, RANDOM_UNITARY_STREAM);
        return realize_unitary(sample_unitary_params(rng, haar));
    }
    if (text.find(',') != std::string_view::npos) {
        std::vector<double> values;
        size_t start = 0;
        while (true) {
            size_t comma = text.find(',', start);
            double v;
            if (!parse_double(text.substr(start, comma - start), v)) {
                throw UsageError("--unitary", "expected theta,phi1,phi2 as three numbers, got '" + std::string(text) + "'");
            }
            values.push_back(v);
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (values.size() != 3) {
            throw UsageError("--unitary", "expected theta,phi1,phi2 as three numbers, got '" + std::string(text) + "'");
        }
        return realize_unitary({values[0], values[1], values[2]});
    }
    if (text.empty()) {
        throw UsageError("--unitary", "empty value");
    }
    return matrix_from_file(std::string(text));
}

RunConfig build_config(const RawOptions &raw) {
    RunConfig config;
    if (raw.shots < 1) {
        throw UsageError("--shots", "must be at least 1, got " + std::to_string(raw.shots));
    }
    if (raw.trials < 1) {
        throw UsageError("--trials", "must be at least 1, got " + std::to_string(raw.trials));
    }
    if (raw.jobs < 1 || raw.jobs > 1024) {
        throw UsageError("--jobs", "must be in [1, 1024], got " + std::to_string(raw.jobs));
    }
    if (!(raw.noise_p >= 0 && raw.noise_p <= 1)) {
        throw UsageError("--noise-p", "must be in [0, 1]");
    }
    NoiseTarget target;
    try {
        target = parse_noise_target(raw.noise_target);
    } catch (const std::invalid_argument &) {
        throw UsageError("--noise-target", "must be output, resource or none, got '" + raw.noise_target + "'");
    }
    config.unitary_label = raw.unitary;
    config.unitary = resolve_unitary(raw.unitary, raw.seed, raw.haar);
    config.shots = static_cast<uint64_t>(raw.shots);
    config.trials = static_cast<uint64_t>(raw.trials);
    config.seed = raw.seed;
    config.noise_disabled = raw.no_noise;
    config.noise = raw.no_noise ? NoiseConfig::none() : NoiseConfig{raw.noise_p, target};
    config.jobs = static_cast<size_t>(raw.jobs);
    config.output_dir = raw.out;
    config.force_success = raw.force_success;
    return config;
}

}  // namespace undo
