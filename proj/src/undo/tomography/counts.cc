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

#include "undo/tomography/counts.h"

#include <algorithm>
#include <charconv>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "undo/rng.h"

namespace undo {

MeasurementSetting MeasurementSetting::from_index(size_t index) {
    if (index >= NUM_SETTINGS) {
        throw std::invalid_argument("setting index out of range");
    }
    return {static_cast<Probe>(index / NUM_BASES), static_cast<Basis>(index % NUM_BASES)};
}

static constexpr std::string_view PROBE_NAMES[NUM_PROBES] = {"H", "V", "D", "A", "R", "L"};
static constexpr std::string_view BASIS_NAMES[NUM_BASES] = {"HV", "DA", "RL"};

std::string_view probe_name(Probe p) {
    return PROBE_NAMES[static_cast<size_t>(p)];
}

std::string_view basis_name(Basis b) {
    return BASIS_NAMES[static_cast<size_t>(b)];
}

Probe parse_probe(std::string_view text) {
    for (size_t k = 0; k < NUM_PROBES; k++) {
        if (PROBE_NAMES[k] == text) {
            return static_cast<Probe>(k);
        }
    }
    throw std::invalid_argument("unknown probe '" + std::string(text) + "'");
}

Basis parse_basis(std::string_view text) {
    for (size_t k = 0; k < NUM_BASES; k++) {
        if (BASIS_NAMES[k] == text) {
            return static_cast<Basis>(k);
        }
    }
    throw std::invalid_argument("unknown basis '" + std::string(text) + "'");
}

StateVector probe_state(Probe p) {
    const double h = std::numbers::sqrt2 / 2;
    const cplx i{0, 1};
    switch (p) {
        case Probe::H:
            return StateVector({1, 0});
        case Probe::V:
            return StateVector({0, 1});
        case Probe::D:
            return StateVector({h, h});
        case Probe::A:
            return StateVector({h, -h});
        case Probe::R:
            return StateVector({h, i * h});
        case Probe::L:
            return StateVector({h, -i * h});
    }
    throw std::invalid_argument("unknown probe");
}

StateVector basis_state(Basis b, bool plus) {
    static constexpr Probe table[NUM_BASES][2] = {
        {Probe::V, Probe::H},
        {Probe::A, Probe::D},
        {Probe::L, Probe::R},
    };
    return probe_state(table[static_cast<size_t>(b)][plus ? 1 : 0]);
}

ComplexMatrix projector(Basis b, bool plus) {
    return outer(basis_state(b, plus));
}

uint64_t CountTable::total_shots() const {
    uint64_t t = 0;
    for (const auto &c : counts_) {
        t += c.shots();
    }
    return t;
}

std::string CountTable::to_tsv() const {
    std::stringstream out;
    out << "probe\tbasis\tn_plus\tn_minus\tshots\n";
    for (size_t k = 0; k < NUM_SETTINGS; k++) {
        auto s = MeasurementSetting::from_index(k);
        const auto &c = counts_[k];
        out << probe_name(s.probe) << '\t' << basis_name(s.basis) << '\t' << c.n_plus << '\t' << c.n_minus << '\t'
            << c.shots() << '\n';
    }
    return out.str();
}

static uint64_t parse_count(std::string_view text, size_t line_no) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument(
            "count table line " + std::to_string(line_no) + ": bad integer '" + std::string(text) + "'");
    }
    return v;
}

CountTable CountTable::from_tsv(std::string_view text) {
    CountTable table;
    std::array<bool, NUM_SETTINGS> seen{};
    size_t line_no = 0;
    bool header = true;
    while (!text.empty()) {
        size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (header) {
            header = false;
            if (line.starts_with("probe\t")) {
                continue;
            }
        }
        std::vector<std::string_view> cols;
        size_t start = 0;
        while (true) {
            size_t tab = line.find('\t', start);
            cols.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
            if (tab == std::string_view::npos) {
                break;
            }
            start = tab + 1;
        }
        if (cols.size() != 5) {
            throw std::invalid_argument("count table line " + std::to_string(line_no) + ": expected 5 columns");
        }
        MeasurementSetting s{parse_probe(cols[0]), parse_basis(cols[1])};
        if (seen[s.index()]) {
            throw std::invalid_argument("count table line " + std::to_string(line_no) + ": duplicate setting");
        }
        seen[s.index()] = true;
        SettingCounts c{parse_count(cols[2], line_no), parse_count(cols[3], line_no)};
        if (parse_count(cols[4], line_no) != c.shots()) {
            throw std::invalid_argument(
                "count table line " + std::to_string(line_no) + ": shots != n_plus + n_minus");
        }
        table[s] = c;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
        throw std::invalid_argument("count table is missing settings");
    }
    return table;
}

CountTable simulate_counts(const Channel &channel, uint64_t shots, uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("simulate_counts: shots must be at least 1");
    }
    std::array<std::optional<DensityMatrix>, NUM_PROBES> outputs;
    for (size_t p = 0; p < NUM_PROBES; p++) {
        outputs[p] = channel(DensityMatrix::from_pure(probe_state(static_cast<Probe>(p))));
    }
    CountTable table;
    for (size_t k = 0; k < NUM_SETTINGS; k++) {
        auto s = MeasurementSetting::from_index(k);
        double p_plus = outputs[static_cast<size_t>(s.probe)]->expectation(projector(s.basis, true));
        p_plus = std::clamp(p_plus, 0.0, 1.0);
        Rng rng = substream(seed, k);
        std::binomial_distribution<uint64_t> draw(shots, p_plus);
        uint64_t n_plus = draw(rng);
        table[s] = {n_plus, shots - n_plus};
    }
    return table;
}

}  // namespace undo
