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

#ifndef UNDO_TOMOGRAPHY_COUNTS_H
#define UNDO_TOMOGRAPHY_COUNTS_H

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "undo/qmath/state.h"

namespace undo {

/// Probe states. H/V, D/A, R/L are the +/- eigenstates of Z, X, Y, with
/// D = (H + V)/sqrt2, A = (H - V)/sqrt2, R = (H + iV)/sqrt2, L = (H - iV)/sqrt2.
enum class Probe : uint8_t { H, V, D, A, R, L };
/// Two-outcome measurement bases. The "plus" projector is H, D, R.
enum class Basis : uint8_t { HV, DA, RL };

inline constexpr size_t NUM_PROBES = 6;
inline constexpr size_t NUM_BASES = 3;
inline constexpr size_t NUM_SETTINGS = NUM_PROBES * NUM_BASES;

struct MeasurementSetting {
    Probe probe;
    Basis basis;

    /// Probe-major: index = 3 * probe + basis.
    size_t index() const { return NUM_BASES * static_cast<size_t>(probe) + static_cast<size_t>(basis); }
    static MeasurementSetting from_index(size_t index);
    bool operator==(const MeasurementSetting &) const = default;
};

std::string_view probe_name(Probe p);
std::string_view basis_name(Basis b);
Probe parse_probe(std::string_view text);
Basis parse_basis(std::string_view text);

StateVector probe_state(Probe p);
/// The plus (H, D, R) or minus (V, A, L) state of a basis.
StateVector basis_state(Basis b, bool plus);
ComplexMatrix projector(Basis b, bool plus);

struct SettingCounts {
    uint64_t n_plus = 0;
    uint64_t n_minus = 0;
    uint64_t shots() const { return n_plus + n_minus; }
    bool operator==(const SettingCounts &) const = default;
};

/// Detection counts for all 18 (probe, basis) settings.
class CountTable {
   public:
    SettingCounts &operator[](MeasurementSetting s) { return counts_[s.index()]; }
    const SettingCounts &operator[](MeasurementSetting s) const { return counts_[s.index()]; }
    SettingCounts &at(size_t index) { return counts_.at(index); }
    const SettingCounts &at(size_t index) const { return counts_.at(index); }

    uint64_t total_shots() const;

    /// Tab-separated text: a header line, then one row per setting in index
    /// order with columns probe, basis, n_plus, n_minus, shots.
    std::string to_tsv() const;
    /// Inverse of to_tsv. Rows may appear in any order, but every setting
    /// must appear exactly once and shots must equal n_plus + n_minus.
    static CountTable from_tsv(std::string_view text);

    bool operator==(const CountTable &) const = default;

   private:
    std::array<SettingCounts, NUM_SETTINGS> counts_{};
};

/// A single-qubit channel under test.
using Channel = std::function<DensityMatrix(const DensityMatrix &)>;

/// Runs every probe through `channel` once, then draws binomial counts of
/// `shots` trials per setting from the Born-rule probability of the plus
/// projector. Setting k draws from substream(seed, k). Throws if shots is 0.
CountTable simulate_counts(const Channel &channel, uint64_t shots, uint64_t seed);

}  // namespace undo

#endif
