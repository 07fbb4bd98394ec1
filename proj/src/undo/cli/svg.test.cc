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

#include "undo/cli/svg.h"

#include <regex>

#include "gtest/gtest.h"

#include "undo/qmath/unitary.h"
#include "undo/tomography/choi.h"

using namespace undo;

namespace {

size_t count(const std::string &text, const std::string &needle) {
    size_t n = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        n++;
    }
    return n;
}

std::vector<double> bar_heights(const std::string &svg) {
    std::regex re("class=\"bar\" x=\"[-0-9.]+\" y=\"[-0-9.]+\" width=\"[-0-9.]+\" height=\"([-0-9.]+)\"");
    std::vector<double> out;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        out.push_back(std::stod((*it)[1]));
    }
    return out;
}

}  // namespace

TEST(svg, sixteen_bars_per_chart) {
    auto chi = choi_of_unitary(unitary_inverse(presets::U3())).matrix();
    for (auto part : {ChiPart::Real, ChiPart::Imag}) {
        auto svg = chi_bar_chart(chi, part, "t");
        ASSERT_EQ(count(svg, "class=\"bar\""), 16u);
        ASSERT_EQ(bar_heights(svg).size(), 16u);
        ASSERT_TRUE(svg.starts_with("<svg "));
        ASSERT_TRUE(svg.ends_with("</svg>\n"));
    }
}

TEST(svg, deterministic) {
    auto chi = choi_of_unitary(presets::U1()).matrix();
    ASSERT_EQ(chi_bar_chart(chi, ChiPart::Real, "a"), chi_bar_chart(chi, ChiPart::Real, "a"));
    ASSERT_NE(chi_bar_chart(chi, ChiPart::Real, "a"), chi_bar_chart(chi, ChiPart::Imag, "a"));
}

TEST(svg, heights_follow_values_and_clip) {
    ComplexMatrix m(4, 4);
    m(0, 0) = 0.5;
    m(0, 1) = -0.25;
    m(1, 1) = 3;
    m(2, 2) = -7;
    auto h = bar_heights(chi_bar_chart(m, ChiPart::Real, "clip"));
    // Plot height 260: a full-scale bar is 130.
    ASSERT_NEAR(h[0], 65, 0.01);
    ASSERT_NEAR(h[1], 32.5, 0.01);
    ASSERT_NEAR(h[5], 130, 0.01);
    ASSERT_NEAR(h[10], 130, 0.01);
    ASSERT_EQ(h[2], 0);
    auto svg = chi_bar_chart(m, ChiPart::Real, "clip");
    ASSERT_NE(svg.find("<title>01,01: 3.000000</title>"), std::string::npos);
}

TEST(svg, title_is_escaped_and_shape_checked) {
    auto svg = chi_bar_chart(ComplexMatrix(4, 4), ChiPart::Imag, "a<b & c");
    ASSERT_NE(svg.find("a&lt;b &amp; c"), std::string::npos);
    ASSERT_THROW(chi_bar_chart(ComplexMatrix(2, 2), ChiPart::Real, ""), std::invalid_argument);
}
