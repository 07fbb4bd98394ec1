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

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace undo {

namespace {

constexpr double WIDTH = 640;
constexpr double HEIGHT = 360;
constexpr double LEFT = 60;
constexpr double RIGHT = 20;
constexpr double TOP = 40;
constexpr double BOTTOM = 60;
// 16 bar slots plus one empty slot between each row group.
constexpr double SLOTS = 16 + 3;
const char *const LABELS[] = {"00", "01", "10", "11"};

std::string fmt(const char *pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

}  // namespace

std::string chi_bar_chart(const ComplexMatrix &chi, ChiPart part, std::string_view title) {
    if (chi.rows() != 4 || chi.cols() != 4) {
        throw std::invalid_argument("chi_bar_chart: expected a 4x4 matrix");
    }
    const double plot_w = WIDTH - LEFT - RIGHT;
    const double plot_h = HEIGHT - TOP - BOTTOM;
    const double slot = plot_w / SLOTS;
    const double zero_y = TOP + plot_h / 2;
    auto y_of = [&](double v) {
        return zero_y - v * plot_h / 2;
    };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"360\" viewBox=\"0 0 640 360\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"360\" fill=\"white\"/>\n";
    s += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         escape(title) + "</text>\n";

    // Axis and grid.
    for (double tick : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        std::string y = fmt("%.2f", y_of(tick));
        s += "<line class=\"grid\" x1=\"" + fmt("%.2f", LEFT) + "\" y1=\"" + y + "\" x2=\"" +
             fmt("%.2f", LEFT + plot_w) + "\" y2=\"" + y + "\" stroke=\"" + (tick == 0 ? "black" : "#cccccc") +
             "\" stroke-width=\"1\"/>\n";
        s += "<text x=\"" + fmt("%.2f", LEFT - 8) + "\" y=\"" + fmt("%.2f", y_of(tick) + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt("%.1f", tick) +
             "</text>\n";
    }
    s += "<line x1=\"" + fmt("%.2f", LEFT) + "\" y1=\"" + fmt("%.2f", TOP) + "\" x2=\"" + fmt("%.2f", LEFT) +
         "\" y2=\"" + fmt("%.2f", TOP + plot_h) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    for (size_t r = 0; r < 4; r++) {
        double group_x = LEFT + (5 * r) * slot;
        s += "<text x=\"" + fmt("%.2f", group_x + 2 * slot) + "\" y=\"" + fmt("%.2f", HEIGHT - 14) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">row " + LABELS[r] + "</text>\n";
        for (size_t c = 0; c < 4; c++) {
            double value = part == ChiPart::Real ? chi(r, c).real() : chi(r, c).imag();
            double clipped = std::clamp(value, -1.0, 1.0);
            double x = group_x + c * slot + 0.1 * slot;
            double top = std::min(y_of(clipped), zero_y);
            double h = std::abs(y_of(clipped) - zero_y);
            s += "<rect class=\"bar\" x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.2f", top) + "\" width=\"" +
                 fmt("%.2f", 0.8 * slot) + "\" height=\"" + fmt("%.2f", h) + "\" fill=\"" +
                 (value < 0 ? "#c0504d" : "#3b6ea5") + "\"><title>" + LABELS[r] + "," + LABELS[c] + ": " +
                 fmt("%.6f", value) + "</title></rect>\n";
            s += "<text x=\"" + fmt("%.2f", x + 0.4 * slot) + "\" y=\"" + fmt("%.2f", TOP + plot_h + 16) +
                 "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" + LABELS[c] + "</text>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace undo
