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

#ifndef UNDO_CLI_SVG_H
#define UNDO_CLI_SVG_H

#include <string>
#include <string_view>

#include "undo/qmath/matrix.h"

namespace undo {

enum class ChiPart { Real, Imag };

/// Static bar chart of one part of a 4x4 process matrix: 16 bars in
/// row-major order, grouped by row, on a fixed [-1, 1] axis. Values outside
/// the axis are clipped; each bar's <title> keeps the unclipped value.
/// Output depends only on the arguments.
std::string chi_bar_chart(const ComplexMatrix &chi, ChiPart part, std::string_view title);

}  // namespace undo

#endif
