/*
 * Copyright 2026 The sirsde Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SIRSDE_CSV_HPP
#define SIRSDE_CSV_HPP

#include "sirsde/estimators.hpp"
#include "sirsde/sde.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace sirsde::io {

/// printf("%.17g"); infinities as "inf"/"-inf", NaN as "nan".
std::string format_number(double x);

/// Column-major CSV writer. All columns must have equal length.
void write_columns(const std::filesystem::path& file, const std::vector<std::string>& header,
                   const std::vector<std::span<const double>>& columns);

/// Header `t,S,I` or `t,S,I,R` (boundary runs: `t,S`).
void write_trajectory(const std::filesystem::path& file, const Trajectory& traj);
/// Header `bin_lo,bin_hi,mass`.
void write_histogram(const std::filesystem::path& file, const Histogram1D& h);
/// Header `x_lo,x_hi,y_lo,y_hi,mass`.
void write_histogram(const std::filesystem::path& file, const Histogram2D& h);
/// Header `t,tv`.
void write_tv_series(const std::filesystem::path& file, std::span<const TvPoint> series);

void write_text(const std::filesystem::path& file, const std::string& text);

} // namespace sirsde::io

#endif // SIRSDE_CSV_HPP
