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

#include "sirsde/csv.hpp"

#include "sirsde/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace sirsde::io {

namespace {

std::ofstream open_for_write(const std::filesystem::path& file)
{
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open '" + file.string() + "' for writing");
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& file)
{
    out.flush();
    if (!out) {
        throw Error(ErrorCode::IoError, "failed writing '" + file.string() + "'");
    }
}

} // namespace

std::string format_number(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x < 0 ? "-inf" : "inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_columns(const std::filesystem::path& file, const std::vector<std::string>& header,
                   const std::vector<std::span<const double>>& columns)
{
    if (header.size() != columns.size()) {
        throw Error(ErrorCode::ShapeMismatch, "header and column counts differ");
    }
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& c : columns) {
        if (c.size() != rows) {
            throw Error(ErrorCode::ShapeMismatch, "columns differ in length");
        }
    }
    auto out = open_for_write(file);
    for (std::size_t j = 0; j < header.size(); ++j) {
        out << (j ? "," : "") << header[j];
    }
    out << '\n';
    std::string line;
    for (std::size_t r = 0; r < rows; ++r) {
        line.clear();
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (j) {
                line += ',';
            }
            line += format_number(columns[j][r]);
        }
        line += '\n';
        out << line;
    }
    finish(out, file);
}

void write_trajectory(const std::filesystem::path& file, const Trajectory& traj)
{
    std::vector<std::string> header{"t", "S"};
    std::vector<std::span<const double>> cols{traj.times, traj.s};
    if (traj.i.size() == traj.times.size()) {
        header.emplace_back("I");
        cols.emplace_back(traj.i);
    }
    if (traj.r.size() == traj.times.size()) {
        header.emplace_back("R");
        cols.emplace_back(traj.r);
    }
    write_columns(file, header, cols);
}

void write_histogram(const std::filesystem::path& file, const Histogram1D& h)
{
    std::vector<double> lo(h.bins());
    std::vector<double> hi(h.bins());
    for (std::size_t k = 0; k < h.bins(); ++k) {
        lo[k] = h.edges[k];
        hi[k] = h.edges[k + 1];
    }
    write_columns(file, {"bin_lo", "bin_hi", "mass"}, {lo, hi, h.mass});
}

void write_histogram(const std::filesystem::path& file, const Histogram2D& h)
{
    const std::size_t n = h.nx() * h.ny();
    std::vector<double> xlo(n), xhi(n), ylo(n), yhi(n);
    for (std::size_t ix = 0; ix < h.nx(); ++ix) {
        for (std::size_t iy = 0; iy < h.ny(); ++iy) {
            const std::size_t k = ix * h.ny() + iy;
            xlo[k] = h.x_edges[ix];
            xhi[k] = h.x_edges[ix + 1];
            ylo[k] = h.y_edges[iy];
            yhi[k] = h.y_edges[iy + 1];
        }
    }
    write_columns(file, {"x_lo", "x_hi", "y_lo", "y_hi", "mass"}, {xlo, xhi, ylo, yhi, h.mass});
}

void write_tv_series(const std::filesystem::path& file, std::span<const TvPoint> series)
{
    std::vector<double> t(series.size());
    std::vector<double> tv(series.size());
    for (std::size_t k = 0; k < series.size(); ++k) {
        t[k] = series[k].t;
        tv[k] = series[k].tv;
    }
    write_columns(file, {"t", "tv"}, {t, tv});
}

void write_text(const std::filesystem::path& file, const std::string& text)
{
    auto out = open_for_write(file);
    out << text;
    finish(out, file);
}

} // namespace sirsde::io
