// Copyright 2026 The scatterlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "scatterlab/core/grid_field.hpp"
#include "scatterlab/experiments/convergence.hpp"
#include "scatterlab/oned/oned.hpp"
#include "scatterlab/placement/cloud.hpp"
#include "scatterlab/solver3d/far_field.hpp"

// Output files. Numbers are written with 17 significant digits so that a
// rerun of the same configuration reproduces every file byte for byte. All
// functions throw IoError when the file cannot be written.
namespace scatterlab::experiments {

// index,x,y,z,re,im (one row per scatterer)
void write_center_values_csv(const std::filesystem::path& path, const ScattererCloud& cloud,
                             std::span<const Complex> values);

// x,y,z,re,im
void write_points_csv(const std::filesystem::path& path, std::span<const Vec3> points, std::span<const Complex> values);

void write_grid_csv(const std::filesystem::path& path, const GridField& field);
// Little-endian interleaved (re, im) doubles, x fastest, plus <path>.json
// describing origin, spacing and extents.
void write_grid_raw(const std::filesystem::path& path, const GridField& field);

// b1,b2,b3,re,im
void write_farfield_csv(const std::filesystem::path& path, const FarField& far);

// x,re,im
void write_line_csv(const std::filesystem::path& path, std::span<const double> xs, std::span<const Complex> values);

// a,M,iterations,residual,sup_error,l2_error,sup_error_exterior,farfield_error,optical_theorem_residual
void write_report_csv(const std::filesystem::path& path, std::span<const ConvergenceRow> rows);
// Appends one row, writing the header first if the file is new.
void append_report_row(const std::filesystem::path& path, const ConvergenceRow& row);
void write_timings_csv(const std::filesystem::path& path, std::span<const StageTiming> timings);

// a,M,sup_error_vs_ue,sup_error_vs_oracle,sup_error_oracle_vs_ue
void write_report_1d_csv(const std::filesystem::path& path, std::span<const oned::ConvergenceRow1D> rows);

// gnuplot script plotting the error columns of a report against a (log-log).
// Same inputs give the same bytes; an empty report still yields a valid script.
std::string plot_script(const std::string& report_file, const std::string& image_prefix, bool one_dimensional);
void write_plot_script(const std::filesystem::path& path, const std::string& report_file,
                       const std::string& image_prefix, bool one_dimensional);

}  // namespace scatterlab::experiments
