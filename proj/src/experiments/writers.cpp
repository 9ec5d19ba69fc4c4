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

#include "scatterlab/experiments/writers.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "scatterlab/error.hpp"

namespace scatterlab::experiments {

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream os(path, mode);
  if (!os) throw IoError("cannot write " + path.string());
  return os;
}

void finish(std::ofstream& os, const std::filesystem::path& path) {
  os.flush();
  if (!os) throw IoError("write failed for " + path.string());
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void complex_cols(std::ostream& os, const Complex& z) { os << ',' << num(z.real()) << ',' << num(z.imag()); }

void report_row(std::ostream& os, const ConvergenceRow& r) {
  os << num(r.a) << ',' << r.count << ',' << r.iterations << ',' << num(r.residual) << ',' << num(r.sup_error) << ','
     << num(r.l2_error) << ',' << num(r.sup_error_exterior) << ',' << num(r.farfield_error) << ',' << num(r.optical_residual) << '\n';
}

constexpr const char* kReportHeader =
    "a,M,iterations,residual,sup_error,l2_error,sup_error_exterior,farfield_error,optical_theorem_residual\n";

}  // namespace

void write_center_values_csv(const std::filesystem::path& path, const ScattererCloud& cloud,
                             std::span<const Complex> values) {
  auto os = open_out(path);
  os << "index,x,y,z,re,im\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Vec3& x = cloud.centers[i];
    os << i << ',' << num(x.x) << ',' << num(x.y) << ',' << num(x.z);
    complex_cols(os, values[i]);
    os << '\n';
  }
  finish(os, path);
}

void write_points_csv(const std::filesystem::path& path, std::span<const Vec3> points, std::span<const Complex> values) {
  auto os = open_out(path);
  os << "x,y,z,re,im\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << num(points[i].x) << ',' << num(points[i].y) << ',' << num(points[i].z);
    complex_cols(os, values[i]);
    os << '\n';
  }
  finish(os, path);
}

void write_grid_csv(const std::filesystem::path& path, const GridField& field) {
  std::vector<Vec3> points(field.grid.size());
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = field.grid.node(i);
  write_points_csv(path, points, field.values);
}

void write_grid_raw(const std::filesystem::path& path, const GridField& field) {
  static_assert(std::endian::native == std::endian::little, "raw grid output assumes a little-endian host");
  {
    auto os = open_out(path, std::ios::out | std::ios::binary);
    os.write(reinterpret_cast<const char*>(field.values.data()),
             std::streamsize(field.values.size() * sizeof(Complex)));
    finish(os, path);
  }
  nlohmann::ordered_json meta;
  meta["format"] = "complex128-le";
  meta["order"] = "x-fastest";
  meta["origin"] = {field.grid.origin.x, field.grid.origin.y, field.grid.origin.z};
  meta["spacing"] = field.grid.spacing;
  meta["extents"] = {field.grid.extents[0], field.grid.extents[1], field.grid.extents[2]};
  const auto sidecar = std::filesystem::path(path.string() + ".json");
  auto os = open_out(sidecar);
  os << meta.dump(2) << '\n';
  finish(os, sidecar);
}

void write_farfield_csv(const std::filesystem::path& path, const FarField& far) {
  auto os = open_out(path);
  os << "b1,b2,b3,re,im\n";
  for (std::size_t i = 0; i < far.directions.size(); ++i) {
    const Vec3& b = far.directions[i];
    os << num(b.x) << ',' << num(b.y) << ',' << num(b.z);
    complex_cols(os, far.values[i]);
    os << '\n';
  }
  finish(os, path);
}

void write_line_csv(const std::filesystem::path& path, std::span<const double> xs, std::span<const Complex> values) {
  auto os = open_out(path);
  os << "x,re,im\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << num(xs[i]);
    complex_cols(os, values[i]);
    os << '\n';
  }
  finish(os, path);
}

void write_report_csv(const std::filesystem::path& path, std::span<const ConvergenceRow> rows) {
  auto os = open_out(path);
  os << kReportHeader;
  for (const auto& r : rows) report_row(os, r);
  finish(os, path);
}

void append_report_row(const std::filesystem::path& path, const ConvergenceRow& row) {
  const bool fresh = !std::filesystem::exists(path);
  auto os = open_out(path, std::ios::out | std::ios::app);
  if (fresh) os << kReportHeader;
  report_row(os, row);
  finish(os, path);
}

void write_timings_csv(const std::filesystem::path& path, std::span<const StageTiming> timings) {
  auto os = open_out(path);
  os << "a,place_seconds,solve_seconds,evaluate_seconds\n";
  for (const auto& t : timings) {
    os << num(t.a) << ',' << num(t.place) << ',' << num(t.solve) << ',' << num(t.evaluate) << '\n';
  }
  finish(os, path);
}

void write_report_1d_csv(const std::filesystem::path& path, std::span<const oned::ConvergenceRow1D> rows) {
  auto os = open_out(path);
  os << "a,M,sup_error_vs_ue,sup_error_vs_oracle,sup_error_oracle_vs_ue\n";
  for (const auto& r : rows) {
    os << num(r.a) << ',' << r.count << ',' << num(r.sup_error_vs_ue) << ',' << num(r.sup_error_vs_oracle) << ','
       << num(r.sup_error_oracle_vs_ue) << '\n';
  }
  finish(os, path);
}

std::string plot_script(const std::string& report_file, const std::string& image_prefix, bool one_dimensional) {
  std::string s;
  s += "# gnuplot script written by scatterlab\n";
  s += "set datafile separator ','\n";
  s += "set terminal pngcairo size 900,600\n";
  s += "set logscale xy\n";
  s += "set key top left\n";
  s += "set grid\n";
  s += "set xlabel 'a'\n";
  s += "set ylabel 'error'\n";
  // `stats` leaves STATS_records undefined for an empty file, so guard on it.
  s += "stats '" + report_file + "' using 1 skip 1 nooutput\n";
  s += "if (!exists(\"STATS_records\") || STATS_records == 0) { print 'empty report, nothing to plot'; exit }\n";
  s += "set output '" + image_prefix + "_error.png'\n";
  if (one_dimensional) {
    s += "plot '" + report_file + "' using 1:3 skip 1 with linespoints title 'sup |u_M - u_e|', \\\n";
    s += "     '' using 1:4 skip 1 with linespoints title 'sup |u_M - oracle|', \\\n";
    s += "     '' using 1:5 skip 1 with linespoints title 'sup |oracle - u_e|'\n";
  } else {
    s += "plot '" + report_file + "' using 1:5 skip 1 with linespoints title 'sup |u_M - u_e|', \\\n";
    s += "     '' using 1:6 skip 1 with linespoints title 'RMS |u_M - u_e|', \\\n";
    s += "     '' using 1:7 skip 1 with linespoints title 'sup |u_M - u_e| outside D', \\\n";
    s += "     '' using 1:8 skip 1 with linespoints title 'far-field relative error'\n";
  }
  s += "set output '" + image_prefix + "_count.png'\n";
  s += "set ylabel 'M'\n";
  s += "plot '" + report_file + "' using 1:2 skip 1 with linespoints title 'M(a)'\n";
  return s;
}

void write_plot_script(const std::filesystem::path& path, const std::string& report_file,
                       const std::string& image_prefix, bool one_dimensional) {
  auto os = open_out(path);
  os << plot_script(report_file, image_prefix, one_dimensional);
  finish(os, path);
}

}  // namespace scatterlab::experiments
