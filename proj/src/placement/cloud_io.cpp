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

#include "scatterlab/placement/cloud_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "scatterlab/error.hpp"

namespace scatterlab {

void write_cloud(std::ostream& os, const ScattererCloud& cloud) {
  os << std::setprecision(17);
  os << "# dim=" << cloud.dim << " a=" << cloud.radius << " M=" << cloud.size() << '\n';
  for (std::size_t m = 0; m < cloud.size(); ++m) {
    const Vec3& c = cloud.centers[m];
    if (cloud.dim == 1) {
      os << c.x << ' ' << cloud.strengths[m] << '\n';
    } else {
      os << c.x << ' ' << c.y << ' ' << c.z << ' ' << cloud.strengths[m] << '\n';
    }
  }
}

ScattererCloud read_cloud(std::istream& is) {
  ScattererCloud cloud;
  std::size_t declared = 0;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string tok;
      while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        try {
          if (key == "dim") cloud.dim = std::stoi(val);
          if (key == "a") cloud.radius = std::stod(val);
          if (key == "M") declared = std::stoul(val);
        } catch (const std::exception&) {
          throw IoError("cloud header: bad value for '" + key + "'");
        }
        have_header = true;
      }
      continue;
    }
    std::istringstream ls(line);
    Vec3 c;
    double strength = 0.0;
    const bool ok = cloud.dim == 1 ? bool(ls >> c.x >> strength) : bool(ls >> c.x >> c.y >> c.z >> strength);
    if (!ok) throw IoError("cloud file line " + std::to_string(line_no) + ": expected coordinates and strength");
    cloud.centers.push_back(c);
    cloud.strengths.push_back(strength);
  }
  if (!have_header) throw IoError("cloud file has no '# dim=... a=... M=...' header");
  if (cloud.dim != 1 && cloud.dim != 3) throw IoError("cloud file: dim must be 1 or 3");
  if (!(cloud.radius > 0.0)) throw IoError("cloud file: radius a must be positive");
  if (declared != cloud.size()) {
    throw IoError("cloud file declares M=" + std::to_string(declared) + " but lists " +
                  std::to_string(cloud.size()) + " scatterers");
  }
  return cloud;
}

void write_cloud_file(const std::filesystem::path& path, const ScattererCloud& cloud) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  write_cloud(os, cloud);
  if (!os) throw IoError("failed writing " + path.string());
}

ScattererCloud read_cloud_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path.string());
  return read_cloud(is);
}

}  // namespace scatterlab
