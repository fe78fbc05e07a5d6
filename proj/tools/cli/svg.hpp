// Copyright 2026 The sphgeo Authors.
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

#ifndef SPHGEO_TOOLS_CLI_SVG_HPP_
#define SPHGEO_TOOLS_CLI_SVG_HPP_

#include <string>

#include "sphgeo/finder.hpp"
#include "sphgeo/solids.hpp"

namespace sphgeo::cli {

// Development of the faces a geodesic crosses, in the azimuthal equidistant
// projection about its pole; the geodesic itself lands on the circle of
// radius pi/2.  One <g class="face"> per face copy, one <g id="geodesic">.
std::string render_svg(const SolidSpec& spec, const GeodesicPath& path, double size_px = 640.0);

}  // namespace sphgeo::cli

#endif  // SPHGEO_TOOLS_CLI_SVG_HPP_
