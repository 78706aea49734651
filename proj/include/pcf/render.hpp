/*
   Copyright 2026 the pcfgeom authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PCF_RENDER_HPP
#define PCF_RENDER_HPP

#include <string>
#include <vector>

#include "pcf/catalog.hpp"
#include "pcf/realgeom.hpp"

namespace pcf {

/// Axis-aligned window in the c-plane.
struct RenderRegion {
    double x0 = -2.2, x1 = 0.8;
    double y0 = -1.5, y1 = 1.5;

    void validate() const;  // ContractError when empty
};

struct RenderOptions {
    int resolution = 800;  // output is resolution x resolution
    int max_iter = 256;
    const Catalog* overlay_pcf = nullptr;       // mark cataloged parameters
    const std::vector<RealLine>* overlay_lines = nullptr;  // trace real lines
};

/// Escape-time raster of the Mandelbrot set as binary P6 PPM; interior
/// pixels are black, escaped pixels shaded by iteration count, overlay
/// markers in yellow, line traces in red.  Deterministic: no timestamps.
void render_mandelbrot_ppm(const std::string& path, const RenderRegion& region,
                           const RenderOptions& opts);

/// Vector-overlay variant: SVG with the region frame, PCF markers, and line
/// traces only (no raster background).
void render_mandelbrot_svg(const std::string& path, const RenderRegion& region,
                           const RenderOptions& opts);

}  // namespace pcf

#endif
