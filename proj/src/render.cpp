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

#include "pcf/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

struct Rgb {
    unsigned char r, g, b;
};

int escape_iterations(double cr, double ci, int max_iter) {
    double zr = 0, zi = 0;
    for (int k = 0; k < max_iter; ++k) {
        double zr2 = zr * zr, zi2 = zi * zi;
        if (zr2 + zi2 > 4.0) return k;
        zi = 2 * zr * zi + ci;
        zr = zr2 - zi2 + cr;
    }
    return -1;  // bounded within cap
}

Rgb escape_color(int k, int max_iter) {
    if (k < 0) return {0, 0, 0};
    double t = std::pow(static_cast<double>(k) / max_iter, 0.35);
    auto ch = [&](double a) {
        return static_cast<unsigned char>(std::clamp(a * 255.0, 0.0, 255.0));
    };
    return {ch(0.2 + 0.5 * t), ch(0.3 + 0.5 * t), ch(0.6 + 0.4 * t)};
}

}  // namespace

void RenderRegion::validate() const {
    if (!(x0 < x1) || !(y0 < y1)) throw ContractError("render region is empty");
}

void render_mandelbrot_ppm(const std::string& path, const RenderRegion& region,
                           const RenderOptions& opts) {
    region.validate();
    if (opts.resolution <= 0) throw ContractError("render resolution must be positive");
    const int n = opts.resolution;
    std::vector<Rgb> img(static_cast<size_t>(n) * n);

    double dx = (region.x1 - region.x0) / n;
    double dy = (region.y1 - region.y0) / n;
    for (int row = 0; row < n; ++row) {
        // Row 0 is the top of the image (largest imaginary part).
        double ci = region.y1 - (row + 0.5) * dy;
        for (int col = 0; col < n; ++col) {
            double cr = region.x0 + (col + 0.5) * dx;
            img[static_cast<size_t>(row) * n + col] =
                escape_color(escape_iterations(cr, ci, opts.max_iter), opts.max_iter);
        }
    }

    auto put = [&](int col, int row, Rgb c) {
        if (col < 0 || col >= n || row < 0 || row >= n) return;
        img[static_cast<size_t>(row) * n + col] = c;
    };
    auto to_col = [&](double x) { return static_cast<int>(std::floor((x - region.x0) / dx)); };
    auto to_row = [&](double y) { return static_cast<int>(std::floor((region.y1 - y) / dy)); };

    if (opts.overlay_lines) {
        const Rgb red{220, 30, 30};
        for (const RealLine& l : *opts.overlay_lines) {
            double a = l.a.mid_re_d(), b = l.b.mid_re_d(), r = l.r.mid_re_d();
            if (std::fabs(b) >= std::fabs(a)) {
                for (int col = 0; col < n; ++col) {
                    double x = region.x0 + (col + 0.5) * dx;
                    put(col, to_row((r - a * x) / b), red);
                }
            } else {
                for (int row = 0; row < n; ++row) {
                    double y = region.y1 - (row + 0.5) * dy;
                    put(to_col((r - b * y) / a), row, red);
                }
            }
        }
    }

    if (opts.overlay_pcf) {
        const Rgb yellow{255, 230, 0};
        for (const PcfParam& p : opts.overlay_pcf->params) {
            int col = to_col(p.ball.mid_re_d());
            int row = to_row(p.ball.mid_im_d());
            for (int u = -1; u <= 1; ++u)
                for (int v = -1; v <= 1; ++v) put(col + u, row + v, yellow);
        }
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << "P6\n" << n << " " << n << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data()),
              static_cast<std::streamsize>(img.size() * 3));
    if (!out) throw IoError("write failed: " + path);
}

void render_mandelbrot_svg(const std::string& path, const RenderRegion& region,
                           const RenderOptions& opts) {
    region.validate();
    if (opts.resolution <= 0) throw ContractError("render resolution must be positive");
    const int n = opts.resolution;
    double sx = n / (region.x1 - region.x0);
    double sy = n / (region.y1 - region.y0);
    auto px = [&](double x) { return (x - region.x0) * sx; };
    auto py = [&](double y) { return (region.y1 - y) * sy; };

    std::ostringstream svg;
    svg.precision(10);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n << "\" height=\"" << n
        << "\" viewBox=\"0 0 " << n << " " << n << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << n << "\" height=\"" << n
        << "\" fill=\"white\" stroke=\"black\"/>\n";

    if (opts.overlay_lines) {
        for (const RealLine& l : *opts.overlay_lines) {
            double a = l.a.mid_re_d(), b = l.b.mid_re_d(), r = l.r.mid_re_d();
            double X0, Y0, X1, Y1;
            if (std::fabs(b) >= std::fabs(a)) {
                X0 = region.x0;
                Y0 = (r - a * X0) / b;
                X1 = region.x1;
                Y1 = (r - a * X1) / b;
            } else {
                Y0 = region.y0;
                X0 = (r - b * Y0) / a;
                Y1 = region.y1;
                X1 = (r - b * Y1) / a;
            }
            svg << "<line x1=\"" << px(X0) << "\" y1=\"" << py(Y0) << "\" x2=\"" << px(X1)
                << "\" y2=\"" << py(Y1) << "\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
        }
    }

    if (opts.overlay_pcf) {
        for (const PcfParam& p : opts.overlay_pcf->params) {
            svg << "<circle cx=\"" << px(p.ball.mid_re_d()) << "\" cy=\""
                << py(p.ball.mid_im_d())
                << "\" r=\"3\" fill=\"#ffe600\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
        }
    }
    svg << "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << svg.str();
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace pcf
