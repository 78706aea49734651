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

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pcf/catalog.hpp"
#include "pcf/curvefit.hpp"
#include "pcf/equidist.hpp"
#include "pcf/errors.hpp"
#include "pcf/heights.hpp"
#include "pcf/incidence.hpp"
#include "pcf/realgeom.hpp"
#include "pcf/render.hpp"

namespace {

using namespace pcf;

// Every artifact embeds the library version and the full run config, so a
// report is reproducible from its own header.
void stamp_json(const std::string& path, const std::string& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot reopen " + path);
    nlohmann::ordered_json j;
    in >> j;
    in.close();
    nlohmann::ordered_json out;
    out["version"] = kVersion;
    out["config"] = config;
    if (j.is_array()) {
        out["records"] = std::move(j);
    } else {
        for (auto& [k, v] : j.items()) out[k] = std::move(v);
    }
    std::ofstream of(path, std::ios::binary);
    if (!of) throw IoError("cannot write " + path);
    of << out.dump(1) << "\n";
    if (!of) throw IoError("write failed: " + path);
}

void stamp_csv(const std::string& path, const std::string& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot reopen " + path);
    std::stringstream body;
    body << in.rdbuf();
    in.close();
    std::ofstream of(path, std::ios::binary);
    if (!of) throw IoError("cannot write " + path);
    of << "# pcfgeom " << kVersion << "\n# config: " << config << "\n" << body.str();
    if (!of) throw IoError("write failed: " + path);
}

std::string infer_format(const std::string& path, const std::string& requested) {
    if (!requested.empty()) return requested;
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "json" || ext == "csv" || ext == "ppm" || ext == "svg") return ext;
    throw UsageError("cannot infer output format from " + path + "; pass --format");
}

std::vector<Rat> parse_rats(const std::string& s, size_t count, const std::string& what) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(rat_from_decimal(tok));
    if (out.size() != count)
        throw UsageError(what + " needs " + std::to_string(count) +
                         " comma-separated decimals, got: " + s);
    return out;
}

CurvePoint parse_point(const std::string& s) {
    auto v = parse_rats(s, 4, "--point");
    return exact_point({v[0], v[1]}, {v[2], v[3]});
}

GaussianRational parse_complex(const std::string& s) {
    if (s.find(',') == std::string::npos) return {rat_from_decimal(s), Rat(0)};
    auto v = parse_rats(s, 2, "complex value");
    return {v[0], v[1]};
}

nlohmann::ordered_json ball_json(const Ball& b) {
    return {b.mid_re_str(), b.mid_im_str(), b.rad_str()};
}

nlohmann::ordered_json curve_json(const PlaneCurve& c) {
    nlohmann::ordered_json j;
    j["d"] = c.d;
    auto mono = curve_monomials(c.d);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (size_t k = 0; k < mono.size(); ++k)
        arr.push_back({mono[k].first, mono[k].second, c.coeffs[k].mid_re_exact(),
                       c.coeffs[k].mid_im_exact(), c.coeffs[k].rad_exact()});
    j["coeffs"] = std::move(arr);
    return j;
}

void write_json(const nlohmann::ordered_json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(1) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

int run(int argc, char** argv) {
    CLI::App app{"pcfgeom: geometry of postcritically finite quadratic parameters"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    // catalog
    auto* cmd_catalog = app.add_subcommand("catalog", "build the PCF parameter catalog");
    int cat_bound = kDefaultCatalogBound;
    double cat_prec = kDefaultCatalogRadius;
    std::string cat_out;
    cmd_catalog->add_option("--bound", cat_bound, "max preperiod+period");
    cmd_catalog->add_option("--precision", cat_prec, "target ball radius");
    cmd_catalog->add_option("-o,--output", cat_out, "output JSON path")->required();

    // lines
    auto* cmd_lines = app.add_subcommand("lines", "search lines through k special points");
    std::string lines_cat, lines_out, lines_fmt;
    int lines_k = 3;
    bool lines_nonspecial = false;
    LineFilters lines_filters;
    cmd_lines->add_option("--catalog", lines_cat, "catalog JSON file")->required();
    cmd_lines->add_option("--k", lines_k, "minimum support size");
    cmd_lines->add_flag("--nonspecial-only", lines_nonspecial, "drop special-classified lines");
    cmd_lines->add_option("--max-type-sum", lines_filters.max_type_sum, "filter m+n");
    cmd_lines->add_option("--max-degree", lines_filters.max_coord_degree, "filter degree");
    cmd_lines->add_option("--pair-budget", lines_filters.pair_budget, "search budget");
    cmd_lines->add_option("-o,--output", lines_out, "output path")->required();
    cmd_lines->add_option("--format", lines_fmt, "json or csv");

    // reallines
    auto* cmd_real = app.add_subcommand("reallines", "search real lines through k parameters");
    std::string real_cat, real_out, real_fmt;
    int real_k = 3;
    cmd_real->add_option("--catalog", real_cat, "catalog JSON file")->required();
    cmd_real->add_option("--k", real_k, "minimum support size");
    cmd_real->add_option("-o,--output", real_out, "output path")->required();
    cmd_real->add_option("--format", real_fmt, "json or csv");

    // fit
    auto* cmd_fit = app.add_subcommand("fit", "fit a degree-d curve through points");
    int fit_d = 1;
    std::vector<std::string> fit_points;
    std::string fit_out;
    cmd_fit->add_option("--d", fit_d, "curve degree")->required();
    cmd_fit->add_option("--point", fit_points, "point as xre,xim,yre,yim")->required();
    cmd_fit->add_option("-o,--output", fit_out, "output JSON path")->required();

    // conic
    auto* cmd_conic = app.add_subcommand("conic", "symmetric conic through three points");
    std::vector<std::string> conic_points;
    std::string conic_out;
    cmd_conic->add_option("--point", conic_points, "point as xre,xim,yre,yim")
        ->required()
        ->expected(3, 3);
    cmd_conic->add_option("-o,--output", conic_out, "output JSON path")->required();

    // heights
    auto* cmd_heights = app.add_subcommand("heights", "canonical heights of rational parameters");
    std::vector<std::string> height_cs;
    std::string heights_out, heights_fmt;
    cmd_heights->add_option("--c", height_cs, "rational parameter (decimal)")->required();
    cmd_heights->add_option("-o,--output", heights_out, "output path")->required();
    cmd_heights->add_option("--format", heights_fmt, "json or csv");

    // equidist
    auto* cmd_eq = app.add_subcommand("equidist", "equidistribution convergence table");
    std::string eq_z = "2", eq_out, eq_fmt;
    int eq_nmin = 2, eq_nmax = 8;
    cmd_eq->add_option("--z", eq_z, "escaped test point re[,im]");
    cmd_eq->add_option("--nmin", eq_nmin, "first orbit depth");
    cmd_eq->add_option("--nmax", eq_nmax, "last orbit depth");
    cmd_eq->add_option("-o,--output", eq_out, "output path")->required();
    cmd_eq->add_option("--format", eq_fmt, "json or csv");

    // render
    auto* cmd_render = app.add_subcommand("render", "escape-time raster / vector overlays");
    std::string render_cat, render_region = "-2.2,0.8,-1.5,1.5", render_out, render_fmt;
    int render_res = 800, render_iter = 256;
    std::vector<std::string> render_overlays;
    cmd_render->add_option("--catalog", render_cat, "catalog for overlays");
    cmd_render->add_option("--region", render_region, "window x0,x1,y0,y1");
    cmd_render->add_option("--res", render_res, "output resolution (square)");
    cmd_render->add_option("--max-iter", render_iter, "escape iteration cap");
    cmd_render->add_option("--overlay", render_overlays, "pcf and/or reallines");
    cmd_render->add_option("-o,--output", render_out, "output path")->required();
    cmd_render->add_option("--format", render_fmt, "ppm or svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (cmd_catalog->parsed()) {
        std::ostringstream cfg;
        cfg << "command=catalog bound=" << cat_bound << " precision=" << cat_prec
            << " output=" << cat_out;
        Catalog cat = build_catalog(cat_bound, cat_prec);
        save_catalog(cat, cat_out);
        stamp_json(cat_out, cfg.str());
        std::cout << "catalog: " << cat.params.size() << " parameters -> " << cat_out << "\n";
        return 0;
    }

    if (cmd_lines->parsed()) {
        std::string fmt = infer_format(lines_out, lines_fmt);
        std::ostringstream cfg;
        cfg << "command=lines catalog=" << lines_cat << " k=" << lines_k
            << " nonspecial_only=" << lines_nonspecial
            << " max_type_sum=" << lines_filters.max_type_sum
            << " max_degree=" << lines_filters.max_coord_degree
            << " pair_budget=" << lines_filters.pair_budget << " format=" << fmt
            << " output=" << lines_out;
        Catalog cat = load_catalog(lines_cat);
        std::vector<LineHit> hits = find_lines_with_k_points(cat, lines_k, lines_filters);
        if (lines_nonspecial) {
            std::erase_if(hits, [](const LineHit& h) { return h.cls != LineClass::NonSpecial; });
        }
        if (fmt == "csv") {
            save_lines_csv(hits, lines_out);
            stamp_csv(lines_out, cfg.str());
        } else if (fmt == "json") {
            save_lines_json(hits, lines_out);
            stamp_json(lines_out, cfg.str());
        } else {
            throw UsageError("lines: format must be json or csv");
        }
        std::cout << "lines: " << hits.size() << " hits -> " << lines_out << "\n";
        return 0;
    }

    if (cmd_real->parsed()) {
        std::string fmt = infer_format(real_out, real_fmt);
        std::ostringstream cfg;
        cfg << "command=reallines catalog=" << real_cat << " k=" << real_k
            << " format=" << fmt << " output=" << real_out;
        Catalog cat = load_catalog(real_cat);
        std::vector<RealLineHit> hits = real_line_search(cat, real_k);
        if (fmt == "csv") {
            std::ofstream out(real_out, std::ios::binary);
            if (!out) throw IoError("cannot write " + real_out);
            out << "a,b,r,special_diagonal,support\n";
            for (const auto& h : hits) {
                out << h.line.a.mid_re_str() << ',' << h.line.b.mid_re_str() << ','
                    << h.line.r.mid_re_str() << ',' << (h.special_diagonal ? 1 : 0) << ',';
                for (size_t i = 0; i < h.support.size(); ++i)
                    out << (i ? ";" : "") << h.support[i];
                out << '\n';
            }
            out.close();
            stamp_csv(real_out, cfg.str());
        } else if (fmt == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& h : hits) {
                nlohmann::ordered_json rec;
                rec["a"] = h.line.a.mid_re_str();
                rec["b"] = h.line.b.mid_re_str();
                rec["r"] = h.line.r.mid_re_str();
                rec["special_diagonal"] = h.special_diagonal;
                rec["support"] = h.support;
                arr.push_back(std::move(rec));
            }
            write_json(arr, real_out);
            stamp_json(real_out, cfg.str());
        } else {
            throw UsageError("reallines: format must be json or csv");
        }
        std::cout << "reallines: " << hits.size() << " hits -> " << real_out << "\n";
        return 0;
    }

    if (cmd_fit->parsed()) {
        std::ostringstream cfg;
        cfg << "command=fit d=" << fit_d;
        for (const auto& p : fit_points) cfg << " point=" << p;
        cfg << " output=" << fit_out;
        std::vector<CurvePoint> pts;
        for (const auto& p : fit_points) pts.push_back(parse_point(p));
        FitResult res = fit_curve(pts, fit_d);
        nlohmann::ordered_json j;
        if (std::holds_alternative<PlaneCurve>(res)) {
            j = curve_json(std::get<PlaneCurve>(res));
        } else {
            const SolutionFamily& fam = std::get<SolutionFamily>(res);
            j["d"] = fam.d;
            j["family_dimension"] = fam.dimension;
            nlohmann::ordered_json basis = nlohmann::ordered_json::array();
            for (const auto& b : fam.basis) basis.push_back(curve_json(b));
            j["basis"] = std::move(basis);
        }
        write_json(j, fit_out);
        stamp_json(fit_out, cfg.str());
        std::cout << "fit -> " << fit_out << "\n";
        return 0;
    }

    if (cmd_conic->parsed()) {
        std::ostringstream cfg;
        cfg << "command=conic";
        for (const auto& p : conic_points) cfg << " point=" << p;
        cfg << " output=" << conic_out;
        SymmetricConic sc = symmetric_conic(parse_point(conic_points[0]),
                                            parse_point(conic_points[1]),
                                            parse_point(conic_points[2]));
        nlohmann::ordered_json j;
        j["A"] = ball_json(sc.A);
        j["B"] = ball_json(sc.B);
        j["C"] = ball_json(sc.C);
        if (sc.eA) {
            j["A_exact"] = sc.eA->to_string();
            j["B_exact"] = sc.eB->to_string();
            j["C_exact"] = sc.eC->to_string();
        }
        j["curve"] = curve_json(sc.curve());
        write_json(j, conic_out);
        stamp_json(conic_out, cfg.str());
        std::cout << "conic -> " << conic_out << "\n";
        return 0;
    }

    if (cmd_heights->parsed()) {
        std::string fmt = infer_format(heights_out, heights_fmt);
        std::ostringstream cfg;
        cfg << "command=heights";
        for (const auto& c : height_cs) cfg << " c=" << c;
        cfg << " format=" << fmt << " output=" << heights_out;
        std::vector<std::pair<std::string, HeightValue>> rows;
        for (const auto& s : height_cs) rows.emplace_back(s, canonical_height(rat_from_decimal(s)));
        if (fmt == "csv") {
            std::ofstream out(heights_out, std::ios::binary);
            if (!out) throw IoError("cannot write " + heights_out);
            out.precision(17);
            out << "c,value,error,places\n";
            for (const auto& [s, h] : rows) {
                out << s << ',' << h.value << ',' << h.error << ',';
                for (size_t i = 0; i < h.place_breakdown.size(); ++i)
                    out << (i ? ";" : "") << h.place_breakdown[i].first << ':'
                        << h.place_breakdown[i].second;
                out << '\n';
            }
            out.close();
            stamp_csv(heights_out, cfg.str());
        } else if (fmt == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& [s, h] : rows) {
                nlohmann::ordered_json rec;
                rec["c"] = s;
                rec["value"] = h.value;
                rec["error"] = h.error;
                nlohmann::ordered_json places;
                for (const auto& [p, v] : h.place_breakdown) places[p] = v;
                rec["places"] = std::move(places);
                arr.push_back(std::move(rec));
            }
            write_json(arr, heights_out);
            stamp_json(heights_out, cfg.str());
        } else {
            throw UsageError("heights: format must be json or csv");
        }
        std::cout << "heights: " << rows.size() << " parameters -> " << heights_out << "\n";
        return 0;
    }

    if (cmd_eq->parsed()) {
        std::string fmt = infer_format(eq_out, eq_fmt);
        std::ostringstream cfg;
        cfg << "command=equidist z=" << eq_z << " nmin=" << eq_nmin << " nmax=" << eq_nmax
            << " format=" << fmt << " output=" << eq_out;
        auto table = convergence_table(parse_complex(eq_z), eq_nmin, eq_nmax);
        if (fmt == "csv") {
            save_potential_csv(table, eq_out);
            stamp_csv(eq_out, cfg.str());
        } else if (fmt == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : table) {
                nlohmann::ordered_json rec;
                rec["n"] = r.n;
                rec["z"] = r.test_point.to_string();
                rec["empirical"] = r.empirical;
                rec["reference"] = r.reference;
                rec["discrepancy"] = r.discrepancy;
                rec["root_residual"] = r.root_residual;
                arr.push_back(std::move(rec));
            }
            write_json(arr, eq_out);
            stamp_json(eq_out, cfg.str());
        } else {
            throw UsageError("equidist: format must be json or csv");
        }
        std::cout << "equidist: " << table.size() << " rows -> " << eq_out << "\n";
        return 0;
    }

    if (cmd_render->parsed()) {
        std::string fmt = infer_format(render_out, render_fmt);
        std::ostringstream cfg;
        cfg << "command=render region=" << render_region << " res=" << render_res
            << " max_iter=" << render_iter;
        for (const auto& o : render_overlays) cfg << " overlay=" << o;
        cfg << " format=" << fmt << " output=" << render_out;

        auto v = parse_rats(render_region, 4, "--region");
        RenderRegion region{v[0].convert_to<double>(), v[1].convert_to<double>(),
                            v[2].convert_to<double>(), v[3].convert_to<double>()};
        RenderOptions opts;
        opts.resolution = render_res;
        opts.max_iter = render_iter;

        Catalog cat;
        std::vector<RealLine> traces;
        bool want_pcf = false, want_lines = false;
        for (const auto& o : render_overlays) {
            if (o == "pcf") {
                want_pcf = true;
            } else if (o == "reallines") {
                want_lines = true;
            } else {
                throw UsageError("render: unknown overlay " + o);
            }
        }
        if (want_pcf || want_lines) {
            if (render_cat.empty()) throw UsageError("render: overlays need --catalog");
            cat = load_catalog(render_cat);
            if (want_pcf) opts.overlay_pcf = &cat;
            if (want_lines)
                for (const auto& h : real_line_search(cat, 3)) traces.push_back(h.line);
            if (want_lines) opts.overlay_lines = &traces;
        }
        if (fmt == "ppm") {
            render_mandelbrot_ppm(render_out, region, opts);
        } else if (fmt == "svg") {
            render_mandelbrot_svg(render_out, region, opts);
        } else {
            throw UsageError("render: format must be ppm or svg");
        }
        std::cout << "render -> " << render_out << "\n";
        return 0;
    }

    throw UsageError("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DegeneracyError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 4;
    } catch (const ArithmeticError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 4;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
