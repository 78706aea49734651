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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "pcf/catalog.hpp"
#include "pcf/config.hpp"

using json = nlohmann::json;

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(PCF_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_json(const std::string& path) { return json::parse(slurp(path)); }

struct TmpFile {
    std::string path;
    explicit TmpFile(std::string p) : path(std::move(p)) {}
    ~TmpFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("catalog subcommand writes a stamped, loadable catalog") {
    TmpFile f("cli_cat3.json");
    REQUIRE(run("catalog --bound 3 -o " + f.path) == 0);

    json j = load_json(f.path);
    CHECK(j.at("version").get<std::string>() == pcf::kVersion);
    CHECK(j.at("config").get<std::string>().find("command=catalog") != std::string::npos);
    CHECK(j.at("config").get<std::string>().find("bound=3") != std::string::npos);
    CHECK(j.at("bound").get<int>() == 3);

    // The stamped file must still load through the library path, and agree
    // with an in-process build.
    pcf::Catalog direct = pcf::build_catalog(3);
    pcf::Catalog loaded = pcf::load_catalog(f.path);
    REQUIRE(loaded.params.size() == direct.params.size());
    CHECK(loaded.bound == 3);
}

TEST_CASE("identical configs produce byte-identical artifacts") {
    TmpFile a("cli_det_a.json"), b("cli_det_b.json");
    REQUIRE(run("catalog --bound 3 -o " + a.path) == 0);
    REQUIRE(run("catalog --bound 3 -o " + b.path) == 0);
    // The config string embeds the output path, so compare after building
    // both to the same name.
    TmpFile c("cli_det_c.json");
    REQUIRE(run("catalog --bound 3 -o " + c.path) == 0);
    std::string first = slurp(c.path);
    REQUIRE(run("catalog --bound 3 -o " + c.path) == 0);
    CHECK(first == slurp(c.path));

    TmpFile e("cli_det_eq.csv");
    REQUIRE(run("equidist --z 2 --nmin 2 --nmax 5 -o " + e.path) == 0);
    std::string eq1 = slurp(e.path);
    REQUIRE(run("equidist --z 2 --nmin 2 --nmax 5 -o " + e.path) == 0);
    CHECK(eq1 == slurp(e.path));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("catalog") == 2);               // missing -o
    CHECK(run("frobnicate") == 2);            // unknown subcommand
    CHECK(run("catalog --bogus -o x.json") == 2);
    CHECK(run("equidist --z 0 -o cli_bad.csv") == 2);  // z not escaped
    CHECK(run("") == 2);                      // no subcommand
    std::remove("cli_bad.csv");
}

TEST_CASE("equidist CSV carries version and config header") {
    TmpFile f("cli_eq.csv");
    REQUIRE(run("equidist --z 2 --nmin 2 --nmax 4 -o " + f.path) == 0);
    std::string body = slurp(f.path);
    std::istringstream in(body);
    std::string l1, l2, l3;
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    CHECK(l1 == std::string("# pcfgeom ") + pcf::kVersion);
    CHECK(l2.rfind("# config: command=equidist", 0) == 0);
    CHECK(l3 == "n,z,empirical,reference,discrepancy,root_residual");
    // three data rows
    int rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("heights subcommand reports h(-1) = 0") {
    TmpFile f("cli_h.json");
    REQUIRE(run("heights --c -1 --c 0.5 -o " + f.path) == 0);
    json j = load_json(f.path);
    auto& recs = j.at("records");
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].at("c").get<std::string>() == "-1");
    CHECK(std::abs(recs[0].at("value").get<double>()) < 1e-9);
    CHECK(recs[1].at("value").get<double>() == doctest::Approx(0.3833).epsilon(1e-3));
    CHECK(j.at("version").get<std::string>() == pcf::kVersion);
}

TEST_CASE("fit subcommand recovers a line through two exact points") {
    TmpFile f("cli_fit.json");
    REQUIRE(run("fit --d 1 --point 0,0,0,0 --point 0,1,0,-1 -o " + f.path) == 0);
    json j = load_json(f.path);
    CHECK(j.at("d").get<int>() == 1);
    auto& co = j.at("coeffs");
    REQUIRE(co.size() == 3);
    // x + y = 0 after normalization: constant slot 0, x and y slots equal.
    CHECK(co[0][2].get<std::string>() == "0");          // constant, real part
    CHECK(co[1][2].get<std::string>() == co[2][2].get<std::string>());
}

TEST_CASE("render writes a valid PPM with expected interior and exterior") {
    TmpFile interior("cli_in.ppm"), exterior("cli_out.ppm");
    REQUIRE(run("render --region -0.1,0.1,-0.1,0.1 --res 16 --max-iter 64 -o " +
                interior.path) == 0);
    REQUIRE(run("render --region 1.9,2.1,-0.1,0.1 --res 16 --max-iter 64 -o " +
                exterior.path) == 0);

    std::string in_body = slurp(interior.path);
    CHECK(in_body.rfind("P6\n16 16\n255\n", 0) == 0);
    size_t header = std::string("P6\n16 16\n255\n").size();
    REQUIRE(in_body.size() == header + 16 * 16 * 3);
    // Around c = 0 everything is interior, so every pixel is black.
    bool all_black = true;
    for (size_t i = header; i < in_body.size(); ++i)
        if (in_body[i] != 0) all_black = false;
    CHECK(all_black);

    std::string out_body = slurp(exterior.path);
    REQUIRE(out_body.size() == header + 16 * 16 * 3);
    bool any_colored = false;
    for (size_t i = header; i < out_body.size(); ++i)
        if (out_body[i] != 0) any_colored = true;
    CHECK(any_colored);
}

TEST_CASE("lines subcommand round trips through a CLI-built catalog") {
    TmpFile cat("cli_cat4.json"), out("cli_lines.csv");
    REQUIRE(run("catalog --bound 4 -o " + cat.path) == 0);
    REQUIRE(run("lines --catalog " + cat.path + " --k 3 -o " + out.path) == 0);
    std::string body = slurp(out.path);
    CHECK(body.rfind("# pcfgeom", 0) == 0);
    CHECK(body.find("a_re,a_im,b_re,b_im,r_re,r_im,class,support") != std::string::npos);
    // At least one k=3 hit exists at bound 4, so some row carries a support
    // list with two separators.
    CHECK(body.find(";") != std::string::npos);
    CHECK(body.find(":") != std::string::npos);
}
