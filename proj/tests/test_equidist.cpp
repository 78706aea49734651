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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pcf/equidist.hpp"
#include "pcf/errors.hpp"

using namespace pcf;

namespace {

// 0.5*(log 2 + log 3): hand value of the n=2 empirical potential at z=2,
// since p_2 = c^2 + c has roots {0, -1}.
constexpr double kEmp2At2 = 0.89587973461402754;
// G_M(2) = 2 * lim 2^{-k} log|f_2^k(0)|, frozen from independent plain-double
// iteration of the escape rate.
constexpr double kGreenAt2 = 0.90956961012223560;
// G_M(10), same construction (orbit 10, 110, 12110, ...).
constexpr double kGreenAt10 = 2.3504467176603580;

GaussianRational q(long re, long im = 0) { return GaussianRational(Rat(re), Rat(im)); }

}  // namespace

TEST_CASE("n=2 at z=2 matches the hand computation") {
    PotentialReport r = empirical_potential(2, q(2));
    CHECK(r.n == 2);
    CHECK(std::fabs(r.empirical - kEmp2At2) < 1e-10);
    CHECK(std::fabs(r.reference - kGreenAt2) < 1e-10);
    CHECK(std::fabs(r.discrepancy - std::fabs(kEmp2At2 - kGreenAt2)) < 1e-9);
    CHECK(r.root_residual <= 1e-6);
    CHECK(r.discrepancy >= 0);
}

TEST_CASE("monic product identity: root_residual stays tiny") {
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8}) {
        PotentialReport r = empirical_potential(n, q(2));
        CHECK(r.root_residual <= 1e-6);
    }
    PotentialReport c = empirical_potential(5, GaussianRational(Rat(1), Rat(2)));
    CHECK(c.root_residual <= 1e-6);
}

TEST_CASE("discrepancy at z=2 decreases from n=4 to n=8") {
    PotentialReport r4 = empirical_potential(4, q(2));
    PotentialReport r8 = empirical_potential(8, q(2));
    CHECK(r8.discrepancy < r4.discrepancy);
}

TEST_CASE("convergence table at z=2 decreases below 1e-2") {
    auto table = convergence_table(q(2), 2, 8);
    REQUIRE(table.size() == 7);
    for (size_t k = 1; k < table.size(); ++k)
        CHECK(table[k].discrepancy < table[k - 1].discrepancy);
    CHECK(table.back().discrepancy < 1e-2);
}

TEST_CASE("fast escape at z=10") {
    auto table = convergence_table(q(10), 1, 4);
    REQUIRE(table.size() == 4);
    CHECK(std::fabs(table[0].reference - kGreenAt10) < 1e-9);
    CHECK(table[2].discrepancy < 1e-3);  // n = 3
    CHECK(table[3].discrepancy < 1e-3);
}

TEST_CASE("precondition: points inside M are rejected") {
    CHECK_THROWS_AS(empirical_potential(3, q(0)), ContractError);
    CHECK_THROWS_AS(empirical_potential(3, GaussianRational(Rat(1, 4), Rat(0))), ContractError);
    CHECK_THROWS_AS(convergence_table(q(0), 1, 3), ContractError);
    CHECK_THROWS_AS(empirical_potential(0, q(2)), ContractError);
    CHECK_THROWS_AS(empirical_potential(99, q(2)), ContractError);
}

TEST_CASE("conjugation symmetry of the empirical potential") {
    PotentialReport a = empirical_potential(5, GaussianRational(Rat(1), Rat(2)));
    PotentialReport b = empirical_potential(5, GaussianRational(Rat(1), Rat(-2)));
    CHECK(std::fabs(a.empirical - b.empirical) < 1e-12);
    CHECK(std::fabs(a.reference - b.reference) < 1e-12);
    CHECK(std::fabs(a.root_residual - b.root_residual) < 1e-9);
}

TEST_CASE("csv export") {
    auto table = convergence_table(q(2), 2, 4);
    std::string path = "test_equidist.csv";
    save_potential_csv(table, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,z,empirical,reference,discrepancy,root_residual");
    int lines = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    in.close();
    std::remove(path.c_str());
    CHECK(lines == 3);
}
