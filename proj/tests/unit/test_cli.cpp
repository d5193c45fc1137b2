/*
   Copyright 2026 The milnor authors

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
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "milnor/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = milnor::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(MILNOR_FIXTURE_DIR) + "/" + name + ".poly"; }

std::map<int, int> spectrum_of(const json& j) {
    std::map<int, int> out;
    for (const auto& e : j.at("spectrum")) out[e.at("Q").get<int>()] = e.at("mult").get<int>();
    return out;
}

}  // namespace

TEST_CASE("e2 in JSON") {
    auto r = run({"e2", "--poly", "x*y*z*w*(x+y+z)*(y-z+w)", "--mode", "arrangement", "--backend", "both", "--json"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["d"] == 6);
    CHECK(j["n"] == 3);
    CHECK(j["mode"] == "arrangement");
    CHECK(spectrum_of(j) == std::map<int, int>{{4, 1}, {5, 2}, {6, 8}, {7, 2}, {8, 2}, {9, 2}, {10, 1}});
    CHECK(j["spectrum"][0]["alpha"] == "4/6");
    CHECK(j["cells"].size() == 12);
    CHECK(j["symmetric"] == false);
    CHECK_FALSE(j.contains("curve_h1"));
    // progress goes to stderr, one line per cell
    CHECK(r.err.find("Q=4 q=0 k=4 dim=1 ms=") != std::string::npos);
}

TEST_CASE("text output") {
    auto r = run({"e2", "--input", fixture("quartic_second"), "--bn", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("spectrum: t^(4/4) + t^(5/4) + t^(6/4) + t^(7/4)") != std::string::npos);
    CHECK(r.out.find("top-computability all k: certified") != std::string::npos);
}

TEST_CASE("output is reproducible") {
    std::vector<std::string> args{"alexander", "--input", fixture("d4"), "--mode", "arrangement", "--json", "--seed", "7"};
    auto a = run(args);
    args.insert(args.end(), {"--jobs", "3"});
    auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("Alexander polynomials of a free arrangement") {
    auto r = run({"alexander", "--input", fixture("braid_a4"), "--mode", "arrangement", "--delta1", "1:9", "--json"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["chi"] == -6);
    CHECK(j["alexander"]["3"] == json{{"1", 24}, {"2", 8}, {"5", 6}, {"10", 6}});
    CHECK(j["alexander"]["2"] == json{{"1", 26}, {"2", 2}});
    CHECK(j["alexander"]["1"] == json{{"1", 9}});
    CHECK(j["alexander"]["0"] == json{{"1", 1}});
    CHECK(j["alexander_confidence"]["1"] == "supplied");
}

TEST_CASE("external Betti number certifies") {
    auto r = run({"alexander", "--input", fixture("quartic_equality"), "--bn", "5", "--chi", "-1", "--json"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["alexander"]["3"] == json{{"1", 2}, {"2", 1}, {"4", 1}});
    CHECK(j["alexander_confidence"]["3"] == "certified");
    bool found = false;
    for (const auto& c : j["certificates"])
        if (c["kind"] == "top-computability" && c["k"] == 0) {
            found = true;
            CHECK(c["status"] == "certified");
        }
    CHECK(found);
}

TEST_CASE("strict inequality is reported") {
    auto r = run({"e2", "--input", fixture("quartic_strict"), "--bn", "5", "--json"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    bool found = false;
    for (const auto& c : j["certificates"])
        if (c["kind"] == "top-computability" && c["k"] == 0) {
            found = true;
            CHECK(c["status"] == "failed");
            CHECK(c["detail"] == "strict inequality: E2 sum 16 > 5");
        }
    CHECK(found);
}

TEST_CASE("plane curves") {
    auto r = run({"alexander", "--input", fixture("pencil_lines"), "--mode", "curve", "--json"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["curve_h1"].size() == 4);
    CHECK(j["alexander"]["1"] == json{{"1", 3}, {"2", 2}, {"4", 2}});
    r = run({"alexander", "--input", fixture("fermat_quartic_curve"), "--mode", "curve", "--json"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["alexander"]["1"] == json::object());
    CHECK(j["alexander_confidence"]["1"] == "certified");
}

TEST_CASE("syzygy and freeness") {
    auto r = run({"syzygy", "--input", fixture("nonfree_arrangement"), "--json", "--generators"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["degrees"] == json{2, 2, 3, 3, 3, 3});
    CHECK(j["free"] == false);
    CHECK(j["generators"].size() == 6);
    r = run({"freeness", "--input", fixture("discriminant"), "--json"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["free"] == true);
    CHECK(j["exponents"] == json{1, 1, 1});
    r = run({"freeness", "--poly", "x*y*z*w*(x-y)*(x-z)*(x-w)*(y-z)*(y-w)*(z-w)"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("free, exponents 2 3 4") != std::string::npos);
    CHECK(r.out.find("chi = -6") != std::string::npos);
}

TEST_CASE("matrix dumps") {
    auto dir = std::filesystem::temp_directory_path() / "milnor_cli_dump";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto r = run({"e2", "--poly", "x*y*z*(x+y+z)", "--mode", "arrangement", "--backend", "both", "--dump-matrices",
                  dir.string()});
    REQUIRE(r.code == 0);
    CHECK(std::filesystem::exists(dir / "phi_Q4.txt"));
    CHECK(std::filesystem::exists(dir / "phi1_Q4.txt"));
    CHECK(std::filesystem::exists(dir / "phi2_Q4.txt"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("variables") {
    auto r = run({"e2", "--poly", "x*y*z", "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["vars"] == json{"x", "y", "z"});
    r = run({"e2", "--poly", "a*b*c*(a+b+c)", "--vars", "a,b,c", "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["d"] == 4);
    r = run({"e2", "--poly", "a*b*c"});
    CHECK(r.code == milnor::cli::kUsage);
    CHECK(r.err.find("--vars") != std::string::npos);
}

TEST_CASE("exit codes") {
    using namespace milnor::cli;
    CHECK(run({}).code == kUsage);
    CHECK(run({"e2"}).code == kUsage);
    CHECK(run({"e2", "--poly", "x*y", "--mode", "affine"}).code == kUsage);
    CHECK(run({"e2", "--poly", "x*y*(x+"}).code == kUsage);
    CHECK(run({"e2", "--poly", "x^2+y"}).code == kUsage);
    CHECK(run({"e2", "--poly", "x*y*z", "--mode", "curve", "--vars", "x,y,z,w"}).code == kUsage);
    CHECK(run({"e2", "--poly", "x^2*y*z"}).code == kNotReduced);
    CHECK(run({"e2", "--poly", "x^2*y*z", "--assume-reduced"}).code == kOk);
    CHECK(run({"alexander", "--input", fixture("nonfree_arrangement"), "--mode", "arrangement"}).code ==
          kMissingChi);
    // an external dimension above the E2 bound is an input error
    CHECK(run({"e2", "--input", fixture("quartic_second"), "--bn", "9"}).code == kUsage);
    CHECK(run({"e2", "--poly", "x*y", "--primes", "0"}).code == kUsage);
    CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("input files") {
    auto path = std::filesystem::temp_directory_path() / "milnor_cli_input.poly";
    {
        std::ofstream out(path);
        out << "# three lines\nvars = u, v, s\nf = u*v*(u+v+s)  # trailing comment\n";
    }
    auto r = run({"e2", "--input", path.string(), "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["vars"] == json{"u", "v", "s"});
    {
        std::ofstream out(path);
        out << "vars = x,y,z\ng = x*y*z\n";
    }
    r = run({"e2", "--input", path.string()});
    CHECK(r.code == milnor::cli::kUsage);
    CHECK(r.err.find(":2:") != std::string::npos);
    std::filesystem::remove(path);
}
