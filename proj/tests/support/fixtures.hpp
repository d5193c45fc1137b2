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
#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/monodromy.hpp"
#include "milnor/parse.hpp"

#ifndef MILNOR_FIXTURE_DIR
#error "MILNOR_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace milnor::testing {

/// One fixtures/*.poly file: the polynomial plus its "# expect key: value"
/// annotations.
struct Fixture {
    std::string name;
    std::filesystem::path path;
    std::vector<std::string> vars;
    std::string text;
    Poly f;
    std::map<std::string, std::string> expect;

    bool has(const std::string& key) const { return expect.count(key) != 0; }
    const std::string& get(const std::string& key) const {
        auto it = expect.find(key);
        if (it == expect.end()) throw std::out_of_range(name + ": no expectation '" + key + "'");
        return it->second;
    }
    bool slow() const { return has("slow") && get("slow") == "yes"; }
    Mode mode() const { return parse_mode(get("mode")); }
    int degree() const { return f.total_degree(); }

    /// "4:1,5:2" as a Q -> multiplicity map.
    std::map<int, std::int64_t> int_map(const std::string& key) const {
        std::map<int, std::int64_t> out;
        std::stringstream ss(get(key));
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            out[std::stoi(item.substr(0, colon))] = std::stoll(item.substr(colon + 1));
        }
        return out;
    }
    std::vector<int> int_list(const std::string& key) const {
        std::vector<int> out;
        std::stringstream ss(get(key));
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
        return out;
    }
    CyclotomicPoly cyclotomic(const std::string& key) const { return CyclotomicPoly::parse(get(key)); }
};

inline std::string trim_copy(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

inline Fixture load_fixture(const std::filesystem::path& path) {
    Fixture fx;
    fx.name = path.stem().string();
    fx.path = path;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        line = trim_copy(line);
        if (line.rfind("# expect ", 0) == 0) {
            std::string rest = line.substr(9);
            auto colon = rest.find(':');
            fx.expect[trim_copy(rest.substr(0, colon))] = trim_copy(rest.substr(colon + 1));
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        std::string key = trim_copy(line.substr(0, eq)), value = trim_copy(line.substr(eq + 1));
        if (key == "vars") {
            std::stringstream ss(value);
            std::string v;
            while (std::getline(ss, v, ',')) fx.vars.push_back(trim_copy(v));
        } else if (key == "f") {
            fx.text = value;
        }
    }
    fx.f = parse_poly(fx.text, fx.vars).primitive();
    return fx;
}

inline Fixture fixture(const std::string& name) {
    return load_fixture(std::filesystem::path(MILNOR_FIXTURE_DIR) / (name + ".poly"));
}

/// Every fixture, sorted by name.
inline std::vector<Fixture> all_fixtures() {
    std::vector<std::filesystem::path> paths;
    for (const auto& e : std::filesystem::directory_iterator(MILNOR_FIXTURE_DIR))
        if (e.path().extension() == ".poly") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    std::vector<Fixture> out;
    for (const auto& p : paths) out.push_back(load_fixture(p));
    return out;
}

}  // namespace milnor::testing
