/*
   Copyright 2026 The cartan-algebra authors

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

// cartan: command-line front end for the cartan-algebra library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cartan/report.hpp"

namespace {

using namespace cartan;

cli::Input load_input(const std::string& input, const std::string& group, const std::string& group_file,
                      const std::string& field) {
    if (!group.empty() || !group_file.empty()) {
        if (!group.empty() && !group_file.empty())
            throw Error(Errc::ParseError, "--group and --group-file are mutually exclusive");
        if (field.empty()) throw Error(Errc::ParseError, "a group input needs --field");
        const FieldSpec f = cli::parse_field(field);
        if (!group.empty()) return cli::group_algebra_input(cli::parse_group_preset(group), f, group);
        return cli::group_algebra_input(io::group_from_json(cli::read_json_file(group_file)), f, group_file);
    }
    if (input.empty()) throw Error(Errc::ParseError, "no input given (path, preset, --group or --group-file)");
    if (!field.empty()) {
        // Presets without an explicit field take it from --field.
        const auto at = input.find('@');
        if (at == std::string::npos && input.find(':') != std::string::npos && !input.ends_with(":Q"))
            return cli::parse_algebra_input(input + "@" + field);
    }
    return cli::parse_algebra_input(input);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radicals, tori and Cartan subalgebras of finite-dimensional associative algebras"};
    app.set_version_flag("--version", cartan::cli::kVersion);

    std::string command;
    std::string input;
    std::string field;
    std::string group;
    std::string group_file;
    std::string subspace_file;
    std::string out_file;
    std::uint64_t seed = 0;
    bool oracle = false;
    bool json_mode = false;
    bool pretty = false;

    std::string command_help = "one of:";
    for (const auto& c : cartan::cli::commands()) command_help += " " + c;
    app.add_option("command", command, command_help)->required()->check(CLI::IsMember(cartan::cli::commands()));
    app.add_option("input", input, "algebra JSON file or preset (dihedral:N@GF(p), cyclic:N@GF(p), matrix:N@F, "
                                   "quaternion:Q, dual-numbers:F)");
    app.add_option("--field", field, "GF:p, GF(p) or Q");
    app.add_option("--group", group, "group preset dihedral:N or cyclic:N (group algebra over --field)");
    app.add_option("--group-file", group_file, "Cayley table JSON");
    app.add_option("--subspace", subspace_file, "subspace JSON for verify");
    app.add_option("--seed", seed, "random seed")->default_val(0);
    app.add_flag("--oracle", oracle, "cross-check against brute-force enumeration");
    app.add_flag("--json", json_mode, "emit one compact JSON document");
    app.add_flag("--pretty", pretty, "emit indented JSON");
    app.add_option("--out", out_file, "write output to FILE instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cartan::cli::kParse;
    }

    try {
        const auto in = load_input(input, group, group_file, field);
        cartan::cli::Options opt;
        opt.seed = seed;
        opt.oracle = oracle;
        if (!subspace_file.empty()) opt.subspace = cartan::cli::read_json_file(subspace_file);
        const auto report = cartan::cli::execute(command, in, opt);

        std::string text;
        if (pretty) text = report.to_json().dump(2) + "\n";
        else if (json_mode) text = report.to_json().dump() + "\n";
        else text = cartan::cli::summary(report);

        if (out_file.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_file);
            if (!out) throw cartan::Error(cartan::Errc::ParseError, "cannot write " + out_file);
            out << text;
        }
        return report.exit_code();
    } catch (const cartan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cartan::cli::exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cartan::cli::kPrecondition;
    }
}
