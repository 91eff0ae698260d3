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

#ifndef CARTAN_REPORT_HPP
#define CARTAN_REPORT_HPP

// Input parsing and command dispatch behind the command-line tool.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "io.hpp"
#include "oracle.hpp"
#include "presets.hpp"
#include "torus.hpp"
#include "units.hpp"

namespace cartan::cli {

using json = nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kParse = 2, kValidation = 3, kPrecondition = 4, kVerification = 5, kTooLarge = 6 };

inline int exit_code_for(Errc e) {
    switch (e) {
        case Errc::ParseError:
        case Errc::UnknownPreset: return kParse;
        case Errc::ValidationError: return kValidation;
        case Errc::VerificationFailed: return kVerification;
        case Errc::EnumerationTooLarge:
        case Errc::TooLarge: return kTooLarge;
        default: return kPrecondition;
    }
}

/// "Q", "GF(p)", "GF:p"
inline FieldSpec parse_field(const std::string& s) {
    static const std::regex gf(R"(GF(?:\((\d+)\)|:(\d+)))");
    std::smatch m;
    if (s == "Q") return FieldSpec::rationals();
    if (std::regex_match(s, m, gf)) return FieldSpec::prime(std::stoull(m[1].matched ? m[1].str() : m[2].str()));
    throw Error(Errc::ParseError, "unknown field \"" + s + "\" (expected Q, GF(p) or GF:p)");
}

/// A parsed algebra, plus the group when it is a group algebra.
struct Input {
    Algebra algebra;
    std::optional<GroupTable> group;
    std::string label;

    /// Group algebras of subgroups, tried first as radical complements.
    std::vector<Subspace> preferred_complements() const {
        if (!group) return {};
        return subgroup_algebra_candidates(algebra, *group);
    }
};

inline GroupTable parse_group_preset(const std::string& s) {
    static const std::regex re(R"((dihedral|cyclic):(\d+))");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw Error(Errc::UnknownPreset, "unknown group preset \"" + s + "\"");
    const std::size_t n = std::stoul(m[2].str());
    return m[1].str() == "dihedral" ? dihedral(n) : cyclic(n);
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

/// A JSON file path or one of the presets dihedral:N@GF(p), cyclic:N@GF(p),
/// matrix:N@F, quaternion:Q, dual-numbers:F.
inline Input parse_algebra_input(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) {
        try {
            return {io::algebra_from_json(read_json_file(spec)), std::nullopt, spec};
        } catch (const json::exception& e) {
            throw Error(Errc::ParseError, spec + ": " + e.what());
        }
    }
    static const std::regex group_re(R"((dihedral|cyclic):(\d+)@(.+))");
    static const std::regex matrix_re(R"(matrix:(\d+)@(.+))");
    static const std::regex dual_re(R"(dual-numbers:(.+))");
    std::smatch m;
    if (std::regex_match(spec, m, group_re)) {
        const FieldSpec f = parse_field(m[3].str());
        GroupTable g = parse_group_preset(m[1].str() + ":" + m[2].str());
        Algebra a = group_algebra(f, g);
        return {std::move(a), std::move(g), spec};
    }
    if (std::regex_match(spec, m, matrix_re)) {
        const std::size_t n = std::stoul(m[1].str());
        if (n == 0) throw Error(Errc::ValidationError, "matrix size must be positive");
        return {matrix_algebra(parse_field(m[2].str()), n), std::nullopt, spec};
    }
    if (spec == "quaternion:Q") return {quaternion_algebra(), std::nullopt, spec};
    if (std::regex_match(spec, m, dual_re)) return {dual_numbers(parse_field(m[1].str())), std::nullopt, spec};
    if (spec.find(':') != std::string::npos) throw Error(Errc::UnknownPreset, "unknown preset \"" + spec + "\"");
    throw Error(Errc::ParseError, "no such file: " + spec);
}

inline Input group_algebra_input(const GroupTable& g, const FieldSpec& f, std::string label) {
    return {group_algebra(f, g), g, std::move(label)};
}

/// FNV-1a over the canonical JSON of the algebra.
inline std::string input_digest(const Algebra& a) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : io::to_json(a).dump()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Options {
    std::uint64_t seed = 0;
    bool oracle = false;
    std::optional<json> subspace;  // for `verify`
};

struct RunReport {
    std::string command;
    std::string input_digest;
    std::uint64_t seed = 0;
    json results = json::object();
    std::vector<std::pair<std::string, bool>> checks;

    void check(const std::string& name, bool ok) { checks.emplace_back(name, ok); }

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.second) return false;
        return true;
    }

    int exit_code() const { return all_passed() ? kOk : kVerification; }

    json to_json() const {
        json cs = json::array();
        for (const auto& [name, ok] : checks) cs.push_back({{"name", name}, {"ok", ok}});
        return {{"input_digest", input_digest}, {"command", command}, {"results", results},
                {"checks", std::move(cs)},      {"seed", seed},       {"version", kVersion}};
    }
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"radical", "complement", "soluble", "reduced", "maximal-torus",
                                            "cartan",  "verify",     "index",   "units",   "report"};
    return c;
}

namespace detail {

inline json cartan_checks(const CartanVerification& v) {
    return {{"lie_closed", v.lie_closed},
            {"lie_nilpotent", v.lie_nilpotent},
            {"normalizer_equals_self", v.self_normalizing},
            {"multiplication_closed", v.multiplication_closed},
            {"contains_one", v.contains_one}};
}

inline void add_radical(RunReport& r, const Algebra& a, const Subspace& rad, bool oracle) {
    r.results["radical"] = io::to_json(rad);
    r.results["radical_dim"] = rad.dim();
    r.check("radical_is_ideal", is_two_sided_ideal(a, rad));
    r.check("radical_is_nilpotent", is_nilpotent_subspace(a, rad));
    r.check("quotient_is_semisimple", radical(quotient(a, rad).algebra).dim() == 0);
    if (oracle) r.check("radical_matches_bruteforce", oracle::radical_bruteforce(a) == rad);
}

inline void add_cartan(RunReport& r, const Algebra& a, const CartanCertificate& c, bool oracle) {
    r.results["torus"] = io::to_json(c.torus.torus);
    r.results["cartan"] = io::to_json(c.cartan);
    r.results["class"] = c.nilpotency_class;
    r.results["dim"] = c.cartan.dim();
    r.results["torus_dim"] = c.torus.torus.dim();
    r.results["radical_part_dim"] = c.radical_part.dim();
    r.results["checks"] = cartan_checks(c.verification);
    r.check("lie_closed", c.verification.lie_closed);
    r.check("lie_nilpotent", c.verification.lie_nilpotent);
    r.check("normalizer_equals_self", c.verification.self_normalizing);
    r.check("multiplication_closed", c.verification.multiplication_closed);
    r.check("contains_one", c.verification.contains_one);
    r.check("cartan_is_radical_part_plus_torus", c.splits_over_torus);
    r.check("torus_is_torus", is_torus(a, c.torus.torus));
    r.check("torus_self_centralizing_in_complement", c.torus.self_centralizing_in.has_value());
    if (oracle) {
        bool member = false;
        for (const auto& s : oracle::enumerate_cartans_bruteforce(a)) member = member || s == c.cartan;
        r.check("cartan_in_bruteforce_list", member);
    }
}

inline json report_json(const NilpotencyReport& n) {
    json j = {{"lie_nilpotent", n.lie_nilpotent},
              {"central_complement", n.central_complement},
              {"soluble_unique_complement", n.soluble_unique_complement},
              {"lie_class", n.lie_class}};
    j["separables_form_complement"] = n.separables_form_complement ? json(*n.separables_form_complement) : json();
    j["separables_form_subspace"] = n.separables_form_subspace ? json(*n.separables_form_subspace) : json();
    if (!n.skipped.empty()) j["skipped"] = n.skipped;
    return j;
}

}  // namespace detail

/// Runs one command. Library errors propagate as cartan::Error.
inline RunReport execute(const std::string& command, const Input& in, const Options& opt = {}) {
    const Algebra& a = in.algebra;
    RunReport r;
    r.command = command;
    r.input_digest = input_digest(a);
    r.seed = opt.seed;
    r.results["field"] = io::to_json(a.field());
    r.results["algebra_dim"] = a.dim();
    CartanOptions copts;
    copts.seed = opt.seed;
    copts.preferred_complements = in.preferred_complements();

    if (command == "radical") {
        detail::add_radical(r, a, radical(a), opt.oracle);
    } else if (command == "complement") {
        const auto d = radical_decomposition(a, copts.preferred_complements);
        r.results["radical"] = io::to_json(d.radical);
        r.results["complement"] = io::to_json(d.complement);
        r.results["complement_dim"] = d.complement.dim();
        r.check("decomposition_valid", is_valid_decomposition(a, d));
    } else if (command == "soluble") {
        const Subspace rad = radical(a);
        detail::add_radical(r, a, rad, opt.oracle);
        r.results["soluble"] = is_soluble(a, rad);
    } else if (command == "reduced") {
        r.results["reduced"] = to_string(is_reduced(a));
    } else if (command == "maximal-torus") {
        const auto t = maximal_torus(a, copts);
        r.results["torus"] = io::to_json(t.torus);
        r.results["torus_dim"] = t.torus.dim();
        r.results["complement"] = io::to_json(t.complement);
        r.check("torus_is_torus", is_torus(a, t.torus));
        r.check("torus_self_centralizing_in_complement", t.self_centralizing_in.has_value());
    } else if (command == "cartan") {
        detail::add_cartan(r, a, cartan_subalgebra(a, copts), opt.oracle);
    } else if (command == "verify") {
        if (!opt.subspace) throw Error(Errc::ParseError, "verify needs --subspace FILE");
        const Subspace c = io::subspace_from_json(a, *opt.subspace);
        const auto v = verify_cartan(a, c);
        r.results["subspace"] = io::to_json(c);
        r.results["verdict"] = v.ok();
        r.results["class"] = v.nilpotency_class;
        r.results["checks"] = detail::cartan_checks(v);
        r.check("lie_closed", v.lie_closed);
        r.check("lie_nilpotent", v.lie_nilpotent);
        r.check("normalizer_equals_self", v.self_normalizing);
        if (v.ok()) {
            r.check("multiplication_closed", v.multiplication_closed);
            r.check("contains_one", v.contains_one);
        }
    } else if (command == "index") {
        r.results["index"] = index_of_central_simple(a, opt.seed);
        const auto c = cartan_subalgebra(a, copts);
        r.check("cartan_verified", c.verification.ok());
        r.check("cartan_is_torus", is_torus(a, c.cartan));
    } else if (command == "units") {
        const UnitGroup u = unit_group(a);
        const auto nil = group_nilpotency(u.group);
        r.results["order"] = u.group.order();
        r.results["nilpotent"] = nil.nilpotent;
        r.results["class"] = nil.nilpotency_class;
        const auto dec = units_decomposition_check(a, copts.preferred_complements);
        r.results["decomposition"] = {{"holds", dec.holds()},
                                      {"one_plus_radical_order", dec.one_plus_radical_order},
                                      {"complement_units_order", dec.complement_units_order},
                                      {"order_product_matches", dec.order_product_matches},
                                      {"trivial_intersection", dec.trivial_intersection},
                                      {"complement_units_central", dec.complement_units_central}};
        std::uint64_t expected = 1;
        for (std::size_t i = 0; i < radical(a).dim(); ++i) expected *= a.field().characteristic();
        r.check("one_plus_radical_order", dec.one_plus_radical_order == expected);
        r.check("decomposition_when_nilpotent", !nil.nilpotent || dec.holds());
        r.check("nilpotent_units_imply_soluble", !nil.nilpotent || is_soluble(a));
    } else if (command == "report") {
        const Subspace rad = radical(a);
        detail::add_radical(r, a, rad, opt.oracle);
        const auto d = radical_decomposition(a, copts.preferred_complements);
        r.results["complement"] = io::to_json(d.complement);
        r.results["soluble"] = is_soluble(a, rad);
        r.results["reduced"] = to_string(is_reduced(a));
        r.check("decomposition_valid", is_valid_decomposition(a, d));
        const auto c = cartan_subalgebra(a, copts);
        json cartan_part;
        {
            RunReport sub;
            detail::add_cartan(sub, a, c, opt.oracle);
            cartan_part = sub.results;
            for (auto& chk : sub.checks) r.checks.push_back(chk);
        }
        r.results["cartan"] = std::move(cartan_part);
        const auto n = lie_nilpotency_report(a, copts);
        r.results["lie_nilpotency"] = detail::report_json(n);
        r.check("lie_nilpotency_predicates_agree", n.consistent());
    } else {
        throw Error(Errc::ParseError, "unknown command \"" + command + "\"");
    }
    return r;
}

/// Short human-readable rendering of a report.
inline std::string summary(const RunReport& r) {
    std::ostringstream os;
    os << r.command << " (" << r.input_digest << ", seed " << r.seed << ")\n";
    for (const auto& [k, v] : r.results.items()) {
        if (v.is_object() && v.contains("basis")) {
            os << "  " << k << ": dim " << v["basis"].size() << "\n";
            for (const auto& row : v["basis"]) os << "    " << row.dump() << "\n";
        } else if (!v.is_object()) {
            os << "  " << k << ": " << v.dump() << "\n";
        } else {
            os << "  " << k << ": " << v.dump() << "\n";
        }
    }
    for (const auto& [name, ok] : r.checks) os << "  [" << (ok ? "ok" : "FAIL") << "] " << name << "\n";
    return os.str();
}

}  // namespace cartan::cli

#endif
