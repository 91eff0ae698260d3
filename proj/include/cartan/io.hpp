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

#ifndef CARTAN_IO_HPP
#define CARTAN_IO_HPP

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "group.hpp"
#include "polynomial.hpp"

namespace cartan::io {

using json = nlohmann::json;

inline json to_json(const FieldSpec& f) {
    if (f.is_finite()) return {{"type", "GF"}, {"p", f.characteristic()}};
    return {{"type", "Q"}};
}

inline FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type")) throw Error(Errc::ParseError, "field must be an object with a type");
    const std::string t = j.at("type").get<std::string>();
    if (t == "Q") return FieldSpec::rationals();
    if (t == "GF") {
        if (!j.contains("p") || !j.at("p").is_number_unsigned()) throw Error(Errc::ParseError, "GF field needs integer p");
        return FieldSpec::prime(j.at("p").get<std::uint64_t>());
    }
    throw Error(Errc::ParseError, "unknown field type " + t);
}

/// Rationals as "num/den", prime-field residues as integers.
inline json to_json(const Scalar& s) {
    if (s.characteristic()) return s.residue();
    return s.to_string();
}

inline Scalar scalar_from_json(const FieldSpec& f, const json& j) {
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
    if (j.is_string()) {
        if (f.is_finite()) {
            try {
                return Scalar::from_int(f, std::stoll(j.get<std::string>()));
            } catch (const std::exception&) {
                throw Error(Errc::ParseError, "bad prime-field element " + j.dump());
            }
        }
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
            throw Error(Errc::ParseError, "bad rational " + j.dump());
        return Scalar::from_rational(q);
    }
    throw Error(Errc::ParseError, "scalar must be an integer or a string, got " + j.dump());
}

inline json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(to_json(s));
    return a;
}

inline Vector vector_from_json(const FieldSpec& f, const json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n)
        throw Error(Errc::ParseError, "expected an array of length " + std::to_string(n) + ", got " + j.dump());
    Vector v;
    for (const auto& e : j) v.push_back(scalar_from_json(f, e));
    return v;
}

inline json to_json(const Algebra& a) {
    json table = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(to_json(a.basis_product(i, j)));
        table.push_back(std::move(row));
    }
    return {{"field", to_json(a.field())},
            {"dim", a.dim()},
            {"one", to_json(a.one())},
            {"basis_names", a.basis_names()},
            {"table", std::move(table)}};
}

inline Algebra algebra_from_json(const json& j) {
    if (!j.is_object()) throw Error(Errc::ParseError, "algebra must be a JSON object");
    for (const char* key : {"field", "dim", "one", "table"})
        if (!j.contains(key)) throw Error(Errc::ParseError, std::string("algebra is missing \"") + key + "\"");
    const FieldSpec f = field_from_json(j.at("field"));
    if (!j.at("dim").is_number_unsigned()) throw Error(Errc::ParseError, "dim must be a natural number");
    const std::size_t n = j.at("dim").get<std::size_t>();
    const json& t = j.at("table");
    if (!t.is_array() || t.size() != n) throw Error(Errc::ParseError, "table must have dim rows");
    std::vector<std::vector<Vector>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!t[i].is_array() || t[i].size() != n) throw Error(Errc::ParseError, "table row has wrong length");
        for (std::size_t k = 0; k < n; ++k) table[i].push_back(vector_from_json(f, t[i][k], n));
    }
    std::vector<std::string> names;
    if (j.contains("basis_names")) {
        if (!j.at("basis_names").is_array()) throw Error(Errc::ParseError, "basis_names must be an array");
        names = j.at("basis_names").get<std::vector<std::string>>();
    }
    return Algebra(f, std::move(table), vector_from_json(f, j.at("one"), n), std::move(names));
}

inline json to_json(const Subspace& s) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(to_json(s.vector(i)));
    return {{"basis", std::move(rows)}};
}

inline Subspace subspace_from_json(const Algebra& a, const json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.at("basis").is_array())
        throw Error(Errc::ParseError, "subspace must be {\"basis\": [...]}");
    Matrix m(a.field(), 0, a.dim());
    for (const auto& row : j.at("basis")) m.append_row(vector_from_json(a.field(), row, a.dim()));
    return Subspace(std::move(m));
}

inline json to_json(const Polynomial& p) {
    json a = json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_json(c));
    return a;
}

inline json to_json(const GroupTable& g) {
    return {{"order", g.order()}, {"mul", g.table()}, {"identity", g.identity()}, {"names", g.element_names()}};
}

inline GroupTable group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("mul") || !j.contains("identity"))
        throw Error(Errc::ParseError, "group table needs \"mul\" and \"identity\"");
    std::vector<std::vector<std::size_t>> mul;
    std::vector<std::string> names;
    try {
        mul = j.at("mul").get<std::vector<std::vector<std::size_t>>>();
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    if (j.contains("order") && j.at("order").get<std::size_t>() != mul.size())
        throw Error(Errc::ParseError, "order does not match the table");
    return GroupTable(std::move(mul), j.at("identity").get<std::size_t>(), std::move(names));
}

}  // namespace cartan::io

#endif
