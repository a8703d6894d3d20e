/*
   Copyright 2026 The scatlin Authors

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

#ifndef SCATLIN_IO_HPP
#define SCATLIN_IO_HPP

#include <cstdio>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "equiv.hpp"
#include "family.hpp"
#include "field.hpp"
#include "geom.hpp"
#include "mrd.hpp"
#include "qpoly.hpp"
#include "scatter.hpp"

namespace scatlin::io {

using json = nlohmann::ordered_json;

/// "p^s" -> (p, s); a bare "p" means s = 1.
inline std::pair<u64, unsigned> parse_field_spec(std::string_view spec) {
    const auto caret = spec.find('^');
    auto num = [&](std::string_view t) -> u64 {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string_view::npos)
            throw Error(ErrorKind::ParseError, "bad field spec '" + std::string(spec) + "'");
        return std::stoull(std::string(t));
    };
    if (caret == std::string_view::npos) return {num(spec), 1};
    const u64 s = num(spec.substr(caret + 1));
    if (s == 0 || s > 64) throw Error(ErrorKind::ParseError, "bad field spec '" + std::string(spec) + "'");
    return {num(spec.substr(0, caret)), static_cast<unsigned>(s)};
}

inline FieldPtr make_field(std::string_view spec) {
    const auto [p, s] = parse_field_spec(spec);
    return Field::make(p, s);
}

/// 64-bit FNV-1a over p, s, the modulus and the generator.
inline std::string fingerprint(const Field& F) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](u64 v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(F.p());
    mix(F.s());
    for (u64 c : F.modulus()) mix(c);
    mix(F.generator_packed());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json field_summary(const Field& F) {
    json j;
    j["spec"] = std::to_string(F.p()) + "^" + std::to_string(F.s());
    j["p"] = F.p();
    j["s"] = F.s();
    j["q"] = F.q();
    j["size"] = F.size();
    j["representation"] = F.rep() == Rep::zech ? "zech" : "poly";
    j["modulus"] = F.modulus();  // low degree first
    j["generator_packed"] = F.generator_packed();
    j["fingerprint"] = fingerprint(F);
    return j;
}

inline json to_json(const QPoly& f) {
    json c = json::array();
    for (std::size_t i = 0; i < 6; ++i) c.push_back(f.field()->format(f[i]));
    return json{{"coeffs", c}};
}

/// Accepts {"coeffs": [...]} or a bare list of six element strings.
inline QPoly qpoly_from_json(const FieldPtr& F, const json& j) {
    const json& c = j.is_object() ? j.at("coeffs") : j;
    if (!c.is_array() || c.size() != 6) throw Error(ErrorKind::ParseError, "a q-polynomial needs six coefficients");
    QPoly f(F);
    for (std::size_t i = 0; i < 6; ++i) {
        if (c[i].is_string()) f.set(i, F->parse(c[i].get<std::string>()));
        else if (c[i].is_number_integer()) f.set(i, F->from_int(c[i].get<long long>()));
        else throw Error(ErrorKind::ParseError, "coefficient must be a string or an integer");
    }
    return f;
}

/// A polynomial given either as JSON or as "tag" / "tag:<element>", with an
/// optional "adjoint:" prefix.
struct PolySpec {
    QPoly poly;
    std::optional<FamilyTag> family;
    bool adjoint = false;
};

inline PolySpec parse_poly_spec(const FieldPtr& F, std::string_view text) {
    std::string t(text);
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    if (!t.empty() && (t.front() == '{' || t.front() == '[')) {
        json j;
        try {
            j = json::parse(t);
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, e.what());
        }
        return {qpoly_from_json(F, j), std::nullopt, false};
    }
    bool adj = false;
    if (t.rfind("adjoint:", 0) == 0) {
        adj = true;
        t = t.substr(8);
    }
    const auto colon = t.find(':');
    const std::string name = t.substr(0, colon);
    const auto tag = family_from_string(name);
    if (!tag) throw Error(ErrorKind::ParseError, "unknown family '" + name + "'");
    FamilySpec fs{*tag, std::nullopt};
    if (colon != std::string::npos) fs.param = F->parse(t.substr(colon + 1));
    QPoly f = build(F, fs);
    if (adj) f = adjoint(f);
    return {f, tag, adj};
}

inline json to_json(const Field& F, const WeightSpectrum& s) {
    json j = json::object();
    for (auto& [w, c] : s.counts) j[std::to_string(w)] = c;
    return j;
}

inline json to_json(const Field& F, const ScatterVerdict& v) {
    json j;
    j["scattered"] = v.scattered;
    j["witness"] = v.witness ? json(F.format(*v.witness)) : json(nullptr);
    return j;
}

inline json to_json(const Field& F, const EquivWitness& w) {
    return json{{"rho_exponent", w.e},
                {"a", F.format(w.a)},
                {"b", F.format(w.b)},
                {"c", F.format(w.c)},
                {"d", F.format(w.d)}};
}

inline EquivWitness witness_from_json(const Field& F, const json& j) {
    return {j.at("rho_exponent").get<long long>(), F.parse(j.at("a").get<std::string>()),
            F.parse(j.at("b").get<std::string>()), F.parse(j.at("c").get<std::string>()),
            F.parse(j.at("d").get<std::string>())};
}

inline json to_json(const Field& F, const EquivVerdict& v) {
    json j;
    j["verdict"] = std::string(to_string(v.kind));
    j["branch"] = v.branch;
    j["witness"] = v.witness ? to_json(F, *v.witness) : json(nullptr);
    j["searched"] = v.cursor.searched;
    return j;
}

inline json to_json(const EquivCursor& c) { return json{{"next_row", c.next_row}, {"searched", c.searched}}; }

inline EquivCursor cursor_from_json(const json& j) {
    return {j.at("next_row").get<u64>(), j.at("searched").get<u64>()};
}

inline json to_json(const RankDistribution& d) {
    json j = json::object();
    for (auto& [r, c] : d.counts) j[std::to_string(r)] = c;
    return j;
}

inline json to_json(const IntnResult& r) { return json{{"dims_chain", r.dims_chain}, {"intn", r.intn}}; }

/// Aligned "key  value" lines for the top level of a JSON object.
inline std::string table(const json& j) {
    if (!j.is_object()) return j.dump(2) + "\n";
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
    std::string out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out += it.key();
        out.append(width + 2 - it.key().size(), ' ');
        out += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        out += '\n';
    }
    return out;
}

}  // namespace scatlin::io

#endif  // SCATLIN_IO_HPP
