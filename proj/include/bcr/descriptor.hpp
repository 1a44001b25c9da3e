#pragma once

#include <json.hpp>
#include <regex>
#include <string>

#include "cyclic_code.hpp"
#include "gf2_poly.hpp"

namespace bcr {

/// {family, n, r, g_hex, factors: [{poly_hex, degree, exponent}], modulus_hex}
inline nlohmann::json to_json(const CyclicCode& code) {
    nlohmann::json j;
    j["family"] = code.family().name();
    j["n"] = code.n();
    j["r"] = code.r();
    j["g_hex"] = to_hex(code.generator());
    j["factors"] = nlohmann::json::array();
    for (const auto& f : code.factors()) {
        nlohmann::json fj{{"poly_hex", to_hex(f.poly())}, {"degree", f.degree()}};
        fj["exponent"] = f.exponent ? nlohmann::json(*f.exponent) : nlohmann::json(nullptr);
        j["factors"].push_back(fj);
    }
    j["modulus_hex"] = code.context() ? nlohmann::json(to_hex(code.context()->modulus())) : nlohmann::json(nullptr);
    return j;
}

/// Parsed "bch(e,m)" / "melas(m)" / "generic".
inline Family parse_family(const std::string& s) {
    static const std::regex bch(R"(\s*bch\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)"), melas(R"(\s*melas\s*\(\s*(\d+)\s*\)\s*)");
    std::smatch mt;
    if (std::regex_match(s, mt, bch)) return {FamilyKind::bch, std::stoi(mt[1]), std::stoi(mt[2])};
    if (std::regex_match(s, mt, melas)) return {FamilyKind::melas, 0, std::stoi(mt[1])};
    if (s == "generic") return {};
    throw ParseError("unknown family '" + s + "'");
}

/// Rebuilds a code from its descriptor. Family codes are regenerated from
/// (e, m, modulus); g_hex, when present, must agree with the rebuilt generator.
inline CyclicCode code_from_json(const nlohmann::json& j) {
    const Family fam = parse_family(j.value("family", std::string("generic")));
    std::optional<BinaryPolynomial> modulus;
    if (j.contains("modulus_hex") && !j["modulus_hex"].is_null()) modulus = parse_polynomial(j["modulus_hex"].get<std::string>());

    CyclicCode code = [&] {
        switch (fam.kind) {
            case FamilyKind::bch: return make_bch(fam.e, fam.m, modulus);
            case FamilyKind::melas: return make_melas(fam.m, modulus);
            default: {
                if (!j.contains("n") || !j.contains("g_hex")) throw ParseError("generic descriptor needs n and g_hex");
                const auto g = parse_polynomial(j["g_hex"].get<std::string>());
                FieldPtr split;
                if (modulus) split = make_field(*modulus);
                return make_cyclic_code(j["n"].get<int>(), g, split);
            }
        }
    }();
    if (j.contains("g_hex") && !(parse_polynomial(j["g_hex"].get<std::string>()) == code.generator()))
        throw CodeError("descriptor g_hex does not match the rebuilt generator " + to_hex(code.generator()));
    if (j.contains("n") && j["n"].get<int>() != code.n()) throw CodeError("descriptor n does not match the family");
    if (j.contains("r") && j["r"].get<int>() != code.r()) throw CodeError("descriptor r does not match the generator");
    return code;
}

}  // namespace bcr
