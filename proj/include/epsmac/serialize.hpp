// JSON rendering of coefficients, Laurent polynomials and basis entries.
#ifndef EPSMAC_SERIALIZE_HPP
#define EPSMAC_SERIALIZE_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "epsmac/field.hpp"
#include "epsmac/laurent.hpp"
#include "epsmac/macdonald.hpp"

namespace epsmac {

inline constexpr const char* kSchemaVersion = "eps-macdonald/1";

inline nlohmann::json to_json(const Rational& r) { return rational_to_string(r); }

inline nlohmann::json to_json(const PolyQ& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) a.push_back(rational_to_string(c));
    return a;
}

/// {"num": [c0, c1, ...], "den": [d0, d1, ...]}, low degree first.
inline nlohmann::json to_json(const RatFuncQ& f) {
    return nlohmann::json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline PolyQ poly_from_json(const nlohmann::json& j) {
    std::vector<Rational> cs;
    for (const auto& c : j) cs.push_back(rational_from_string(c.get<std::string>()));
    return PolyQ(std::move(cs));
}

inline RatFuncQ ratfunc_from_json(const nlohmann::json& j) {
    return RatFuncQ(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

/// [{"exp2": [...], "coef": ...}] in ascending lex order of exp2.
template <class C>
nlohmann::json to_json(const LaurentPolynomial<C>& f) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [e, c] : f) a.push_back({{"exp2", e.entries()}, {"coef", to_json(c)}});
    return a;
}

inline Laurent laurent_from_json(int n, const nlohmann::json& j) {
    Laurent f(n);
    for (const auto& t : j) f.add_term(ExpVec::doubled(t.at("exp2").get<std::vector<int>>()), ratfunc_from_json(t.at("coef")));
    return f;
}

inline nlohmann::json to_json(const OrthoEntry& e) {
    return nlohmann::json{
        {"lambda", e.lam.parts()}, {"F", to_json(e.F)}, {"norm2", to_json(e.norm2)}, {"eig", to_json(e.eig)}};
}

}  // namespace epsmac

#endif  // EPSMAC_SERIALIZE_HPP
