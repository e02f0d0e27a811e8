#pragma once

// JSON algebra and orbit files.
//
// Algebra: {"name", "labels": [...], "rank", "brackets": [{"i", "j",
// "coeffs": {k: "c"}}], "invariants": ["expr", ...], "killing_scale": "q",
// "casimir_scale": "q"}. Generators in i, j, k are labels or 0-based
// indices; coefficients use the Gaussian-rational text form.
//
// Orbit: {"algebra": path | preset name | inline algebra, "constants":
// [{"i": 1, "c": ["c0", "c1", ...]}], "classical_constants": ["..."],
// "witness": ["..."], "order": {"precedence": [labels]}, "map":
// "standard" | "symmetric"}. "i" is 1-based and "c" lists the coefficients
// of h^0, h^1, ...

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <dqorbit/errors.hpp>
#include <dqorbit/expr.hpp>
#include <dqorbit/lie_algebra.hpp>
#include <dqorbit/orbit.hpp>
#include <dqorbit/presets.hpp>

namespace dqorbit
{

using json = nlohmann::ordered_json;

namespace detail
{

inline std::size_t json_generator(const LieAlgebra &L, const json &v)
{
    if (v.is_number_integer()) {
        long k = v.get<long>();
        if (k < 0 || static_cast<std::size_t>(k) >= L.dim()) {
            throw LoadError("generator index " + std::to_string(k) + " out of range");
        }
        return static_cast<std::size_t>(k);
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (auto k = generator_index(L, s)) {
            return *k;
        }
        if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
            return json_generator(L, json(std::stol(s)));
        }
        throw UnknownIdentifier("no generator named " + s);
    }
    throw LoadError("generator must be a label or an index");
}

inline std::string json_text(const json &v, const std::string &what)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long>());
    }
    throw LoadError(what + " must be a string or an integer");
}

inline json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw LoadError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw LoadError(path + ": " + e.what());
    }
}

} // namespace detail

inline LieAlgebra algebra_from_json(const json &j)
{
    try {
        if (!j.is_object()) {
            throw LoadError("algebra must be a JSON object");
        }
        std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
        LieAlgebra L(j.value("name", std::string("algebra")), labels, j.value("rank", std::size_t{1}));
        for (const auto &b : j.value("brackets", json::array())) {
            std::size_t i = detail::json_generator(L, b.at("i"));
            std::size_t k = detail::json_generator(L, b.at("j"));
            std::vector<GaussRat> coeffs(L.dim());
            for (const auto &[key, c] : b.at("coeffs").items()) {
                coeffs[detail::json_generator(L, json(key))] += parse_gauss(detail::json_text(c, "coefficient"));
            }
            L.set_bracket(i, k, coeffs);
        }
        if (j.contains("invariants")) {
            std::vector<CommPoly> inv;
            for (const auto &e : j.at("invariants")) {
                inv.push_back(parse_commutative(e.get<std::string>(), L));
            }
            L.set_invariants(std::move(inv));
        }
        if (j.contains("killing_scale")) {
            L.set_killing_scale(parse_gauss(detail::json_text(j.at("killing_scale"), "killing_scale")));
        }
        if (j.contains("casimir_scale")) {
            L.set_casimir_scale(parse_gauss(detail::json_text(j.at("casimir_scale"), "casimir_scale")));
        }
        return L;
    } catch (const json::exception &e) {
        throw LoadError(std::string("malformed algebra: ") + e.what());
    }
}

inline json algebra_to_json(const LieAlgebra &L)
{
    json j;
    j["name"] = L.name();
    j["labels"] = L.labels();
    j["rank"] = L.rank();
    json brackets = json::array();
    for (std::size_t a = 0; a < L.dim(); ++a) {
        for (std::size_t b = a + 1; b < L.dim(); ++b) {
            json coeffs = json::object();
            for (std::size_t k = 0; k < L.dim(); ++k) {
                const GaussRat &c = L.structure_constant(a, b, k);
                if (!c.is_zero()) {
                    coeffs[L.labels()[k]] = c.str();
                }
            }
            if (!coeffs.empty()) {
                brackets.push_back({{"i", L.labels()[a]}, {"j", L.labels()[b]}, {"coeffs", coeffs}});
            }
        }
    }
    j["brackets"] = brackets;
    json inv = json::array();
    for (const auto &p : L.invariants()) {
        inv.push_back(p.str(L.coordinate_names()));
    }
    j["invariants"] = inv;
    j["killing_scale"] = L.killing_scale().str();
    j["casimir_scale"] = L.casimir_scale().str();
    return j;
}

// Preset name or path to a JSON file.
inline LieAlgebra load_algebra(const std::string &source)
{
    for (const auto &n : presets::names()) {
        if (n == source) {
            return presets::by_name(n);
        }
    }
    return algebra_from_json(detail::read_json_file(source));
}

inline MonomialOrder order_from_labels(const LieAlgebra &L, const std::vector<std::string> &precedence)
{
    if (precedence.size() != L.dim()) {
        throw LoadError("order must list every generator exactly once");
    }
    std::vector<std::size_t> idx;
    std::vector<bool> seen(L.dim(), false);
    for (const auto &s : precedence) {
        std::size_t k = detail::json_generator(L, json(s));
        if (seen[k]) {
            throw LoadError("generator " + s + " repeated in order");
        }
        seen[k] = true;
        idx.push_back(k);
    }
    return MonomialOrder(idx);
}

struct OrbitFile {
    OrbitSpec spec;
    MonomialOrder order;
    QuantizationMap map = QuantizationMap::Standard;
};

inline OrbitFile orbit_from_json(const json &j, const std::filesystem::path &base_dir = {})
{
    try {
        if (!j.is_object()) {
            throw LoadError("orbit must be a JSON object");
        }
        LieAlgebra L;
        const json &a = j.at("algebra");
        if (a.is_object()) {
            L = algebra_from_json(a);
        } else {
            std::string src = a.get<std::string>();
            bool preset = false;
            for (const auto &n : presets::names()) {
                preset = preset || n == src;
            }
            if (!preset && !base_dir.empty() && std::filesystem::path(src).is_relative()) {
                src = (base_dir / src).string();
            }
            L = load_algebra(src);
        }
        if (L.invariants().empty()) {
            throw LoadError("algebra declares no invariants");
        }
        const std::size_t m = L.invariants().size();
        std::vector<HPoly> constants(m);
        std::vector<bool> given(m, false);
        for (const auto &c : j.at("constants")) {
            long i = c.value("i", 1L);
            if (i < 1 || static_cast<std::size_t>(i) > m) {
                throw LoadError("constant index " + std::to_string(i) + " out of range");
            }
            std::vector<Scalar> coeffs;
            for (const auto &t : c.at("c")) {
                coeffs.push_back(parse_scalar(detail::json_text(t, "constant")));
            }
            constants[static_cast<std::size_t>(i - 1)] = HPoly(std::move(coeffs));
            given[static_cast<std::size_t>(i - 1)] = true;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (!given[i]) {
                throw LoadError("missing constant c_" + std::to_string(i + 1));
            }
        }
        OrbitFile out{OrbitSpec{L, {}, constants, std::nullopt, std::nullopt}, MonomialOrder::declaration(L.dim()),
                      QuantizationMap::Standard};
        if (j.contains("classical_constants")) {
            std::vector<Scalar> c0;
            for (const auto &t : j.at("classical_constants")) {
                c0.push_back(parse_scalar(detail::json_text(t, "classical constant")));
            }
            out.spec.classical_constants = c0;
        }
        if (j.contains("witness")) {
            std::vector<GaussRat> w;
            for (const auto &t : j.at("witness")) {
                w.push_back(parse_gauss(detail::json_text(t, "witness coordinate")));
            }
            out.spec.witness = w;
        }
        if (j.contains("order")) {
            out.order = order_from_labels(L, j.at("order").at("precedence").get<std::vector<std::string>>());
        }
        if (j.contains("map")) {
            out.map = quantization_map_from_string(j.at("map").get<std::string>());
        }
        return out;
    } catch (const json::exception &e) {
        throw LoadError(std::string("malformed orbit: ") + e.what());
    }
}

inline OrbitFile load_orbit(const std::string &path)
{
    return orbit_from_json(detail::read_json_file(path), std::filesystem::path(path).parent_path());
}

inline json orbit_to_json(const OrbitFile &o)
{
    json j;
    j["algebra"] = algebra_to_json(o.spec.algebra);
    json cs = json::array();
    for (std::size_t i = 0; i < o.spec.constants.size(); ++i) {
        json c = json::array();
        const HPoly &p = o.spec.constants[i];
        for (long k = 0; k <= p.degree(); ++k) {
            c.push_back(p.coeff(static_cast<std::size_t>(k)).str());
        }
        cs.push_back({{"i", i + 1}, {"c", c}});
    }
    j["constants"] = cs;
    std::vector<std::string> prec;
    for (auto k : o.order.precedence()) {
        prec.push_back(o.spec.algebra.labels()[k]);
    }
    j["order"] = {{"precedence", prec}};
    j["map"] = to_string(o.map);
    return j;
}

// {monomial text: coefficient text}, monomials in printing order.
inline json poly_to_json(const CommPoly &p, const std::vector<std::string> &names, const MonomialOrder &order)
{
    json j = json::object();
    for (const auto &[m, c] : p.sorted_terms(order)) {
        std::vector<std::string> f;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] > 0) {
                f.push_back(detail::power(names[k], m[k]));
            }
        }
        std::string key = f.empty() ? "1" : detail::join_factors(f);
        j[key] = c.str();
    }
    return j;
}

inline json uelement_to_json(const UElement &a, const std::vector<std::string> &labels)
{
    json j = json::object();
    for (const auto &[m, c] : a.terms()) {
        std::string key = m.empty() ? "1" : UElement::monomial(m).str(labels);
        j[key] = c.str();
    }
    return j;
}

} // namespace dqorbit
