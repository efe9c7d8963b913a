#pragma once

// JSON and text renderings shared by the CLI and its tests.

#include <mahler/verify.hpp>

#include <json.hpp>

namespace mahler::render {

using nlohmann::json;

inline json to_json(const SqrtThreeNumber& v) { return {{"rat", rational_json(v.rat())}, {"root", rational_json(v.root())}}; }

inline SqrtThreeNumber sqrt3_from_json(const json& j)
{
    return {parse_rational(j.at("rat").get<std::string>()), parse_rational(j.at("root").get<std::string>())};
}

// coefficients in ascending order over the parity's powers
inline json poly_coeffs(const ParityPolynomial& p)
{
    json arr = json::array();
    int offset = p.parity() == Parity::odd ? 1 : 0;
    for (long pw = offset; pw <= p.degree(); pw += 2) arr.push_back(to_json(p.coeff(pw)));
    return arr;
}

inline ParityPolynomial poly_from_json(const json& j)
{
    Parity par = j.at("parity").get<std::string>() == "odd" ? Parity::odd : Parity::even;
    ParityPolynomial p(par);
    unsigned pw = par == Parity::odd ? 1 : 0;
    for (const auto& c : j.at("coeffs")) {
        p += ParityPolynomial::monomial(sqrt3_from_json(c), pw);
        pw += 2;
    }
    return p;
}

inline json poly_json(const std::string& family, const char* index_key, long index, const ParityPolynomial& p)
{
    return {{"family", family}, {index_key, index}, {"parity", parity_name(p.parity())}, {"coeffs", poly_coeffs(p)}};
}

inline json expression_json(const MahlerExpression& e, const std::string& numeric)
{
    json terms = json::array();
    for (const auto& t : e.terms) terms.push_back({{"kind", term_kind_name(t.kind)}, {"h", t.h}, {"coeff", to_json(t.coeff)}});
    return {{"n", e.n}, {"basis", basis_name(e.basis)}, {"terms", terms}, {"numeric", numeric}};
}

inline MahlerExpression expression_from_json(const json& j)
{
    MahlerExpression e;
    e.n = j.at("n").get<long>();
    e.basis = parse_basis(j.at("basis").get<std::string>());
    for (const auto& t : j.at("terms"))
        e.terms.push_back({t.at("kind").get<std::string>() == "zeta" ? TermKind::zeta : TermKind::L, t.at("h").get<long>(),
                           sqrt3_from_json(t.at("coeff"))});
    return e;
}

inline json table_json(const std::map<CoeffIndex, SqrtThreeNumber>& m)
{
    json rows = json::array();
    long current = -1;
    for (const auto& [idx, v] : m) {
        if (idx.first != current) {
            rows.push_back(json::array());
            current = idx.first;
        }
        rows.back().push_back(to_json(v));
    }
    return rows;
}

inline json coeffs_json(const CoefficientTable& t)
{
    return {{"max_n", t.max_n}, {"a", table_json(t.a)}, {"b", table_json(t.b)}, {"c", table_json(t.c)}, {"d", table_json(t.d)}};
}

inline json symbolic_json(const SymbolicForm& f)
{
    json arr = json::array();
    for (const auto& [key, c] : f.terms) {
        auto [ia, ib, pe] = key;
        arr.push_back({{"log_a_power", ia}, {"log_b_power", ib}, {"pi_power", pe}, {"coeff", to_json(c)}});
    }
    return arr;
}

inline json report_json(const VerifyReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j = {{"suite", c.suite}, {"name", c.name},         {"target", c.target},
                  {"error", c.error}, {"tolerance", c.tolerance}, {"passed", c.passed}};
        if (!c.note.empty()) j["erratum"] = c.note;
        checks.push_back(j);
    }
    return {{"passed", r.all_passed()}, {"failures", r.failures()}, {"checks", checks}};
}

}  // namespace mahler::render
