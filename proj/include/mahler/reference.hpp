#pragma once

// Printed reference values: the low-index members of every polynomial family
// and the first four rows of the measure table, transcribed verbatim.

#include "numbers.hpp"

#include <string>
#include <vector>

namespace mahler::reference {

struct Monomial {
    unsigned power;
    const char* rat;
    const char* root;
};

struct PrintedPoly {
    std::string family;
    long index;
    std::vector<Monomial> terms;

    ParityPolynomial poly() const
    {
        ParityPolynomial p(parity_of(terms.empty() ? 0 : terms.front().power));
        for (const auto& m : terms)
            p += ParityPolynomial::monomial(SqrtThreeNumber(parse_rational(m.rat), parse_rational(m.root)), m.power);
        return p;
    }
};

inline const std::vector<PrintedPoly>& recursive_polys()
{
    static const std::vector<PrintedPoly> t = {
        {"R", 0, {{1, "1", "0"}}},
        {"R", 1, {{2, "1/2", "0"}, {0, "-5/4", "0"}}},
        {"R", 2, {{3, "1/3", "0"}, {1, "1/2", "0"}}},
        {"R", 3, {{4, "1/4", "0"}, {2, "3/4", "0"}, {0, "-73/8", "0"}}},
        {"S", 0, {{0, "-1/2", "0"}}},
        {"S", 1, {{1, "-1/2", "0"}}},
        {"S", 2, {{2, "-1/2", "0"}, {0, "-1/3", "0"}}},
        {"S", 3, {{3, "-1/2", "0"}, {1, "-1", "0"}}},
        {"P", 0, {{1, "1", "0"}}},
        {"P", 1, {{2, "1/2", "0"}, {0, "-13/2", "0"}}},
        {"P", 2, {{3, "1/3", "0"}, {1, "-1", "0"}}},
        {"P", 3, {{4, "1/4", "0"}, {2, "-3/2", "0"}, {0, "-623/4", "0"}}},
        {"Q", 0, {{0, "2", "0"}}},
        {"Q", 1, {{1, "2", "0"}}},
        {"Q", 2, {{2, "2", "0"}, {0, "10/3", "0"}}},
        {"Q", 3, {{3, "2", "0"}, {1, "10", "0"}}},
        {"Y", 0, {{1, "-2", "0"}}},
        {"Y", 1, {{2, "-1", "0"}, {0, "9/2", "0"}}},
        {"Y", 2, {{3, "-2/3", "0"}, {1, "3", "0"}}},
        {"Y", 3, {{4, "-1/2", "0"}, {2, "9/2", "0"}, {0, "81/4", "0"}}},
        {"Z", 0, {{1, "-2", "0"}}},
        {"Z", 1, {{2, "-1", "0"}, {0, "9", "0"}}},
        {"Z", 2, {{3, "-2/3", "0"}, {1, "-6", "0"}}},
        {"Z", 3, {{4, "-1/2", "0"}, {2, "-9", "0"}, {0, "567/4", "0"}}},
    };
    return t;
}

inline const std::vector<PrintedPoly>& series_polys()
{
    static const std::vector<PrintedPoly> t = {
        {"A", 0, {{1, "0", "-4/3"}}},
        {"A", 1, {{1, "-2/3", "0"}}},
        {"A", 2, {{3, "0", "-4/9"}, {1, "0", "-2/3"}}},
        {"A", 3, {{3, "-2/3", "0"}, {1, "-4/3", "0"}}},
        {"B", 0, {{0, "-2/3", "0"}}},
        {"B", 1, {{2, "0", "-2/3"}, {0, "0", "-1/3"}}},
        {"B", 2, {{2, "-2/3", "0"}, {0, "-4/9", "0"}}},
        {"B", 3, {{4, "0", "-1/3"}, {2, "0", "-1"}, {0, "0", "-13/30"}}},
    };
    return t;
}

struct TableEntry {
    long n;
    bool derivative;
    bool zeta;  // zeta term when true, L term otherwise
    long h;
    const char* rat;
    const char* root;
};

inline const std::vector<TableEntry>& measure_table()
{
    static const std::vector<TableEntry> t = {
        {1, false, false, 0, "0", "5/4"},
        {2, false, true, 1, "91/18", "0"},
        {2, false, false, 0, "0", "5/12"},
        {3, false, true, 1, "91/36", "0"},
        {3, false, false, 0, "0", "5/12"},
        {3, false, false, 1, "0", "153/16"},
        {4, false, true, 1, "91/36", "0"},
        {4, false, true, 2, "3751/108", "0"},
        {4, false, false, 0, "0", "35/108"},
        {4, false, false, 1, "0", "51/8"},
        {1, true, false, 0, "5/3", "0"},
        {2, true, true, 1, "-182/9", "0"},
        {2, true, false, 0, "5/9", "0"},
        {3, true, true, 1, "-91/9", "0"},
        {3, true, false, 0, "5/9", "0"},
        {3, true, false, 1, "-17/18", "0"},
        {4, true, true, 1, "-91/9", "0"},
        {4, true, true, 2, "3751/81", "0"},
        {4, true, false, 0, "35/81", "0"},
        {4, true, false, 1, "-17/27", "0"},
    };
    return t;
}

inline SqrtThreeNumber entry_value(const TableEntry& e) { return {parse_rational(e.rat), parse_rational(e.root)}; }

}  // namespace mahler::reference
