#include "cli.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <sstream>

using namespace mahler;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "mahler");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args)
{
    args.insert(args.begin(), "--json");
    Outcome o = invoke(args);
    EXPECT_EQ(o.code, 0) << o.err;
    return json::parse(o.out);
}

}  // namespace

TEST(Cli, PolyText)
{
    Outcome o = invoke({"poly", "--family", "R", "--k", "3"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "x^4/4 + 3*x^2/4 - 73/8\n");
    EXPECT_EQ(invoke({"poly", "--family", "S", "--k", "1"}).out, "-x/2\n");
}

TEST(Cli, PolyJsonRoundTrip)
{
    for (const char* fam : {"R", "S", "P", "Q", "Y", "Z"}) {
        for (int k = 0; k <= 6; ++k) {
            json j = invoke_json({"poly", "--family", fam, "--k", std::to_string(k)});
            EXPECT_EQ(j.at("family"), fam);
            EXPECT_EQ(j.at("k"), k);
            EXPECT_EQ(render::poly_from_json(j), get_poly(parse_family(fam), k)) << fam << k;
        }
    }
}

TEST(Cli, AltPolyMethodsAgree)
{
    json s = invoke_json({"altpoly", "--family", "B", "--m", "5", "--method", "series"});
    json c = invoke_json({"altpoly", "--family", "B", "--m", "5", "--method", "convolution"});
    EXPECT_EQ(s.at("coeffs"), c.at("coeffs"));
    EXPECT_EQ(c.at("method"), "convolution");
    EXPECT_EQ(invoke({"altpoly", "--family", "C", "--m", "2", "--method", "convolution"}).code, 1);
}

TEST(Cli, IntegralWithCheck)
{
    json j = invoke_json({"integral", "--which", "f1", "--a", "1", "--b", "2", "--k", "0", "--check"});
    EXPECT_EQ(j.at("a"), "1/1");
    EXPECT_NEAR(std::stod(j.at("value").get<std::string>()), 0.12432028078909867, 1e-16);
    EXPECT_NEAR(std::stod(j.at("quadrature").get<std::string>()), 0.12432028078909867, 1e-13);
    EXPECT_EQ(j.at("exact").size(), 3u);
}

TEST(Cli, IntegralDecimalParametersAreExact)
{
    json j = invoke_json({"integral", "--which", "gsum", "--a", "0.25", "--b", "-1/2", "--k", "1"});
    EXPECT_EQ(j.at("a"), "1/4");
    EXPECT_EQ(j.at("b"), "-1/2");
}

TEST(Cli, IntegralDomainErrors)
{
    EXPECT_EQ(invoke({"integral", "--which", "f1", "--a", "2", "--b", "2", "--k", "0"}).code, 1);
    EXPECT_EQ(invoke({"integral", "--which", "f1", "--a", "1", "--b", "0", "--k", "0"}).code, 1);
    EXPECT_EQ(invoke({"integral", "--which", "f9", "--a", "1", "--b", "2", "--k", "0"}).code, 2);
}

TEST(Cli, SpecialValues)
{
    json z = invoke_json({"special", "--zeta", "3"});
    EXPECT_EQ(z.at("value").get<std::string>().substr(0, 20), "1.202056903159594285");
    json l = invoke_json({"--digits", "40", "special", "--lchi3", "4"});
    EXPECT_EQ(l.at("value").get<std::string>().substr(0, 22), "0.94002568087712376869");
    json id = invoke_json({"special", "--identity", "omega-diff", "--h", "1"});
    EXPECT_EQ(id.at("weight"), 4);
    EXPECT_LT(std::stod(id.at("difference").get<std::string>()), 1e-25);
    EXPECT_EQ(invoke({"special"}).code, 2);
    EXPECT_EQ(invoke({"special", "--zeta", "1"}).code, 1);
}

TEST(Cli, CoeffsJsonShape)
{
    json j = invoke_json({"coeffs", "--n", "3"});
    EXPECT_EQ(j.at("max_n"), 3);
    ASSERT_EQ(j.at("a").size(), 3u);
    EXPECT_EQ(j.at("a")[1].size(), 2u);
    EXPECT_EQ(render::sqrt3_from_json(j.at("a")[2][0]), SqrtThreeNumber(make_rational(552, 5)));
    EXPECT_EQ(j.at("d").size(), 4u);
}

TEST(Cli, MeasureJsonRoundTrip)
{
    for (const char* basis : {"critical", "derivative"}) {
        for (int n = 1; n <= 6; ++n) {
            json j = invoke_json({"measure", "--n", std::to_string(n), "--basis", basis});
            EXPECT_EQ(render::expression_from_json(j), measure_expression(n, parse_basis(basis)));
        }
    }
    json m1 = invoke_json({"measure", "--n", "1"});
    EXPECT_EQ(m1.at("numeric").get<std::string>().substr(0, 20), "0.538443245365750856");
}

TEST(Cli, TableBothBases)
{
    json rows = invoke_json({"table", "--max-n", "4"});
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[3].at("critical").at("numeric"), rows[3].at("derivative").at("numeric"));
}

TEST(Cli, VerifySuiteExitCode)
{
    Outcome o = invoke({"verify", "--suite", "measures"});
    EXPECT_EQ(o.code, 0) << o.out;
    EXPECT_NE(o.out.find(" 0 failures"), std::string::npos);
    json j = invoke_json({"verify", "--suite", "polys"});
    bool noted = false;
    for (const auto& c : j.at("checks"))
        if (c.contains("erratum")) noted = true;
    EXPECT_TRUE(noted);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"poly", "--family", "R"}).code, 2);
    EXPECT_EQ(invoke({"poly", "--family", "X", "--k", "1"}).code, 2);
    EXPECT_EQ(invoke({"poly", "--family", "R", "--k", "-1"}).code, 2);
    EXPECT_EQ(invoke({"--digits", "5", "measure", "--n", "1"}).code, 2);
    EXPECT_EQ(invoke({"measure", "--n", "0"}).code, 2);
    EXPECT_EQ(invoke({"bogus"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, GlobalFlagsAfterSubcommand)
{
    Outcome o = invoke({"poly", "--family", "Q", "--k", "2", "--json"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(json::parse(o.out).at("parity"), "even");
}

TEST(ParseExact, Literals)
{
    EXPECT_EQ(cli::parse_exact("3"), Rational(3));
    EXPECT_EQ(cli::parse_exact("-1/2"), make_rational(-1, 2));
    EXPECT_EQ(cli::parse_exact("0.25"), make_rational(1, 4));
    EXPECT_EQ(cli::parse_exact("2.5e-3"), make_rational(1, 400));
    EXPECT_EQ(cli::parse_exact("+1.5E2"), Rational(150));
    EXPECT_THROW(cli::parse_exact("."), DomainError);
}

namespace {

// coefficients are the parenthesized groups followed by '*'
std::vector<SqrtThreeNumber> parenthesized(const std::string& line)
{
    static const std::regex group(R"(\(([^()]*)\)\*)");
    std::vector<SqrtThreeNumber> out;
    for (std::sregex_iterator it(line.begin(), line.end(), group), end; it != end; ++it) out.push_back(parse_sqrt3((*it)[1]));
    return out;
}

}  // namespace

TEST(Cli, MeasureTextAndJsonCarryTheSameExactValues)
{
    for (const char* basis : {"critical", "derivative"}) {
        for (int n = 1; n <= 6; ++n) {
            std::vector<std::string> args{"measure", "--n", std::to_string(n), "--basis", basis};
            std::string text = invoke(args).out;
            json j = invoke_json(args);
            std::vector<SqrtThreeNumber> from_text = parenthesized(text.substr(0, text.find('\n')));
            ASSERT_EQ(from_text.size(), j.at("terms").size()) << text;
            for (std::size_t i = 0; i < from_text.size(); ++i)
                EXPECT_EQ(from_text[i], render::sqrt3_from_json(j.at("terms")[i].at("coeff"))) << n << basis;
            EXPECT_NE(text.find(j.at("numeric").get<std::string>()), std::string::npos);
        }
    }
}

TEST(Cli, CoeffsTextAndJsonCarryTheSameExactValues)
{
    std::string text = invoke({"coeffs", "--n", "4"}).out;
    json j = invoke_json({"coeffs", "--n", "4"});
    std::istringstream lines(text);
    std::string line;
    std::size_t seen = 0;
    while (std::getline(lines, line)) {
        char name = line[0];
        long n = std::stol(line.substr(2)), col = std::stol(line.substr(line.find(',') + 1));
        std::string value = line.substr(line.find("= ") + 2);
        value = value.substr(0, value.find("  ~"));
        long first_row = name == 'd' ? 0 : 1;
        EXPECT_EQ(parse_sqrt3(value), render::sqrt3_from_json(j.at(std::string(1, name))[n - first_row][col])) << line;
        ++seen;
    }
    EXPECT_GT(seen, 30u);
}

TEST(Cli, TableRowsMatchMeasureCommand)
{
    json rows = invoke_json({"table", "--max-n", "2"});
    for (int n = 1; n <= 2; ++n)
        EXPECT_EQ(render::expression_from_json(rows[n - 1].at("critical")), measure_expression(n, Basis::critical));
    Outcome o = invoke({"--digits", "15", "measure", "--n", "1"});
    EXPECT_NE(o.out.find("0.538443"), std::string::npos);
}
