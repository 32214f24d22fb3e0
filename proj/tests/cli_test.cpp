#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support.hpp"

using namespace gaussq;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "gaussq");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    cli::CliRequest req;
    if (auto code = cli::parse(static_cast<int>(argv.size()), argv.data(), req, out, err))
        return {*code, out.str(), err.str()};
    const int code = cli::run(req, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');) out.push_back(f);
    return out;
}

}  // namespace

TEST(Cli, HermiteThreeCsv) {
    const auto r = invoke({"hermite", "--n", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 4u);
    EXPECT_EQ(ls[0], "i,x,w,omega");
    const auto mid = fields(ls[2]);
    EXPECT_EQ(mid[0], "1");
    EXPECT_EQ(std::stod(mid[1]), 0.0);
    EXPECT_NEAR(std::stod(mid[2]), 1.181635900603677, 1e-14);
}

TEST(Cli, LaguerreOne) {
    const auto r = invoke({"laguerre", "--n", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto row = fields(lines(r.out)[1]);
    EXPECT_NEAR(std::stod(row[1]), 1.0, 1e-15);
    EXPECT_NEAR(std::stod(row[2]), 1.0, 1e-15);
}

TEST(Cli, RadauJson) {
    const auto r = invoke({"radau-laguerre", "--n", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(j["kind"], "radau-laguerre");
    EXPECT_NEAR(std::stod(j["boundary_weight"].get<std::string>()), 1.0 / 3, 1e-15);
    EXPECT_NEAR(std::stod(j["nodes"][0].get<std::string>()), 3 - std::sqrt(3.0), 1e-14);
}

TEST(Cli, RadauCsvBoundaryRow) {
    const auto r = invoke({"radau-laguerre", "--n", "2"});
    ASSERT_EQ(r.code, 0);
    const auto row = fields(lines(r.out)[1]);
    EXPECT_EQ(row[0], "0");
    EXPECT_EQ(std::stod(row[1]), 0.0);
    EXPECT_NEAR(std::stod(row[2]), 1.0 / 3, 1e-15);
}

TEST(Cli, ThresholdAndStats) {
    const auto r = invoke({"laguerre", "--n", "1000", "--threshold", "1e-30", "--stats"});
    ASSERT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_GT(ls.size(), 100u);
    EXPECT_LT(ls.size(), 1000u);
    const auto it = fields(ls[ls.size() - 2]);
    EXPECT_EQ(it[0], "mean_iterations");
    EXPECT_LE(std::stod(it[1]), 2.5);
    EXPECT_EQ(fields(ls.back())[0], "mean_terms");
}

TEST(Cli, CsvAndJsonCarryIdenticalValues) {
    const auto csv = invoke({"laguerre", "--n", "25", "--alpha", "1.5", "--barycentric"});
    const auto js = invoke({"laguerre", "--n", "25", "--alpha", "1.5", "--barycentric", "--format", "json"});
    ASSERT_EQ(csv.code, 0);
    ASSERT_EQ(js.code, 0);
    const auto j = nlohmann::ordered_json::parse(js.out);
    const auto ls = lines(csv.out);
    ASSERT_EQ(ls.size(), 26u);
    EXPECT_EQ(ls[0], "i,x,w,omega,v");
    for (int i = 0; i < 25; ++i) {
        const auto f = fields(ls[i + 1]);
        EXPECT_EQ(f[1], j["nodes"][i].get<std::string>());
        EXPECT_EQ(f[2], j["weights"][i].get<std::string>());
        EXPECT_EQ(f[3], j["scaled_weights"][i].get<std::string>());
        EXPECT_EQ(f[4], j["barycentric"][i].get<std::string>());
    }
}

TEST(Cli, UnnormalizedUsesGamma) {
    const auto r = invoke({"laguerre", "--n", "1", "--alpha", "2", "--no-normalized"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(std::stod(fields(lines(r.out)[1])[2]), 2.0, 1e-14);
}

TEST(Cli, HigherDigits) {
    for (const char* d : {"30", "50"}) {
        const auto r = invoke({"hermite", "--n", "2", "--digits", d});
        ASSERT_EQ(r.code, 0) << r.err;
        const auto x = fields(lines(r.out)[2])[1];
        const test::ref_float v(x);
        EXPECT_LT(abs(v - sqrt(test::ref_float(0.5))), test::ref_float(std::string("1e-") + std::to_string(std::stoi(d) - 2)));
    }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({"hermite", "--n", "0"}).code, 2);
    EXPECT_EQ(invoke({"hermite"}).code, 2);
    EXPECT_EQ(invoke({"hermite", "--n", "3", "--digits", "7"}).code, 2);
    EXPECT_EQ(invoke({"laguerre", "--n", "3", "--alpha", "-1"}).code, 2);
    EXPECT_EQ(invoke({"laguerre", "--n", "3", "--alpha", "abc"}).code, 2);
    EXPECT_EQ(invoke({"chebyshev", "--n", "3"}).code, 2);
    EXPECT_EQ(invoke({"hermite", "--n", "3", "--alpha", "1"}).code, 2);
    EXPECT_EQ(invoke({"radau-laguerre", "--n", "3", "--barycentric"}).code, 2);
    EXPECT_EQ(invoke({"hermite", "--n", "3", "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"hermite", "--n", "3", "--threshold", "-1"}).code, 2);
    EXPECT_EQ(invoke({"laguerre", "--n", "3", "--alpha", "200", "--no-normalized"}).code, 2);
}

TEST(Cli, Help) {
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("--alpha"), std::string::npos);
}
