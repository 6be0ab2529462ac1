#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "seidel_cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
    std::ostringstream out;
    std::ostringstream err;
    std::istringstream in(input);
    const int code = seidel::cli::run(args, {out, err, in});
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    std::size_t k = 0;
    for (char c : s) k += c == '\n';
    return k;
}

} // namespace

TEST(Cli, EnergyText) {
    const auto r = run({"energy", "A_:0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("energy: 2.2360679774997898"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("sigma: 1"), std::string::npos);
}

TEST(Cli, EnergyJsonl) {
    const auto r = run({"--format", "jsonl", "energy", "A_:0"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["energy"].get<double>(), 2.2360679774997898);
    EXPECT_EQ(j["instance"], "A_:0");
    EXPECT_EQ(j["shifted_eigenvalues"].size(), 2u);
}

TEST(Cli, SpectrumFromStdinEdgeList) {
    const auto r = run({"spectrum", "-"}, "n 3\n0 1\n1 2\n");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n-1\n-1\n");
}

TEST(Cli, SpectrumFromFile) {
    const auto path = std::filesystem::temp_directory_path() / "seidel_cli_test_graph.txt";
    std::ofstream(path) << "Bw\n";
    const auto r = run({"spectrum", path.string()});
    std::filesystem::remove(path);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 3u);
}

TEST(Cli, VerifyBoundsExhaustive) {
    const auto r = run({"verify", "--theorem", "bounds", "--max-n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("bound records: 1024"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("violations: 0"), std::string::npos);
}

TEST(Cli, VerifyBoundsCsvRecords) {
    const auto r = run({"--format", "csv", "verify", "--theorem", "bounds", "--max-n", "3", "--min-n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 1u + 8u + 64u);
    EXPECT_NE(r.err.find("bound records: 72"), std::string::npos);
}

TEST(Cli, VerifyRandomSwitching) {
    const auto a = run({"--format", "jsonl", "verify", "--theorem", "switching", "--sample", "20", "--seed", "5"});
    const auto b = run({"--format", "jsonl", "verify", "--theorem", "switching", "--sample", "20", "--seed", "5"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(count_lines(a.out), 20u);
}

TEST(Cli, VerifyUnion) {
    const auto r = run({"verify", "--theorem", "union"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("hypothesis_violation"), std::string::npos);
    EXPECT_NE(r.out.find("failures: 0"), std::string::npos);

    const auto one = run({"verify", "--theorem", "union", "--graph", "C~"});
    EXPECT_EQ(one.code, 0);
    const auto bad = run({"verify", "--theorem", "union", "--graph", "Bo"});
    EXPECT_EQ(bad.code, 2);
}

TEST(Cli, Scan) {
    const auto path = std::filesystem::temp_directory_path() / "seidel_cli_scan.csv";
    const auto r = run({"scan", "--max-n", "3", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::filesystem::remove(path);
    EXPECT_EQ(count_lines(all), 65u);
    EXPECT_NE(r.out.find("bound records: 64"), std::string::npos);
}

TEST(Cli, Fiedler) {
    const auto r = run({"fiedler", "--alpha1", "1.5", "--beta1", "-0.5", "--rho", "2", "--rest-a", "-1.5",
                        "--rest-b", "-1.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines(r.out), 4u);
    EXPECT_NE(r.out.find("-1.5\n-1.5"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"energy", "ZZ:x"}).code, 2);
    EXPECT_EQ(run({"spectrum", "ZZ:x"}).code, 2);
    EXPECT_EQ(run({"energy"}).code, 2);
    EXPECT_EQ(run({"verify", "--theorem", "nonsense"}).code, 2);
    EXPECT_EQ(run({"verify", "--theorem", "bounds", "--max-n", "9"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "energy", "A_"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    const auto e = run({"energy", "ZZ:x"});
    EXPECT_NE(e.err.find("error:"), std::string::npos);
}
