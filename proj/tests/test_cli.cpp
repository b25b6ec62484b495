#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "simplicity/cli/commands.hpp"

using namespace simplicity::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "simplicity");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) {
    return (std::filesystem::path(SIMPLICITY_TEST_DATA) / name).string();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

TEST_CASE("parse_ising") {
    const auto src = parse_ising("1,0.3");
    REQUIRE(src);
    CHECK(src->J == 1.0);
    CHECK(src->b == 0.3);
    CHECK_FALSE(parse_ising("1"));
    CHECK_FALSE(parse_ising("1,x"));
    CHECK_FALSE(parse_ising("1,0.3,2"));
    CHECK_FALSE(parse_ising(",0.3"));
}

TEST_CASE("analyze the p = q = 0.9 machine") {
    const auto r = invoke({"analyze", "--machine", data("two_state_p09_q09.json")});
    REQUIRE(r.code == kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["C_mu"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j["C_q"].get<double>() == doctest::Approx(0.7219).epsilon(1e-4));
    CHECK(j["E"].get<double>() == doctest::Approx(0.531).epsilon(1e-3));
    CHECK(j["L_used"].get<int>() == 1);
    CHECK(j.contains("h_mu"));
    CHECK(j["sandwich_ok"].get<bool>());
}

TEST_CASE("analyze an IID machine") {
    const auto r = invoke({"analyze", "--machine", data("fair_coin.json"), "--L", "3"});
    REQUIRE(r.code == kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["C_mu"].get<double>() == 0.0);
    CHECK(j["C_q"].get<double>() == 0.0);
    CHECK(j["E"].get<double>() == 0.0);
}

TEST_CASE("analyze as CSV and for an Ising temperature") {
    const auto csv = invoke({"analyze", "--machine", data("two_state_p09_q09.json"), "--format", "csv"});
    REQUIRE(csv.code == kOk);
    CHECK(csv.out.rfind("h_mu,C_mu,C_q,E,L_used\n", 0) == 0);

    const auto ising = invoke({"analyze", "--ising", "1,0.3", "--T", "2"});
    CHECK(ising.code == kOk);
    CHECK(invoke({"analyze", "--ising", "1,0.3"}).code == kUsage);
    CHECK(invoke({"analyze", "--ising", "1,0.3", "--T", "0.001"}).code == kNumericRange);
}

TEST_CASE("invalid machine file") {
    const auto r = invoke({"analyze", "--machine", data("row_sum_short.json")});
    CHECK(r.code == kInvalidInput);
    CHECK(r.err.find("row-sum") != std::string::npos);
    CHECK(r.out.empty());

    CHECK(invoke({"analyze", "--machine", data("truncated.json")}).code == kInvalidInput);
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == kUsage);
    CHECK(invoke({"frobnicate"}).code == kUsage);
    CHECK(invoke({"analyze"}).code == kUsage);
    CHECK(invoke({"analyze", "--machine", data("fair_coin.json"), "--ising", "1,0.3", "--T", "1"}).code == kUsage);
    CHECK(invoke({"sweep", "--ising", "oops"}).code == kUsage);
    CHECK(invoke({"sweep", "--ising", "1,0.3", "--steps", "1"}).code == kUsage);
    CHECK(invoke({"sweep", "--ising", "1,0.3", "--format", "xml"}).code == kUsage);
    CHECK(invoke({"diagram", "--ising", "1,0.3", "--resolution", "8"}).code == kUsage);
    CHECK(invoke({"diagram", "--ising", "1,0.3", "--mode", "fuzzy"}).code == kUsage);
    CHECK(invoke({"witness", "--ising", "1,0.3", "--f1", "entropy"}).code == kUsage);
    CHECK(invoke({"--help"}).code == kOk);
}

TEST_CASE("sweep CSV") {
    const auto r = invoke({"sweep", "--ising", "1,0.3", "--t-min", "0.05", "--t-max", "5", "--steps", "1000"});
    REQUIRE(r.code == kOk);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 1001);
    CHECK(rows[0] == std::vector<std::string>{"T", "p", "q", "h_mu", "C_mu", "C_q", "E"});
    double best_t = 0.0, best_cq = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double cq = std::stod(rows[i][5]);
        if (cq > best_cq) {
            best_cq = cq;
            best_t = std::stod(rows[i][0]);
        }
    }
    CHECK(best_t == doctest::Approx(1.63).epsilon(0.02 / 1.63));

    const auto again = invoke({"sweep", "--ising", "1,0.3", "--t-min", "0.05", "--t-max", "5", "--steps", "1000"});
    CHECK(again.out == r.out);
}

TEST_CASE("zero-field sweep has p = q") {
    const auto r = invoke({"sweep", "--ising", "1,0", "--steps", "50"});
    REQUIRE(r.code == kOk);
    const auto rows = parse_csv(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][1] == rows[i][2]);
}

TEST_CASE("sweep range errors") {
    CHECK(invoke({"sweep", "--ising", "1,0.3", "--t-min", "0", "--t-max", "5"}).code == kNumericRange);
    CHECK(invoke({"sweep", "--ising", "1,0.3", "--t-min", "3", "--t-max", "2"}).code == kNumericRange);

    const auto r = invoke({"sweep", "--ising", "1,0.3", "--t-min", "0.001", "--t-max", "1", "--steps", "5"});
    CHECK(r.code == kNumericRange);
    CHECK(parse_csv(r.out).size() == 6);
    CHECK(r.out.find("nan") != std::string::npos);
}

TEST_CASE("sweep JSON and SVG") {
    const auto j = invoke({"sweep", "--ising", "1,0.3", "--steps", "20", "--format", "json"});
    REQUIRE(j.code == kOk);
    const auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.size() == 20);
    CHECK(doc[0].contains("profile"));

    const auto s = invoke({"sweep", "--ising", "1,0.3", "--steps", "20", "--format", "svg"});
    REQUIRE(s.code == kOk);
    CHECK(s.out.rfind("<svg", 0) == 0);
    CHECK(s.out.find("polyline") != std::string::npos);
}

TEST_CASE("diagram CSV and SVG") {
    const auto r = invoke({"diagram", "--ising", "1,0.3", "--resolution", "40"});
    REQUIRE(r.code == kOk);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 40 * 40 + 1);
    CHECK(rows[0] == std::vector<std::string>{"T1", "T2", "plain", "certain"});
    std::size_t ambiguous = 0, consistent = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ambiguous += rows[i][2] == "ambiguous";
        consistent += rows[i][2] == "consistent";
    }
    CHECK(ambiguous > consistent);

    const auto svg = invoke({"diagram", "--ising", "1,0.3", "--resolution", "16", "--mode", "certain", "--format", "svg"});
    REQUIRE(svg.code == kOk);
    CHECK(svg.out.find("<rect") != std::string::npos);

    const auto json = invoke({"diagram", "--ising", "1,0.3", "--resolution", "16", "--format", "json"});
    REQUIRE(json.code == kOk);
    CHECK(nlohmann::json::parse(json.out)["plain"].size() == 16);
}

TEST_CASE("witness on the Ising family") {
    const auto r = invoke({"witness", "--ising", "1,0.3", "--steps", "200"});
    REQUIRE(r.code == kOk);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["witness"].is_object());
    const auto& s1 = j["witness"]["s1"];
    const auto& s2 = j["witness"]["s2"];
    CHECK(s1["C_mu"].get<double>() > s2["C_mu"].get<double>());
    CHECK(s1["C_q"].get<double>() < s2["C_q"].get<double>());
    for (const char* key : {"label", "h_mu", "C_mu", "C_q", "E"}) {
        CHECK(s1.contains(key));
        CHECK(s2.contains(key));
    }

    const auto same = invoke({"witness", "--ising", "1,0.3", "--steps", "50", "--f1", "C_mu", "--f2", "C_mu"});
    REQUIRE(same.code == kOk);
    CHECK(nlohmann::json::parse(same.out)["witness"] == "none");
}

TEST_CASE("witness on machine files") {
    const auto two = invoke({"witness", "--machine", data("two_state_p09_q09.json"), "--machine",
                             data("two_state_copy.json")});
    REQUIRE(two.code == kOk);
    CHECK(nlohmann::json::parse(two.out)["witness"] == "none");

    const auto one = invoke({"witness", "--machine", data("two_state_p09_q09.json")});
    REQUIRE(one.code == kOk);
    CHECK(nlohmann::json::parse(one.out)["witness"] == "none");
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "simplicity_cli_test_profile.json";
    std::filesystem::remove(path);
    const auto r = invoke({"analyze", "--machine", data("fair_coin.json"), "--out", path.string()});
    REQUIRE(r.code == kOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["C_mu"].get<double>() == 0.0);
    std::filesystem::remove(path);
}
