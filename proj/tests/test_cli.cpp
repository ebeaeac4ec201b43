#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wittswan/cli.hpp"

using namespace wittswan;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json first_json(const std::string& text) {
    return nlohmann::json::parse(text.substr(0, text.find('\n')));
}

} // namespace

TEST_CASE("usage errors exit with code 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"swan", "--m", "0", "--alpha", "[[[-2,1]]]"}).code == 1);

    auto r = run({"swan", "--p", "2", "--m", "0", "--alpha", "[[[-2,1]]"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error") != std::string::npos);

    // component count must match the vector length
    CHECK(run({"swan", "--p", "2", "--m", "1", "--alpha", "[[[-2,1]]]"}).code == 1);
    // unsupported characteristic
    CHECK(run({"swan", "--p", "6", "--m", "0", "--alpha", "[[[-2,1]]]"}).code == 1);

    auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("swan") != std::string::npos);
}

TEST_CASE("swan certificate output") {
    auto r = run({"swan", "--p", "2", "--m", "0", "--alpha", "[[[-2,1]]]"});
    REQUIRE(r.code == 0);
    auto j = first_json(r.out);
    CHECK(j["swan"] == 1);
    CHECK(j["certified"] == true);
    CHECK(j["lower"] == 1);
    CHECK(j["upper"] == 1);
    CHECK(j["reduced"] == nlohmann::json::parse("[[[-1,1]]]"));
    CHECK(j["witness"] == nlohmann::json::parse("[[-1,1]]"));

    r = run({"swan", "--p", "2", "--m", "0", "--alpha", "[[[-2,1]]]", "--strict"});
    CHECK(r.code == 0);

    r = run({"swan", "--p", "3", "--m", "0", "--alpha", "[[]]"});
    REQUIRE(r.code == 0);
    CHECK(first_json(r.out)["swan"] == 0);
}

TEST_CASE("refined class output") {
    auto r = run({"rsw", "--p", "2", "--m", "0", "--alpha", "[[[-3,1]]]"});
    REQUIRE(r.code == 0);
    auto j = first_json(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["witness"] == nlohmann::json::parse("[[-3,1]]"));
}

TEST_CASE("pullback and pushforward outputs") {
    auto r = run({"lambda", "--p", "2", "--m", "0", "--d", "2",
                  "--alpha", "[[[-3,1]]]"});
    REQUIRE(r.code == 0);
    auto j = first_json(r.out);
    CHECK(j["v_exceptional"] == -1);
    CHECK(j["components"][0]["den_pow"] == 3);

    r = run({"sympow-swan", "--p", "2", "--m", "0", "--d", "2",
             "--alpha", "[[[-3,1]]]"});
    REQUIRE(r.code == 0);
    j = first_json(r.out);
    CHECK(j["upstairs"] == 3);
    CHECK(j["exceptional"] == 1);
    CHECK(j["certified"] == true);

    r = run({"blprod-swan", "--p", "2", "--m", "0",
             "--alpha", "[[[-3,1]]]", "--beta", "[[[-1,1]]]"});
    REQUIRE(r.code == 0);
    j = first_json(r.out);
    CHECK(j["n1"] == 3);
    CHECK(j["n2"] == 1);
    CHECK(j["exceptional"] == 3);

    r = run({"omega-basis", "--p", "2", "--d", "2", "--i", "3"});
    REQUIRE(r.code == 0);
    j = first_json(r.out);
    CHECK(j["i"] == 3);
    CHECK(j["v_log_exceptional"] == -1);
}

TEST_CASE("degree bound prints a bare number") {
    auto r = run({"min-degree", "--genus", "0", "--deg-mod", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    CHECK(run({"min-degree", "--genus", "-1", "--deg-mod", "2"}).code == 1);
}

TEST_CASE("verification runs and reports") {
    auto r = run({"verify", "fmd-hom", "--p", "2", "--m", "1", "--seed", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
    CHECK(r.out.find("fail") != std::string::npos); // summary line

    CHECK(run({"verify", "no-such-suite"}).code == 1);
    CHECK(run({"verify", "all", "--format", "yaml"}).code == 1);
    CHECK(run({"verify", "all", "--p", "2,banana"}).code == 1);
}

TEST_CASE("verification records are deterministic") {
    std::vector<std::string> args{"verify", "fmd-hom", "--p", "2,3",
                                  "--m", "1", "--seed", "11",
                                  "--format", "records"};
    auto r1 = run(args);
    auto r2 = run(args);
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);

    // every line is a record; the header carries the run parameters
    std::istringstream lines(r1.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    auto head = nlohmann::json::parse(line);
    CHECK(head["report"] == "verify");
    CHECK(head["seed"] == 11);
    long rows = 0;
    nlohmann::json last;
    while (std::getline(lines, line)) {
        last = nlohmann::json::parse(line);
        ++rows;
    }
    CHECK(rows > 1);
    CHECK(last.contains("summary"));
    CHECK(last["summary"]["fail"] == 0);

    // a different seed changes the sampled cases but not the verdict
    args[7] = "12";
    auto r3 = run(args);
    CHECK(r3.code == 0);
    CHECK(r3.out != r1.out);
}

TEST_CASE("cache lifecycle through the command line") {
    fs::path dir = fs::temp_directory_path() / "wittswan-cli-cache";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::string d = dir.string();

    auto r = run({"cache", "build", "--p", "2", "--m", "1", "--cache-dir", d});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("cache file written") != std::string::npos);
    CHECK(fs::exists(dir / "w_p2_m1.txt"));

    r = run({"cache", "inspect", "--p", "2", "--m", "1", "--cache-dir", d});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("S_1: 3 terms") != std::string::npos);
    CHECK(r.out.find("X0*Y0") != std::string::npos);

    // corrupt one byte; the checksum rejects the file with a rebuild hint
    fs::path file = dir / "w_p2_m1.txt";
    std::string text;
    {
        std::ifstream is(file);
        std::ostringstream ss;
        ss << is.rdbuf();
        text = ss.str();
    }
    std::size_t pos = text.size() / 2;
    while (text[pos] == '\n') ++pos;
    text[pos] = text[pos] == '3' ? '4' : '3';
    std::ofstream(file) << text;

    r = run({"cache", "inspect", "--p", "2", "--m", "1", "--cache-dir", d});
    CHECK(r.code == 1);
    CHECK(r.err.find("checksum") != std::string::npos);
    CHECK(r.err.find("rebuild") != std::string::npos);

    r = run({"cache", "clear", "--cache-dir", d});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("cache cleared: 1 file(s)") != std::string::npos);
    CHECK(!fs::exists(dir / "w_p2_m1.txt"));

    CHECK(run({"cache", "scrub", "--cache-dir", d}).code == 1);
    fs::remove_all(dir);
}

TEST_CASE("subcommands honor an explicit cache directory") {
    fs::path dir = fs::temp_directory_path() / "wittswan-cli-cache2";
    fs::remove_all(dir);
    fs::create_directories(dir);

    auto r = run({"swan", "--p", "3", "--m", "1", "--cache-dir", dir.string(),
                  "--alpha", "[[[-1,1]],[]]"});
    REQUIRE(r.code == 0);
    CHECK(first_json(r.out)["swan"] == 3);
    CHECK(fs::exists(dir / "w_p3_m1.txt"));
    fs::remove_all(dir);
}
