#include "dioset/cli.hpp"
#include "dioset/document.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <sstream>
#include <string>

using namespace dioset;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

Json first_line(const std::string& text) { return Json::parse(text.substr(0, text.find('\n'))); }

// Runs the installed binary through the shell; returns exit status and stdout.
Run shell(const std::string& command) {
    Run r{-1, "", ""};
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string kCli = DIOSET_CLI_PATH;

}  // namespace

TEST_CASE("construct examples") {
    Run r = run({"construct", "--set", "0,1,2", "--method", "quadric", "--param", "3,1"});
    REQUIRE(r.code == 0);
    CHECK(first_line(r.out)["poly"] == Json::array({"1", "24"}));

    r = run({"construct", "--set", "0,1,2,3,4", "--method", "plane", "--param", "1,2,0"});
    REQUIRE(r.code == 0);
    const Json doc = first_line(r.out);
    CHECK(doc["poly"] == Json::array({"2", "4", "2"}));
    CHECK(doc["flags"] == Json::array({"trivial-family"}));

    r = run({"construct", "--set", "1,1,2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("duplicate") != std::string::npos);
}

TEST_CASE("construct usage and construction failures") {
    CHECK(run({"construct", "--set", "0,x,2"}).code == 1);
    CHECK(run({"construct", "--set", "0,1"}).code == 1);
    CHECK(run({"construct", "--set", "0,1,2", "--method", "cubic"}).code == 1);
    CHECK(run({"construct"}).code == 1);
    CHECK(run({"construct", "--set", "0,1,2", "--param", "1,2,3"}).code == 1);
    CHECK(run({"construct", "--set", "0,1,2", "--count", "0"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
    // mu = nu = 0 on {0,1,2,3}
    const Run r = run({"construct", "--set", "0,1,2,3", "--param", "0,1,1"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("construct accepts negative entries") {
    Run r = run({"construct", "--set=-3,1,4", "--seed", "5"});
    REQUIRE(r.code == 0);
    CHECK(first_line(r.out)["set"] == Json::array({"-3", "1", "4"}));
}

TEST_CASE("construct emits JSON lines and twist data") {
    Run r = run({"construct", "--set", "0,3,5,9", "--seed", "2", "--count", "4", "--emit-twist"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const WitnessDocument doc = parse_witness(line);
        REQUIRE(doc.twist.has_value());
        CHECK(doc.twist->points.size() == 4);
        CHECK(doc.twist->points[0].second == "1");
        ++count;
    }
    CHECK(count == 4);
}

TEST_CASE("verify examples") {
    CHECK(run({"verify", "--set", "0,1,2", "--poly", "1,24"}).code == 0);
    const Run r = run({"verify", "--set", "1,3", "--poly", "0,1"});
    CHECK(r.code == 3);
    CHECK(first_line(r.out)["failures"] == Json::array({Json::array({"1", "3"})}));
    CHECK(run({"verify", "--set", "2,8,18", "--poly", "0,1"}).code == 0);
    CHECK(run({"verify", "--set", "1,1", "--poly", "1"}).code == 1);
    CHECK(run({"verify", "--set", "1,2"}).code == 1);
    CHECK(run({"verify", "--set", "1,2", "--poly", "0,0"}).code == 1);
    CHECK(run({"verify", "--from-json"}, "").code == 1);
    CHECK(run({"verify", "--from-json"}, "{\"a\":1}\n").code == 1);
}

TEST_CASE("verify --from-json checks stored certificates") {
    Run c = run({"construct", "--set", "0,1,2", "--param", "3,1"});
    Run v = run({"verify", "--from-json"}, c.out);
    CHECK(v.code == 0);
    CHECK(first_line(v.out)["certificate_matches"] == true);

    std::string tampered = c.out;
    tampered.replace(tampered.find("\"35\""), 4, "\"36\"");
    v = run({"verify", "--from-json"}, tampered);
    CHECK(v.code == 3);
    CHECK(first_line(v.out)["certificate_matches"] == false);
}

TEST_CASE("search examples") {
    Run r = run({"search", "--set", "0,1,2", "--max-degree", "1", "--max-height", "30"});
    REQUIRE(r.code == 0);
    Json j = first_line(r.out);
    CHECK(j["exhausted"] == true);
    bool has = false;
    for (const auto& f : j["found"]) has = has || f == Json::array({"1", "24"});
    CHECK(has);

    r = run({"search", "--set", "0,1", "--max-degree", "0", "--max-height", "1"});
    REQUIRE(r.code == 0);
    j = first_line(r.out);
    CHECK(j["exhausted"] == true);
    CHECK(j["found"].size() >= 1);
    CHECK(j["found"][0] == Json::array({"1"}));

    r = run({"search", "--set", "0,1,2", "--max-degree", "5", "--max-height", "1000000"});
    CHECK(r.code == 1);
    CHECK(r.err.find("box") != std::string::npos);
}

TEST_CASE("binary: determinism and construct to verify pipe") {
    const std::string construct = "'" + kCli + "' construct --set 0,4,7,11,15 --seed 9 --count 3";
    const Run a = shell(construct);
    const Run b = shell(construct);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());

    const Run piped = shell(construct + " | '" + kCli + "' verify --from-json");
    CHECK(piped.code == 0);

    const Run bad = shell("'" + kCli + "' construct --set 1,1,2 2>/dev/null");
    CHECK(bad.code == 1);
}
