#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int status;
    std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded.
Run cli(const std::string& args) {
    const std::string cmd = std::string(GAUDIN_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

} // namespace

TEST_CASE("golden outputs") {
    const Run census = cli("census --p 5");
    CHECK(census.status == 0);
    CHECK(parse(census.out) == parse(R"({"p":5,"counts":{"0":50,"1":25,"2":50},
                                         "predicted":{"0":50,"1":25,"2":50},"agrees":true})"));

    const Run solve = cli("solve --p 5 --m 1,1 --z 0,1 --k 1");
    CHECK(solve.status == 0);
    CHECK(parse(solve.out) == parse(R"({"p":5,"m":[1,1],"z":[0,1],"k":1,"solutions":[[3]]})"));

    const Run k1 = cli("k1 --p 5 --m 1,1,1 --z 0,1,3");
    CHECK(k1.status == 0);
    const auto doc = parse(k1.out);
    CHECK(doc["irreducible"] == true);
    CHECK(doc["field"] == true);
    CHECK(doc["eigenline_roots"] == nlohmann::json::array());
    CHECK(doc["P"] == parse("[3,2,3]"));
    CHECK(doc["dim_B"] == 2);
    CHECK(doc["passed"] == true);

    const Run wr = cli("wronski --p 5 --m 1,1 --z 0,1 --k 1");
    CHECK(wr.status == 0);
    CHECK(parse(wr.out)["pairs"][0]["y_tilde"] == parse("[4,2,1]"));

    const Run verify = cli("verify --p 7 --m 1,2 --z 0,3 --k 1");
    CHECK(verify.status == 0);
    CHECK(parse(verify.out)["passed"] == true);
}

TEST_CASE("inputs are reduced mod p before the distinctness check") {
    const Run a = cli("solve --p 5 --m 1,1 --z 5,-4 --k 1");
    CHECK(a.status == 0);
    CHECK(parse(a.out)["z"] == parse("[0,1]"));
    CHECK(parse(a.out)["solutions"] == parse("[[3]]"));
    CHECK(cli("solve --p 5 --m 1,1 --z 0,5 --k 1").status == 2);
}

TEST_CASE("exit status for violated hypotheses and bad input") {
    CHECK(cli("solve --p 5 --m 3,2 --z 0,1 --k 1").status == 2);       // p > |m|
    CHECK(cli("wronski --p 5 --m 2,2 --z 0,1 --k 1").status == 2);     // p > |m| + 1
    CHECK(cli("wronski --p 5 --m 1,1,1 --z 0,1,2 --k 2").status == 2); // p > n + k
    CHECK(cli("k1 --p 5 --m 2,2 --z 0,1").status == 2);
    CHECK(cli("census --p 3").status == 2);
    CHECK(cli("solve --p 9 --m 1 --z 0 --k 1").status == 2);
    CHECK(cli("solve --p 2 --m 1 --z 0 --k 1").status == 2);
    CHECK(cli("solve --p 7 --m 1,1 --z 0 --k 1").status == 2);
    CHECK(cli("solve --p 7 --m 0,1 --z 0,1 --k 1").status == 2);
    CHECK(cli("solve --m 1 --z 0 --k 1").status == 2);
    CHECK(cli("frobnicate --p 5").status == 2);
}

TEST_CASE("large searches need the override flag") {
    CHECK(cli("solve --p 103 --m 1,1 --z 0,1 --k 1").status == 2);
    CHECK(cli("solve --p 7 --m 1,1,1,1,1 --z 0,1,2,3,4 --k 4").status == 2);
    const Run forced = cli("solve --p 103 --m 1,1 --z 0,1 --k 1 --force-large");
    CHECK(forced.status == 0);
    CHECK(parse(forced.out)["solutions"] == parse("[[52]]"));
}

TEST_CASE("sweeps stream one JSON line per tuple") {
    const Run sweep = cli("solve --p 5 --m 1,1 --k 1");
    CHECK(sweep.status == 0);
    std::istringstream lines(sweep.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto rec = parse(line);
        CHECK(rec["z"].size() == 2);
        ++count;
    }
    CHECK(count == 20);

    const Run k1 = cli("k1 --p 5 --m 1,1,1");
    CHECK(k1.status == 0);
    std::istringstream k1_lines(k1.out);
    count = 0;
    while (std::getline(k1_lines, line)) {
        CHECK(parse(line)["irreducible"] == true);
        ++count;
    }
    CHECK(count == 60);
}

TEST_CASE("output is identical across worker counts and runs") {
    for (const std::string args : {"verify --p 13 --m 2,3 --k 2", "census --p 7", "wronski --p 11 --m 1,2,1 --z 0,4,7 --k 2"}) {
        const Run one = cli(args + " --jobs 1");
        const Run four = cli(args + " --jobs 4");
        CHECK(one.status == 0);
        CHECK(one.out == four.out);
        CHECK(one.out == cli(args + " --jobs 1").out);
    }
}

TEST_CASE("writing to a file") {
    const auto path = std::filesystem::temp_directory_path() / "gaudin_cli_test.json";
    std::filesystem::remove(path);
    const Run r = cli("census --p 7 --out " + path.string());
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(parse(buf.str())["counts"]["1"] == 49);
    std::filesystem::remove(path);
    CHECK(cli("census --p 7 --out /nonexistent-dir/x.json").status == 2);
}

TEST_CASE("the suite command reports every criterion") {
    const Run r = cli("suite");
    CHECK(r.status == 0);
    const auto doc = parse(r.out);
    CHECK(doc["criteria"].size() == 7);
    CHECK(doc["passed"] == true);
}
