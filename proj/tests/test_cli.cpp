#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "abelianlab/io.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
    std::string cmd = env + (env.empty() ? "" : " ") + std::string(ABELIANLAB_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("word prefixes") {
    CHECK(run("word --id pd --len 20").out == "01000101010001000100\n");
    CHECK(run("word --id tm2 --len 24").out == "132120132012132120121320\n");
    CHECK(run("word --id pd3 --len 18").out == "240125252401240124\n");
    CHECK(run("word --morphism 0:01,1:10 --seed 0 --len 16").out == "0110100110010110\n");
    CHECK(run("word --literal 011010011 --block 2").out == "13212013\n");
    CHECK(run("word --id tm2 --coding 0:1,1:0,2:0,3:1 --len 20").out == "01000101010001000100\n");
}

TEST_CASE("complexity series") {
    auto r = run("complexity --id tm --level 2 --max 27 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n,value\n0,1\n1,2\n2,4\n3,6\n4,8\n5,6\n6,8\n7,10\n8,8\n9,6\n10,8\n11,8\n12,10\n13,10\n14,10\n15,8\n"
          "16,8\n17,6\n18,8\n19,10\n20,10\n21,8\n22,10\n23,12\n24,12\n25,10\n26,12\n27,12\n");
    CHECK(run("complexity --id tm --level 2 --max 0").out == "n,value\n0,1\n");

    auto d = run("complexity --id tm2 --stat delta --letters 1,2 --max 64 --format json");
    REQUIRE(d.code == 0);
    auto j = nlohmann::json::parse(d.out);
    for (int n : {2, 4, 8, 16, 32, 64}) CHECK(j["values"][n] == 1);
}

TEST_CASE("series files round-trip") {
    auto dir = std::filesystem::temp_directory_path() / "abelianlab_cli_test";
    std::filesystem::create_directories(dir);
    auto json_path = dir / "s.json", csv_path = dir / "s.csv";
    REQUIRE(run("complexity --id pd2 --stat min --letters 0 --max 50 --format json --output " + json_path.string()).code == 0);
    REQUIRE(run("complexity --id pd2 --stat min --letters 0 --max 50 --format csv --output " + csv_path.string()).code == 0);
    auto s = abelianlab::io::series_from_json(slurp(json_path));
    CHECK(s.word_id == "pd2");
    CHECK(s.values.size() == 51);
    CHECK(abelianlab::io::series_from_csv(slurp(csv_path), s.word_id, s.kind) == s);
    CHECK(abelianlab::io::series_to_json(s) + "\n" == slurp(json_path));
    std::filesystem::remove_all(dir);
}

TEST_CASE("guessing") {
    auto a = run("guess --series A --k 2");
    REQUIRE(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["k"] == 2);
    CHECK(j["horizon"] == 16384);

    auto c = run("guess --series const1 --k 2");
    REQUIRE(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["rank"] == 1);

    auto p = run("guess --series p2-tm --k 2 --T 512 --N 16384");
    CHECK(p.code == 0);
    CHECK(nlohmann::json::parse(p.out)["horizon"] == 16384);

    auto lin = run("guess --series A --linear");
    REQUIRE(lin.code == 0);
    CHECK(nlohmann::json::parse(lin.out).contains("matrices"));

    auto aut = run("guess --series delta12-tm2-mod2 --automatic");
    REQUIRE(aut.code == 0);
    CHECK(nlohmann::json::parse(aut.out)["states"].size() <= 64);
}

TEST_CASE("verification") {
    CHECK(run("verify --suite pd --max 512").code == 0);
    CHECK(run("verify --suite reflection --fuzz 100").code == 0);
    CHECK(run("verify --suite tm --max 4").code == 0);
    CHECK(run("verify --suite A --max 1024").code == 0);
    CHECK(run("verify --suite cross --max 128").code == 0);
    auto js = run("verify --suite conjecture --word pd --level 3 --max 512 --format json");
    CHECK(js.code == 0);
    auto j = nlohmann::json::parse(js.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["empirical"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run("word --id nope --len 3").code == 2);
    CHECK(run("complexity --bogus").code == 2);
    CHECK(run("complexity --id tm --format xml").code == 2);
    CHECK(run("complexity --id tm --stat max").code == 2);
    CHECK(run("guess --series nonsense").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("guess --series A --rank-cap 2").code == 3);
    CHECK(run("guess --series A --automatic --rank-cap 4").code == 3);
    CHECK(run("guess --series p2-tm --T 8 --N 16384").code == 4);
    CHECK(run("complexity --id tm --max 64", "ABELIANLAB_MAX_PREFIX=100").code == 5);
}

TEST_CASE("output is deterministic") {
    auto a = run("complexity --id tm2 --stat jmin --letters 0,3 --max 100 --format json");
    auto b = run("complexity --id tm2 --stat jmin --letters 0,3 --max 100 --format json");
    CHECK(a.out == b.out);
}
