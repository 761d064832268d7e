// End-to-end checks of the command-line binary. The path to the binary
// comes from the CREDO_BIN environment variable (set by ctest).

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "credo/fixtures.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string binary() {
    const char* env = std::getenv("CREDO_BIN");
    REQUIRE_MESSAGE(env != nullptr, "CREDO_BIN must point at the credo binary");
    return env;
}

fs::path workdir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "credo_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    fs::path out_file = workdir() / "stdout.txt";
    std::string cmd = binary() + " " + args + " > " + out_file.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    int exit_code = -1;
    if (WIFEXITED(status)) exit_code = WEXITSTATUS(status);
    return {exit_code, buffer.str()};
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = workdir() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

fs::path session_file() {
    static fs::path p = write_file("session.json", credo::fixtures::session_json());
    return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reproduce-paper verifies the bundled tables and exits 0") {
    RunResult r = run("reproduce-paper");
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["mismatches"].empty());
    CHECK(doc["gap_after_a_zero"] == true);
    CHECK(doc["gap_after_not_c_zero"] == true);
    CHECK(doc["shared_not_c"] == "0.5714");
    CHECK(doc["row_rational"] == Json::array({true, false, true}));
}

TEST_CASE("reproduce-paper works in float mode too") {
    RunResult r = run("reproduce-paper --mode float");
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.out)["ok"] == true);
}

TEST_CASE("session: strict mode rejects the bundled profile, relaxed mode runs it") {
    RunResult strict = run("session " + session_file().string());
    CHECK(strict.exit_code == 2);
    CHECK(Json::parse(strict.out)["error"]["code"] == "judgment-error");

    RunResult relaxed = run("session " + session_file().string() + " --allow-irrational");
    CHECK(relaxed.exit_code == 0);
    std::istringstream lines(relaxed.out);
    std::string line;
    std::vector<Json> steps;
    while (std::getline(lines, line))
        if (!line.empty()) steps.push_back(Json::parse(line));
    REQUIRE(steps.size() == 2);
    CHECK(steps[0]["learned"] == "a");
    CHECK(steps[0]["gap_exact"] == "0");
    CHECK(steps[0]["phi_preserved"] == true);
    CHECK(steps[1]["learned"] == "!c");
    CHECK(steps[1]["gap_exact"] == "0");
    CHECK(steps[1]["collective"]["b"] == "0.7500");
    CHECK(steps[1]["collective"]["b & c"] == "0.0000");
    CHECK(steps[1]["learnable"] == Json::array({"a", "!c", "!(a & c)"}));
}

TEST_CASE("session: an inadmissible event is a typed input error") {
    Json doc = Json::parse(credo::fixtures::session_json());
    doc["events"] = Json::array({Json{{"learn", "!c"}}, Json{{"learn", "c"}}});
    fs::path p = write_file("session_bad.json", doc.dump());
    RunResult r = run("session " + p.string() + " --allow-irrational");
    CHECK(r.exit_code == 2);
    CHECK(Json::parse(r.out)["error"]["code"] == "inadmissible-event");
}

TEST_CASE("check-agenda reports the structural flags") {
    Json agenda = Json::parse(credo::fixtures::session_json())["profile"]["agenda"];
    fs::path p = write_file("agenda.json", agenda.dump());
    RunResult r = run("check-agenda " + p.string());
    CHECK(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["size"] == 16);
    CHECK(doc["contingent_count"] == 16);
    CHECK(doc["nested"] == false);
    CHECK(doc["and_stable"] == true);
    CHECK(doc["and_stable_strict"] == false);
    CHECK(doc["theorem1_preconditions"]["satisfied"] == true);
}

TEST_CASE("check-rationality flags the infeasible row with its witness") {
    Json profile = Json::parse(credo::fixtures::session_json())["profile"];
    fs::path p = write_file("profile.json", profile.dump());
    RunResult r = run("check-rationality " + p.string());
    CHECK(r.exit_code == 1);
    Json doc = Json::parse(r.out);
    CHECK(doc["all_rational"] == false);
    CHECK(doc["judgments"][0]["rational"] == true);
    CHECK(doc["judgments"][1]["rational"] == false);
    CHECK(doc["judgments"][1]["infeasible_subset"] ==
          Json::array({"b", "a & b", "b & c", "a & b & c"}));
    CHECK(doc["judgments"][2]["rational"] == true);
}

TEST_CASE("update refuses missing inputs with exit 2") {
    RunResult r = run("update " + (workdir() / "missing.json").string() + " --learn a");
    CHECK(r.exit_code == 2);
}

TEST_CASE("property-suite output is deterministic and thread-count independent") {
    std::string flags =
        " --cases 24 --negative-cases 12 --oracle-cases 8 --weight-vectors 2 --pairs 4 --seed 5";
    RunResult first = run("property-suite" + flags + " --threads 1");
    RunResult second = run("property-suite" + flags + " --threads 1");
    RunResult parallel = run("property-suite" + flags + " --threads 2");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out == parallel.out);
    Json doc = Json::parse(first.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["theorem2"]["gap_zero"] == 24);
}

TEST_CASE("aggregate reproduces the reference aggregate through files") {
    Json profile = Json::parse(credo::fixtures::session_json())["profile"];
    fs::path p = write_file("profile.json", profile.dump());
    fs::path w = write_file("weights.json", R"({"weights": ["1/3","1/3","1/3"]})");
    RunResult r = run("aggregate " + p.string() + " --weights " + w.string());
    CHECK(r.exit_code == 1);  // finding: one member is irrational
    Json doc = Json::parse(r.out);
    CHECK(doc["pooled"]["values"]["b"] == "0.5667");
    CHECK(doc["pooled"]["rational"] == true);
    CHECK(doc["members_rational"] == Json::array({true, false, true}));
    CHECK(doc["dictator"].is_null());
}

}  // TEST_SUITE
