#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rotsys/core.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(ROTSYS_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string fixture(const std::string& name) {
    return std::string(ROTSYS_DATA_DIR) + "/" + name;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir(const std::string& tag) {
    auto dir = fs::temp_directory_path() / ("rotsys_cli_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("verify exits by expectation") {
    CHECK(run("verify " + fixture("k9_s3_case1.txt") + " --genus 3 --profile 3:22,6:1").status ==
          0);
    CHECK(run("verify " + fixture("k9_s3_case1.txt") + " --genus 2").status == 1);
    CHECK(run("verify " + fixture("tetrahedron.txt") + " --genus 0").status == 0);
}

TEST_CASE("verify reports parse failures with a usage exit") {
    auto dir = scratch_dir("parse");
    std::ofstream(dir / "bad.txt") << "1: 2 3\ngarbage\n";
    auto res = run("verify " + (dir / "bad.txt").string());
    CHECK(res.status == 2);
}

TEST_CASE("verify emits schema-shaped JSON") {
    auto res = run("verify " + fixture("k10_s4.txt") + " --genus 4 --json");
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["genus"] == 4);
    CHECK(j["profile"]["3"] == 28);
    CHECK(j["profile"]["6"] == 1);
    CHECK(j["hexagon_distinct"] == true);
    CHECK(j["genus_ok"] == true);
}

TEST_CASE("trace prints every face once") {
    auto res = run("trace " + fixture("tetrahedron.txt"));
    CHECK(res.status == 0);
    CHECK(res.out.find("faces=4") != std::string::npos);
}

TEST_CASE("complete reproduces the K10 fixture") {
    auto res = run("complete " + fixture("k10_s4_rows6.txt"));
    CHECK(res.status == 0);
    CHECK(res.out.find("completion 1 of 1") != std::string::npos);
    CHECK(res.out.find("7:") != std::string::npos);
    CHECK(res.out.find("10:") != std::string::npos);
}

TEST_CASE("complete rejects a partial with broken endpoints") {
    auto dir = scratch_dir("complete");
    // row 2 must start with 1; swap two entries to break the convention
    std::ofstream(dir / "bad_rows6.txt") << "1: 6 3 7 8 5 4 9 2\n"
                                            "2: 9 1 6 4 8 7 5 3\n"
                                            "3: 2 5 9 7 1 6 8 4\n"
                                            "4: 3 8 2 6 7 9 1 5\n"
                                            "5: 4 1 8 9 3 2 7 6\n"
                                            "6: 5 7 4 2 9 8 3 1\n";
    auto res = run("complete " + (dir / "bad_rows6.txt").string());
    CHECK(res.status == 2);  // rejected while parsing the partial
}

TEST_CASE("search output is byte-identical across worker counts") {
    auto dir1 = scratch_dir("jobs1");
    auto dir4 = scratch_dir("jobs4");
    CHECK(run("search --n 9 --genus 3 --jobs 1 --out " + dir1.string()).status == 0);
    CHECK(run("search --n 9 --genus 3 --jobs 4 --out " + dir4.string()).status == 0);
    int files = 0;
    for (const auto& entry : fs::directory_iterator(dir1)) {
        ++files;
        CHECK(slurp(entry.path()) == slurp(dir4 / entry.path().filename()));
    }
    CHECK(files == 9);  // eight sequences plus the summary
}

TEST_CASE("search summary JSON carries the stage counters") {
    auto dir = scratch_dir("summary");
    auto res = run("search --n 9 --genus 3 --json --out " + dir.string());
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["emitted"] == 8);
    CHECK(j["incomplete"] == false);
    CHECK(j["first_row_candidates"] == 120);
    CHECK(j["completions_by_triangles"]["22"] == 8);
    CHECK(j["row6_survivors_by_triangles"]["22"] == 38);
    CHECK(nlohmann::json::parse(slurp(dir / "summary.json")) == j);
}

TEST_CASE("search respects a limit and flags the summary") {
    auto dir = scratch_dir("limit");
    auto res = run("search --n 9 --genus 3 --limit 1 --json --out " + dir.string());
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["emitted"] == 1);
    CHECK(j["incomplete"] == true);
    CHECK(fs::exists(dir / "seq_001.txt"));
    CHECK(!fs::exists(dir / "seq_002.txt"));
}

TEST_CASE("classify separates the two cases and merges duplicates") {
    auto res = run("classify " + fixture("k9_s3_case1.txt") + " " + fixture("k9_s3_case2.txt"));
    CHECK(res.status == 0);
    CHECK(res.out.find("2 isomorphism classes") != std::string::npos);

    auto twice =
        run("classify " + fixture("k9_s3_case1.txt") + " " + fixture("k9_s3_case1.txt") +
            " --json");
    auto j = nlohmann::json::parse(twice.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["size"] == 2);
}

TEST_CASE("classify rejects mixed vertex counts") {
    auto res = run("classify " + fixture("k9_s3_case1.txt") + " " + fixture("tetrahedron.txt"));
    CHECK(res.status == 1);
}

TEST_CASE("insert certifies the published bounds") {
    auto res = run("insert " + fixture("k9_s3_case1.txt") + " --best --json");
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["certified"] == true);
    CHECK(j["upper_bound"] == 3);
    CHECK(j["face"].size() == 6);

    CHECK(run("insert " + fixture("k10_s4.txt") + " --best").status == 0);
    CHECK(run("insert " + fixture("tetrahedron.txt") + " --face 0").status == 0);
}

TEST_CASE("insert on a poor face exits with the certification status") {
    // face 0 is the hexagon (it holds the smallest directed edge); face 1 is
    // a triangle, and no triangle of a K9 embedding can host all six
    // off-face vertices one step away
    auto res = run("insert " + fixture("k9_s3_case1.txt") + " --face 1");
    CHECK(res.status == 1);
}

TEST_CASE("bounds answers single cells and the full table") {
    auto res = run("bounds --n 9 --genus 2 --json");
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["cell"] == "4");
    CHECK(j["lower"] == 4);
    CHECK(j["upper"] == 4);

    auto table = run("bounds --table");
    CHECK(table.out.find("[37, 42]") != std::string::npos);
    CHECK(table.out.find("[10, 14]") != std::string::npos);

    auto partial = run("bounds --n 12 --genus 0 --json");
    CHECK(nlohmann::json::parse(partial.out)["partial"] == true);
}

TEST_CASE("usage errors exit with the usage status") {
    CHECK(run("insert " + fixture("tetrahedron.txt")).status == 2);        // neither flag
    CHECK(run("bounds").status == 2);                                      // no selection
    CHECK(run("nonsense").status != 0);
}

namespace {

// Structural validator for the draft-07 subset the shipped schemas use:
// type, required, properties, items.
bool validates(const nlohmann::json& value, const nlohmann::json& schema) {
    if (schema.contains("type")) {
        const std::string type = schema["type"];
        if (type == "object" && !value.is_object()) return false;
        if (type == "array" && !value.is_array()) return false;
        if (type == "integer" && !value.is_number_integer()) return false;
        if (type == "boolean" && !value.is_boolean()) return false;
        if (type == "string" && !value.is_string()) return false;
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties"))
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !validates(value[key], sub)) return false;
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!validates(item, schema["items"])) return false;
    return true;
}

nlohmann::json schema(const std::string& name) {
    std::ifstream in(std::string(ROTSYS_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("JSON outputs validate against the shipped schemas") {
    auto report = run("verify " + fixture("k9_s3_case1.txt") + " --genus 3 --faces --json");
    CHECK(validates(nlohmann::json::parse(report.out), schema("report.schema.json")));

    auto dir = scratch_dir("schemas");
    auto summary = run("search --n 9 --genus 3 --limit 2 --json --out " + dir.string());
    CHECK(validates(nlohmann::json::parse(summary.out), schema("counters.schema.json")));

    auto classes =
        run("classify " + fixture("k9_s3_case1.txt") + " " + fixture("k9_s3_case2.txt") +
            " --json");
    CHECK(validates(nlohmann::json::parse(classes.out), schema("classes.schema.json")));

    auto plan = run("insert " + fixture("k10_s4.txt") + " --best --json");
    CHECK(validates(nlohmann::json::parse(plan.out), schema("insertion.schema.json")));

    auto range = run("bounds --n 11 --genus 1 --json");
    CHECK(validates(nlohmann::json::parse(range.out), schema("range.schema.json")));

    // the JSON encoding of a text fixture fits the rotation schema
    auto rs = rotsys::parse_rotation_file(fixture("k9_s3_case1.txt")).system;
    CHECK(validates(nlohmann::json::parse(rotsys::to_json_string(rs)),
                    schema("rotation.schema.json")));
}
