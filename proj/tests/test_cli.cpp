#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bouncer/cli/commands.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "bouncer");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = bouncer::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string field; std::getline(in, field, ',');) {
        out.push_back(field);
    }
    return out;
}

}  // namespace

TEST_CASE("identical invocations give byte-identical output") {
    const std::vector<std::string> args{"--nt", "4", "moments"};
    const Run a = run(args);
    const Run b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("density CSV has a header, CRLF rows and zero density at the wall") {
    const Run r = run({"--nt", "2", "--nx", "101", "density"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\r\n") != std::string::npos);
    const auto rows = lines(r.out);
    CHECK(rows.front() == "t,x,density");
    CHECK(rows.size() == 1 + 2 * 101);
    int at_wall = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = split(rows[i]);
        REQUIRE(f.size() == 3);
        if (std::stod(f[1]) == 0.0) {
            CHECK(std::stod(f[2]) == 0.0);
            ++at_wall;
        }
    }
    CHECK(at_wall == 2);
}

TEST_CASE("JSON output parses and carries the schema version") {
    const Run r = run({"--kind", "free", "--nt", "3", "--format", "json", "moments"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["metadata"]["kind"] == "free");
    CHECK(doc["metadata"]["params"]["beta"] == 1.0);
    REQUIRE(doc["records"].size() == 3);
    CHECK(doc["records"][0]["x_mean_approx"].is_null());
    CHECK(doc["records"][2]["x_mean_numeric"].get<double>()
          == doctest::Approx(doc["records"][2]["x_mean_classical"].get<double>()).epsilon(1e-9));
}

TEST_CASE("file output writes a metadata sidecar") {
    const auto dir = std::filesystem::temp_directory_path() / "bouncer_cli_test";
    std::filesystem::create_directories(dir);
    const auto csv = (dir / "moments.csv").string();
    const Run r = run({"--nt", "3", "--out", csv, "moments"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream meta(csv + ".meta.json");
    REQUIRE(meta.good());
    const auto doc = nlohmann::json::parse(meta);
    CHECK(doc["command"] == "moments");
    CHECK(doc["time_window"]["n_times"] == 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("config file supplies defaults that flags override") {
    const auto path = (std::filesystem::temp_directory_path() / "bouncer_cli_test.ini").string();
    {
        std::ofstream cfg(path);
        cfg << "x0 = -8\np0 = 4\nnt = 2\nformat = json\n";
    }
    const Run r = run({"--config", path, "--p0", "2", "moments"});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["metadata"]["params"]["x0"] == -8.0);
    CHECK(doc["metadata"]["params"]["p0"] == 2.0);
    CHECK(doc["records"].size() == 2);
}

TEST_CASE("bad arguments exit with status 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"--kind", "sideways", "moments"}).code == 2);
    CHECK(run({"--x0", "3", "moments"}).code == 2);
    CHECK(run({"--nx", "100", "density"}).code == 2);
    CHECK(run({"--kind", "psi0", "autocorr"}).code == 2);
    CHECK(run({"validate", "--criterion", "AC99"}).code == 2);
    const Run clipped = run({"--kind", "free", "--xmin", "-1", "moments"});
    CHECK(clipped.code == 2);
    CHECK(clipped.err.find("error:") != std::string::npos);
}

TEST_CASE("validate reports each selected criterion once") {
    const Run r = run({"validate", "--criterion", "AC3", "--criterion", "AC9"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].rfind("AC3,", 0) == 0);
    CHECK(rows[2].rfind("AC9,", 0) == 0);
    CHECK(r.err.find("[PASS] AC3") != std::string::npos);
}

TEST_CASE("validate fails on a grid that clips the packet") {
    const Run r = run({"--xmin", "-1", "--format", "json", "validate", "--criterion", "AC2"});
    CHECK(r.code == 1);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["all_passed"] == false);
    CHECK(doc["criteria"].size() == 1);
    CHECK(r.err.find("[FAIL] AC2") != std::string::npos);
}

TEST_CASE("autocorrelation modulus decreases and matches the overlap") {
    const Run r = run({"--nt", "9", "--tmax", "1.5", "autocorr"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 10);
    double previous = 2.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = split(rows[i]);
        const double abs2 = std::stod(f[3]);
        CHECK(abs2 < previous);
        CHECK(std::stod(f[6]) == doctest::Approx(abs2).epsilon(1e-6));
        previous = abs2;
    }
}
