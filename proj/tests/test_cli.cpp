#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "waldkit/cli.hpp"

using namespace waldkit;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(const std::vector<std::string>& args) {
    set_data_dir(WALDKIT_DATA_DIR);
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
    auto v = cli({"validate", "--category", "trivial.cat"});
    CHECK(v.code == 0);
    CHECK(has(v.out, "valid"));

    auto k = cli({"k0", "--category", "chain2.cat", "--y", "circle", "--cap", "3"});
    CHECK(k.code == 0);
    CHECK(has(k.out, "degree 0: Z\n"));

    auto h = cli({"hh", "--category", "trivial.cat", "--y", "circle", "--p", "1", "--field", "q"});
    CHECK(h.code == 0);
    CHECK(has(h.out, "degree 1: 0\n"));
}

TEST_CASE("exit codes") {
    CHECK(cli({"validate", "--category", "chain2"}).code == 1);
    CHECK(cli({"product", "--category", "chain2", "--functor", "join"}).code == 1);
    CHECK(cli({"k0", "--category", "chain2", "--y", "point_plus"}).code == 1);

    auto unknown = cli({"hh", "--category", "trivial", "--frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(has(unknown.err, "frobnicate"));
    CHECK(cli({}).code == 2);
    CHECK(cli({"hh", "--category", "missing.cat"}).code == 2);
    CHECK(cli({"hh", "--category", "trivial", "--field", "fp:6"}).code == 2);
    CHECK(cli({"hh", "--category", "trivial", "--range", "3..1"}).code == 2);
    CHECK(cli({"k0", "--category", "trivial", "--cap", "1"}).code == 2);

    const auto dir = std::filesystem::temp_directory_path() / "waldkit_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "broken.cat").string();
    {
        std::ofstream f(path);
        f << "{\"objects\": [\"0\"], \"morphisms\": [{\"id\": \"id0\", \"src\": \"0\", \"dst\": \"1\"}]}";
    }
    auto broken = cli({"validate", "--category", path});
    CHECK(broken.code == 2);
    CHECK(has(broken.err, path + ": morphisms[0].dst"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("reports are deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"hc", "--category", "chain2", "--range", "0..2"},
             {"trace", "--category", "chain2", "--output", "structured"},
             {"homotopy-check", "--category", "chain2"},
             {"sbi", "--category", "trivial", "--range", "0..3", "--field", "fp:2"}}) {
        auto a = cli(args), b = cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("structured output carries the reliable range") {
    auto r = cli({"hh", "--category", "chain2", "--range", "0..1", "--crosscheck", "--output", "structured"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["reliable"] == nlohmann::json::array({0, 1}));
    CHECK(j["values"].size() == 2);
    CHECK(j["values"][0]["dim"] == 1);
    CHECK(j["checks"]["ok"] == true);
    for (const auto& v : j["values"])
        CHECK(v["degree"].get<int>() <= 1);
}

TEST_CASE("every subcommand runs on a builtin") {
    CHECK(cli({"s-set", "--category", "chain2", "--cap", "3"}).code == 0);
    CHECK(cli({"homology", "--category", "chain3", "--range", "0..2"}).code == 0);
    CHECK(cli({"product", "--category", "chain2", "--p", "0", "--q", "0"}).code == 0);
    CHECK(cli({"homotopy-check", "--category", "trivial", "--homotopy", "constant"}).code == 0);
    auto help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(has(help.out, "homotopy-check"));
}

}
