#include "doctest.h"

#include <functional>

#include "waldkit/io.hpp"

using namespace waldkit;

namespace {

std::string structural_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const StructuralError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("category files round-trip") {
    for (const std::string name : {"trivial", "chain2", "chain3", "diamond"}) {
        const FinCofCategory C = builtin_category(name);
        const std::string text = write_category(C);
        const FinCofCategory D = read_category(text, name + ".cat");
        CHECK(D.name == C.name);
        CHECK(D.base.num_objects() == C.base.num_objects());
        CHECK(D.base.num_morphisms() == C.base.num_morphisms());
        CHECK(D.cofibration == C.cofibration);
        CHECK(D.witnesses.size() == C.witnesses.size());
        CHECK(write_category(D) == text);
        CHECK(validate_category(D.base).ok());
    }
}

TEST_CASE("generated data files match the generators") {
    for (const std::string name : {"trivial", "chain2", "chain3", "diamond"})
        CHECK(write_category(load_category(std::string(WALDKIT_DATA_DIR) + "/" + name + ".cat")) ==
              write_category(builtin_category(name)));
    for (const std::string name : {"circle", "const0", "point_plus", "interval_plus"}) {
        const SimplicialOrd Y = load_Y(std::string(WALDKIT_DATA_DIR) + "/" + name + ".y");
        CHECK(write_Y(Y) == write_Y(builtin_Y(name, Y.cap)));
    }
}

TEST_CASE("Y files round-trip") {
    for (const std::string name : {"circle", "const0", "point_plus", "interval_plus"}) {
        const SimplicialOrd Y = builtin_Y(name, 4);
        const SimplicialOrd Z = read_Y(write_Y(Y), name + ".y");
        CHECK(Z.cap == 4);
        CHECK(write_Y(Z) == write_Y(Y));
        CHECK(validate_Y(Z).ok());
    }
    CHECK_THROWS_AS(builtin_Y("torus", 3), StructuralError);
}

TEST_CASE("homotopy files round-trip") {
    const HomotopyInstance H = vertex_homotopy(3);
    const std::string text = write_homotopy(H, "point_plus", "interval_plus");
    const HomotopyInstance G = read_homotopy(text, "vertex.hom", 3);
    CHECK(write_homotopy(G, "point_plus", "interval_plus") == text);
    CHECK(validate_homotopy(G.Y, G.Y2, G.f, G.g, G.H).ok());
}

TEST_CASE("malformed files name the location") {
    const std::string good = write_category(builtin_category("chain2"));
    CHECK(structural_message([&] { read_category("{ \"objects\": [", "broken.cat"); }).find("broken.cat") == 0);
    auto bad = good;
    bad.replace(bad.find("\"g\": \"id[bot]\""), 14, "\"g\": \"nope\"");
    const std::string m = structural_message([&] { read_category(bad, "bad.cat"); });
    CHECK(m.find("bad.cat: compose[0].g") == 0);
    CHECK(m.find("nope") != std::string::npos);
    CHECK(structural_message([&] { read_category("{\"objects\": 3}", "x.cat"); }).find("x.cat: objects") == 0);
    CHECK(structural_message([&] { read_Y("{\"cap\": 2, \"levels\": [0, 0]}", "y.y"); }).find("y.y: levels") == 0);
    CHECK(structural_message([&] { load_category("/nonexistent/file.cat"); }).find("cannot open") !=
          std::string::npos);
}

}
