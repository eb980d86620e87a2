#include <doctest.h>

#include <regex>

#include "lagcell/export.hpp"

using namespace lagcell;

namespace {
int count(const std::string& s, const std::string& what) {
    int c = 0;
    for (std::size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++c;
    return c;
}
}  // namespace

TEST_SUITE("export") {
    TEST_CASE("document layout") {
        const auto doc = complex_document(build(1, Space::Mixed), 5);
        std::vector<std::string> keys;
        for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
        CHECK(keys == std::vector<std::string>{"schema_version", "n", "space", "cells", "boundary", "provenance"});
        std::vector<std::string> cell_keys;
        for (auto it = doc["cells"][0].begin(); it != doc["cells"][0].end(); ++it) cell_keys.push_back(it.key());
        CHECK(cell_keys == std::vector<std::string>{"id", "kind", "lambda", "mu", "eps", "dim"});
        CHECK(doc["cells"].size() == 4);
        CHECK(doc["boundary"].size() == 2);
        CHECK(doc["boundary"][0]["target_id"] == 1);
        CHECK(doc["boundary"][0]["source_id"] == 2);
        CHECK(doc["boundary"][0]["degree"] == -1);
        CHECK(doc["provenance"]["seed"] == 5);
        CHECK(doc["provenance"]["version"] == kToolVersion);
        for (const auto& e : doc["boundary"]) CHECK(e["degree"] != 0);
    }

    TEST_CASE("JSON round trip") {
        for (Space s : {Space::Real, Space::Complex, Space::Mixed})
            for (int n = 1; n <= 3; ++n) {
                const ChainComplex cc = build(n, s);
                const std::string text = complex_document(cc, 1).dump(2);
                CHECK(complex_from_document(nlohmann::json::parse(text)) == cc);
            }
    }

    TEST_CASE("malformed documents are rejected") {
        auto doc = nlohmann::json::parse(complex_document(build(1, Space::Mixed), 1).dump());
        auto bad = doc;
        bad["schema_version"] = 99;
        CHECK_THROWS_AS(complex_from_document(bad), domain_error);
        bad = doc;
        bad["cells"][1]["dim"] = 2;
        CHECK_THROWS_AS(complex_from_document(bad), domain_error);
        bad = doc;
        bad["boundary"][0]["target_id"] = 0;
        CHECK_THROWS_AS(complex_from_document(bad), domain_error);
    }

    TEST_CASE("output is deterministic") {
        CHECK(complex_document(build(3, Space::Mixed), 9).dump() == complex_document(build(3, Space::Mixed), 9).dump());
        CHECK(to_dot(build(3, Space::Mixed)) == to_dot(build(3, Space::Mixed)));
    }

    TEST_CASE("DOT for the projective line") {
        const std::string dot = to_dot(build(1, Space::Mixed));
        CHECK(count(dot, "[label=") == 4);
        CHECK(count(dot, " -> ") == 2);
        CHECK(dot.find("c2 -> c1 [deg=-1, style=dashed];") != std::string::npos);
        CHECK(dot.find("c3 -> c1 [deg=1];") != std::string::npos);
        CHECK(dot.find("label=\"[1];[1];+/2\"") != std::string::npos);
        CHECK(dot.find("label=\"φ;φ;/0\"") != std::string::npos);
    }

    TEST_CASE("DOT for n = 3") {
        const std::string cdot = to_dot(build(3, Space::Complex));
        CHECK(count(cdot, "[label=") == 8);
        CHECK(count(cdot, " -> ") == 0);

        const ChainComplex real = build(3, Space::Real);
        const std::string rdot = to_dot(real);
        // ids: [2] is 2, [2,1] is 3, [3] is 4
        CHECK(real.cells[2][0].lambda.parts() == std::vector<int>{2});
        CHECK(rdot.find("c4 -> c2 [deg=-2, style=dashed, penwidth=2];") != std::string::npos);
        CHECK(rdot.find("c3 -> c2 [deg=2, penwidth=2];") != std::string::npos);
        const std::regex edge(R"(-> c\d+ \[deg=(-?\d+)(, style=dashed)?(, penwidth=2)?\];)");
        for (std::sregex_iterator it(rdot.begin(), rdot.end(), edge), end; it != end; ++it) {
            const int d = std::stoi((*it)[1]);
            CHECK(d != 0);
            CHECK((*it)[2].matched == (d < 0));
            CHECK((*it)[3].matched == (d == 2 || d == -2));
        }
    }

    TEST_CASE("CSV") {
        CHECK(boundary_csv(build(1, Space::Mixed)) == "dim,target_id,source_id,degree\n2,1,2,-1\n2,1,3,1\n");
        CHECK(boundary_csv(build(1, Space::Mixed), 1) == "dim,target_id,source_id,degree\n");
    }
}
