#include <doctest.h>

#include <map>

#include "lagcell/cells.hpp"

using namespace lagcell;

namespace {
std::vector<int> dims(const std::vector<Cell>& cells) {
    std::vector<int> d;
    for (const auto& c : cells) d.push_back(c.dim);
    return d;
}
}  // namespace

TEST_SUITE("cells") {
    TEST_CASE("complex cells") {
        CHECK(dims(enumerate_complex(3)) == std::vector<int>{0, 2, 4, 6, 6, 8, 10, 12});
        CHECK(dims(enumerate_complex(1)) == std::vector<int>{0, 2});
        CHECK(enumerate_complex(4).size() == 16);
        CHECK_THROWS_AS(enumerate_complex(0), domain_error);
        CHECK_THROWS_AS(enumerate_complex(9), resource_error);
        CHECK(enumerate_complex(9, 9).size() == 512);
    }

    TEST_CASE("real cells") {
        CHECK(dims(enumerate_real(3)) == std::vector<int>{0, 1, 2, 3, 3, 4, 5, 6});
        CHECK(dims(enumerate_real(2)) == std::vector<int>{0, 1, 2, 3});
        CHECK(dims(enumerate_real(1)) == std::vector<int>{0, 1});
    }

    TEST_CASE("mixed cells of the projective line") {
        auto cells = enumerate_mixed(1);
        REQUIRE(cells.size() == 4);
        CHECK(cell_label(cells[0]) == "φ");
        CHECK(cell_label(cells[1]) == "[1]∘");
        CHECK(cell_label(cells[2]) == "[1]+");
        CHECK(cell_label(cells[3]) == "[1]-");
        CHECK(dims(cells) == std::vector<int>{0, 1, 2, 2});
        CHECK_THROWS_AS(enumerate_mixed(6), resource_error);
    }

    TEST_CASE("mixed cell counts") {
        auto cells = enumerate_mixed(2);
        CHECK(cells.size() == 16);
        std::map<std::vector<int>, int> per_lambda;
        for (const auto& c : cells) ++per_lambda[c.lambda.parts()];
        CHECK(per_lambda[{}] == 1);
        CHECK(per_lambda[{1}] == 3);
        CHECK(per_lambda[{2}] == 5);
        CHECK(per_lambda[{2, 1}] == 7);
    }

    TEST_CASE("four components for [4,2] + i[4,2]") {
        const ShiftedDiagram lam(4, {4, 2});
        int count = 0;
        for (const auto& c : enumerate_mixed(4))
            if (c.lambda == lam && c.mu == lam) ++count;
        CHECK(count == 4);
    }

    TEST_CASE("canonical order") {
        auto cells = enumerate_mixed(3);
        for (std::size_t i = 1; i < cells.size(); ++i) CHECK(cell_less(cells[i - 1], cells[i]));
        CHECK(enumerate_mixed(3) == cells);
    }

    TEST_CASE("mixed cell validation") {
        const ShiftedDiagram lam(3, {2}), mu(3, {3});
        CHECK_THROWS_AS(mixed_cell(lam, mu, {1}), domain_error);
        CHECK_THROWS_AS(mixed_cell(mu, lam, {}), domain_error);
        CHECK_THROWS_AS(mixed_cell(mu, lam, {0}), domain_error);
    }

    TEST_CASE("labels mark real boxes and corner signs") {
        const ShiftedDiagram lam(4, {4, 2}), mu(4, {4, 1});
        // corners of [4,1]: (1,4) and (2,2)
        CHECK(cell_label(mixed_cell(lam, mu, {1, -1})) == "[4,2]+-∘");
        CHECK(cell_label(real_cell(lam)) == "[4,2]");
    }
}
