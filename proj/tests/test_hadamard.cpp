#include "mdim/error.hpp"
#include "mdim/hadamard.hpp"

#include <doctest.h>

using namespace mdim;

TEST_CASE("Sylvester base and doubling")
{
    const HadamardMatrix h2 = hadamard_matrix(2);
    CHECK(h2.entries() == std::vector<std::int8_t>{1, 1, 1, -1});

    const HadamardMatrix h4 = hadamard_matrix(4);
    CHECK(h4.construction() == "sylvester");
    // Direct check of H·Hᵀ = 4I.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            int dot = 0;
            for (std::size_t c = 0; c < 4; ++c)
                dot += h4(i, c) * h4(j, c);
            CHECK(dot == (i == j ? 4 : 0));
        }
}

TEST_CASE("Paley I for order 12")
{
    const HadamardMatrix h = hadamard_matrix(12);
    CHECK(h.construction() == "paley-1(11)");
    CHECK(is_hadamard(h));
}

TEST_CASE("every produced matrix is Hadamard")
{
    for (std::size_t n : {1, 2, 4, 8, 12, 16, 20, 24, 28, 32, 40, 44, 48, 56, 60, 64, 72, 80}) {
        CAPTURE(n);
        const HadamardMatrix h = hadamard_matrix(n);
        CHECK(h.order() == n);
        CHECK(is_hadamard(h));
        CHECK(is_hadamard(h.normalized()));
        CHECK(h == hadamard_matrix(n));
    }
}

TEST_CASE("normalization leaves first row and column positive")
{
    const HadamardMatrix h = hadamard_matrix(12).normalized();
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(h(i, 0) == 1);
        CHECK(h(0, i) == 1);
    }
}

TEST_CASE("unconstructible orders report what was tried")
{
    CHECK_THROWS_AS(hadamard_matrix(6), PreconditionError);
    try {
        hadamard_matrix(36);
        FAIL("expected failure");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("paley") != std::string::npos);
    }
    CHECK_FALSE(is_hadamard(HadamardMatrix(2, {1, 1, 1, 1})));
    CHECK_THROWS_AS(HadamardMatrix(2, {1, 0, 1, 1}), PreconditionError);
}
