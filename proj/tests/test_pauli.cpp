#include <doctest.h>

#include <random>

#include "lsg/pauli.hpp"
#include "lsg/strategy.hpp"
#include "oracles.hpp"

using lsg::PauliWord;

TEST_CASE("symplectic commutation and phases match matrices") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<std::uint32_t> bits(0, 7);
    for (int trial = 0; trial < 300; ++trial) {
        const PauliWord a{bits(rng), bits(rng)};
        const PauliWord b{bits(rng), bits(rng)};
        const auto ma = lsg::pauli_matrix(a, 3);
        const auto mb = lsg::pauli_matrix(b, 3);
        CHECK(lsg::commutes(a, b) == ((ma * mb - mb * ma).norm() < 1e-12));
        const PauliWord c{a.x ^ b.x, a.z ^ b.z};
        const lsg::Complex phase = std::pow(lsg::Complex(0, 1), lsg::product_phase(a, b));
        CHECK((ma * mb - phase * lsg::pauli_matrix(c, 3)).norm() < 1e-12);
    }
}

TEST_CASE("labels put qubit 0 first") {
    CHECK(lsg::pauli_label(PauliWord{0b01, 0b11}, 2) == "YZ");
    CHECK(lsg::pauli_label(PauliWord{}, 0) == "1");
    const auto xz = lsg::pauli_matrix(PauliWord{0b01, 0b10}, 2);
    CHECK(xz(0, 2) == lsg::Complex(1, 0));  // X on the left factor moves |0.> to |1.>
    CHECK(xz(1, 3) == lsg::Complex(-1, 0));
}

TEST_CASE("magic square needs exactly two qubits") {
    const auto ms = lsg::magic_square();
    const auto none = lsg::pauli_opsol_search(ms, 1);
    CHECK(none.status == lsg::PauliSearchStatus::Exhausted);

    const auto found = lsg::pauli_opsol_search(ms, 2);
    REQUIRE(found.status == lsg::PauliSearchStatus::Found);
    CHECK(found.qubits == 2);
    REQUIRE(found.solution);
    CHECK(found.solution->dimension == 4);
    CHECK(found.labels.size() == 9);
    CHECK(lsg::check_operator_solution(*found.solution, ms, 1e-12).passed);
}

TEST_CASE("solvable systems are found on zero qubits") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 60; ++trial) {
        const auto sys = oracle::random_system(rng, 2, 1 + trial % 6, 1 + trial % 6);
        const auto result = lsg::pauli_opsol_search(sys, 2);
        if (oracle::solvable(sys)) {
            REQUIRE(result.status == lsg::PauliSearchStatus::Found);
            CHECK(result.qubits == 0);
        }
        if (result.solution) CHECK(lsg::check_operator_solution(*result.solution, sys, 1e-12).passed);
    }
}

TEST_CASE("inconsistent pair has no Pauli solution") {
    const auto sys = lsg::parse_system("p 2\nvars 1\nx1 = 0\nx1 = 1\n");
    CHECK(lsg::pauli_opsol_search(sys, 3).status == lsg::PauliSearchStatus::Exhausted);
}

TEST_CASE("budget and argument checks") {
    const auto ms = lsg::magic_square();
    const auto cut = lsg::pauli_opsol_search(ms, 3, 50);
    CHECK(cut.status == lsg::PauliSearchStatus::BudgetExceeded);
    CHECK_FALSE(cut.solution);
    CHECK_THROWS_AS(lsg::pauli_opsol_search(lsg::parse_system("p 3\nvars 1\nx1 = 1\n"), 1), std::invalid_argument);
    CHECK_THROWS_AS(lsg::pauli_opsol_search(ms, lsg::kMaxPauliQubits + 1), std::invalid_argument);
}
