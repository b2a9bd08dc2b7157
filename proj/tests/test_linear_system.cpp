#include <doctest.h>

#include <random>
#include <string>

#include "lsg/linear_system.hpp"
#include "oracles.hpp"

using lsg::LinearSystem;
using lsg::SystemError;
using lsg::SystemErrorKind;

namespace {

SystemErrorKind kind_of(const std::string& text) {
    try {
        (void)lsg::parse_system(text);
    } catch (const SystemError& e) {
        return e.kind();
    }
    FAIL("parse unexpectedly succeeded: " << text);
    return SystemErrorKind::Syntax;
}

}  // namespace

TEST_CASE("magic square layout") {
    const auto ms = lsg::magic_square();
    CHECK(ms.modulus() == 2);
    CHECK(ms.equations() == 6);
    CHECK(ms.variables() == 9);
    CHECK(ms.question_pairs().size() == 18);
    CHECK(lsg::support(ms, 1).variables == std::vector<std::size_t>{0, 1, 2});
    CHECK(lsg::support(ms, 4).variables == std::vector<std::size_t>{0, 3, 6});
    CHECK(lsg::support(ms, 6).variables == std::vector<std::size_t>{2, 5, 8});
    CHECK(ms.rhs(5) == 1);
    CHECK_THROWS_AS(lsg::support(ms, 0), std::out_of_range);
    CHECK_THROWS_AS(lsg::support(ms, 7), std::out_of_range);
}

TEST_CASE("magic square is inconsistent by exhaustion of all 2^9 assignments") {
    const auto ms = lsg::magic_square();
    CHECK_FALSE(oracle::solvable(ms));
    CHECK_FALSE(lsg::classical_solve(ms).has_value());
}

TEST_CASE("bundled file matches the built-in magic square") {
    CHECK(lsg::load_system(LSG_DATA_DIR "/magic_square.lsys") == lsg::magic_square());
}

TEST_CASE("small systems solve as expected") {
    const auto pair = lsg::parse_system("p 2\nvars 1\nx1 = 0\nx1 = 1\n");
    CHECK_FALSE(lsg::classical_solve(pair).has_value());

    const auto z3 = lsg::parse_system("p 3\nvars 2\nx1 + x2 = 1\n");
    const auto x = lsg::classical_solve(z3);
    REQUIRE(x.has_value());
    CHECK(z3.satisfies(*x));

    const auto scaled = lsg::parse_system("p 5\nvars 3\n2 x1 + 3 x2 = 4\n4 x2 + x3 = 0\nx1 + x3 = 2\n");
    const auto y = lsg::classical_solve(scaled);
    CHECK(y.has_value() == oracle::solvable(scaled));
    if (y) CHECK(scaled.satisfies(*y));
}

TEST_CASE("Gaussian elimination agrees with brute force on random systems") {
    std::mt19937_64 rng(20261015);
    int solvable = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const lsg::Residue p = std::array<lsg::Residue, 4>{2, 3, 5, 7}[trial % 4];
        const std::size_t n = 1 + trial % 6;
        const std::size_t m = 1 + (trial / 7) % 6;
        const auto sys = oracle::random_system(rng, p, n, m);
        const auto x = lsg::classical_solve(sys);
        CAPTURE(lsg::serialize(sys));
        REQUIRE(x.has_value() == oracle::solvable(sys));
        if (x) {
            CHECK(sys.satisfies(*x));
            ++solvable;
        }
    }
    CHECK(solvable > 20);
    CHECK(solvable < 380);
}

TEST_CASE("parser accepts comments, implicit coefficients and spacing") {
    const auto sys = lsg::parse_system(
        "# comment\n"
        "p 3   # trailing comment\n"
        "\n"
        "vars 3\n"
        "  2 x1+x3 = 2\n"
        "x2 = 0\n");
    CHECK(sys.modulus() == 3);
    CHECK(sys.coefficient(0, 0) == 2);
    CHECK(sys.coefficient(0, 1) == 0);
    CHECK(sys.coefficient(0, 2) == 1);
    CHECK(sys.rhs(0) == 2);
}

TEST_CASE("serialize is canonical and round-trips") {
    const auto sys = lsg::parse_system("p 3\nvars 3\n2 x1+x3 = 2\nx2 = 0\n");
    const auto text = lsg::serialize(sys);
    CHECK(text == "p 3\nvars 3\n2 x1 + 1 x3 = 2\n1 x2 = 0\n");
    CHECK(lsg::parse_system(text) == sys);
    CHECK(lsg::serialize(lsg::parse_system(text)) == text);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = oracle::random_system(rng, 5, 1 + trial % 5, 1 + trial % 4);
        CHECK(lsg::parse_system(lsg::serialize(r)) == r);
    }
}

TEST_CASE("system hash depends only on content") {
    const auto a = lsg::parse_system("p 2\nvars 2\nx1 + x2 = 1\n");
    const auto b = lsg::parse_system("# same system\np 2\nvars 2\n1 x1 +   1 x2 = 1\n");
    const auto c = lsg::parse_system("p 2\nvars 2\nx1 + x2 = 0\n");
    CHECK(lsg::system_hash(a) == lsg::system_hash(b));
    CHECK(lsg::system_hash(a) != lsg::system_hash(c));
    CHECK(lsg::system_hash(a).size() == 16);
}

TEST_CASE("malformed input maps to its error category") {
    CHECK(kind_of("") == SystemErrorKind::Syntax);
    CHECK(kind_of("p 2\nvars 1\n") == SystemErrorKind::Syntax);
    CHECK(kind_of("p 2\nvars 1\nx1 = \n") == SystemErrorKind::Syntax);
    CHECK(kind_of("p 2\nvars 1\nx1 x1 = 0\n") == SystemErrorKind::Syntax);
    CHECK(kind_of("p 2\nvars 2\nx1 + x1 + x2 = 0\n") == SystemErrorKind::Syntax);
    CHECK(kind_of("vars 1\np 2\nx1 = 0\n") == SystemErrorKind::Syntax);
    CHECK(kind_of("p 2\nvars 1\ny1 = 0\n") == SystemErrorKind::Syntax);
    CHECK(kind_of("p 4\nvars 1\nx1 = 0\n") == SystemErrorKind::NonPrimeModulus);
    CHECK(kind_of("p 1\nvars 1\nx1 = 0\n") == SystemErrorKind::NonPrimeModulus);
    CHECK(kind_of("p 3\nvars 1\n3 x1 = 0\n") == SystemErrorKind::EntryOutOfRange);
    CHECK(kind_of("p 3\nvars 1\nx1 = 5\n") == SystemErrorKind::EntryOutOfRange);
    CHECK(kind_of("p 3\nvars 2\nx3 = 0\nx1 + x2 = 0\n") == SystemErrorKind::VariableOutOfRange);
    CHECK(kind_of("p 3\nvars 1\nx0 = 0\n") == SystemErrorKind::VariableOutOfRange);
    CHECK(kind_of("p 3\nvars 1\n0 x1 = 1\n") == SystemErrorKind::EmptyEquation);
    CHECK(kind_of("p 3\nvars 2\nx1 = 1\n") == SystemErrorKind::OrphanVariable);
}

TEST_CASE("errors carry a source position") {
    try {
        (void)lsg::parse_system("p 3\nvars 1\n\nx1 = 7\n");
        FAIL("expected an error");
    } catch (const SystemError& e) {
        CHECK(e.kind() == SystemErrorKind::EntryOutOfRange);
        CHECK(e.line() == 4);
        CHECK(e.column() > 0);
    }
}

TEST_CASE("constructor validates programmatic systems") {
    using Rows = std::vector<std::vector<lsg::Residue>>;
    CHECK_THROWS_AS(LinearSystem(6, Rows{{1}}, {0}), SystemError);
    CHECK_THROWS_AS(LinearSystem(2, Rows{{1, 0}}, {0}), SystemError);
    CHECK_THROWS_AS(LinearSystem(2, Rows{{0}}, {0}), SystemError);
    CHECK_THROWS_AS(LinearSystem(2, Rows{{1}}, {0, 1}), SystemError);
    CHECK_NOTHROW(LinearSystem(2, Rows{{1}}, {1}));
}
