#include <doctest.h>

#include "lsg/constructions.hpp"
#include "lsg/strategy_io.hpp"
#include "pauli_square.hpp"

TEST_CASE("strategy JSON round-trips exactly") {
    const auto ms = lsg::magic_square();
    const auto st = lsg::operator_solution_to_tensor_strategy({2, 4, fixture::magic_square_operators()}, ms);
    const auto j = lsg::strategy_to_json(st, ms);
    CHECK(j.at("format") == "lsgame-strategy");
    CHECK(j.at("system_hash") == lsg::system_hash(ms));
    const auto back = lsg::strategy_from_json(nlohmann::json::parse(j.dump()), ms);
    CHECK(back.dimension == st.dimension);
    CHECK(back.state == st.state);
    CHECK(back.bob == st.bob);
    CHECK(back.alice == st.alice);
}

TEST_CASE("operator solution JSON round-trips exactly") {
    const auto ms = lsg::magic_square();
    const lsg::OperatorSolution sol{2, 4, fixture::magic_square_operators()};
    const auto back = lsg::operator_solution_from_json(nlohmann::json::parse(lsg::operator_solution_to_json(sol, ms).dump()), ms);
    CHECK(back.dimension == 4);
    CHECK(back.operators == sol.operators);
}

TEST_CASE("bundled strategy files load and round-trip") {
    const auto ms = lsg::load_system(LSG_DATA_DIR "/magic_square.lsys");
    for (const char* name : {"/magic_square_perfect.json", "/magic_square_classical.json"}) {
        const auto j = lsg::read_json_file(std::string(LSG_DATA_DIR) + name);
        const auto st = lsg::strategy_from_json(j, ms);
        CHECK(lsg::strategy_to_json(st, ms) == j);
    }
}

TEST_CASE("mismatched files are rejected") {
    const auto ms = lsg::magic_square();
    const auto st = lsg::operator_solution_to_tensor_strategy({2, 4, fixture::magic_square_operators()}, ms);
    const auto good = lsg::strategy_to_json(st, ms);

    const auto other = lsg::parse_system("p 2\nvars 9\nx1 + x2 + x3 = 1\nx4 + x5 + x6 = 0\nx7 + x8 + x9 = 0\n");
    CHECK_THROWS_AS(lsg::strategy_from_json(good, other), lsg::ShapeError);

    auto wrong_p = good;
    wrong_p["p"] = 3;
    CHECK_THROWS_AS(lsg::strategy_from_json(wrong_p, ms), lsg::ShapeError);

    auto wrong_dim = good;
    wrong_dim["dimension"] = 4;
    CHECK_THROWS_AS(lsg::strategy_from_json(wrong_dim, ms), lsg::ShapeError);

    auto missing_bob = good;
    missing_bob["bob"].erase(3);
    CHECK_THROWS_AS(lsg::strategy_from_json(missing_bob, ms), lsg::ShapeError);

    auto stray = good;
    stray["alice"][0]["operators"][0]["variable"] = 9;
    CHECK_THROWS_AS(lsg::strategy_from_json(stray, ms), lsg::ShapeError);

    auto wrong_format = good;
    wrong_format["format"] = "lsgame-operator-solution";
    CHECK_THROWS_AS(lsg::strategy_from_json(wrong_format, ms), lsg::ShapeError);

    CHECK_THROWS_AS(lsg::strategy_from_json(nlohmann::json::object(), ms), nlohmann::json::exception);
}

TEST_CASE("game report JSON carries the exact value") {
    lsg::GameReport r;
    r.pairs = {{0, 0, 1.0}, {1, 0, 0.0}};
    r.value = 0.5;
    r.worst = r.pairs[1];
    r.exact = lsg::Rational(1, 2);
    const auto j = lsg::game_report_to_json(r);
    CHECK(j.at("value_exact") == "1/2");
    CHECK(j.at("worst").at("equation") == 2);
    CHECK(j.at("pairs").size() == 2);
    r.exact.reset();
    CHECK(lsg::game_report_to_json(r).at("value_exact").is_null());
}
