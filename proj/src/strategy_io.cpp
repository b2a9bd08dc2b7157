#include "lsg/strategy_io.hpp"

#include <algorithm>
#include <fstream>

namespace lsg {

using nlohmann::json;

namespace {

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back({m(r, c).real(), m(r, c).imag()});
    }
    return out;
}

Matrix matrix_from_json(const json& j, std::size_t dim, const std::string& what) {
    if (!j.is_array() || j.size() != dim * dim) {
        throw ShapeError(what + ": expected " + std::to_string(dim * dim) + " entries");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            const auto& e = j[static_cast<std::size_t>(r * d + c)];
            m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return m;
}

void check_header(const json& j, const char* format, const LinearSystem& sys) {
    if (j.at("format").get<std::string>() != format) {
        throw ShapeError(std::string("expected format '") + format + "'");
    }
    if (j.at("p").get<Residue>() != sys.modulus()) throw ShapeError("modulus does not match the system");
    if (j.contains("system_hash") && j.at("system_hash").get<std::string>() != system_hash(sys)) {
        throw ShapeError("system hash does not match; the file was written for a different system");
    }
}

}  // namespace

json strategy_to_json(const Strategy& st, const LinearSystem& sys) {
    json out;
    out["format"] = "lsgame-strategy";
    out["p"] = st.p;
    out["system_hash"] = system_hash(sys);
    out["dimension"] = st.dimension;
    json state = json::array();
    for (Eigen::Index i = 0; i < st.state.size(); ++i) state.push_back({st.state(i).real(), st.state(i).imag()});
    out["state"] = std::move(state);
    json alice = json::array();
    for (std::size_t l = 0; l < st.alice.size(); ++l) {
        json ops = json::array();
        const auto& vars = sys.support(l).variables;
        for (std::size_t k = 0; k < st.alice[l].size(); ++k) {
            ops.push_back({{"variable", vars.at(k) + 1}, {"matrix", matrix_to_json(st.alice[l][k])}});
        }
        alice.push_back({{"equation", l + 1}, {"operators", std::move(ops)}});
    }
    out["alice"] = std::move(alice);
    json bob = json::array();
    for (std::size_t j = 0; j < st.bob.size(); ++j) {
        bob.push_back({{"variable", j + 1}, {"matrix", matrix_to_json(st.bob[j])}});
    }
    out["bob"] = std::move(bob);
    return out;
}

Strategy strategy_from_json(const json& j, const LinearSystem& sys) {
    check_header(j, "lsgame-strategy", sys);
    Strategy st;
    st.p = sys.modulus();
    st.dimension = j.at("dimension").get<std::size_t>();
    const auto& state = j.at("state");
    if (state.size() != st.dimension) throw ShapeError("state length does not match the dimension");
    st.state.resize(static_cast<Eigen::Index>(st.dimension));
    for (std::size_t i = 0; i < st.dimension; ++i) {
        st.state(static_cast<Eigen::Index>(i)) = Complex(state[i].at(0).get<double>(), state[i].at(1).get<double>());
    }

    st.alice.resize(sys.equations());
    for (std::size_t l = 0; l < sys.equations(); ++l) st.alice[l].resize(sys.support(l).variables.size());
    std::vector<std::vector<bool>> seen(sys.equations());
    for (std::size_t l = 0; l < sys.equations(); ++l) seen[l].assign(sys.support(l).variables.size(), false);

    for (const auto& family : j.at("alice")) {
        const auto eq = family.at("equation").get<std::size_t>();
        if (eq == 0 || eq > sys.equations()) throw ShapeError("Alice family for unknown equation " + std::to_string(eq));
        const auto& vars = sys.support(eq - 1).variables;
        for (const auto& op : family.at("operators")) {
            const auto var = op.at("variable").get<std::size_t>();
            const auto it = std::find(vars.begin(), vars.end(), var - 1);
            if (var == 0 || it == vars.end()) {
                throw ShapeError("x" + std::to_string(var) + " is not in equation " + std::to_string(eq));
            }
            const auto k = static_cast<std::size_t>(it - vars.begin());
            st.alice[eq - 1][k] = matrix_from_json(op.at("matrix"), st.dimension,
                                                   "Alice operator (" + std::to_string(eq) + ", x" +
                                                       std::to_string(var) + ")");
            seen[eq - 1][k] = true;
        }
    }
    for (std::size_t l = 0; l < sys.equations(); ++l) {
        for (std::size_t k = 0; k < seen[l].size(); ++k) {
            if (!seen[l][k]) {
                throw ShapeError("missing Alice operator for equation " + std::to_string(l + 1) + ", x" +
                                 std::to_string(sys.support(l).variables[k] + 1));
            }
        }
    }

    st.bob.resize(sys.variables());
    std::vector<bool> bob_seen(sys.variables(), false);
    for (const auto& op : j.at("bob")) {
        const auto var = op.at("variable").get<std::size_t>();
        if (var == 0 || var > sys.variables()) throw ShapeError("Bob operator for unknown x" + std::to_string(var));
        st.bob[var - 1] = matrix_from_json(op.at("matrix"), st.dimension, "Bob operator x" + std::to_string(var));
        bob_seen[var - 1] = true;
    }
    for (std::size_t v = 0; v < bob_seen.size(); ++v) {
        if (!bob_seen[v]) throw ShapeError("missing Bob operator for x" + std::to_string(v + 1));
    }
    return st;
}

json operator_solution_to_json(const OperatorSolution& sol, const LinearSystem& sys) {
    json out;
    out["format"] = "lsgame-operator-solution";
    out["p"] = sol.p;
    out["system_hash"] = system_hash(sys);
    out["dimension"] = sol.dimension;
    json ops = json::array();
    for (std::size_t i = 0; i < sol.operators.size(); ++i) {
        ops.push_back({{"variable", i + 1}, {"matrix", matrix_to_json(sol.operators[i])}});
    }
    out["operators"] = std::move(ops);
    return out;
}

OperatorSolution operator_solution_from_json(const json& j, const LinearSystem& sys) {
    check_header(j, "lsgame-operator-solution", sys);
    OperatorSolution sol{sys.modulus(), j.at("dimension").get<std::size_t>(), {}};
    sol.operators.resize(sys.variables());
    std::vector<bool> seen(sys.variables(), false);
    for (const auto& op : j.at("operators")) {
        const auto var = op.at("variable").get<std::size_t>();
        if (var == 0 || var > sys.variables()) throw ShapeError("operator for unknown x" + std::to_string(var));
        sol.operators[var - 1] = matrix_from_json(op.at("matrix"), sol.dimension, "operator A" + std::to_string(var));
        seen[var - 1] = true;
    }
    for (std::size_t v = 0; v < seen.size(); ++v) {
        if (!seen[v]) throw ShapeError("missing operator for x" + std::to_string(v + 1));
    }
    return sol;
}

json game_report_to_json(const GameReport& report) {
    auto pair_json = [](const PairValue& pv) {
        return json{{"equation", pv.equation + 1}, {"variable", pv.variable + 1}, {"probability", pv.probability}};
    };
    json out;
    out["value"] = report.value;
    out["value_exact"] = report.exact ? json(report.exact->str()) : json(nullptr);
    out["worst"] = pair_json(report.worst);
    json pairs = json::array();
    for (const auto& pv : report.pairs) pairs.push_back(pair_json(pv));
    out["pairs"] = std::move(pairs);
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(1) << "\n";
}

}  // namespace lsg
