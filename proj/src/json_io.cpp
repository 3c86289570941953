#include "lieobs/json_io.hpp"
#include "lieobs/errors.hpp"

#include <fstream>

namespace lieobs {

namespace {

std::size_t require_count(const json& j, const char* what) {
    if (!j.is_number_unsigned())
        throw ParseError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

Rational require_rational(const json& j, const char* what) {
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string())
        throw ParseError(std::string(what) + " must be a rational string like \"2/3\"");
    return parse_rational(j.get<std::string>());
}

} // namespace

LieAlgebra parse_algebra(const json& j) {
    if (!j.is_object())
        throw ParseError("algebra must be a JSON object");
    if (j.contains("abelian"))
        return LieAlgebra::abelian(require_count(j["abelian"], "abelian dimension"));
    if (!j.contains("dim"))
        throw ParseError("algebra needs a \"dim\" field");
    const std::size_t dim = require_count(j["dim"], "dim");

    std::vector<std::string> names;
    if (j.contains("basis")) {
        if (!j["basis"].is_array())
            throw ParseError("\"basis\" must be an array of names");
        for (const auto& n : j["basis"]) {
            if (!n.is_string()) throw ParseError("basis names must be strings");
            names.push_back(n.get<std::string>());
        }
    }

    std::vector<SparseBracket> brackets;
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array())
            throw ParseError("\"brackets\" must be an array");
        for (const auto& b : j["brackets"]) {
            SparseBracket sb;
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("terms"))
                throw ParseError("bracket entries need \"i\", \"j\" and \"terms\"");
            sb.i = require_count(b["i"], "bracket index i");
            sb.j = require_count(b["j"], "bracket index j");
            if (sb.i >= sb.j)
                throw ParseError("bracket pairs must satisfy i < j");
            if (!b["terms"].is_array())
                throw ParseError("bracket \"terms\" must be an array");
            for (const auto& t : b["terms"]) {
                if (!t.is_object() || !t.contains("k") || !t.contains("v"))
                    throw ParseError("bracket terms need \"k\" and \"v\"");
                sb.terms.push_back({require_count(t["k"], "term index k"),
                                    require_rational(t["v"], "term value")});
            }
            brackets.push_back(std::move(sb));
        }
    }
    return LieAlgebra::from_brackets(dim, std::move(names), brackets);
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError("matrix must be an array of " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError("matrix rows must have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = require_rational(j[i][k], "matrix entry");
    }
    return m;
}

TModule parse_tmodule(const json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("module_dim") ||
        !j.contains("action"))
        throw ParseError("module needs \"base\", \"module_dim\" and \"action\"");
    LieAlgebra base = parse_algebra(j["base"]);
    const std::size_t d = require_count(j["module_dim"], "module_dim");
    if (!j["action"].is_array() || j["action"].size() != base.dim())
        throw ParseError("\"action\" must list one matrix per base basis vector");
    std::vector<Matrix> action;
    for (const auto& a : j["action"]) action.push_back(parse_matrix(a, d, d));
    return make_tmodule(std::move(base), d, std::move(action));
}

Coupling parse_coupling(const json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("fiber") || !j.contains("xi"))
        throw ParseError("coupling needs \"base\", \"fiber\" and \"xi\"");
    LieAlgebra base = parse_algebra(j["base"]);
    LieAlgebra fiber = parse_algebra(j["fiber"]);
    if (!j["xi"].is_array() || j["xi"].size() != base.dim())
        throw ParseError("\"xi\" must list one matrix per base basis vector");
    std::vector<Matrix> xi;
    for (const auto& m : j["xi"]) xi.push_back(parse_matrix(m, fiber.dim(), fiber.dim()));
    return validate_coupling(std::move(base), std::move(fiber), std::move(xi));
}

CoupElement parse_coup_element(const json& j) {
    if (!j.is_object() || !j.contains("coupling") || !j.contains("reference") ||
        !j.contains("phi"))
        throw ParseError("element needs \"coupling\", \"reference\" and \"phi\"");
    Coupling coupling = parse_coupling(j["coupling"]);
    TModule reference = parse_tmodule(j["reference"]);
    const std::size_t d = reference.module_dim;
    const std::size_t z = coupling.fiber.center().dim();
    Matrix phi = parse_matrix(j["phi"], d, z);
    return make_element(std::move(coupling), std::move(reference), std::move(phi));
}

Cochain parse_cochain(const json& j, std::size_t base_dim, std::size_t value_dim) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("values"))
        throw ParseError("cochain needs \"degree\" and \"values\"");
    const std::size_t degree = require_count(j["degree"], "degree");
    Cochain c = Cochain::zero(degree, base_dim, value_dim);
    if (!j["values"].is_array())
        throw ParseError("cochain \"values\" must be an array");
    for (const auto& entry : j["values"]) {
        if (!entry.is_object() || !entry.contains("tuple") || !entry.contains("v"))
            throw ParseError("cochain values need \"tuple\" and \"v\"");
        std::vector<std::size_t> tuple;
        for (const auto& t : entry["tuple"]) tuple.push_back(require_count(t, "tuple index"));
        if (tuple.size() != degree)
            throw ParseError("cochain tuple length must equal the degree");
        for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
            if (tuple[i] >= tuple[i + 1])
                throw ParseError("cochain tuples must be strictly increasing");
        if (!tuple.empty() && tuple.back() >= base_dim)
            throw ParseError("cochain tuple index out of range");
        if (!entry["v"].is_array() || entry["v"].size() != value_dim)
            throw ParseError("cochain value has wrong dimension");
        Vec v(value_dim);
        for (std::size_t i = 0; i < value_dim; ++i)
            v[i] = require_rational(entry["v"][i], "cochain value entry");
        c.at(tuple) = std::move(v);
    }
    return c;
}

json algebra_to_json(const LieAlgebra& g) {
    json j;
    j["dim"] = g.dim();
    j["basis"] = g.basis_names();
    json brackets = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t jj = i + 1; jj < g.dim(); ++jj) {
            json terms = json::array();
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (g.c(i, jj, k) != 0)
                    terms.push_back({{"k", k}, {"v", to_string(g.c(i, jj, k))}});
            if (!terms.empty())
                brackets.push_back({{"i", i}, {"j", jj}, {"terms", terms}});
        }
    j["brackets"] = brackets;
    return j;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

json tmodule_to_json(const TModule& m) {
    json j;
    j["base"] = algebra_to_json(m.base);
    j["module_dim"] = m.module_dim;
    json action = json::array();
    for (const auto& a : m.action) action.push_back(matrix_to_json(a));
    j["action"] = action;
    return j;
}

json cochain_to_json(const Cochain& c) {
    json j;
    j["degree"] = c.degree;
    json values = json::array();
    const auto tuples = increasing_tuples(c.base_dim, c.degree);
    for (std::size_t t = 0; t < tuples.size(); ++t)
        values.push_back({{"tuple", tuples[t]}, {"v", vec_to_json(c.values[t])}});
    j["values"] = values;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("JSON syntax error in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open file for writing: " + path);
    out << text;
    if (!out)
        throw ParseError("failed writing file: " + path);
}

} // namespace lieobs
