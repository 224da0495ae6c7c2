#include "cs/matrix_io.hpp"

#include <fstream>

namespace cs {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Scalar entry_scalar(const json& cell, const std::string& context, std::size_t i, std::size_t j) {
    std::string where = context + ": entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ")";
    try {
        if (cell.is_string()) return Scalar::parse(cell.get<std::string>());
        if (cell.is_number_integer()) return Scalar(cell.get<long>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a scalar string");
}

}  // namespace

Matrix matrix_from_json(const json& j, const std::string& context) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError(context + ": expected { \"n\": ..., \"entries\": ... }");
    if (!j["n"].is_number_integer() || j["n"].get<long>() < 1)
        throw ParseError(context + ": \"n\" must be a positive integer");
    std::size_t n = j["n"].get<std::size_t>();
    const json& rows = j["entries"];
    if (!rows.is_array() || rows.size() != n)
        throw ParseError(context + ": matrix is not square (expected " + std::to_string(n) +
                         " rows)");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError(context + ": row " + std::to_string(i + 1) + " is not square (expected " +
                             std::to_string(n) + " entries)");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = entry_scalar(row[k], context, i, k);
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"n", m.rows()}, {"entries", std::move(rows)}};
}

Matrix load_matrix(const std::string& path) {
    return matrix_from_json(read_json_file(path), path);
}

void save_matrix(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot write file");
    out << matrix_to_json(m).dump(2) << "\n";
}

MatrixPair load_pair(const std::string& path) {
    json j = read_json_file(path);
    if (!j.is_object() || !j.contains("A") || !j.contains("B"))
        throw ParseError(path + ": expected { \"A\": ..., \"B\": ... }");
    MatrixPair pair{matrix_from_json(j["A"], path + " (A)"), matrix_from_json(j["B"], path + " (B)")};
    if (pair.a.rows() != pair.b.rows())
        throw ParseError(path + ": A and B have different dimensions");
    return pair;
}

MatrixPair load_pair(const std::string& path_a, const std::string& path_b) {
    MatrixPair pair{load_matrix(path_a), load_matrix(path_b)};
    if (pair.a.rows() != pair.b.rows())
        throw ParseError(path_a + ", " + path_b + ": A and B have different dimensions");
    return pair;
}

void save_pair(const MatrixPair& pair, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot write file");
    json j{{"A", matrix_to_json(pair.a)}, {"B", matrix_to_json(pair.b)}};
    out << j.dump(2) << "\n";
}

}  // namespace cs
