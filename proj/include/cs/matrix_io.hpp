#pragma once

#include <string>

#include <json.hpp>

#include "cs/matrix.hpp"

namespace cs {

// Matrix text format: { "n": <int>, "entries": [[<scalar>, ...], ...] }
// with scalars "p", "p/q", or "p/q+r/si". A pair file holds { "A": ...,
// "B": ... }. Non-square shapes and zero denominators are rejected with
// entry-anchored messages.

Matrix matrix_from_json(const nlohmann::json& j, const std::string& context);
nlohmann::json matrix_to_json(const Matrix& m);

Matrix load_matrix(const std::string& path);
void save_matrix(const Matrix& m, const std::string& path);

MatrixPair load_pair(const std::string& path);
MatrixPair load_pair(const std::string& path_a, const std::string& path_b);
void save_pair(const MatrixPair& pair, const std::string& path);

}  // namespace cs
