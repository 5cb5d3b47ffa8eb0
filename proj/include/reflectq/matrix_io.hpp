#pragma once

#include <json.hpp>

#include "reflectq/matrix.hpp"
#include "reflectq/scalar_io.hpp"

namespace reflectq {

inline std::string to_string(const ScalarMatrix& m) {
    std::string out = "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += to_string(m.at(i, j));
        }
    }
    return out + "]";
}

inline nlohmann::json matrix_to_json(const ScalarMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline ScalarMatrix matrix_from_json(const nlohmann::json& j) {
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw parse_error("matrix json row count mismatch");
    ScalarMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const auto& row = entries.at(i);
        if (row.size() != cols) throw parse_error("matrix json column count mismatch");
        for (size_t jc = 0; jc < cols; ++jc)
            m.at(i, jc) = parse_scalar(row.at(jc).get<std::string>());
    }
    return m;
}

}  // namespace reflectq
