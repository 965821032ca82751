#include "tannaka/exact/json_io.hpp"

#include "tannaka/errors.hpp"

namespace tannaka::exact {

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, Field field, const std::string& where) {
    try {
        if (j.is_string()) return field.parse(j.get<std::string>());
        if (j.is_number_integer()) return field.from_int(j.get<long long>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a scalar string, got " + j.dump());
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, Field field, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array()) throw ParseError(where + ": row " + std::to_string(r) + " is not an array");
        if (r == 0) cols = j[r].size();
        if (j[r].size() != cols) throw ParseError(where + ": ragged rows");
    }
    Matrix m(rows, cols, field);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = scalar_from_json(j[r][c], field, where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    return m;
}

Matrix matrix_from_json(const Json& j, Field field, std::size_t rows, std::size_t cols, const std::string& where) {
    // An empty array stands for any matrix with a zero dimension.
    if (j.is_array() && j.empty() && (rows == 0 || cols == 0)) return Matrix(rows, cols, field);
    Matrix m = matrix_from_json(j, field, where);
    if (m.rows() != rows || m.cols() != cols)
        throw DimensionMismatch(where + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                                ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    return m;
}

Json check_to_json(const Check& c) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.passed;
    j["residue"] = c.residue;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

Json report_to_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks()) checks.push_back(check_to_json(c));
    return checks;
}

Field field_from_json(const Json& j) {
    if (j.is_string()) return Field::from_name(j.get<std::string>());
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned()) return Field::prime(j["Fp"].get<std::uint64_t>());
    throw ParseError("field: expected \"Q\", \"Fp:<p>\" or {\"Fp\": p}, got " + j.dump());
}

Json field_to_json(Field f) { return f.name(); }

} // namespace tannaka::exact
