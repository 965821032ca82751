#pragma once

#include <string>

#include "json.hpp"
#include "tannaka/exact/matrix.hpp"
#include "tannaka/exact/report.hpp"

namespace tannaka::exact {

using Json = nlohmann::ordered_json;

/// Scalars are written as strings ("3/4", "2 mod 5"); integers and strings
/// are accepted on input.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Field field, const std::string& where);

/// Matrices are arrays of rows. `where` names the document location in
/// error messages.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, Field field, const std::string& where);
/// As above, with the expected shape enforced.
Matrix matrix_from_json(const Json& j, Field field, std::size_t rows, std::size_t cols, const std::string& where);

Json check_to_json(const Check& c);
Json report_to_json(const Report& r);

/// Accepts "Q", "Fp:<p>" or {"Fp": p}.
Field field_from_json(const Json& j);
Json field_to_json(Field f);

} // namespace tannaka::exact
