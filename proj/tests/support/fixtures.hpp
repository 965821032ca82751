#pragma once

#include <fstream>
#include <string>

#include "tannaka/catpres/document.hpp"
#include "tannaka/errors.hpp"
#include "tannaka/recon/document.hpp"

namespace tannaka::testing {

inline exact::Json load_fixture(const std::string& name) {
    const std::string path = std::string(TANNAKA_FIXTURE_DIR) + "/" + name + ".json";
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open fixture " + path);
    return exact::Json::parse(in);
}

inline catpres::CategoryDocument category_fixture(const std::string& name,
                                                  std::optional<exact::Field> field = std::nullopt) {
    return catpres::category_document_from_json(load_fixture(name), field);
}

inline recon::CoalgebraDocument coalgebra_fixture(const std::string& name,
                                                  std::optional<exact::Field> field = std::nullopt) {
    return recon::coalgebra_document_from_json(load_fixture(name), field);
}

inline const std::vector<std::string>& category_fixture_names() {
    static const std::vector<std::string> names{"trivial",         "empty",           "z2_regular",
                                                "z2_characters",   "z2_characters_signed", "z3_characters"};
    return names;
}

inline const std::vector<std::string>& coalgebra_fixture_names() {
    static const std::vector<std::string> names{"comatrix2", "z2_functions", "trivial_coalgebra"};
    return names;
}

} // namespace tannaka::testing
