#include "tannaka/recon/document.hpp"

#include "tannaka/catpres/document.hpp"
#include "tannaka/errors.hpp"

namespace tannaka::recon {

using exact::Json;

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::vector<Matrix> vectors(const Json& j, Field field, bool as_row, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of vectors");
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        Matrix row = exact::matrix_from_json(Json::array({j[k]}), field, where + "[" + std::to_string(k) + "]");
        out.push_back(as_row ? row : row.transpose());
    }
    return out;
}

} // namespace

CoalgebraDocument coalgebra_document_from_json(const Json& doc, std::optional<Field> field_override) {
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    CoalgebraDocument out;
    out.field = field_override ? *field_override
                               : (doc.contains("field") ? exact::field_from_json(doc["field"]) : Field::rationals());
    const Field field = out.field;

    const Json& c = require(doc, "coalgebra", "document");
    if (c.contains("comatrix")) {
        if (!c["comatrix"].is_number_unsigned()) throw ParseError("coalgebra.comatrix: expected a dimension");
        out.coalgebra = comatrix_coalgebra(c["comatrix"].get<std::size_t>(), field);
    } else {
        const Json& dim = require(c, "dim", "coalgebra");
        if (!dim.is_number_unsigned()) throw ParseError("coalgebra.dim: expected a dimension");
        const std::size_t n = dim.get<std::size_t>();
        out.coalgebra = {n, exact::matrix_from_json(require(c, "delta", "coalgebra"), field, n * n, n, "coalgebra.delta"),
                         exact::matrix_from_json(require(c, "eps", "coalgebra"), field, 1, n, "coalgebra.eps")};
    }
    const std::size_t n = out.coalgebra.dim;

    if (doc.contains("algebra")) {
        const Json& a = doc["algebra"];
        out.algebra = AlgebraData{n, exact::matrix_from_json(require(a, "m", "algebra"), field, n, n * n, "algebra.m"),
                                  exact::matrix_from_json(require(a, "u", "algebra"), field, n, 1, "algebra.u")};
    }
    if (doc.contains("antipode")) out.antipode = exact::matrix_from_json(doc["antipode"], field, n, n, "antipode");

    bool right = false;
    if (doc.contains("orientation")) {
        const Json& o = doc["orientation"];
        if (o == "right") right = true;
        else if (o != "left") throw ParseError("orientation: expected \"left\" or \"right\"");
    }

    if (doc.contains("comodules")) {
        const Json& cm = doc["comodules"];
        ComoduleCategory u;
        u.category = catpres::category_from_json(cm);
        u.functor = catpres::functor_from_json(require(cm, "functor", "comodules"), u.category, field, "comodules.functor");
        const Json& co = require(cm, "coactions", "comodules");
        if (!co.is_object()) throw ParseError("comodules.coactions: expected an object");
        for (const auto& obj : u.category.objects()) {
            if (!co.contains(obj)) throw ParseError("comodules.coactions: missing coaction for '" + obj + "'");
            const std::size_t d = u.functor.dim(obj);
            Matrix rho = exact::matrix_from_json(co[obj], field, n * d, d, "comodules.coactions." + obj);
            u.coactions[obj] = right ? from_right_coaction(rho, n, d).rho : rho;
        }
        out.comodules = std::move(u);
    }

    if (doc.contains("candidates")) {
        const Json& cand = doc["candidates"];
        if (cand.contains("grouplikes")) out.grouplike_candidates = vectors(cand["grouplikes"], field, false, "candidates.grouplikes");
        if (cand.contains("characters")) out.character_candidates = vectors(cand["characters"], field, true, "candidates.characters");
    }
    return out;
}

} // namespace tannaka::recon
