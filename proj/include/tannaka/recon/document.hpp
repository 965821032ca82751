#pragma once

#include <optional>
#include <vector>

#include "tannaka/exact/json_io.hpp"
#include "tannaka/recon/reconstruct.hpp"

namespace tannaka::recon {

/// A coalgebra given by structure constants, optionally an algebra and an
/// antipode on the same space, and optionally a category of comodules.
///
///   "coalgebra": {"dim", "delta", "eps"} or {"comatrix": n}
///   "algebra": {"m", "u"}, "antipode": matrix
///   "comodules": {"objects", "generators", "relations", "functor", "coactions": {object: rho}}
///   "orientation": "left" (default) or "right" for coactions M -> M (x) B
///   "candidates": {"grouplikes": [[...]], "characters": [[...]]}
struct CoalgebraDocument {
    Field field;
    CoalgebraData coalgebra;
    std::optional<AlgebraData> algebra;
    std::optional<LinearMap> antipode;
    std::optional<ComoduleCategory> comodules;
    std::vector<Matrix> grouplike_candidates;
    std::vector<Matrix> character_candidates;
};

CoalgebraDocument coalgebra_document_from_json(const exact::Json& doc, std::optional<Field> field_override = std::nullopt);

} // namespace tannaka::recon
