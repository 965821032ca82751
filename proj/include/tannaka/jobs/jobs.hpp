#pragma once

#include <optional>
#include <string>

#include "tannaka/exact/json_io.hpp"
#include "tannaka/moncat/symexpr.hpp"

namespace tannaka::jobs {

using exact::Field;
using exact::Json;

enum class DocumentKind { Category, Coalgebra };

/// Documents with a top-level "coalgebra" key describe a coalgebra and its
/// comodules; everything else is a presented category with a functor.
DocumentKind document_kind(const Json& doc);

/// Parses JSON text. Syntax errors become ParseError with "source:line:column".
Json parse_document(const std::string& text, const std::string& source = "<input>");

/// Every command returns
///   {"command", "field", <facts>..., "checks": [...], "ok"}
/// where ok is true iff every check passed.
struct JobResult {
    Json json;
    bool ok() const { return json.at("ok").get<bool>(); }
};

JobResult cmd_validate(const Json& doc, std::optional<Field> field = std::nullopt);
JobResult cmd_reconstruct(const Json& doc, std::optional<Field> field = std::nullopt);
JobResult cmd_lift(const Json& doc, std::optional<Field> field = std::nullopt);
JobResult cmd_rho_tilde(const Json& doc, std::optional<Field> field = std::nullopt);
/// Nat^v(F, G) against Nat(F, G); G is the document's "functor_g" or F.
JobResult cmd_nat(const Json& doc, std::optional<Field> field = std::nullopt);
JobResult cmd_characters(const Json& doc, std::optional<Field> field = std::nullopt);
/// Decides equality of two structural arrows and cross-checks the matrices
/// under `dims` (every atom 2 when not given).
JobResult cmd_coherence(const std::string& lhs, const std::string& rhs,
                        std::optional<moncat::DimAssignment> dims = std::nullopt);

/// Plain text form of a result.
std::string render_text(const Json& result);

} // namespace tannaka::jobs
