#pragma once

#include <optional>

#include "tannaka/catpres/category.hpp"
#include "tannaka/exact/json_io.hpp"

namespace tannaka::catpres {

using exact::Json;

/// A category, a fiber functor on it and optional tensor and duality data,
/// read from the JSON input format. `functor_g` is an optional second functor
/// used by the Nat(F, G) commands.
struct CategoryDocument {
    Field field;
    PresentedCategory category;
    FiberFunctor functor;
    std::optional<FiberFunctor> functor_g;
    std::optional<TensorData> tensor;
    std::optional<DualityData> duality;
};

/// A path is either an array of generator names or {"at": object, "path": [...]}.
/// An empty array takes `default_at` as its object.
Path path_from_json(const Json& j, const std::optional<std::string>& default_at, const std::string& where);
Json path_to_json(const Path& p);

PresentedCategory category_from_json(const Json& doc);
FiberFunctor functor_from_json(const Json& j, const PresentedCategory& c, Field field, const std::string& where);
TensorData tensor_from_json(const Json& j, const PresentedCategory& c, const FiberFunctor& f);
/// Empty eta/eps paths default to the tensor unit when one is known.
DualityData duality_from_json(const Json& j, const PresentedCategory& c, const std::optional<std::string>& unit);

/// Reads a whole document. `field_override` replaces the document's field.
CategoryDocument category_document_from_json(const Json& doc, std::optional<Field> field_override = std::nullopt);

} // namespace tannaka::catpres
