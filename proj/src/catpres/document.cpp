#include "tannaka/catpres/document.hpp"

#include "tannaka/errors.hpp"

namespace tannaka::catpres {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string string_at(const Json& j, const char* key, const std::string& where) {
    const Json& v = require(j, key, where);
    if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

} // namespace

Path path_from_json(const Json& j, const std::optional<std::string>& default_at, const std::string& where) {
    Path p;
    const Json* steps = &j;
    if (j.is_object()) {
        if (j.contains("at")) {
            if (!j["at"].is_string()) throw ParseError(where + ".at: expected an object id");
            p.at = j["at"].get<std::string>();
        }
        steps = &require(j, "path", where);
    }
    if (!steps->is_array()) throw ParseError(where + ": a path is an array of generator names");
    for (const auto& s : *steps) {
        if (!s.is_string()) throw ParseError(where + ": generator names must be strings");
        p.steps.push_back(s.get<std::string>());
    }
    if (p.steps.empty() && !p.at) {
        if (!default_at) throw ParseError(where + ": an empty path needs {\"at\": object}");
        p.at = default_at;
    }
    return p;
}

Json path_to_json(const Path& p) {
    Json steps = Json::array();
    for (const auto& s : p.steps) steps.push_back(s);
    if (!p.at) return steps;
    Json j;
    j["at"] = *p.at;
    j["path"] = std::move(steps);
    return j;
}

PresentedCategory category_from_json(const Json& doc) {
    std::vector<std::string> objects;
    const Json& objs = require(doc, "objects", "document");
    if (!objs.is_array()) throw ParseError("objects: expected an array");
    for (const auto& o : objs) {
        if (!o.is_string()) throw ParseError("objects: object ids must be strings");
        objects.push_back(o.get<std::string>());
    }

    std::vector<Generator> generators;
    if (doc.contains("generators")) {
        const Json& gens = doc["generators"];
        if (!gens.is_array()) throw ParseError("generators: expected an array");
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::string where = "generators[" + std::to_string(i) + "]";
            generators.push_back(
                {string_at(gens[i], "name", where), string_at(gens[i], "src", where), string_at(gens[i], "dst", where)});
        }
    }

    // Resolve paths against a relation-free copy first so that an empty side
    // can borrow the source of the other side.
    PresentedCategory bare(objects, generators);
    std::vector<Relation> relations;
    if (doc.contains("relations")) {
        const Json& rels = doc["relations"];
        if (!rels.is_array()) throw ParseError("relations: expected an array");
        for (std::size_t i = 0; i < rels.size(); ++i) {
            const std::string where = "relations[" + std::to_string(i) + "]";
            if (!rels[i].is_array() || rels[i].size() != 2) throw ParseError(where + ": expected [path, path]");
            std::optional<std::string> at;
            for (const auto& side : rels[i]) {
                try {
                    Path p = path_from_json(side, std::nullopt, where);
                    at = bare.path_src(p);
                    break;
                } catch (const ParseError&) {
                }
            }
            relations.push_back(
                {path_from_json(rels[i][0], at, where + "[0]"), path_from_json(rels[i][1], at, where + "[1]")});
        }
    }
    return PresentedCategory(std::move(objects), std::move(generators), std::move(relations));
}

FiberFunctor functor_from_json(const Json& j, const PresentedCategory& c, Field field, const std::string& where) {
    FiberFunctor f;
    f.field = field;
    const Json& objs = require(j, "on_objects", where);
    if (!objs.is_object()) throw ParseError(where + ".on_objects: expected an object");
    for (const auto& [name, dim] : objs.items()) {
        if (!dim.is_number_unsigned()) throw ParseError(where + ".on_objects." + name + ": expected a dimension");
        if (!c.has_object(name)) throw InvalidInput(where + ".on_objects: unknown object '" + name + "'");
        f.on_objects[name] = dim.get<std::size_t>();
    }
    if (j.contains("on_generators")) {
        const Json& gens = j["on_generators"];
        if (!gens.is_object()) throw ParseError(where + ".on_generators: expected an object");
        for (const auto& [name, m] : gens.items()) {
            const Generator& g = c.generator(name);
            const std::string loc = where + ".on_generators." + name;
            if (f.on_objects.count(g.src) && f.on_objects.count(g.dst))
                f.on_generators[name] = exact::matrix_from_json(m, field, f.dim(g.dst), f.dim(g.src), loc);
            else
                f.on_generators[name] = exact::matrix_from_json(m, field, loc);
        }
    }
    return f;
}

TensorData tensor_from_json(const Json& j, const PresentedCategory& c, const FiberFunctor& f) {
    TensorData t;
    t.unit = string_at(j, "unit", "tensor");
    const Json& table = require(j, "table", "tensor");
    if (table.is_object()) {
        for (const auto& [a, row] : table.items()) {
            if (!row.is_object()) throw ParseError("tensor.table." + a + ": expected an object");
            for (const auto& [b, v] : row.items()) {
                if (!v.is_string()) throw ParseError("tensor.table." + a + "." + b + ": expected an object id");
                t.table[{a, b}] = v.get<std::string>();
            }
        }
    } else if (table.is_array()) {
        for (const auto& e : table) {
            if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string())
                throw ParseError("tensor.table: entries are [left, right, product]");
            t.table[{e[0].get<std::string>(), e[1].get<std::string>()}] = e[2].get<std::string>();
        }
    } else {
        throw ParseError("tensor.table: expected an object or an array of triples");
    }

    auto product = [&](const std::string& a, const std::string& b) -> std::optional<std::string> {
        auto it = t.table.find({a, b});
        if (it == t.table.end()) return std::nullopt;
        return it->second;
    };

    if (j.contains("on_generators")) {
        const Json& rules = j["on_generators"];
        if (!rules.is_array()) throw ParseError("tensor.on_generators: expected an array");
        for (std::size_t i = 0; i < rules.size(); ++i) {
            const std::string where = "tensor.on_generators[" + std::to_string(i) + "]";
            TensorRule r;
            r.generator = string_at(rules[i], "generator", where);
            r.object = string_at(rules[i], "object", where);
            const Generator& g = c.generator(r.generator);
            r.right = path_from_json(require(rules[i], "right", where), product(g.src, r.object), where + ".right");
            r.left = path_from_json(require(rules[i], "left", where), product(r.object, g.src), where + ".left");
            t.on_generators.push_back(std::move(r));
        }
    }

    if (j.contains("s")) {
        const Json& ss = j["s"];
        if (!ss.is_array()) throw ParseError("tensor.s: expected an array");
        for (std::size_t i = 0; i < ss.size(); ++i) {
            const std::string where = "tensor.s[" + std::to_string(i) + "]";
            std::string a = string_at(ss[i], "left", where), b = string_at(ss[i], "right", where);
            t.s[{a, b}] = exact::matrix_from_json(require(ss[i], "matrix", where), f.field, where + ".matrix");
        }
    }
    // Unlisted structure maps default to the identity when the shapes allow.
    for (const auto& a : c.objects())
        for (const auto& b : c.objects()) {
            auto ab = product(a, b);
            if (t.s.count({a, b}) || !ab || !f.on_objects.count(*ab) || !f.on_objects.count(a) || !f.on_objects.count(b))
                continue;
            if (f.dim(*ab) == f.dim(a) * f.dim(b)) t.s[{a, b}] = Matrix::identity(f.dim(*ab), f.field);
        }

    if (j.contains("f_unit")) {
        t.f_unit = exact::matrix_from_json(j["f_unit"], f.field, "tensor.f_unit");
    } else {
        const std::size_t d = f.on_objects.count(t.unit) ? f.dim(t.unit) : 0;
        t.f_unit = d == 1 ? Matrix::identity(1, f.field) : Matrix(d, 1, f.field);
    }

    if (j.contains("symmetry")) {
        const Json& sym = j["symmetry"];
        if (!sym.is_array()) throw ParseError("tensor.symmetry: expected an array");
        for (std::size_t i = 0; i < sym.size(); ++i) {
            const std::string where = "tensor.symmetry[" + std::to_string(i) + "]";
            std::string a = string_at(sym[i], "left", where), b = string_at(sym[i], "right", where);
            t.symmetry[{a, b}] = path_from_json(require(sym[i], "path", where), product(a, b), where + ".path");
        }
    }
    return t;
}

DualityData duality_from_json(const Json& j, const PresentedCategory& c, const std::optional<std::string>& unit) {
    DualityData d;
    const Json& dual_of = require(j, "dual_of", "duality");
    if (!dual_of.is_object()) throw ParseError("duality.dual_of: expected an object");
    for (const auto& [a, b] : dual_of.items()) {
        if (!b.is_string()) throw ParseError("duality.dual_of." + a + ": expected an object id");
        d.dual_of[a] = b.get<std::string>();
    }
    auto paths = [&](const char* key, std::map<std::string, Path>& out) {
        const Json& m = require(j, key, "duality");
        if (!m.is_object()) throw ParseError(std::string("duality.") + key + ": expected an object");
        for (const auto& [obj, p] : m.items()) {
            c.object_index(obj);
            out[obj] = path_from_json(p, unit, std::string("duality.") + key + "." + obj);
        }
    };
    paths("eta", d.eta);
    paths("eps", d.eps);
    return d;
}

CategoryDocument category_document_from_json(const Json& doc, std::optional<Field> field_override) {
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    CategoryDocument out;
    out.field = field_override ? *field_override
                               : (doc.contains("field") ? exact::field_from_json(doc["field"]) : Field::rationals());
    out.category = category_from_json(doc);
    out.functor = functor_from_json(require(doc, "functor", "document"), out.category, out.field, "functor");
    if (doc.contains("functor_g"))
        out.functor_g = functor_from_json(doc["functor_g"], out.category, out.field, "functor_g");
    if (doc.contains("tensor")) out.tensor = tensor_from_json(doc["tensor"], out.category, out.functor);
    if (doc.contains("duality"))
        out.duality = duality_from_json(doc["duality"], out.category,
                                        out.tensor ? std::optional<std::string>(out.tensor->unit) : std::nullopt);
    return out;
}

} // namespace tannaka::catpres
