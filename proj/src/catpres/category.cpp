#include "tannaka/catpres/category.hpp"

#include "tannaka/errors.hpp"
#include "tannaka/moncat/pairing.hpp"
#include "tannaka/moncat/symexpr.hpp"

namespace tannaka::catpres {

namespace {

std::string path_text(const Path& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.steps.size(); ++i) out += (i ? "," : "") + p.steps[i];
    out += "]";
    if (p.at) out += "@" + *p.at;
    return out;
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

} // namespace

PresentedCategory::PresentedCategory(std::vector<std::string> objects, std::vector<Generator> generators,
                                     std::vector<Relation> relations)
    : objects_(std::move(objects)), generators_(std::move(generators)), relations_(std::move(relations)) {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (!object_pos_.emplace(objects_[i], i).second) throw InvalidInput("duplicate object '" + objects_[i] + "'");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const Generator& g = generators_[i];
        if (!has_object(g.src) || !has_object(g.dst))
            throw InvalidInput("generator '" + g.name + "' has an unknown endpoint");
        if (!generator_pos_.emplace(g.name, i).second) throw InvalidInput("duplicate generator '" + g.name + "'");
    }
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        const Relation& r = relations_[i];
        if (path_src(r.lhs) != path_src(r.rhs) || path_dst(r.lhs) != path_dst(r.rhs))
            throw InvalidInput("relation " + std::to_string(i) + ": sides " + path_text(r.lhs) + " and " +
                               path_text(r.rhs) + " have different endpoints");
    }
}

bool PresentedCategory::has_object(const std::string& id) const { return object_pos_.count(id) > 0; }

std::size_t PresentedCategory::object_index(const std::string& id) const {
    auto it = object_pos_.find(id);
    if (it == object_pos_.end()) throw InvalidInput("unknown object '" + id + "'");
    return it->second;
}

const Generator& PresentedCategory::generator(const std::string& name) const {
    auto it = generator_pos_.find(name);
    if (it == generator_pos_.end()) throw InvalidInput("unknown generator '" + name + "'");
    return generators_[it->second];
}

std::string PresentedCategory::path_src(const Path& p) const {
    if (p.steps.empty()) {
        if (!p.at) throw InvalidInput("empty path needs an object");
        object_index(*p.at);
        return *p.at;
    }
    path_dst(p);  // composability
    return generator(p.steps.front()).src;
}

std::string PresentedCategory::path_dst(const Path& p) const {
    if (p.steps.empty()) return path_src(p);
    std::string here = generator(p.steps.front()).src;
    if (p.at && *p.at != here)
        throw InvalidInput("path " + path_text(p) + " starts at '" + here + "', not '" + *p.at + "'");
    for (const auto& step : p.steps) {
        const Generator& g = generator(step);
        if (g.src != here) throw InvalidInput("path " + path_text(p) + " is not composable at '" + step + "'");
        here = g.dst;
    }
    return here;
}

std::size_t FiberFunctor::dim(const std::string& object) const {
    auto it = on_objects.find(object);
    if (it == on_objects.end()) throw InvalidInput("functor has no value on object '" + object + "'");
    return it->second;
}

const LinearMap& FiberFunctor::image(const std::string& generator) const {
    auto it = on_generators.find(generator);
    if (it == on_generators.end()) throw InvalidInput("functor has no value on generator '" + generator + "'");
    return it->second;
}

LinearMap path_eval(const PresentedCategory& c, const FiberFunctor& f, const Path& p) {
    LinearMap out = Matrix::identity(f.dim(c.path_src(p)), f.field);
    for (const auto& step : p.steps) {
        const LinearMap& m = f.image(step);
        if (m.cols() != out.rows())
            throw DimensionMismatch("generator '" + step + "' has shape " + shape(m) + " in path " + path_text(p));
        out = m * out;
    }
    return out;
}

Report validate_functor(const PresentedCategory& c, const FiberFunctor& f) {
    Report report;
    bool shapes_ok = true;
    for (const auto& obj : c.objects()) {
        bool present = f.on_objects.count(obj) > 0;
        shapes_ok &= present;
        if (!present) report.add(exact::check_flag("object " + obj + ": dimension given", false));
    }
    for (const auto& g : c.generators()) {
        auto it = f.on_generators.find(g.name);
        if (it == f.on_generators.end()) {
            report.add(exact::check_flag("generator " + g.name + ": image given", false));
            shapes_ok = false;
            continue;
        }
        if (!f.on_objects.count(g.src) || !f.on_objects.count(g.dst)) continue;
        bool ok = it->second.rows() == f.dim(g.dst) && it->second.cols() == f.dim(g.src) &&
                  it->second.field() == f.field;
        shapes_ok &= ok;
        report.add(exact::check_flag("generator " + g.name + ": shape", ok,
                                     ok ? "" : "expected " + std::to_string(f.dim(g.dst)) + "x" +
                                                   std::to_string(f.dim(g.src)) + ", got " + shape(it->second)));
    }
    if (!shapes_ok) return report;
    for (std::size_t i = 0; i < c.relations().size(); ++i) {
        const Relation& r = c.relations()[i];
        Matrix lhs = path_eval(c, f, r.lhs);
        Matrix rhs = path_eval(c, f, r.rhs);
        exact::Check check = exact::check_equal(
            "relation " + std::to_string(i) + ": " + path_text(r.lhs) + " = " + path_text(r.rhs), lhs, rhs);
        if (!check.passed) check.detail = "lhs " + lhs.to_string() + ", rhs " + rhs.to_string();
        report.add(std::move(check));
    }
    return report;
}

const std::string& TensorData::tensor(const std::string& a, const std::string& b) const {
    auto it = table.find({a, b});
    if (it == table.end()) throw InvalidInput("tensor table has no entry for (" + a + ", " + b + ")");
    return it->second;
}

const LinearMap& TensorData::s_map(const std::string& a, const std::string& b) const {
    auto it = s.find({a, b});
    if (it == s.end()) throw InvalidInput("no structure map s for (" + a + ", " + b + ")");
    return it->second;
}

const TensorRule* TensorData::rule(const std::string& generator, const std::string& object) const {
    for (const auto& r : on_generators)
        if (r.generator == generator && r.object == object) return &r;
    return nullptr;
}

Report validate_tensor_data(const PresentedCategory& c, const FiberFunctor& f, const TensorData& t) {
    using exact::check_equal;
    using exact::check_flag;
    using exact::kron;
    Report report;
    const auto& objs = c.objects();
    const Field field = f.field;

    if (!c.has_object(t.unit)) {
        report.add(check_flag("unit object exists", false, "'" + t.unit + "' is not an object"));
        return report;
    }
    bool table_ok = true;
    for (const auto& a : objs)
        for (const auto& b : objs) {
            auto it = t.table.find({a, b});
            if (it == t.table.end() || !c.has_object(it->second)) {
                table_ok = false;
                report.add(check_flag("table (" + a + ", " + b + ")", false, "missing or unknown object"));
            }
        }
    if (!table_ok) return report;

    for (const auto& a : objs) {
        report.add(check_flag("unit law I*" + a, t.tensor(t.unit, a) == a));
        report.add(check_flag("unit law " + a + "*I", t.tensor(a, t.unit) == a));
    }
    for (const auto& a : objs)
        for (const auto& b : objs)
            for (const auto& d : objs) {
                const bool ok = t.tensor(t.tensor(a, b), d) == t.tensor(a, t.tensor(b, d));
                if (!ok) report.add(check_flag("associativity (" + a + ", " + b + ", " + d + ")", false));
            }
    if (!report.ok()) return report;
    report.add(check_flag("table associativity", true));

    bool maps_ok = true;
    for (const auto& a : objs)
        for (const auto& b : objs) {
            auto it = t.s.find({a, b});
            const std::string name = "s(" + a + ", " + b + ")";
            if (it == t.s.end()) {
                report.add(check_flag(name + " given", false));
                maps_ok = false;
                continue;
            }
            const std::size_t rows = f.dim(t.tensor(a, b)), cols = f.dim(a) * f.dim(b);
            if (it->second.rows() != rows || it->second.cols() != cols) {
                report.add(check_flag(name + " shape", false,
                                      "expected " + std::to_string(rows) + "x" + std::to_string(cols)));
                maps_ok = false;
                continue;
            }
            bool invertible = exact::inverse(it->second).has_value();
            maps_ok &= invertible;
            report.add(check_flag(name + " invertible", invertible));
        }
    const std::size_t unit_dim = f.dim(t.unit);
    bool f_ok = t.f_unit.rows() == unit_dim && t.f_unit.cols() == 1 && exact::inverse(t.f_unit).has_value();
    report.add(check_flag("f invertible", f_ok, f_ok ? "" : "f must be an invertible " + std::to_string(unit_dim) + "x1 map"));
    maps_ok &= f_ok;

    bool rules_ok = true;
    for (const auto& g : c.generators())
        for (const auto& obj : objs) {
            const TensorRule* r = t.rule(g.name, obj);
            if (!r) {
                if (obj == t.unit) continue;  // g (x) id_I = g by strictness
                report.add(check_flag("rule " + g.name + "*" + obj + " given", false));
                rules_ok = false;
                continue;
            }
            auto endpoints = [&](const Path& p, const std::string& src, const std::string& dst) {
                try {
                    return c.path_src(p) == src && c.path_dst(p) == dst;
                } catch (const InvalidInput&) {
                    return false;
                }
            };
            bool right = endpoints(r->right, t.tensor(g.src, obj), t.tensor(g.dst, obj));
            bool left = endpoints(r->left, t.tensor(obj, g.src), t.tensor(obj, g.dst));
            report.add(check_flag("rule " + g.name + "*id_" + obj + " endpoints", right));
            report.add(check_flag("rule id_" + obj + "*" + g.name + " endpoints", left));
            rules_ok &= right && left;
        }
    if (!maps_ok || !rules_ok) return report;

    auto right_path = [&](const Generator& g, const std::string& obj) {
        const TensorRule* r = t.rule(g.name, obj);
        return r ? r->right : Path::of({g.name});
    };
    auto left_path = [&](const Generator& g, const std::string& obj) {
        const TensorRule* r = t.rule(g.name, obj);
        return r ? r->left : Path::of({g.name});
    };

    for (const auto& g : c.generators())
        for (const auto& obj : objs) {
            const Matrix& fg = f.image(g.name);
            Matrix id = Matrix::identity(f.dim(obj), field);
            report.add(check_equal("s natural in the left factor: " + g.name + "*" + obj,
                                   t.s_map(g.dst, obj) * kron(fg, id),
                                   path_eval(c, f, right_path(g, obj)) * t.s_map(g.src, obj)));
            report.add(check_equal("s natural in the right factor: " + obj + "*" + g.name,
                                   t.s_map(obj, g.dst) * kron(id, fg),
                                   path_eval(c, f, left_path(g, obj)) * t.s_map(obj, g.src)));
        }

    for (const auto& x : objs) {
        Matrix id = Matrix::identity(f.dim(x), field);
        report.add(check_equal("right unit diagram " + x, t.s_map(x, t.unit) * kron(id, t.f_unit), id));
        report.add(check_equal("left unit diagram " + x, t.s_map(t.unit, x) * kron(t.f_unit, id), id));
    }
    for (const auto& x : objs)
        for (const auto& y : objs)
            for (const auto& z : objs) {
                Matrix lhs = t.s_map(t.tensor(x, y), z) * kron(t.s_map(x, y), Matrix::identity(f.dim(z), field));
                Matrix rhs = t.s_map(x, t.tensor(y, z)) * kron(Matrix::identity(f.dim(x), field), t.s_map(y, z));
                report.add(check_equal("associativity diagram (" + x + ", " + y + ", " + z + ")", lhs, rhs));
            }

    if (!t.symmetry.empty()) {
        for (const auto& x : objs)
            for (const auto& y : objs) {
                const std::string name = "symmetry diagram (" + x + ", " + y + ")";
                auto it = t.symmetry.find({x, y});
                if (it == t.symmetry.end()) {
                    report.add(check_flag(name, false, "no symmetry path given"));
                    continue;
                }
                bool ends = false;
                try {
                    ends = c.path_src(it->second) == t.tensor(x, y) && c.path_dst(it->second) == t.tensor(y, x);
                } catch (const InvalidInput&) {
                }
                if (!ends) {
                    report.add(check_flag(name, false, "symmetry path has wrong endpoints"));
                    continue;
                }
                report.add(check_equal(name, path_eval(c, f, it->second) * t.s_map(x, y),
                                       t.s_map(y, x) * moncat::commutation_matrix(f.dim(x), f.dim(y), field)));
            }
    }
    return report;
}

EvaluatedDuality evaluate_duality(const PresentedCategory& c, const FiberFunctor& f, const TensorData& t,
                                  const DualityData& d, const std::string& object) {
    auto dual_it = d.dual_of.find(object);
    if (dual_it == d.dual_of.end()) throw InvalidInput("no dual given for object '" + object + "'");
    auto eta_it = d.eta.find(object);
    auto eps_it = d.eps.find(object);
    if (eta_it == d.eta.end() || eps_it == d.eps.end())
        throw InvalidInput("eta and eps paths are required for object '" + object + "'");
    const std::string& dual = dual_it->second;
    c.object_index(dual);

    if (c.path_src(eta_it->second) != t.unit || c.path_dst(eta_it->second) != t.tensor(dual, object))
        throw InvalidInput("eta path for '" + object + "' must run from the unit to " + dual + "*" + object);
    if (c.path_src(eps_it->second) != t.tensor(object, dual) || c.path_dst(eps_it->second) != t.unit)
        throw InvalidInput("eps path for '" + object + "' must run from " + object + "*" + dual + " to the unit");

    auto s_inv = exact::inverse(t.s_map(dual, object));
    auto f_inv = exact::inverse(t.f_unit);
    if (!s_inv || !f_inv) throw InvalidInput("tensor structure maps are not invertible");
    EvaluatedDuality out;
    out.object = object;
    out.dual = dual;
    out.eta = *s_inv * path_eval(c, f, eta_it->second) * t.f_unit;
    out.eps = *f_inv * path_eval(c, f, eps_it->second) * t.s_map(object, dual);
    return out;
}

Report validate_duality_data(const PresentedCategory& c, const FiberFunctor& f, const TensorData& t,
                             const DualityData& d) {
    Report report;
    for (const auto& obj : c.objects()) {
        EvaluatedDuality ev;
        try {
            ev = evaluate_duality(c, f, t, d, obj);
        } catch (const InvalidInput& e) {
            report.add(exact::check_flag("duality " + obj, false, e.what()));
            continue;
        }
        moncat::DualPairing pairing{f.dim(ev.dual), ev.eps, ev.eta};
        report.merge(moncat::triangle_report(pairing), "duality " + obj + ": ");
    }
    return report;
}

LinearMap dual_of_map(const LinearMap& g, const EvaluatedDuality& dx, const EvaluatedDuality& dy) {
    using exact::kron;
    const Field field = g.field();
    const std::size_t x = g.cols(), y = g.rows();
    if (dx.eta.rows() % x != 0 || dy.eps.cols() % y != 0)
        throw DimensionMismatch("dual_of_map: duality data does not match the shape of g");
    const std::size_t xh = dx.eta.rows() / x;
    const std::size_t yh = dy.eps.cols() / y;
    Matrix id_xh = Matrix::identity(xh, field);
    Matrix id_yh = Matrix::identity(yh, field);
    return kron(id_xh, dy.eps) * kron(kron(id_xh, g), id_yh) * kron(dx.eta, id_yh);
}

namespace {

Matrix flatten(const Matrix& m) {
    Matrix v(m.rows() * m.cols(), 1, m.field());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v(r * m.cols() + c, 0) = m(r, c);
    return v;
}

Matrix unflatten(const Matrix& v, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols, v.field());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = v(r * cols + c, 0);
    return m;
}

} // namespace

exact::SubspaceBasis morphism_image_span(const PresentedCategory& c, const FiberFunctor& f, const std::string& a,
                                         const std::string& b) {
    const Field field = f.field;
    const std::size_t da = f.dim(a);
    std::map<std::string, exact::SubspaceBasis> spans;
    for (const auto& obj : c.objects()) spans[obj] = exact::SubspaceBasis(f.dim(obj) * da, field);
    spans[a] = exact::SubspaceBasis::span_of_columns(flatten(Matrix::identity(da, field)));

    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : c.generators()) {
            const exact::SubspaceBasis& from = spans[g.src];
            if (from.dim() == 0) continue;
            std::vector<Matrix> images;
            const Matrix basis = from.columns();
            for (std::size_t k = 0; k < basis.cols(); ++k)
                images.push_back(flatten(f.image(g.name) * unflatten(basis.col(k), f.dim(g.src), da)));
            exact::SubspaceBasis next =
                exact::sum_subspaces(spans[g.dst], exact::SubspaceBasis::span_of_columns(exact::hstack(images)));
            if (next.dim() > spans[g.dst].dim()) {
                spans[g.dst] = std::move(next);
                grew = true;
            }
        }
    }
    return spans[b];
}

} // namespace tannaka::catpres
