#include "tannaka/jobs/jobs.hpp"

#include <algorithm>
#include <sstream>

#include "tannaka/catpres/document.hpp"
#include "tannaka/coend/coend.hpp"
#include "tannaka/errors.hpp"
#include "tannaka/recon/characters.hpp"
#include "tannaka/recon/document.hpp"
#include "tannaka/recon/endvee.hpp"

namespace tannaka::jobs {

using exact::Matrix;
using exact::Report;

namespace {

Json start(const std::string& command, Field field) {
    Json j;
    j["command"] = command;
    j["field"] = exact::field_to_json(field);
    return j;
}

JobResult finish(Json j, const Report& r) {
    j["checks"] = exact::report_to_json(r);
    j["ok"] = r.ok();
    return {std::move(j)};
}

catpres::CategoryDocument category_document(const Json& doc, std::optional<Field> field, const std::string& command) {
    if (document_kind(doc) != DocumentKind::Category)
        throw InvalidInput(command + ": expected a category document, got a coalgebra document");
    return catpres::category_document_from_json(doc, field);
}

recon::CoalgebraDocument coalgebra_document(const Json& doc, std::optional<Field> field, const std::string& command) {
    if (document_kind(doc) != DocumentKind::Coalgebra)
        throw InvalidInput(command + ": expected a coalgebra document, got a category document");
    return recon::coalgebra_document_from_json(doc, field);
}

Json columns_to_json(const std::vector<Matrix>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
        Json e = Json::array();
        for (std::size_t r = 0; r < v.rows(); ++r)
            for (std::size_t c = 0; c < v.cols(); ++c) e.push_back(v(r, c).to_string());
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<recon::ComoduleData> comodules_of(const recon::ComoduleCategory& u, std::size_t bdim) {
    std::vector<recon::ComoduleData> ms;
    for (const auto& obj : u.category.objects()) ms.push_back(u.comodule(obj, bdim));
    return ms;
}

/// Validity of the tensor data, or nothing when the document has none. The
/// checks land in `r` either way.
bool tensor_usable(const catpres::CategoryDocument& d, Report& r) {
    if (!d.tensor) return false;
    Report t = catpres::validate_tensor_data(d.category, d.functor, *d.tensor);
    r.merge(t, "tensor: ");
    return t.ok();
}

bool duality_usable(const catpres::CategoryDocument& d, Report& r) {
    if (!d.duality) return false;
    Report t = catpres::validate_duality_data(d.category, d.functor, *d.tensor, *d.duality);
    r.merge(t, "duality: ");
    return t.ok();
}

/// Grouplikes and characters of `b` with their group structures. Solver
/// limits are reported as facts, not failures.
void character_tables(Json& out, Report& r, const recon::BialgebraData& b, const std::optional<recon::HopfData>& h,
                      const std::vector<Matrix>& g_candidates, const std::vector<Matrix>& c_candidates) {
    try {
        auto gs = recon::grouplikes(b.coalgebra, g_candidates.empty() ? nullptr : &g_candidates);
        auto table = recon::grouplike_group(gs, b);
        out["grouplikes"] = table.to_json();
        out["grouplikes"].erase("checks");
        r.merge(table.report, "grouplikes: ");
    } catch (const UnsupportedProblem& e) {
        out["grouplikes"] = {{"unsupported", e.what()}};
    }
    try {
        auto chars = recon::characters(b, c_candidates.empty() ? nullptr : &c_candidates);
        if (h) {
            auto table = recon::convolution_group(chars, *h);
            out["characters"] = table.to_json();
            out["characters"].erase("checks");
            r.merge(table.report, "characters: ");
        } else {
            out["characters"] = {{"elements", columns_to_json(chars)}};
        }
    } catch (const UnsupportedProblem& e) {
        out["characters"] = {{"unsupported", e.what()}};
    }
}

} // namespace

DocumentKind document_kind(const Json& doc) {
    return doc.is_object() && doc.contains("coalgebra") ? DocumentKind::Coalgebra : DocumentKind::Category;
}

Json parse_document(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                         (pos == std::string::npos ? msg : msg.substr(pos)));
    }
}

JobResult cmd_validate(const Json& doc, std::optional<Field> field) {
    Report r;
    if (document_kind(doc) == DocumentKind::Coalgebra) {
        auto d = recon::coalgebra_document_from_json(doc, field);
        Json j = start("validate", d.field);
        j["kind"] = "coalgebra";
        j["dim"] = d.coalgebra.dim;
        r.merge(recon::coalgebra_report(d.coalgebra), "coalgebra: ");
        if (d.algebra) {
            recon::BialgebraData b{d.coalgebra, *d.algebra};
            if (d.antipode)
                r.merge(recon::hopf_report({b, *d.antipode}), "hopf: ");
            else
                r.merge(recon::bialgebra_report(b), "bialgebra: ");
        }
        if (d.comodules) {
            const auto& u = *d.comodules;
            r.merge(catpres::validate_functor(u.category, u.functor), "comodules: ");
            for (const auto& obj : u.category.objects())
                r.merge(recon::comodule_report(u.comodule(obj, d.coalgebra.dim), d.coalgebra), "comodule " + obj + ": ");
            for (const auto& g : u.category.generators())
                r.merge(recon::comodule_morphism_report(u.functor.image(g.name), u.comodule(g.src, d.coalgebra.dim),
                                                        u.comodule(g.dst, d.coalgebra.dim), d.coalgebra),
                        "generator " + g.name + ": ");
            j["comodules"] = u.category.objects();
        }
        return finish(std::move(j), r);
    }
    auto d = catpres::category_document_from_json(doc, field);
    Json j = start("validate", d.field);
    j["kind"] = "category";
    j["objects"] = d.category.objects().size();
    j["generators"] = d.category.generators().size();
    j["relations"] = d.category.relations().size();
    Report f = catpres::validate_functor(d.category, d.functor);
    r.merge(f, "functor: ");
    if (d.functor_g) r.merge(catpres::validate_functor(d.category, *d.functor_g), "functor_g: ");
    if (f.ok() && tensor_usable(d, r)) duality_usable(d, r);
    return finish(std::move(j), r);
}

JobResult cmd_reconstruct(const Json& doc, std::optional<Field> field) {
    auto d = category_document(doc, field, "reconstruct");
    Json j = start("reconstruct", d.field);
    Report r;
    auto p = coend::natvee(d.category, d.functor, d.functor);
    j["ambient_dim"] = p.ambient_dim;
    j["relation_rank"] = p.relation_span.dim();
    j["dim"] = p.quotient_dim;
    // Only the outermost constructor audits; it rebuilds the inner structures.
    const bool with_tensor = tensor_usable(d, r);
    const bool with_duality = with_tensor && duality_usable(d, r);
    Report audit;
    recon::CoalgebraData c = recon::endvee_coalgebra(p, with_tensor ? nullptr : &audit);
    j["coalgebra"] = recon::to_json(c);
    r.merge(recon::coalgebra_report(c), "coalgebra: ");
    if (with_tensor) {
        recon::BialgebraData b = recon::endvee_bialgebra(d.category, d.functor, *d.tensor, p, with_duality ? nullptr : &audit);
        j["algebra"] = recon::to_json(b.algebra);
        r.merge(recon::bialgebra_report(b), "bialgebra: ");
        std::optional<recon::HopfData> h;
        if (with_duality) {
            h = recon::endvee_antipode(d.category, d.functor, *d.tensor, *d.duality, p, &audit);
            j["antipode"] = exact::matrix_to_json(h->antipode);
            r.merge(recon::hopf_report(*h), "hopf: ");
        }
        character_tables(j, r, b, h, {}, {});
    }
    r.merge(audit);
    return finish(std::move(j), r);
}

JobResult cmd_lift(const Json& doc, std::optional<Field> field) {
    auto d = category_document(doc, field, "lift");
    Json j = start("lift", d.field);
    auto p = coend::natvee(d.category, d.functor, d.functor);
    recon::LiftResult lift = recon::lift_functor(d.category, d.functor, p);
    j["dim"] = lift.coalgebra.dim;
    Json ms = Json::object();
    for (const auto& [obj, m] : lift.comodules) ms[obj] = recon::to_json(m);
    j["comodules"] = std::move(ms);
    return finish(std::move(j), lift.report);
}

JobResult cmd_rho_tilde(const Json& doc, std::optional<Field> field) {
    auto d = coalgebra_document(doc, field, "rho-tilde");
    if (!d.comodules) throw InvalidInput("rho-tilde: the document has no comodules");
    Json j = start("rho-tilde", d.field);
    recon::RhoTildeResult rt = recon::rho_tilde(d.coalgebra, *d.comodules);
    j["endvee_dim"] = rt.endvee.quotient_dim;
    j["coalgebra_dim"] = d.coalgebra.dim;
    j["rank"] = rt.rank;
    j["surjective"] = rt.surjective;
    j["injective"] = rt.injective;
    j["map"] = exact::matrix_to_json(rt.map);
    return finish(std::move(j), rt.report);
}

JobResult cmd_nat(const Json& doc, std::optional<Field> field) {
    auto d = category_document(doc, field, "nat");
    Json j = start("nat", d.field);
    const catpres::FiberFunctor& g = d.functor_g ? *d.functor_g : d.functor;
    auto p = coend::natvee(d.category, d.functor, g);
    auto nat = coend::nat_space(d.category, d.functor, g);
    j["ambient_dim"] = p.ambient_dim;
    j["relation_rank"] = p.relation_span.dim();
    j["quotient_dim"] = p.quotient_dim;
    j["nat_dim"] = nat.dim();
    Report r = coend::pairing_report(d.category, d.functor, g, p, nat);
    r.merge(coend::dinaturality_report(d.category, d.functor, g, p));

    Json basis = Json::array();
    for (const auto& t : nat.basis) {
        Json e = Json::object();
        for (const auto& [o, m] : t) e[o] = exact::matrix_to_json(m);
        basis.push_back(std::move(e));
    }
    j["nat_basis"] = std::move(basis);
    return finish(std::move(j), r);
}

JobResult cmd_characters(const Json& doc, std::optional<Field> field) {
    Report r;
    if (document_kind(doc) == DocumentKind::Category) {
        auto d = catpres::category_document_from_json(doc, field);
        Json j = start("characters", d.field);
        if (!d.tensor) throw InvalidInput("characters: the category has no tensor data");
        Report f = catpres::validate_functor(d.category, d.functor);
        r.merge(f, "functor: ");
        if (!f.ok() || !tensor_usable(d, r)) return finish(std::move(j), r);
        auto p = coend::natvee(d.category, d.functor, d.functor);
        const bool with_duality = duality_usable(d, r);
        Report audit;
        recon::BialgebraData b = recon::endvee_bialgebra(d.category, d.functor, *d.tensor, p, with_duality ? nullptr : &audit);
        std::optional<recon::HopfData> h;
        if (with_duality) h = recon::endvee_antipode(d.category, d.functor, *d.tensor, *d.duality, p, &audit);
        j["dim"] = b.coalgebra.dim;
        character_tables(j, r, b, h, {}, {});
        r.merge(audit);
        return finish(std::move(j), r);
    }
    auto d = recon::coalgebra_document_from_json(doc, field);
    Json j = start("characters", d.field);
    j["dim"] = d.coalgebra.dim;
    std::vector<Matrix> functionals;
    if (d.algebra) {
        recon::BialgebraData b{d.coalgebra, *d.algebra};
        std::optional<recon::HopfData> h;
        if (d.antipode) h = recon::HopfData{b, *d.antipode};
        Report axioms = h ? recon::hopf_report(*h) : recon::bialgebra_report(b);
        r.merge(axioms, h ? "hopf: " : "bialgebra: ");
        if (!axioms.ok()) return finish(std::move(j), r);
        character_tables(j, r, b, h, d.grouplike_candidates, d.character_candidates);
        try {
            functionals = recon::characters(b, d.character_candidates.empty() ? nullptr : &d.character_candidates);
        } catch (const UnsupportedProblem&) {
        }
    }
    if (d.comodules) {
        // The representation law is bilinear, so the coordinate functionals
        // cover every functional of the dual algebra.
        for (std::size_t i = 0; i < d.coalgebra.dim; ++i) {
            Matrix e(1, d.coalgebra.dim, d.field);
            e(0, i) = 1;
            functionals.push_back(std::move(e));
        }
        const auto& u = *d.comodules;
        auto ms = comodules_of(u, d.coalgebra.dim);
        std::vector<recon::ComoduleMap> maps;
        for (const auto& g : u.category.generators())
            maps.push_back({g.name, u.category.object_index(g.src), u.category.object_index(g.dst), u.functor.image(g.name)});
        if (!d.field.is_rational()) {
            try {
                auto all = recon::all_maps_between(ms, d.field);
                maps.insert(maps.end(), all.begin(), all.end());
                j["exhaustive_maps"] = all.size();
            } catch (const UnsupportedProblem& e) {
                j["exhaustive_maps"] = {{"unsupported", e.what()}};
            }
        }
        j["functionals"] = functionals.size();
        r.merge(recon::check_rep_correspondence(ms, functionals, d.coalgebra, maps), "rep: ");
    }
    return finish(std::move(j), r);
}

JobResult cmd_coherence(const std::string& lhs, const std::string& rhs, std::optional<moncat::DimAssignment> dims) {
    using moncat::SymExpr;
    SymExpr a = SymExpr::parse(lhs), b = SymExpr::parse(rhs);
    Json j = start("coherence", Field::rationals());
    j["lhs"] = a.to_string();
    j["rhs"] = b.to_string();
    j["domain"] = a.domain();
    j["codomain"] = a.codomain();
    j["lhs_permutation"] = moncat::perm_of(a);
    j["rhs_permutation"] = moncat::perm_of(b);
    const bool equal = moncat::coherence_equal(a, b);
    j["equal"] = equal;
    moncat::DimAssignment dm;
    if (dims) {
        dm = *dims;
    } else {
        for (const auto& atom : a.domain()) dm[atom] = 2;
    }
    Json dj = Json::object();
    for (const auto& [k, v] : dm) dj[k] = v;
    j["dims"] = std::move(dj);
    const bool matrices_equal = moncat::eval_in_vec(a, dm) == moncat::eval_in_vec(b, dm);
    j["matrices_equal"] = matrices_equal;
    Report r;
    r.add(exact::check_flag("expressions are equal", equal));
    r.add(exact::check_flag("equal expressions evaluate to equal matrices", !equal || matrices_equal));
    return finish(std::move(j), r);
}

std::string render_text(const Json& result) {
    std::ostringstream out;
    out << result.at("command").get<std::string>() << " over "
        << exact::field_from_json(result.at("field")).name() << "\n";
    for (const auto& [key, value] : result.items()) {
        if (key == "command" || key == "field" || key == "checks" || key == "ok") continue;
        out << "  " << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << "\n";
    }
    const auto& checks = result.at("checks");
    std::size_t failed = 0;
    for (const auto& c : checks) {
        const bool pass = c.at("pass").get<bool>();
        failed += pass ? 0 : 1;
        out << (pass ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
        if (!pass) {
            out << " (residue " << c.at("residue").get<std::string>() << ")";
            if (c.contains("detail")) out << ": " << c.at("detail").get<std::string>();
        }
        out << "\n";
    }
    out << (result.at("ok").get<bool>() ? "ok" : "FAILED") << ": " << checks.size() - failed << "/" << checks.size()
        << " checks passed\n";
    return out.str();
}

} // namespace tannaka::jobs
