#include "tannaka/recon/endvee.hpp"

#include "tannaka/errors.hpp"
#include "tannaka/moncat/symexpr.hpp"

namespace tannaka::recon {

using exact::kron;

namespace {

void require_endomorphism(const CoendPresentation& p) {
    for (const auto& b : p.object_index)
        if (b.f_dim != b.g_dim) throw InvalidInput("End^v needs F = G; blocks differ at '" + b.object + "'");
}

void require_ok(const Report& r, const std::string& what) {
    if (r.ok()) return;
    std::string msg = what + " does not validate:";
    for (const auto& c : r.checks())
        if (!c.passed) msg += " " + c.name + ";";
    throw InvalidInput(msg);
}

// F(C) (x) F(C)^v (x) F(D) (x) F(D)^v -> F(C) (x) F(D) (x) F(C)^v (x) F(D)^v
Matrix middle_swap(std::size_t fc, std::size_t fd, Field field) {
    moncat::SymExpr e = moncat::SymExpr::swap({"C", "Cv", "D", "Dv"}, 1);
    return moncat::eval_in_vec(e, {{"C", fc}, {"Cv", fc}, {"D", fd}, {"Dv", fd}}, field);
}

} // namespace

CoalgebraData endvee_coalgebra(const CoendPresentation& p, Report* audit) {
    require_endomorphism(p);
    CoalgebraData c;
    c.dim = p.quotient_dim;
    c.delta = coend::cocomposition(p, p, p, audit);
    c.eps = coend::counit(p, audit);
    return c;
}

BialgebraData endvee_bialgebra(const PresentedCategory& c, const FiberFunctor& f, const TensorData& t,
                               const CoendPresentation& p, Report* audit) {
    require_endomorphism(p);
    require_ok(catpres::validate_tensor_data(c, f, t), "tensor data");
    const Field field = p.field;
    const std::size_t n = p.ambient_dim;

    Matrix m_amb(p.quotient_dim, n * n, field);
    for (const auto& bc : p.object_index)
        for (const auto& bd : p.object_index) {
            const std::size_t fc = bc.f_dim, fd = bd.f_dim;
            const Matrix& s = t.s_map(bc.object, bd.object);
            auto s_inv = exact::inverse(s);
            if (!s_inv) throw InvalidInput("s(" + bc.object + ", " + bd.object + ") is not invertible");
            Matrix piece = p.lambda_of(t.tensor(bc.object, bd.object)) * kron(s, s_inv->transpose()) *
                           middle_swap(fc, fd, field);
            const std::size_t wc = fc * fc, wd = fd * fd;
            for (std::size_t x = 0; x < wc; ++x)
                for (std::size_t y = 0; y < wd; ++y)
                    for (std::size_t r = 0; r < p.quotient_dim; ++r)
                        m_amb(r, (bc.offset + x) * n + bd.offset + y) = piece(r, x * wd + y);
        }

    BialgebraData b;
    b.coalgebra = endvee_coalgebra(p, audit);
    b.algebra.dim = p.quotient_dim;
    b.algebra.m = coend::descend2(p, m_amb, "multiplication", audit);
    auto f_inv = exact::inverse(t.f_unit);
    if (!f_inv) throw InvalidInput("f is not invertible");
    b.algebra.u = p.lambda_of(t.unit) * kron(t.f_unit, f_inv->transpose());
    if (audit) audit->add(exact::check_flag("well-defined: unit", true, "defined on K"));
    return b;
}

HopfData endvee_antipode(const PresentedCategory& c, const FiberFunctor& f, const TensorData& t,
                         const DualityData& d, const CoendPresentation& p, Report* audit) {
    require_ok(catpres::validate_duality_data(c, f, t, d), "duality data");
    HopfData h;
    h.bialgebra = endvee_bialgebra(c, f, t, p, audit);
    const Field field = p.field;

    Matrix a_amb(p.quotient_dim, p.ambient_dim, field);
    for (const auto& b : p.object_index) {
        catpres::EvaluatedDuality ev = catpres::evaluate_duality(c, f, t, d, b.object);
        const std::size_t nc = b.f_dim, mh = f.dim(ev.dual);
        Matrix iota(mh, nc, field);
        for (std::size_t i = 0; i < nc; ++i)
            for (std::size_t j = 0; j < mh; ++j) iota(j, i) = ev.eps(0, i * mh + j);
        auto iota_t_inv = exact::inverse(iota.transpose());
        if (!iota_t_inv) throw InvalidInput("the pairing of '" + b.object + "' with its dual is singular");
        Matrix piece = p.lambda_of(ev.dual) * moncat::commutation_matrix(mh, mh, field) * kron(iota, *iota_t_inv);
        a_amb.set_block(0, b.offset, piece);
    }
    h.antipode = coend::descend(p, a_amb, "antipode", audit);
    return h;
}

LiftResult lift_functor(const PresentedCategory& c, const FiberFunctor& f, const CoendPresentation& p) {
    LiftResult out;
    out.coalgebra = endvee_coalgebra(p, &out.report);
    for (const auto& obj : c.objects()) {
        ComoduleData m{p.quotient_dim, f.dim(obj), coend::coevaluation(p, obj)};
        out.report.merge(comodule_report(m, out.coalgebra), "F(" + obj + "): ");
        out.comodules.emplace(obj, std::move(m));
    }
    for (const auto& g : c.generators())
        out.report.merge(comodule_morphism_report(f.image(g.name), out.comodules.at(g.src), out.comodules.at(g.dst),
                                                  out.coalgebra),
                         "F(" + g.name + "): ");
    return out;
}

} // namespace tannaka::recon
