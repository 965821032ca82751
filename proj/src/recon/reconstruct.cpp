#include "tannaka/recon/reconstruct.hpp"

#include "tannaka/errors.hpp"
#include "tannaka/recon/endvee.hpp"

namespace tannaka::recon {

using exact::kron;

ComoduleData ComoduleCategory::comodule(const std::string& object, std::size_t coalgebra_dim) const {
    auto it = coactions.find(object);
    if (it == coactions.end()) throw InvalidInput("no coaction given for '" + object + "'");
    return {coalgebra_dim, functor.dim(object), it->second};
}

namespace {

// Column (i, j) of block V is (id (x) phi_j) rho_V(e_i).
Matrix pairing_block(const LinearMap& rho, std::size_t b_dim, std::size_t n) {
    Matrix out(b_dim, n * n, rho.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t b = 0; b < b_dim; ++b) out(b, i * n + j) = rho(b * n + j, i);
    return out;
}

} // namespace

RhoTildeResult rho_tilde(const CoalgebraData& b, const ComoduleCategory& u) {
    if (!coalgebra_report(b).ok()) throw InvalidInput("rho_tilde: B is not a coalgebra");
    const auto& cat = u.category;
    std::map<std::string, ComoduleData> comodules;
    for (const auto& obj : cat.objects()) {
        ComoduleData m = u.comodule(obj, b.dim);
        if (!check_comodule(m, b)) throw InvalidInput("rho_tilde: '" + obj + "' is not a comodule");
        comodules.emplace(obj, std::move(m));
    }
    for (const auto& g : cat.generators())
        if (!check_comodule_morphism(u.functor.image(g.name), comodules.at(g.src), comodules.at(g.dst), b))
            throw InvalidInput("rho_tilde: generator '" + g.name + "' is not a comodule morphism");

    RhoTildeResult out;
    out.endvee = coend::natvee(cat, u.functor, u.functor);
    out.endvee_coalgebra = endvee_coalgebra(out.endvee, &out.report);
    Matrix amb(b.dim, out.endvee.ambient_dim, b.delta.field());
    for (const auto& blk : out.endvee.object_index)
        amb.set_block(0, blk.offset, pairing_block(comodules.at(blk.object).rho, b.dim, blk.f_dim));
    out.map = coend::descend(out.endvee, amb, "rho_tilde", &out.report);
    out.report.merge(coalgebra_morphism_report(out.map, out.endvee_coalgebra, b), "rho_tilde ");
    out.rank = exact::rank(out.map);
    out.surjective = out.rank == b.dim;
    out.injective = out.rank == out.endvee.quotient_dim;
    return out;
}

CoalgebraData comatrix_coalgebra(std::size_t n, Field field) {
    const std::size_t d = n * n;
    CoalgebraData c{d, Matrix(d * d, d, field), Matrix(1, d, field)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) c.delta((i * n + k) * d + (k * n + j), i * n + j) = field.one();
            if (i == j) c.eps(0, i * n + j) = field.one();
        }
    return c;
}

ComoduleData comatrix_standard_comodule(std::size_t n, Field field) {
    ComoduleData m{n * n, n, Matrix(n * n * n, n, field)};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m.rho((j * n + i) * n + i, j) = field.one();
    return m;
}

LinearMap alpha_tilde(const ComoduleData& m, const CoalgebraData& b, Report* audit) {
    if (m.coalgebra_dim != b.dim || m.rho.rows() != b.dim * m.space_dim || m.rho.cols() != m.space_dim)
        throw DimensionMismatch("alpha_tilde: comodule does not fit the coalgebra");
    Matrix alpha = pairing_block(m.rho, b.dim, m.space_dim);
    if (audit)
        audit->merge(coalgebra_morphism_report(alpha, comatrix_coalgebra(m.space_dim, b.delta.field()), b),
                     "alpha_tilde ");
    return alpha;
}

HopfData function_hopf_algebra(std::size_t n, Field field) {
    HopfData h;
    CoalgebraData& c = h.bialgebra.coalgebra;
    AlgebraData& a = h.bialgebra.algebra;
    c = {n, Matrix(n * n, n, field), Matrix(1, n, field)};
    a = {n, Matrix(n, n * n, field), Matrix(n, 1, field)};
    h.antipode = Matrix(n, n, field);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t k = 0; k < n; ++k) c.delta(k * n + (g + n - k) % n, g) = field.one();
        a.m(g, g * n + g) = field.one();
        a.u(g, 0) = field.one();
        h.antipode((n - g) % n, g) = field.one();
    }
    if (n > 0) c.eps(0, 0) = field.one();
    return h;
}

ComoduleData comodule_of_action(const LinearMap& t, std::size_t n) {
    const std::size_t d = t.rows();
    if (t.cols() != d) throw DimensionMismatch("comodule_of_action: action must be square");
    ComoduleData m{n, d, Matrix(n * d, d, t.field())};
    Matrix power = Matrix::identity(d, t.field());
    for (std::size_t g = 0; g < n; ++g) {
        m.rho.set_block(g * d, 0, power);
        power = t * power;
    }
    if (!power.is_identity()) throw InvalidInput("comodule_of_action: t^n is not the identity");
    return m;
}

} // namespace tannaka::recon
