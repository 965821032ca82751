#include "tannaka/recon/structures.hpp"

#include "tannaka/errors.hpp"
#include "tannaka/moncat/symexpr.hpp"

namespace tannaka::recon {

using exact::check_equal;
using exact::check_flag;
using exact::kron;

namespace {

bool has_shape(const Matrix& m, std::size_t rows, std::size_t cols) { return m.rows() == rows && m.cols() == cols; }

Matrix id(std::size_t n, Field f) { return Matrix::identity(n, f); }

} // namespace

ComoduleData from_right_coaction(const LinearMap& rho_right, std::size_t coalgebra_dim, std::size_t space_dim) {
    if (!has_shape(rho_right, coalgebra_dim * space_dim, space_dim))
        throw DimensionMismatch("right coaction must be (dim M * dim B) x dim M");
    // M (x) B -> B (x) M
    Matrix swap = moncat::commutation_matrix(space_dim, coalgebra_dim, rho_right.field());
    return {coalgebra_dim, space_dim, swap * rho_right};
}

LinearMap to_right_coaction(const ComoduleData& m) {
    return moncat::commutation_matrix(m.coalgebra_dim, m.space_dim, m.rho.field()) * m.rho;
}

Report coalgebra_report(const CoalgebraData& c) {
    Report r;
    const std::size_t n = c.dim;
    if (!has_shape(c.delta, n * n, n) || !has_shape(c.eps, 1, n)) {
        r.add(check_flag("coalgebra shape", false, "delta must be dim^2 x dim and eps 1 x dim"));
        return r;
    }
    const Field f = c.delta.field();
    r.add(check_equal("coassociativity", kron(c.delta, id(n, f)) * c.delta, kron(id(n, f), c.delta) * c.delta));
    r.add(check_equal("left counit", kron(c.eps, id(n, f)) * c.delta, id(n, f)));
    r.add(check_equal("right counit", kron(id(n, f), c.eps) * c.delta, id(n, f)));
    return r;
}

Report algebra_report(const AlgebraData& a) {
    Report r;
    const std::size_t n = a.dim;
    if (!has_shape(a.m, n, n * n) || !has_shape(a.u, n, 1)) {
        r.add(check_flag("algebra shape", false, "m must be dim x dim^2 and u dim x 1"));
        return r;
    }
    const Field f = a.m.field();
    r.add(check_equal("associativity", a.m * kron(a.m, id(n, f)), a.m * kron(id(n, f), a.m)));
    r.add(check_equal("left unit", a.m * kron(a.u, id(n, f)), id(n, f)));
    r.add(check_equal("right unit", a.m * kron(id(n, f), a.u), id(n, f)));
    return r;
}

Report bialgebra_report(const BialgebraData& b) {
    Report r;
    r.merge(coalgebra_report(b.coalgebra));
    r.merge(algebra_report(b.algebra));
    if (!r.ok()) return r;
    const std::size_t n = b.coalgebra.dim;
    if (b.algebra.dim != n) {
        r.add(check_flag("bialgebra dimensions", false));
        return r;
    }
    const Field f = b.algebra.m.field();
    const auto& [_, delta, eps] = b.coalgebra;
    const auto& [__, m, u] = b.algebra;
    Matrix middle = kron(kron(id(n, f), moncat::commutation_matrix(n, n, f)), id(n, f));
    r.add(check_equal("delta is multiplicative", delta * m, kron(m, m) * middle * kron(delta, delta)));
    r.add(check_equal("eps is multiplicative", eps * m, kron(eps, eps)));
    r.add(check_equal("delta preserves the unit", delta * u, kron(u, u)));
    r.add(check_equal("eps preserves the unit", eps * u, id(1, f)));
    return r;
}

Report hopf_report(const HopfData& h) {
    Report r = bialgebra_report(h.bialgebra);
    const std::size_t n = h.bialgebra.coalgebra.dim;
    if (!has_shape(h.antipode, n, n)) {
        r.add(check_flag("antipode shape", false));
        return r;
    }
    if (!r.ok()) return r;
    const Field f = h.antipode.field();
    const auto& delta = h.bialgebra.coalgebra.delta;
    const auto& eps = h.bialgebra.coalgebra.eps;
    const auto& m = h.bialgebra.algebra.m;
    const auto& u = h.bialgebra.algebra.u;
    r.add(check_equal("left antipode", m * kron(h.antipode, id(n, f)) * delta, u * eps));
    r.add(check_equal("right antipode", m * kron(id(n, f), h.antipode) * delta, u * eps));
    return r;
}

Report comodule_report(const ComoduleData& m, const CoalgebraData& b) {
    if (m.coalgebra_dim != b.dim || !has_shape(m.rho, b.dim * m.space_dim, m.space_dim))
        throw DimensionMismatch("comodule: rho must be (dim B * dim M) x dim M with dim B = " + std::to_string(b.dim));
    Report r;
    const Field f = m.rho.field();
    r.add(check_equal("coassociative coaction", kron(b.delta, id(m.space_dim, f)) * m.rho,
                      kron(id(b.dim, f), m.rho) * m.rho));
    r.add(check_equal("counital coaction", kron(b.eps, id(m.space_dim, f)) * m.rho, id(m.space_dim, f)));
    return r;
}

bool check_comodule(const ComoduleData& m, const CoalgebraData& b) { return comodule_report(m, b).ok(); }

Report comodule_morphism_report(const LinearMap& f, const ComoduleData& m1, const ComoduleData& m2,
                                const CoalgebraData& b) {
    if (m1.coalgebra_dim != b.dim || m2.coalgebra_dim != b.dim || !has_shape(f, m2.space_dim, m1.space_dim) ||
        !has_shape(m1.rho, b.dim * m1.space_dim, m1.space_dim) || !has_shape(m2.rho, b.dim * m2.space_dim, m2.space_dim))
        throw DimensionMismatch("comodule morphism: shapes do not fit");
    Report r;
    r.add(check_equal("comodule morphism square", m2.rho * f, kron(id(b.dim, f.field()), f) * m1.rho));
    return r;
}

bool check_comodule_morphism(const LinearMap& f, const ComoduleData& m1, const ComoduleData& m2,
                             const CoalgebraData& b) {
    return comodule_morphism_report(f, m1, m2, b).ok();
}

Report coalgebra_morphism_report(const LinearMap& phi, const CoalgebraData& from, const CoalgebraData& to) {
    Report r;
    if (!has_shape(phi, to.dim, from.dim)) {
        r.add(check_flag("coalgebra morphism shape", false));
        return r;
    }
    r.add(check_equal("preserves comultiplication", to.delta * phi, kron(phi, phi) * from.delta));
    r.add(check_equal("preserves counit", to.eps * phi, from.eps));
    return r;
}

exact::SubspaceBasis comodule_morphism_space(const ComoduleData& m1, const ComoduleData& m2, const CoalgebraData& b) {
    const Field field = b.delta.field();
    const std::size_t d1 = m1.space_dim, d2 = m2.space_dim;
    if (m1.coalgebra_dim != b.dim || m2.coalgebra_dim != b.dim)
        throw DimensionMismatch("comodule_morphism_space: comodules over a different coalgebra");
    std::vector<Matrix> columns;
    for (std::size_t a = 0; a < d2; ++a)
        for (std::size_t c = 0; c < d1; ++c) {
            Matrix e(d2, d1, field);
            e(a, c) = field.one();
            Matrix defect = m2.rho * e - kron(id(b.dim, field), e) * m1.rho;
            Matrix col(defect.rows() * defect.cols(), 1, field);
            for (std::size_t r = 0; r < defect.rows(); ++r)
                for (std::size_t k = 0; k < defect.cols(); ++k) col(r * defect.cols() + k, 0) = defect(r, k);
            columns.push_back(std::move(col));
        }
    if (columns.empty()) return exact::SubspaceBasis(0, field);
    return exact::kernel_basis(exact::hstack(columns));
}

exact::Json to_json(const CoalgebraData& c) {
    return {{"dim", c.dim}, {"delta", exact::matrix_to_json(c.delta)}, {"eps", exact::matrix_to_json(c.eps)}};
}

exact::Json to_json(const AlgebraData& a) {
    return {{"dim", a.dim}, {"m", exact::matrix_to_json(a.m)}, {"u", exact::matrix_to_json(a.u)}};
}

exact::Json to_json(const ComoduleData& m) {
    return {{"coalgebra_dim", m.coalgebra_dim}, {"space_dim", m.space_dim}, {"rho", exact::matrix_to_json(m.rho)}};
}

} // namespace tannaka::recon
