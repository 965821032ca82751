#pragma once

#include <cstddef>

#include "tannaka/exact/matrix.hpp"
#include "tannaka/exact/report.hpp"

namespace tannaka::moncat {

/// Evaluation V^v (x) V -> K (1 x n^2) and coevaluation K -> V (x) V^v
/// (n^2 x 1) exhibiting V^v as a dual of V.
struct DualPairing {
    std::size_t space_dim = 0;
    exact::LinearMap eval;
    exact::LinearMap coeval;
};

/// eval(phi_i (x) e_j) = delta_ij and coeval(1) = sum_i e_i (x) e_i^v; both are
/// the flattened identity under the Kronecker index convention.
DualPairing standard_pairing(std::size_t dim, exact::Field field = exact::Field::rationals());

/// (id (x) eval) o (coeval (x) id) = id_V and (eval (x) id) o (id (x) coeval) = id_V^v.
exact::Report triangle_report(const DualPairing& p);
bool check_triangles(const DualPairing& p);

/// Dual of f : Y -> X, the composite
///   X^v -> X^v Y Y^v -> X^v X Y^v -> Y^v
/// built from coeval_Y, f and eval_X. `p_dom` pairs X, `p_cod` pairs Y.
/// With standard pairings this is the transpose of f.
exact::LinearMap dual_map(const exact::LinearMap& f, const DualPairing& p_dom, const DualPairing& p_cod);

} // namespace tannaka::moncat
