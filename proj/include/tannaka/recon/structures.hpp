#pragma once

#include <cstddef>

#include "tannaka/exact/json_io.hpp"
#include "tannaka/exact/linalg.hpp"
#include "tannaka/exact/report.hpp"

namespace tannaka::recon {

using exact::Field;
using exact::LinearMap;
using exact::Matrix;
using exact::Report;

/// Structure maps use the Kronecker index convention for tensor squares:
/// delta is dim^2 x dim, m is dim x dim^2.
struct CoalgebraData {
    std::size_t dim = 0;
    LinearMap delta;
    LinearMap eps;
};

struct AlgebraData {
    std::size_t dim = 0;
    LinearMap m;
    LinearMap u;
};

struct BialgebraData {
    CoalgebraData coalgebra;
    AlgebraData algebra;
};

struct HopfData {
    BialgebraData bialgebra;
    LinearMap antipode;
};

/// Left comodule rho: M -> B (x) M, a (coalgebra_dim * space_dim) x space_dim matrix.
struct ComoduleData {
    std::size_t coalgebra_dim = 0;
    std::size_t space_dim = 0;
    LinearMap rho;
};

/// Reorders a right coaction M -> M (x) B into the left form used everywhere else.
ComoduleData from_right_coaction(const LinearMap& rho_right, std::size_t coalgebra_dim, std::size_t space_dim);
LinearMap to_right_coaction(const ComoduleData& m);

/// Coassociativity and both counit laws.
Report coalgebra_report(const CoalgebraData& c);
/// Associativity and both unit laws.
Report algebra_report(const AlgebraData& a);
/// Both structures plus the four compatibility diagrams:
/// Delta m = (m (x) m)(id (x) psi (x) id)(Delta (x) Delta), eps m = eps (x) eps,
/// Delta u = u (x) u and eps u = 1.
Report bialgebra_report(const BialgebraData& b);
/// The bialgebra report plus m(a (x) id)Delta = u eps = m(id (x) a)Delta.
Report hopf_report(const HopfData& h);

/// Coaction laws (Delta (x) id) rho = (id (x) rho) rho and (eps (x) id) rho = id.
/// Throws DimensionMismatch when the shapes do not fit B.
Report comodule_report(const ComoduleData& m, const CoalgebraData& b);
bool check_comodule(const ComoduleData& m, const CoalgebraData& b);

/// rho_2 f = (id (x) f) rho_1.
Report comodule_morphism_report(const LinearMap& f, const ComoduleData& m1, const ComoduleData& m2,
                                const CoalgebraData& b);
bool check_comodule_morphism(const LinearMap& f, const ComoduleData& m1, const ComoduleData& m2,
                             const CoalgebraData& b);

/// Delta_D phi = (phi (x) phi) Delta_C and eps_D phi = eps_C.
Report coalgebra_morphism_report(const LinearMap& phi, const CoalgebraData& from, const CoalgebraData& to);

/// All maps f: M1 -> M2 with rho_2 f = (id (x) f) rho_1, as a subspace of
/// row-major flattened space_dim(M2) x space_dim(M1) matrices.
exact::SubspaceBasis comodule_morphism_space(const ComoduleData& m1, const ComoduleData& m2, const CoalgebraData& b);

exact::Json to_json(const CoalgebraData& c);
exact::Json to_json(const AlgebraData& a);
exact::Json to_json(const ComoduleData& m);

} // namespace tannaka::recon
