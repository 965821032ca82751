#pragma once

#include <map>
#include <string>

#include "tannaka/catpres/category.hpp"
#include "tannaka/coend/coend.hpp"
#include "tannaka/recon/structures.hpp"

namespace tannaka::recon {

/// A category of B-comodules: objects carry spaces (the functor) and
/// coactions, generators are comodule maps.
struct ComoduleCategory {
    catpres::PresentedCategory category;
    catpres::FiberFunctor functor;
    std::map<std::string, LinearMap> coactions;

    ComoduleData comodule(const std::string& object, std::size_t coalgebra_dim) const;
};

struct RhoTildeResult {
    coend::CoendPresentation endvee;
    CoalgebraData endvee_coalgebra;
    LinearMap map;  // End^v(U) -> B
    std::size_t rank = 0;
    bool surjective = false;
    bool injective = false;
    /// Well-definedness of every quotient map and the coalgebra morphism laws.
    Report report;
};

/// rho~ (lambda_V(e_i (x) phi_j)) = (id_B (x) phi_j) rho_V(e_i). Throws
/// InvalidInput unless every coaction is a comodule and every generator a
/// comodule morphism.
RhoTildeResult rho_tilde(const CoalgebraData& b, const ComoduleCategory& u);

/// V (x) V^v with basis c_ij = e_i (x) phi_j at index i * n + j,
/// Delta(c_ij) = sum_k c_ik (x) c_kj, eps(c_ij) = delta_ij.
CoalgebraData comatrix_coalgebra(std::size_t n, Field field = Field::rationals());
/// K^n as a comatrix comodule: rho(e_j) = sum_i c_ji (x) e_i.
ComoduleData comatrix_standard_comodule(std::size_t n, Field field = Field::rationals());

/// (id_B (x) eval)(rho (x) id): V (x) V^v -> B. The coalgebra morphism laws
/// from comatrix_coalgebra(dim V) are appended to `audit` when given.
LinearMap alpha_tilde(const ComoduleData& m, const CoalgebraData& b, Report* audit = nullptr);

/// Functions on Z/n: basis delta_g, Delta(delta_g) = sum_h delta_h (x) delta_{g-h},
/// pointwise product, u = sum_g delta_g, antipode delta_g -> delta_{-g}.
HopfData function_hopf_algebra(std::size_t n, Field field = Field::rationals());
/// The comodule of a Z/n action generated by `t` (t^n = id): rho(v) = sum_g delta_g (x) t^g v.
ComoduleData comodule_of_action(const LinearMap& t, std::size_t n);

} // namespace tannaka::recon
