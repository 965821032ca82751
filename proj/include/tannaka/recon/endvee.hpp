#pragma once

#include <map>
#include <string>

#include "tannaka/catpres/category.hpp"
#include "tannaka/coend/coend.hpp"
#include "tannaka/recon/structures.hpp"

namespace tannaka::recon {

using catpres::DualityData;
using catpres::FiberFunctor;
using catpres::PresentedCategory;
using catpres::TensorData;
using coend::CoendPresentation;

/// Delta from cocomposition and eps from the counit of End^v(F) = Nat^v(F, F).
/// Well-definedness checks are appended to `audit` when given.
CoalgebraData endvee_coalgebra(const CoendPresentation& p, Report* audit = nullptr);

/// Multiplication on the blocks C, D:
///   m (lambda_C (x) lambda_D) = lambda_{C*D} (s_{C,D} (x) (s_{C,D}^-1)^T) P
/// where P is the middle swap F(C) (x) F(C)^v (x) F(D) (x) F(D)^v ->
/// F(C) (x) F(D) (x) F(C)^v (x) F(D)^v; unit u = lambda_I (f (x) (f^-1)^T).
/// Throws InvalidInput if the tensor data does not validate.
BialgebraData endvee_bialgebra(const PresentedCategory& c, const FiberFunctor& f, const TensorData& t,
                               const CoendPresentation& p, Report* audit = nullptr);

/// The antipode on block C is lambda_{C^} o swap o (iota (x) iota') where
/// iota: F(C) -> F(C^)^v is eps_C read as a pairing and iota' = (iota^T)^-1.
/// Throws InvalidInput for invalid duality data and a singular pairing.
HopfData endvee_antipode(const PresentedCategory& c, const FiberFunctor& f, const TensorData& t,
                         const DualityData& d, const CoendPresentation& p, Report* audit = nullptr);

/// Each F(C) as a left End^v(F)-comodule through the coevaluation, with the
/// comodule laws and the morphism square for every generator in `report`.
struct LiftResult {
    CoalgebraData coalgebra;
    std::map<std::string, ComoduleData> comodules;
    Report report;
};

LiftResult lift_functor(const PresentedCategory& c, const FiberFunctor& f, const CoendPresentation& p);

} // namespace tannaka::recon
