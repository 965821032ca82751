#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tannaka/catpres/category.hpp"
#include "tannaka/exact/json_io.hpp"
#include "tannaka/exact/linalg.hpp"

namespace tannaka::coend {

using catpres::FiberFunctor;
using catpres::PresentedCategory;
using exact::Field;
using exact::LinearMap;
using exact::Matrix;
using exact::Report;

/// One summand F(C) (x) G(C)^v of the ambient space. Its basis vector
/// e_i (x) phi_j sits at offset + i * g_dim + j.
struct Block {
    std::string object;
    std::size_t f_dim = 0;
    std::size_t g_dim = 0;
    std::size_t offset = 0;

    std::size_t size() const { return f_dim * g_dim; }
};

/// Nat^v(F, G) as the quotient of the sum of the blocks F(C) (x) G(C)^v by the
/// relations coming from the generators.
struct CoendPresentation {
    Field field;
    std::vector<Block> object_index;
    std::size_t ambient_dim = 0;
    exact::SubspaceBasis relation_span;
    std::size_t quotient_dim = 0;
    LinearMap proj;
    LinearMap section;
    std::map<std::string, LinearMap> lambda;

    const Block& block(const std::string& object) const;
    const LinearMap& lambda_of(const std::string& object) const;
};

/// Relation vectors for a generator f: C -> C' are
///   block C (e_i (x) G(f)^T phi_j) - block C' (F(f) e_i (x) phi_j).
/// Throws InvalidInput when either functor fails validation.
CoendPresentation natvee(const PresentedCategory& c, const FiberFunctor& f, const FiberFunctor& g);

/// A natural transformation as a family of maps F(C) -> G(C).
using NatTransformation = std::map<std::string, LinearMap>;

struct EndSpace {
    std::vector<NatTransformation> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Solutions of theta_C' F(f) = G(f) theta_C over all generators f, solved
/// directly on the entries of the theta_C.
EndSpace nat_space(const PresentedCategory& c, const FiberFunctor& f, const FiberFunctor& g);

/// True when theta_C' F(f) = G(f) theta_C for every generator.
bool is_natural(const PresentedCategory& c, const FiberFunctor& f, const FiberFunctor& g,
                const NatTransformation& theta);

/// theta_C(v) = sum_j xi(lambda_C(v (x) phi_j)) e_j for a functional xi (1 x quotient_dim).
NatTransformation pairing_to_nat(const CoendPresentation& p, const Matrix& xi);
/// The functional xi with xi o lambda_C = flatten(theta_C) on every block.
/// Throws WellDefinednessError when theta is not natural.
Matrix nat_to_pairing(const CoendPresentation& p, const NatTransformation& theta);

/// F(C) -> Nat^v(F, G) (x) G(C), e_k -> sum_i lambda_C(e_k (x) phi_i) (x) e_i.
LinearMap coevaluation(const CoendPresentation& p, const std::string& object);

/// Pushes a map defined on the ambient space down to the quotient after
/// checking that it kills the relation span. Throws WellDefinednessError
/// otherwise; the check is appended to `audit` when given.
LinearMap descend(const CoendPresentation& p, const LinearMap& on_ambient, const std::string& name,
                  Report* audit = nullptr);
/// As above for a map on the ambient tensor square (amb (x) amb), which must
/// kill R (x) amb and amb (x) R.
LinearMap descend2(const CoendPresentation& p, const LinearMap& on_ambient_square, const std::string& name,
                   Report* audit = nullptr);

/// Delta: Nat^v(F, H) -> Nat^v(F, G) (x) Nat^v(G, H) with
/// Delta o lambda^FH_C = (lambda^FG_C (x) lambda^GH_C) o (id (x) coeval_GC (x) id).
LinearMap cocomposition(const CoendPresentation& p_fg, const CoendPresentation& p_gh, const CoendPresentation& p_fh,
                        Report* audit = nullptr);

/// The functional with eps o lambda_C = evaluation F(C) (x) F(C)^v -> K.
LinearMap counit(const CoendPresentation& p, Report* audit = nullptr);

/// lambda_C (id (x) G(f)^T) = lambda_C' (F(f) (x) id) on F(C) (x) G(C')^v for every
/// generator f: C -> C'.
Report dinaturality_report(const PresentedCategory& c, const FiberFunctor& f, const FiberFunctor& g,
                           const CoendPresentation& p);

/// dim Nat^v(F, G) = dim Nat(F, G), and pairing_to_nat / nat_to_pairing as
/// mutually inverse bijections: both have full rank and pairing_to_nat lands
/// in natural transformations.
Report pairing_report(const PresentedCategory& c, const FiberFunctor& f, const FiberFunctor& g,
                      const CoendPresentation& p, const EndSpace& nat);

exact::Json to_json(const CoendPresentation& p);

} // namespace tannaka::coend
