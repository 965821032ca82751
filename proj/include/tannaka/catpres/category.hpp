#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tannaka/exact/matrix.hpp"
#include "tannaka/exact/linalg.hpp"
#include "tannaka/exact/report.hpp"

namespace tannaka::catpres {

using exact::Field;
using exact::LinearMap;
using exact::Matrix;
using exact::Report;

struct Generator {
    std::string name;
    std::string src;
    std::string dst;
};

/// A composable sequence of generators, applied left to right. `at` names the
/// source object; it is required for the empty (identity) path and checked
/// against the first generator otherwise.
struct Path {
    std::optional<std::string> at;
    std::vector<std::string> steps;

    static Path identity(std::string object) { return {std::move(object), {}}; }
    static Path of(std::vector<std::string> steps) { return {std::nullopt, std::move(steps)}; }
};

struct Relation {
    Path lhs;
    Path rhs;
};

/// A small category given by objects, generating arrows and relations between
/// generator paths. The constructor rejects unknown names, non-composable
/// paths and relations whose sides have different endpoints.
class PresentedCategory {
public:
    PresentedCategory() = default;
    PresentedCategory(std::vector<std::string> objects, std::vector<Generator> generators,
                      std::vector<Relation> relations = {});

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<Relation>& relations() const { return relations_; }

    bool has_object(const std::string& id) const;
    std::size_t object_index(const std::string& id) const;
    const Generator& generator(const std::string& name) const;

    /// Endpoints of a path; throws InvalidInput if it is not composable.
    std::string path_src(const Path& p) const;
    std::string path_dst(const Path& p) const;

private:
    std::vector<std::string> objects_;
    std::vector<Generator> generators_;
    std::vector<Relation> relations_;
    std::map<std::string, std::size_t> object_pos_;
    std::map<std::string, std::size_t> generator_pos_;
};

/// A functor into finite-dimensional spaces over `field`.
struct FiberFunctor {
    Field field;
    std::map<std::string, std::size_t> on_objects;
    std::map<std::string, LinearMap> on_generators;

    std::size_t dim(const std::string& object) const;
    const LinearMap& image(const std::string& generator) const;
};

/// Composite of the generator images in path order (identity for the empty
/// path): path [g, h] evaluates to F(h) * F(g).
LinearMap path_eval(const PresentedCategory& c, const FiberFunctor& f, const Path& p);

/// Shapes of every generator image, then every relation. Violated relations
/// carry both evaluated matrices in the check detail.
Report validate_functor(const PresentedCategory& c, const FiberFunctor& f);

/// Paths realizing g (x) id_C and id_C (x) g for a generator g.
struct TensorRule {
    std::string generator;
    std::string object;
    Path right;  // g (x) id_C
    Path left;   // id_C (x) g
};

/// A strict tensor product on a presented category together with the
/// structure maps s_{C,D}: F(C) (x) F(D) -> F(C (x) D) and f: K -> F(I)
/// making F a tensor functor.
struct TensorData {
    std::string unit;
    std::map<std::pair<std::string, std::string>, std::string> table;
    std::vector<TensorRule> on_generators;
    std::map<std::pair<std::string, std::string>, LinearMap> s;
    LinearMap f_unit;
    /// Paths c_{X,Y}: X (x) Y -> Y (x) X. Empty when no symmetry is declared.
    std::map<std::pair<std::string, std::string>, Path> symmetry;

    const std::string& tensor(const std::string& a, const std::string& b) const;
    const LinearMap& s_map(const std::string& a, const std::string& b) const;
    const TensorRule* rule(const std::string& generator, const std::string& object) const;
};

/// Table laws, rule endpoints, naturality of s in each variable, the two
/// unit diagrams, the associativity diagram and, when a symmetry is
/// declared, the symmetry diagram. Expects a valid functor.
Report validate_tensor_data(const PresentedCategory& c, const FiberFunctor& f, const TensorData& t);

/// Right duals C^ with eta_C: I -> C^ (x) C and eps_C: C (x) C^ -> I as paths.
struct DualityData {
    std::map<std::string, std::string> dual_of;
    std::map<std::string, Path> eta;
    std::map<std::string, Path> eps;
};

/// eta_C and eps_C evaluated in Vec: eta = s^-1 F(eta_path) f_unit and
/// eps = f_unit^-1 F(eps_path) s. As a DualPairing, space F(C^) is paired with
/// F(C) through eval = eps and coeval = eta.
struct EvaluatedDuality {
    std::string object;
    std::string dual;
    LinearMap eta;  // K -> F(C^) (x) F(C)
    LinearMap eps;  // F(C) (x) F(C^) -> K
};

EvaluatedDuality evaluate_duality(const PresentedCategory& c, const FiberFunctor& f, const TensorData& t,
                                  const DualityData& d, const std::string& object);

/// Path endpoints and both triangle identities for every object.
Report validate_duality_data(const PresentedCategory& c, const FiberFunctor& f, const TensorData& t,
                             const DualityData& d);

/// The dual g^: F(Y^) -> F(X^) of a map g: F(X) -> F(Y), namely
/// (id (x) eps_Y)(id (x) g (x) id)(eta_X (x) id).
LinearMap dual_of_map(const LinearMap& g, const EvaluatedDuality& dx, const EvaluatedDuality& dy);

/// Span of {F(p) : p a path a -> b} as a subspace of flattened dim F(b) x dim F(a)
/// matrices (row-major), computed by closing the per-object spans under the
/// generators until nothing grows.
exact::SubspaceBasis morphism_image_span(const PresentedCategory& c, const FiberFunctor& f, const std::string& a,
                                         const std::string& b);

} // namespace tannaka::catpres
