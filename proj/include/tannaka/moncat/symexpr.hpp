#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tannaka/exact/matrix.hpp"
#include "tannaka/exact/sparse.hpp"

namespace tannaka::moncat {

/// A word of object atoms in a strict symmetric monoidal category; the empty
/// word is the unit object.
using ObjectWord = std::vector<std::string>;

std::string word_to_string(const ObjectWord& w);

/// Arrows built from identities and adjacent symmetries with composition and
/// tensor. Associators and unitors are identities (strict words), so these
/// four constructors generate every structural arrow.
///
/// Values are immutable and cheap to copy. Every constructor validates its
/// boundary words, so a SymExpr that exists is well formed.
///
/// Canonical text form:
///   id[X,Y]          identity on the word XY
///   swap[X,Y,Z;1]    symmetry exchanging atoms 1 and 2 of XYZ
///   (e1 ; e2)        e1 followed by e2
///   (e1 * e2)        tensor product
class SymExpr {
public:
    enum class Kind { Identity, AdjacentSwap, Compose, Tensor };

    static SymExpr identity(ObjectWord word);
    static SymExpr swap(ObjectWord word, std::size_t position);
    /// `first` followed by `then`; the boundary words must agree.
    static SymExpr compose(const SymExpr& first, const SymExpr& then);
    static SymExpr tensor(const SymExpr& left, const SymExpr& right);
    /// The symmetry U V -> V U expanded into adjacent swaps: each atom of V
    /// travels left across all of U, first atom first.
    static SymExpr block_swap(const ObjectWord& left, const ObjectWord& right);

    static SymExpr parse(std::string_view text);
    std::string to_string() const;

    Kind kind() const;
    const ObjectWord& domain() const;
    const ObjectWord& codomain() const;
    /// Swap position (AdjacentSwap only).
    std::size_t position() const;
    /// Operands of Compose (first, then) or Tensor (left, right).
    SymExpr lhs() const;
    SymExpr rhs() const;

private:
    struct Node;
    explicit SymExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// perm[i] is the codomain position of the atom at domain position i.
using Permutation = std::vector<std::size_t>;

/// Identity -> identity, AdjacentSwap i -> (i i+1), Compose(a, b) -> perm(b) o perm(a),
/// Tensor -> block juxtaposition.
Permutation perm_of(const SymExpr& e);

/// Composite p o q (apply q first).
Permutation compose_perms(const Permutation& p, const Permutation& q);

/// Two structural arrows with the same boundary words are equal iff their
/// permutations agree. Throws MalformedExpression if the boundaries differ.
bool coherence_equal(const SymExpr& a, const SymExpr& b);

using DimAssignment = std::map<std::string, std::size_t>;

/// The commutation matrix K^m (x) K^n -> K^n (x) K^m, e_a (x) e_b -> e_b (x) e_a.
exact::LinearMap commutation_matrix(std::size_t m, std::size_t n, exact::Field field = exact::Field::rationals());

/// Semantics in Vec: identities, commutation matrices on adjacent factors,
/// matrix products and Kronecker products. Throws InvalidInput when an atom
/// has no dimension.
exact::LinearMap eval_in_vec(const SymExpr& e, const DimAssignment& dims,
                             exact::Field field = exact::Field::rationals());
/// The same map kept in sparse form, for large words.
exact::SparseMatrix eval_in_vec_sparse(const SymExpr& e, const DimAssignment& dims,
                                       exact::Field field = exact::Field::rationals());

} // namespace tannaka::moncat
