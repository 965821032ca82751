#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tannaka/recon/structures.hpp"

namespace tannaka::recon {

/// m_A (f (x) g) Delta_C.
LinearMap convolution(const LinearMap& f, const LinearMap& g, const CoalgebraData& c, const AlgebraData& a);
/// Convolution of functionals C -> K: (f (x) g) Delta.
Matrix convolve_functionals(const Matrix& f, const Matrix& g, const CoalgebraData& c);

/// Largest search space the exhaustive solvers will walk.
inline constexpr std::size_t kEnumerationBound = std::size_t{1} << 20;

bool is_grouplike(const Matrix& v, const CoalgebraData& b);

/// Vectors v with Delta(v) = v (x) v and eps(v) = 1, as columns. Over F_p
/// every vector is tried. Over Q a monomial Delta (one term per basis
/// vector) is solved exactly; otherwise `candidates` are filtered, and
/// without candidates UnsupportedProblem is thrown.
std::vector<Matrix> grouplikes(const CoalgebraData& b, const std::vector<Matrix>* candidates = nullptr,
                               std::size_t bound = kEnumerationBound);

bool check_character(const Matrix& chi, const BialgebraData& b);

/// Algebra maps B -> K. Over F_p every functional is tried. Over Q, when
/// every product of basis vectors is zero or a basis vector, character
/// values are 0 or roots of unity and {0, 1, -1} is searched; otherwise
/// `candidates` are filtered or UnsupportedProblem is thrown.
std::vector<Matrix> characters(const BialgebraData& b, const std::vector<Matrix>* candidates = nullptr,
                               std::size_t bound = kEnumerationBound);

/// A finite group given by elements and a multiplication table.
struct GroupTable {
    std::vector<Matrix> elements;
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of elements[i] * elements[j]
    std::optional<std::size_t> identity;
    std::vector<std::optional<std::size_t>> inverse;
    Report report;

    bool is_group() const { return report.ok(); }
    std::size_t order_of(std::size_t i) const;
    bool is_cyclic_of_order(std::size_t n) const;
    exact::Json to_json() const;
};

/// Characters under convolution: closure, eps as identity and chi o a as the
/// two-sided inverse of chi. Throws InvalidInput if some input is not a character.
GroupTable convolution_group(const std::vector<Matrix>& chars, const HopfData& h);
/// Grouplike columns under the multiplication m, with u as identity.
GroupTable grouplike_group(const std::vector<Matrix>& gs, const BialgebraData& b);

/// theta(chi) = (chi (x) id_V) rho.
LinearMap rep_of_comodule(const ComoduleData& m, const Matrix& chi);

/// A map between two of the comodules passed to check_rep_correspondence.
struct ComoduleMap {
    std::string name;
    std::size_t from = 0;
    std::size_t to = 0;
    LinearMap map;
};

/// theta(eps) = id and theta(f) theta(g) = theta(g * f) for all pairs of
/// functionals, and for every listed map: comodule morphism iff it
/// intertwines every theta(chi).
Report check_rep_correspondence(const std::vector<ComoduleData>& ms, const std::vector<Matrix>& functionals,
                                const CoalgebraData& b, const std::vector<ComoduleMap>& maps = {});

/// Every map between every ordered pair of comodules over F_p, as ComoduleMaps.
std::vector<ComoduleMap> all_maps_between(const std::vector<ComoduleData>& ms, Field field,
                                          std::size_t bound = kEnumerationBound);

/// Every vector of F_p^n as a 1 x n row.
std::vector<Matrix> all_functionals(std::size_t n, Field field, std::size_t bound = kEnumerationBound);

} // namespace tannaka::recon
