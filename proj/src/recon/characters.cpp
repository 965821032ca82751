#include "tannaka/recon/characters.hpp"

#include <functional>

#include "tannaka/errors.hpp"

namespace tannaka::recon {

using exact::kron;

LinearMap convolution(const LinearMap& f, const LinearMap& g, const CoalgebraData& c, const AlgebraData& a) {
    if (f.cols() != c.dim || g.cols() != c.dim || f.rows() != a.dim || g.rows() != a.dim)
        throw DimensionMismatch("convolution: maps must run from the coalgebra to the algebra");
    return a.m * kron(f, g) * c.delta;
}

Matrix convolve_functionals(const Matrix& f, const Matrix& g, const CoalgebraData& c) {
    if (f.rows() != 1 || g.rows() != 1 || f.cols() != c.dim || g.cols() != c.dim)
        throw DimensionMismatch("convolution: functionals must be 1 x dim");
    return kron(f, g) * c.delta;
}

namespace {

std::size_t checked_count(std::size_t base, std::size_t exponent, std::size_t bound) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && total > bound / base)
            throw UnsupportedProblem("search space " + std::to_string(base) + "^" + std::to_string(exponent) +
                                     " exceeds the enumeration bound");
        total *= base;
    }
    return total;
}

// Calls visit on every vector of length n with entries from `values`, as a
// column or row depending on `as_row`.
void enumerate(std::size_t n, const std::vector<exact::Scalar>& values, Field field, bool as_row, std::size_t bound,
               const std::function<void(const Matrix&)>& visit) {
    const std::size_t total = checked_count(values.size(), n, bound);
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t count = 0; count < total; ++count) {
        Matrix v = as_row ? Matrix(1, n, field) : Matrix(n, 1, field);
        for (std::size_t i = 0; i < n; ++i) (as_row ? v(0, i) : v(i, 0)) = values[digits[i]];
        visit(v);
        for (std::size_t i = 0; i < n; ++i) {
            if (++digits[i] < values.size()) break;
            digits[i] = 0;
        }
    }
}

std::vector<exact::Scalar> field_elements(Field field) {
    std::vector<exact::Scalar> out;
    for (std::uint64_t r = 0; r < field.modulus(); ++r) out.push_back(exact::Scalar::residue(r, field.modulus()));
    return out;
}

bool has_single_entry(const Matrix& column) {
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < column.rows(); ++r) nonzero += !column(r, 0).is_zero();
    return nonzero == 1;
}

} // namespace

bool is_grouplike(const Matrix& v, const CoalgebraData& b) {
    if (v.rows() != b.dim || v.cols() != 1) return false;
    return b.delta * v == kron(v, v) && (b.eps * v)(0, 0).is_one();
}

std::vector<Matrix> grouplikes(const CoalgebraData& b, const std::vector<Matrix>* candidates, std::size_t bound) {
    const Field field = b.delta.field();
    std::vector<Matrix> out;
    if (b.dim == 0) return out;
    if (!field.is_rational()) {
        enumerate(b.dim, field_elements(field), field, false, bound, [&](const Matrix& v) {
            if (is_grouplike(v, b)) out.push_back(v);
        });
        return out;
    }
    bool monomial = true;
    for (std::size_t i = 0; i < b.dim && monomial; ++i) monomial = has_single_entry(b.delta.col(i));
    if (monomial) {
        // With one term per basis vector the counit forces Delta(b_i) = k_i b_i (x) b_i,
        // and the grouplikes are exactly the b_i / eps(b_i).
        if (!coalgebra_report(b).ok()) throw InvalidInput("grouplikes: not a coalgebra");
        for (std::size_t i = 0; i < b.dim; ++i) {
            if (b.eps(0, i).is_zero()) continue;
            Matrix v = Matrix::unit_column(b.dim, i, field).scaled(b.eps(0, i).inverse());
            if (is_grouplike(v, b)) out.push_back(std::move(v));
        }
        return out;
    }
    if (!candidates) throw UnsupportedProblem("grouplikes over Q need a monomial comultiplication or candidates");
    for (const auto& v : *candidates)
        if (is_grouplike(v, b)) out.push_back(v);
    return out;
}

bool check_character(const Matrix& chi, const BialgebraData& b) {
    const auto& a = b.algebra;
    if (chi.rows() != 1 || chi.cols() != a.dim) return false;
    return chi * a.m == kron(chi, chi) && (chi * a.u)(0, 0).is_one();
}

std::vector<Matrix> characters(const BialgebraData& b, const std::vector<Matrix>* candidates, std::size_t bound) {
    const Field field = b.algebra.m.field();
    const std::size_t n = b.algebra.dim;
    std::vector<Matrix> out;
    auto keep = [&](const Matrix& chi) {
        if (check_character(chi, b)) out.push_back(chi);
    };
    if (!field.is_rational()) {
        enumerate(n, field_elements(field), field, true, bound, keep);
        return out;
    }
    bool monoid = true;
    for (std::size_t k = 0; k < n * n && monoid; ++k) {
        Matrix col = b.algebra.m.col(k);
        if (col.is_zero()) continue;
        monoid = has_single_entry(col);
        for (std::size_t r = 0; r < n && monoid; ++r)
            if (!col(r, 0).is_zero() && !col(r, 0).is_one()) monoid = false;
    }
    if (monoid) {
        enumerate(n, {field.zero(), field.one(), -field.one()}, field, true, bound, keep);
        return out;
    }
    if (!candidates) throw UnsupportedProblem("characters over Q need a monomial multiplication or candidates");
    for (const auto& chi : *candidates) keep(chi);
    return out;
}

std::size_t GroupTable::order_of(std::size_t i) const {
    if (!identity) throw InvalidInput("group has no identity");
    std::size_t x = i, order = 1;
    while (x != *identity) {
        x = table[x][i];
        if (++order > elements.size()) throw InvalidInput("element has no finite order in the table");
    }
    return order;
}

bool GroupTable::is_cyclic_of_order(std::size_t n) const {
    if (!is_group() || elements.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (order_of(i) == n) return true;
    return n == 0;
}

exact::Json GroupTable::to_json() const {
    exact::Json j;
    exact::Json elems = exact::Json::array();
    for (const auto& e : elements) {
        exact::Json v = exact::Json::array();
        for (std::size_t r = 0; r < e.rows(); ++r)
            for (std::size_t c = 0; c < e.cols(); ++c) v.push_back(e(r, c).to_string());
        elems.push_back(std::move(v));
    }
    j["elements"] = std::move(elems);
    j["table"] = table;
    j["identity"] = identity ? exact::Json(*identity) : exact::Json();
    exact::Json inv = exact::Json::array();
    for (const auto& i : inverse) inv.push_back(i ? exact::Json(*i) : exact::Json());
    j["inverse"] = std::move(inv);
    j["checks"] = exact::report_to_json(report);
    return j;
}

namespace {

std::optional<std::size_t> find(const std::vector<Matrix>& xs, const Matrix& x) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] == x) return i;
    return std::nullopt;
}

GroupTable build_table(const std::vector<Matrix>& xs, const Matrix& one,
                       const std::function<Matrix(const Matrix&, const Matrix&)>& mul) {
    GroupTable g;
    g.elements = xs;
    g.identity = find(xs, one);
    g.report.add(exact::check_flag("identity in the set", g.identity.has_value()));
    bool closed = true;
    g.table.assign(xs.size(), std::vector<std::size_t>(xs.size(), 0));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j) {
            auto k = find(xs, mul(xs[i], xs[j]));
            if (!k) {
                closed = false;
                continue;
            }
            g.table[i][j] = *k;
        }
    g.report.add(exact::check_flag("closed under the product", closed));
    g.inverse.assign(xs.size(), std::nullopt);
    if (g.identity && closed)
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t j = 0; j < xs.size(); ++j)
                if (g.table[i][j] == *g.identity && g.table[j][i] == *g.identity) g.inverse[i] = j;
            g.report.add(exact::check_flag("element " + std::to_string(i) + " has an inverse", g.inverse[i].has_value()));
        }
    return g;
}

} // namespace

GroupTable convolution_group(const std::vector<Matrix>& chars, const HopfData& h) {
    const auto& b = h.bialgebra;
    for (std::size_t i = 0; i < chars.size(); ++i)
        if (!check_character(chars[i], b)) throw InvalidInput("convolution_group: input " + std::to_string(i) + " is not a character");
    const auto& c = b.coalgebra;
    GroupTable g = build_table(chars, c.eps, [&](const Matrix& x, const Matrix& y) { return convolve_functionals(x, y, c); });
    g.report.add(exact::check_flag("eps is a character", check_character(c.eps, b)));
    for (std::size_t i = 0; i < chars.size(); ++i) {
        Matrix inv = chars[i] * h.antipode;
        const std::string name = "chi" + std::to_string(i) + " o a";
        g.report.add(exact::check_equal(name + " is a left inverse", convolve_functionals(inv, chars[i], c), c.eps));
        g.report.add(exact::check_equal(name + " is a right inverse", convolve_functionals(chars[i], inv, c), c.eps));
        auto k = find(chars, inv);
        g.report.add(exact::check_flag(name + " is in the set", k.has_value()));
        if (k && g.inverse[i]) g.report.add(exact::check_flag(name + " is the table inverse", *k == *g.inverse[i]));
    }
    return g;
}

GroupTable grouplike_group(const std::vector<Matrix>& gs, const BialgebraData& b) {
    return build_table(gs, b.algebra.u, [&](const Matrix& x, const Matrix& y) { return b.algebra.m * kron(x, y); });
}

LinearMap rep_of_comodule(const ComoduleData& m, const Matrix& chi) {
    if (chi.rows() != 1 || chi.cols() != m.coalgebra_dim) throw DimensionMismatch("rep_of_comodule: chi must be 1 x dim B");
    return kron(chi, Matrix::identity(m.space_dim, chi.field())) * m.rho;
}

Report check_rep_correspondence(const std::vector<ComoduleData>& ms, const std::vector<Matrix>& functionals,
                                const CoalgebraData& b, const std::vector<ComoduleMap>& maps) {
    Report r;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        const std::string name = "comodule " + std::to_string(k);
        r.add(exact::check_equal(name + ": theta(eps) = id", rep_of_comodule(ms[k], b.eps),
                                 Matrix::identity(ms[k].space_dim, b.eps.field())));
        std::vector<Matrix> thetas;
        for (const auto& f : functionals) thetas.push_back(rep_of_comodule(ms[k], f));
        bool law = true;
        std::string detail;
        for (std::size_t i = 0; i < functionals.size() && law; ++i)
            for (std::size_t j = 0; j < functionals.size() && law; ++j)
                if (!(thetas[i] * thetas[j] == rep_of_comodule(ms[k], convolve_functionals(functionals[j], functionals[i], b)))) {
                    law = false;
                    detail = "fails for the pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                }
        r.add(exact::check_flag(name + ": theta(f) theta(g) = theta(g * f)", law, detail));
    }
    for (const auto& m : maps) {
        const ComoduleData& from = ms.at(m.from);
        const ComoduleData& to = ms.at(m.to);
        bool morphism = check_comodule_morphism(m.map, from, to, b);
        bool intertwines = true;
        for (const auto& f : functionals)
            if (!(rep_of_comodule(to, f) * m.map == m.map * rep_of_comodule(from, f))) {
                intertwines = false;
                break;
            }
        r.add(exact::check_flag(m.name + ": morphism iff intertwining", morphism == intertwines,
                                std::string("morphism ") + (morphism ? "yes" : "no") + ", intertwines " +
                                    (intertwines ? "yes" : "no")));
    }
    return r;
}

std::vector<ComoduleMap> all_maps_between(const std::vector<ComoduleData>& ms, Field field, std::size_t bound) {
    if (field.is_rational()) throw UnsupportedProblem("exhaustive map enumeration needs a finite field");
    std::vector<ComoduleMap> out;
    const auto values = field_elements(field);
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = 0; b < ms.size(); ++b) {
            const std::size_t rows = ms[b].space_dim, cols = ms[a].space_dim;
            std::size_t index = 0;
            enumerate(rows * cols, values, field, true, bound, [&](const Matrix& flat) {
                Matrix f(rows, cols, field);
                for (std::size_t r = 0; r < rows; ++r)
                    for (std::size_t c = 0; c < cols; ++c) f(r, c) = flat(0, r * cols + c);
                out.push_back({std::to_string(a) + "->" + std::to_string(b) + " #" + std::to_string(index++), a, b, f});
            });
        }
    return out;
}

std::vector<Matrix> all_functionals(std::size_t n, Field field, std::size_t bound) {
    if (field.is_rational()) throw UnsupportedProblem("exhaustive functional enumeration needs a finite field");
    std::vector<Matrix> out;
    enumerate(n, field_elements(field), field, true, bound, [&](const Matrix& v) { out.push_back(v); });
    return out;
}

} // namespace tannaka::recon
