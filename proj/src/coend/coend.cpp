#include "tannaka/coend/coend.hpp"

#include "tannaka/errors.hpp"

namespace tannaka::coend {

using exact::kron;
using exact::Scalar;

const Block& CoendPresentation::block(const std::string& object) const {
    for (const auto& b : object_index)
        if (b.object == object) return b;
    throw InvalidInput("object '" + object + "' is not in the presentation");
}

const LinearMap& CoendPresentation::lambda_of(const std::string& object) const {
    auto it = lambda.find(object);
    if (it == lambda.end()) throw InvalidInput("object '" + object + "' is not in the presentation");
    return it->second;
}

namespace {

void require_valid(const PresentedCategory& c, const FiberFunctor& f, const char* which) {
    Report r = catpres::validate_functor(c, f);
    if (r.ok()) return;
    std::string msg = std::string("functor ") + which + " is not valid:";
    for (const auto& check : r.checks())
        if (!check.passed) msg += " " + check.name + ";";
    throw InvalidInput(msg);
}

std::vector<Block> layout(const PresentedCategory& c, const FiberFunctor& f, const FiberFunctor& g) {
    std::vector<Block> blocks;
    std::size_t offset = 0;
    for (const auto& obj : c.objects()) {
        blocks.push_back({obj, f.dim(obj), g.dim(obj), offset});
        offset += blocks.back().size();
    }
    return blocks;
}

const Block& find_block(const std::vector<Block>& blocks, const std::string& obj) {
    for (const auto& b : blocks)
        if (b.object == obj) return b;
    throw InvalidInput("unknown object '" + obj + "'");
}

Matrix flat_identity(std::size_t n, Field field) {
    Matrix v(n * n, 1, field);
    for (std::size_t i = 0; i < n; ++i) v(i * n + i, 0) = field.one();
    return v;
}

} // namespace

CoendPresentation natvee(const PresentedCategory& c, const FiberFunctor& f, const FiberFunctor& g) {
    if (f.field != g.field) throw FieldMismatch("natvee: functors over different fields");
    require_valid(c, f, "F");
    require_valid(c, g, "G");
    const Field field = f.field;

    CoendPresentation p;
    p.field = field;
    p.object_index = layout(c, f, g);
    for (const auto& b : p.object_index) p.ambient_dim += b.size();

    std::vector<Matrix> relations;
    for (const auto& gen : c.generators()) {
        const Block& src = find_block(p.object_index, gen.src);
        const Block& dst = find_block(p.object_index, gen.dst);
        const Matrix& ff = f.image(gen.name);
        const Matrix& gf = g.image(gen.name);
        for (std::size_t i = 0; i < src.f_dim; ++i)
            for (std::size_t j = 0; j < dst.g_dim; ++j) {
                Matrix v(p.ambient_dim, 1, field);
                for (std::size_t l = 0; l < src.g_dim; ++l) v(src.offset + i * src.g_dim + l, 0) += gf(j, l);
                for (std::size_t k = 0; k < dst.f_dim; ++k) v(dst.offset + k * dst.g_dim + j, 0) -= ff(k, i);
                if (!v.is_zero()) relations.push_back(std::move(v));
            }
    }
    p.relation_span = relations.empty() ? exact::SubspaceBasis(p.ambient_dim, field)
                                        : exact::SubspaceBasis::span_of_columns(exact::hstack(relations));
    exact::Quotient q = exact::quotient(p.ambient_dim, p.relation_span);
    p.quotient_dim = q.dim();
    p.proj = std::move(q.proj);
    p.section = std::move(q.section);
    for (const auto& b : p.object_index) p.lambda[b.object] = p.proj.block(0, b.offset, p.quotient_dim, b.size());
    return p;
}

EndSpace nat_space(const PresentedCategory& c, const FiberFunctor& f, const FiberFunctor& g) {
    const Field field = f.field;
    std::vector<Block> blocks = layout(c, f, g);
    std::size_t unknowns = 0;
    for (const auto& b : blocks) unknowns += b.size();

    // Unknown offset + k * g_dim + j is the entry theta_C[j][k].
    std::vector<std::vector<Scalar>> rows;
    for (const auto& gen : c.generators()) {
        const Block& src = find_block(blocks, gen.src);
        const Block& dst = find_block(blocks, gen.dst);
        const Matrix& ff = f.image(gen.name);
        const Matrix& gf = g.image(gen.name);
        for (std::size_t j = 0; j < dst.g_dim; ++j)
            for (std::size_t i = 0; i < src.f_dim; ++i) {
                std::vector<Scalar> row(unknowns, field.zero());
                for (std::size_t k = 0; k < dst.f_dim; ++k) row[dst.offset + k * dst.g_dim + j] += ff(k, i);
                for (std::size_t l = 0; l < src.g_dim; ++l) row[src.offset + i * src.g_dim + l] -= gf(j, l);
                rows.push_back(std::move(row));
            }
    }
    Matrix system = rows.empty() ? Matrix(0, unknowns, field) : Matrix::from_rows(rows, field);
    exact::SubspaceBasis sol = exact::kernel_basis(system);

    EndSpace out;
    const Matrix& basis = sol.echelon();
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        NatTransformation theta;
        for (const auto& b : blocks) {
            Matrix m(b.g_dim, b.f_dim, field);
            for (std::size_t k = 0; k < b.f_dim; ++k)
                for (std::size_t j = 0; j < b.g_dim; ++j) m(j, k) = basis(r, b.offset + k * b.g_dim + j);
            theta[b.object] = std::move(m);
        }
        out.basis.push_back(std::move(theta));
    }
    return out;
}

bool is_natural(const PresentedCategory& c, const FiberFunctor& f, const FiberFunctor& g,
                const NatTransformation& theta) {
    for (const auto& gen : c.generators()) {
        auto src = theta.find(gen.src), dst = theta.find(gen.dst);
        if (src == theta.end() || dst == theta.end()) return false;
        if (!(dst->second * f.image(gen.name) == g.image(gen.name) * src->second)) return false;
    }
    return true;
}

NatTransformation pairing_to_nat(const CoendPresentation& p, const Matrix& xi) {
    if (xi.rows() != 1 || xi.cols() != p.quotient_dim)
        throw DimensionMismatch("pairing_to_nat: functional must be 1x" + std::to_string(p.quotient_dim));
    NatTransformation theta;
    for (const auto& b : p.object_index) {
        Matrix row = xi * p.lambda_of(b.object);
        Matrix m(b.g_dim, b.f_dim, p.field);
        for (std::size_t i = 0; i < b.f_dim; ++i)
            for (std::size_t j = 0; j < b.g_dim; ++j) m(j, i) = row(0, i * b.g_dim + j);
        theta[b.object] = std::move(m);
    }
    return theta;
}

Matrix nat_to_pairing(const CoendPresentation& p, const NatTransformation& theta) {
    Matrix target(1, p.ambient_dim, p.field);
    for (const auto& b : p.object_index) {
        auto it = theta.find(b.object);
        if (it == theta.end()) throw InvalidInput("nat_to_pairing: no component at '" + b.object + "'");
        if (it->second.rows() != b.g_dim || it->second.cols() != b.f_dim)
            throw DimensionMismatch("nat_to_pairing: component at '" + b.object + "' has the wrong shape");
        for (std::size_t i = 0; i < b.f_dim; ++i)
            for (std::size_t j = 0; j < b.g_dim; ++j) target(0, b.offset + i * b.g_dim + j) = it->second(j, i);
    }
    Matrix xi = target * p.section;
    if (!(xi * p.proj == target)) throw WellDefinednessError("nat_to_pairing: the family is not natural");
    return xi;
}

LinearMap coevaluation(const CoendPresentation& p, const std::string& object) {
    const Block& b = p.block(object);
    const Matrix& lambda = p.lambda_of(object);
    Matrix out(p.quotient_dim * b.g_dim, b.f_dim, p.field);
    for (std::size_t k = 0; k < b.f_dim; ++k)
        for (std::size_t i = 0; i < b.g_dim; ++i)
            for (std::size_t a = 0; a < p.quotient_dim; ++a) out(a * b.g_dim + i, k) = lambda(a, k * b.g_dim + i);
    return out;
}

LinearMap descend(const CoendPresentation& p, const LinearMap& on_ambient, const std::string& name, Report* audit) {
    if (on_ambient.cols() != p.ambient_dim)
        throw DimensionMismatch("descend " + name + ": map does not start at the ambient space");
    if (p.relation_span.dim() > 0) {
        exact::Check check = exact::check_zero("well-defined: " + name, on_ambient * p.relation_span.columns());
        if (audit) audit->add(check);
        if (!check.passed) throw WellDefinednessError(name + " does not vanish on the relations (residue " + check.residue + ")");
    } else if (audit) {
        audit->add(exact::check_flag("well-defined: " + name, true, "no relations"));
    }
    return on_ambient * p.section;
}

LinearMap descend2(const CoendPresentation& p, const LinearMap& on_ambient_square, const std::string& name,
                   Report* audit) {
    const std::size_t n = p.ambient_dim;
    if (on_ambient_square.cols() != n * n)
        throw DimensionMismatch("descend " + name + ": map does not start at the ambient square");
    if (p.relation_span.dim() > 0) {
        Matrix r = p.relation_span.columns();
        Matrix id = Matrix::identity(n, p.field);
        exact::Check left = exact::check_zero("well-defined: " + name + " (left factor)", on_ambient_square * kron(r, id));
        exact::Check right = exact::check_zero("well-defined: " + name + " (right factor)", on_ambient_square * kron(id, r));
        if (audit) {
            audit->add(left);
            audit->add(right);
        }
        if (!left.passed || !right.passed) throw WellDefinednessError(name + " does not vanish on the relations");
    } else if (audit) {
        audit->add(exact::check_flag("well-defined: " + name, true, "no relations"));
    }
    return on_ambient_square * kron(p.section, p.section);
}

LinearMap cocomposition(const CoendPresentation& p_fg, const CoendPresentation& p_gh, const CoendPresentation& p_fh,
                        Report* audit) {
    const Field field = p_fh.field;
    if (p_fg.object_index.size() != p_fh.object_index.size() || p_gh.object_index.size() != p_fh.object_index.size())
        throw InvalidInput("cocomposition: presentations over different categories");
    Matrix amb(p_fg.quotient_dim * p_gh.quotient_dim, p_fh.ambient_dim, field);
    for (const auto& b : p_fh.object_index) {
        const Block& b1 = p_fg.block(b.object);
        const Block& b2 = p_gh.block(b.object);
        if (b1.f_dim != b.f_dim || b1.g_dim != b2.f_dim || b2.g_dim != b.g_dim)
            throw DimensionMismatch("cocomposition: functor dimensions disagree at '" + b.object + "'");
        Matrix insert = kron(kron(Matrix::identity(b.f_dim, field), flat_identity(b1.g_dim, field)),
                             Matrix::identity(b.g_dim, field));
        Matrix piece = kron(p_fg.lambda_of(b.object), p_gh.lambda_of(b.object)) * insert;
        amb.set_block(0, b.offset, piece);
    }
    return descend(p_fh, amb, "cocomposition", audit);
}

LinearMap counit(const CoendPresentation& p, Report* audit) {
    Matrix amb(1, p.ambient_dim, p.field);
    for (const auto& b : p.object_index) {
        if (b.f_dim != b.g_dim) throw DimensionMismatch("counit: F and G differ at '" + b.object + "'");
        for (std::size_t i = 0; i < b.f_dim; ++i) amb(0, b.offset + i * b.f_dim + i) = p.field.one();
    }
    return descend(p, amb, "counit", audit);
}

Report dinaturality_report(const PresentedCategory& c, const FiberFunctor& f, const FiberFunctor& g,
                           const CoendPresentation& p) {
    Report report;
    for (const auto& gen : c.generators()) {
        const Field field = p.field;
        Matrix lhs = p.lambda_of(gen.src) * kron(Matrix::identity(f.dim(gen.src), field), g.image(gen.name).transpose());
        Matrix rhs = p.lambda_of(gen.dst) * kron(f.image(gen.name), Matrix::identity(g.dim(gen.dst), field));
        report.add(exact::check_equal("dinatural along " + gen.name, lhs, rhs));
    }
    return report;
}

Report pairing_report(const PresentedCategory& c, const FiberFunctor& f, const FiberFunctor& g,
                      const CoendPresentation& p, const EndSpace& nat) {
    Report r;
    r.add(exact::check_flag("quotient_dim = dim Nat(F, G)", p.quotient_dim == nat.dim(),
                            std::to_string(p.quotient_dim) + " vs " + std::to_string(nat.dim())));
    std::size_t flat_len = 0;
    for (const auto& b : p.object_index) flat_len += b.size();
    // Column i holds pairing_to_nat(e_i^*) flattened block by block.
    Matrix images(flat_len, p.quotient_dim, p.field);
    bool natural = true;
    for (std::size_t i = 0; i < p.quotient_dim; ++i) {
        Matrix xi(1, p.quotient_dim, p.field);
        xi(0, i) = p.field.one();
        NatTransformation t = pairing_to_nat(p, xi);
        natural = natural && is_natural(c, f, g, t);
        std::size_t k = 0;
        for (const auto& b : p.object_index) {
            const Matrix& x = t.at(b.object);
            for (std::size_t row = 0; row < x.rows(); ++row)
                for (std::size_t col = 0; col < x.cols(); ++col) images(k++, i) = x(row, col);
        }
    }
    r.add(exact::check_flag("pairing_to_nat lands in Nat(F, G)", natural));
    const std::size_t forward = exact::rank(images);
    r.add(exact::check_flag("pairing_to_nat has rank quotient_dim", forward == p.quotient_dim,
                            "rank " + std::to_string(forward)));
    Matrix back(p.quotient_dim, nat.dim(), p.field);
    for (std::size_t k = 0; k < nat.dim(); ++k) {
        Matrix xi = nat_to_pairing(p, nat.basis[k]);
        for (std::size_t i = 0; i < p.quotient_dim; ++i) back(i, k) = xi(0, i);
    }
    const std::size_t backward = exact::rank(back);
    r.add(exact::check_flag("nat_to_pairing has rank dim Nat(F, G)", backward == nat.dim(),
                            "rank " + std::to_string(backward)));
    return r;
}

exact::Json to_json(const CoendPresentation& p) {
    exact::Json j;
    j["field"] = p.field.name();
    j["ambient_dim"] = p.ambient_dim;
    j["relation_rank"] = p.relation_span.dim();
    j["quotient_dim"] = p.quotient_dim;
    exact::Json blocks = exact::Json::array();
    for (const auto& b : p.object_index)
        blocks.push_back({{"object", b.object}, {"f_dim", b.f_dim}, {"g_dim", b.g_dim}, {"offset", b.offset}});
    j["blocks"] = std::move(blocks);
    exact::Json lambda = exact::Json::object();
    for (const auto& b : p.object_index) lambda[b.object] = exact::matrix_to_json(p.lambda_of(b.object));
    j["lambda"] = std::move(lambda);
    return j;
}

} // namespace tannaka::coend
