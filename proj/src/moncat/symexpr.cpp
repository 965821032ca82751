#include "tannaka/moncat/symexpr.hpp"

#include <cctype>
#include <numeric>

#include "tannaka/errors.hpp"
#include "tannaka/exact/linalg.hpp"

namespace tannaka::moncat {

struct SymExpr::Node {
    Kind kind;
    ObjectWord domain;
    ObjectWord codomain;
    std::size_t position = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

std::string word_to_string(const ObjectWord& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + w[i];
    return out + "]";
}

SymExpr SymExpr::identity(ObjectWord word) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Identity;
    n->codomain = word;
    n->domain = std::move(word);
    return SymExpr(std::move(n));
}

SymExpr SymExpr::swap(ObjectWord word, std::size_t position) {
    if (word.size() < 2 || position > word.size() - 2)
        throw MalformedExpression("swap position " + std::to_string(position) + " out of range for " +
                                  word_to_string(word));
    auto n = std::make_shared<Node>();
    n->kind = Kind::AdjacentSwap;
    n->position = position;
    n->codomain = word;
    std::swap(n->codomain[position], n->codomain[position + 1]);
    n->domain = std::move(word);
    return SymExpr(std::move(n));
}

SymExpr SymExpr::compose(const SymExpr& first, const SymExpr& then) {
    if (first.codomain() != then.domain())
        throw MalformedExpression("cannot compose: codomain " + word_to_string(first.codomain()) +
                                  " differs from domain " + word_to_string(then.domain()));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Compose;
    n->domain = first.domain();
    n->codomain = then.codomain();
    n->lhs = first.node_;
    n->rhs = then.node_;
    return SymExpr(std::move(n));
}

SymExpr SymExpr::tensor(const SymExpr& left, const SymExpr& right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Tensor;
    n->domain = left.domain();
    n->domain.insert(n->domain.end(), right.domain().begin(), right.domain().end());
    n->codomain = left.codomain();
    n->codomain.insert(n->codomain.end(), right.codomain().begin(), right.codomain().end());
    n->lhs = left.node_;
    n->rhs = right.node_;
    return SymExpr(std::move(n));
}

SymExpr SymExpr::block_swap(const ObjectWord& left, const ObjectWord& right) {
    ObjectWord word = left;
    word.insert(word.end(), right.begin(), right.end());
    SymExpr out = identity(word);
    for (std::size_t k = 0; k < right.size(); ++k) {
        for (std::size_t pos = left.size() + k; pos > k; --pos) {
            SymExpr step = swap(out.codomain(), pos - 1);
            out = compose(out, step);
        }
    }
    return out;
}

SymExpr::Kind SymExpr::kind() const { return node_->kind; }
const ObjectWord& SymExpr::domain() const { return node_->domain; }
const ObjectWord& SymExpr::codomain() const { return node_->codomain; }
std::size_t SymExpr::position() const { return node_->position; }
SymExpr SymExpr::lhs() const {
    if (!node_->lhs) throw MalformedExpression("expression has no operands");
    return SymExpr(node_->lhs);
}
SymExpr SymExpr::rhs() const {
    if (!node_->rhs) throw MalformedExpression("expression has no operands");
    return SymExpr(node_->rhs);
}

std::string SymExpr::to_string() const {
    const std::string w = word_to_string(domain());
    switch (kind()) {
    case Kind::Identity: return "id" + w;
    case Kind::AdjacentSwap: return "swap" + w.substr(0, w.size() - 1) + ";" + std::to_string(position()) + "]";
    case Kind::Compose: return "(" + SymExpr(node_->lhs).to_string() + " ; " + SymExpr(node_->rhs).to_string() + ")";
    case Kind::Tensor: return "(" + SymExpr(node_->lhs).to_string() + " * " + SymExpr(node_->rhs).to_string() + ")";
    }
    return {};
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SymExpr parse_all() {
        SymExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("expression: " + what + " at offset " + std::to_string(pos_) + " in '" +
                         std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool consume_keyword(std::string_view kw) {
        skip_ws();
        if (text_.substr(pos_, kw.size()) == kw) {
            pos_ += kw.size();
            return true;
        }
        return false;
    }

    static bool is_atom_char(char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != ',' && c != ';' && c != '[' && c != ']' &&
               c != '(' && c != ')' && c != '*';
    }

    std::string atom() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected atom name");
        return std::string(text_.substr(start, pos_ - start));
    }

    // Reads "[A,B,C" up to (not including) the closing ']' or ';'.
    ObjectWord word_body() {
        expect('[');
        ObjectWord w;
        skip_ws();
        if (pos_ < text_.size() && (text_[pos_] == ']' || text_[pos_] == ';')) return w;
        w.push_back(atom());
        while (consume(',')) w.push_back(atom());
        return w;
    }

    std::size_t number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected swap position");
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    SymExpr parse_expr() {
        if (consume_keyword("id")) {
            ObjectWord w = word_body();
            expect(']');
            return SymExpr::identity(std::move(w));
        }
        if (consume_keyword("swap")) {
            ObjectWord w = word_body();
            expect(';');
            std::size_t i = number();
            expect(']');
            return SymExpr::swap(std::move(w), i);
        }
        if (consume('(')) {
            SymExpr left = parse_expr();
            if (consume(';')) {
                SymExpr right = parse_expr();
                expect(')');
                return SymExpr::compose(left, right);
            }
            if (consume('*')) {
                SymExpr right = parse_expr();
                expect(')');
                return SymExpr::tensor(left, right);
            }
            fail("expected ';' or '*'");
        }
        fail("expected id[...], swap[...] or '('");
    }
};

} // namespace

SymExpr SymExpr::parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------- semantics

Permutation compose_perms(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw DimensionMismatch("permutations of different sizes");
    Permutation out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
    return out;
}

Permutation perm_of(const SymExpr& e) {
    switch (e.kind()) {
    case SymExpr::Kind::Identity: {
        Permutation p(e.domain().size());
        std::iota(p.begin(), p.end(), 0);
        return p;
    }
    case SymExpr::Kind::AdjacentSwap: {
        Permutation p(e.domain().size());
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[e.position()], p[e.position() + 1]);
        return p;
    }
    case SymExpr::Kind::Compose: {
        Permutation first = perm_of(e.lhs());
        Permutation then = perm_of(e.rhs());
        return compose_perms(then, first);
    }
    case SymExpr::Kind::Tensor: {
        Permutation left = perm_of(e.lhs());
        Permutation right = perm_of(e.rhs());
        const std::size_t offset = left.size();
        for (auto r : right) left.push_back(r + offset);
        return left;
    }
    }
    return {};
}

bool coherence_equal(const SymExpr& a, const SymExpr& b) {
    if (a.domain() != b.domain() || a.codomain() != b.codomain())
        throw MalformedExpression("coherence comparison needs equal boundaries: " + a.to_string() + " vs " +
                                  b.to_string());
    return perm_of(a) == perm_of(b);
}

exact::LinearMap commutation_matrix(std::size_t m, std::size_t n, exact::Field field) {
    exact::LinearMap k(m * n, m * n, field);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < n; ++b) k(b * m + a, a * n + b) = field.one();
    return k;
}

namespace {

std::size_t dim_of(const std::string& atom, const DimAssignment& dims) {
    auto it = dims.find(atom);
    if (it == dims.end()) throw InvalidInput("no dimension assigned to atom '" + atom + "'");
    return it->second;
}

std::size_t word_dim(const ObjectWord& w, std::size_t from, std::size_t to, const DimAssignment& dims) {
    std::size_t d = 1;
    for (std::size_t i = from; i < to; ++i) d *= dim_of(w[i], dims);
    return d;
}

} // namespace

exact::SparseMatrix eval_in_vec_sparse(const SymExpr& e, const DimAssignment& dims, exact::Field field) {
    using exact::SparseMatrix;
    switch (e.kind()) {
    case SymExpr::Kind::Identity:
        return SparseMatrix::identity(word_dim(e.domain(), 0, e.domain().size(), dims), field);
    case SymExpr::Kind::AdjacentSwap: {
        const auto& w = e.domain();
        const std::size_t i = e.position();
        const std::size_t m = dim_of(w[i], dims), n = dim_of(w[i + 1], dims);
        SparseMatrix k(m * n, m * n, field);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < n; ++b) k.set_column(a * n + b, {{b * m + a, field.one()}});
        SparseMatrix before = SparseMatrix::identity(word_dim(w, 0, i, dims), field);
        SparseMatrix after = SparseMatrix::identity(word_dim(w, i + 2, w.size(), dims), field);
        return exact::kron(exact::kron(before, k), after);
    }
    case SymExpr::Kind::Compose: {
        SparseMatrix first = eval_in_vec_sparse(e.lhs(), dims, field);
        SparseMatrix then = eval_in_vec_sparse(e.rhs(), dims, field);
        return then * first;
    }
    case SymExpr::Kind::Tensor:
        return exact::kron(eval_in_vec_sparse(e.lhs(), dims, field), eval_in_vec_sparse(e.rhs(), dims, field));
    }
    return {};
}

exact::LinearMap eval_in_vec(const SymExpr& e, const DimAssignment& dims, exact::Field field) {
    return eval_in_vec_sparse(e, dims, field).to_dense();
}

} // namespace tannaka::moncat
