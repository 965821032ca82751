#include "doctest.h"

#include <algorithm>

#include "support/random.hpp"
#include "support/symexpr_gen.hpp"
#include "tannaka/errors.hpp"
#include "tannaka/exact/linalg.hpp"
#include "tannaka/moncat/pairing.hpp"
#include "tannaka/moncat/symexpr.hpp"

using namespace tannaka;
using namespace tannaka::moncat;
using exact::Matrix;
using tannaka::testing::random_expr;
using tannaka::testing::Rng;

namespace {

// Reference semantics: act on basis tensors directly. The atom at domain
// position i lands at codomain position perm[i], so a basis tensor with
// index tuple (k_0..k_n) goes to the tuple with k_i at slot perm[i].
Matrix permutation_action(const Permutation& perm, const ObjectWord& dom, const DimAssignment& dims) {
    const std::size_t n = dom.size();
    std::vector<std::size_t> d(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= d[i] = dims.at(dom[i]);
    std::vector<std::size_t> cod_dims(n);
    for (std::size_t i = 0; i < n; ++i) cod_dims[perm[i]] = d[i];
    Matrix m(total, total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<std::size_t> k(n);
        std::size_t rest = idx;
        for (std::size_t i = n; i-- > 0;) {
            k[i] = rest % d[i];
            rest /= d[i];
        }
        std::vector<std::size_t> out(n);
        for (std::size_t i = 0; i < n; ++i) out[perm[i]] = k[i];
        std::size_t target = 0;
        for (std::size_t i = 0; i < n; ++i) target = target * cod_dims[i] + out[i];
        m(target, idx) = 1;
    }
    return m;
}

const DimAssignment kDims{{"X", 2}, {"Y", 3}, {"Z", 2}, {"W", 1}};

} // namespace

TEST_SUITE("symexpr") {
    TEST_CASE("parse and print round trip") {
        for (const char* text : {"id[X,Y]", "id[]", "swap[X,Y;0]", "(swap[X,Y,Z;1] ; swap[X,Z,Y;0])",
                                 "((id[X] * swap[Y,Z;0]) ; (swap[X,Z;0] * id[Y]))"}) {
            SymExpr e = SymExpr::parse(text);
            CHECK(e.to_string() == text);
            CHECK(SymExpr::parse(e.to_string()).to_string() == e.to_string());
        }
        CHECK(SymExpr::parse("  ( swap[ X , Y ; 0 ] ;swap[Y,X;0])").to_string() == "(swap[X,Y;0] ; swap[Y,X;0])");
    }

    TEST_CASE("malformed input") {
        CHECK_THROWS_AS(SymExpr::parse("swap[X;0]"), MalformedExpression);
        CHECK_THROWS_AS(SymExpr::parse("(swap[X,Y;0] ; id[X,Y])"), MalformedExpression);
        CHECK_THROWS_AS(SymExpr::parse("id[X"), ParseError);
        CHECK_THROWS_AS(SymExpr::parse("id[X] extra"), ParseError);
        CHECK_THROWS_AS(SymExpr::parse("(id[X] + id[Y])"), ParseError);
        CHECK_THROWS_AS(coherence_equal(SymExpr::identity({"X", "Y"}), SymExpr::identity({"Y", "X"})),
                        MalformedExpression);
        CHECK_THROWS_AS(eval_in_vec(SymExpr::identity({"Q"}), kDims), InvalidInput);
    }

    TEST_CASE("boundaries") {
        SymExpr s = SymExpr::swap({"X", "Y", "Z"}, 1);
        CHECK(s.codomain() == ObjectWord{"X", "Z", "Y"});
        SymExpr b = SymExpr::block_swap({"X", "Y"}, {"Z", "W"});
        CHECK(b.codomain() == ObjectWord{"Z", "W", "X", "Y"});
        CHECK(perm_of(b) == Permutation{2, 3, 0, 1});
    }
}

TEST_SUITE("coherence") {
    TEST_CASE("symmetry is an involution") {
        SymExpr twice = SymExpr::parse("(swap[X,Y;0] ; swap[Y,X;0])");
        CHECK(coherence_equal(twice, SymExpr::identity({"X", "Y"})));
        CHECK(eval_in_vec(twice, kDims).is_identity());
    }

    TEST_CASE("hexagon") {
        SymExpr a = SymExpr::parse("(swap[X,Y,Z;1] ; swap[X,Z,Y;0])");
        SymExpr b = SymExpr::parse("((id[X] * swap[Y,Z;0]) ; (swap[X,Z;0] * id[Y]))");
        CHECK(coherence_equal(a, b));
        CHECK(eval_in_vec(a, kDims) == eval_in_vec(b, kDims));
        // The block symmetry (X Y) Z -> Z (X Y) factors through adjacent swaps.
        SymExpr c = SymExpr::parse("(swap[X,Y,Z;1] ; swap[X,Z,Y;0])");
        CHECK(coherence_equal(c, SymExpr::block_swap({"X", "Y"}, {"Z"})));
    }

    TEST_CASE("braid relation") {
        SymExpr l = SymExpr::parse("((swap[X,Y,Z;0] ; swap[Y,X,Z;1]) ; swap[Y,Z,X;0])");
        SymExpr r = SymExpr::parse("((swap[X,Y,Z;1] ; swap[X,Z,Y;0]) ; swap[Z,X,Y;1])");
        CHECK(coherence_equal(l, r));
        CHECK(eval_in_vec(l, kDims) == eval_in_vec(r, kDims));
    }

    TEST_CASE("distinct structural arrows are distinguished") {
        // Same boundary XX -> XX, different permutations.
        SymExpr s = SymExpr::swap({"X", "X"}, 0);
        SymExpr id = SymExpr::identity({"X", "X"});
        CHECK_FALSE(coherence_equal(s, id));
        CHECK(eval_in_vec(s, kDims) != eval_in_vec(id, kDims));
        // dim 1 atoms collapse the difference in Vec, the permutation does not.
        SymExpr w = SymExpr::swap({"W", "W"}, 0);
        CHECK_FALSE(coherence_equal(w, SymExpr::identity({"W", "W"})));
        CHECK(eval_in_vec(w, kDims).is_identity());
    }

    TEST_CASE("commutation matrix") {
        Matrix k = commutation_matrix(2, 3);
        CHECK((commutation_matrix(3, 2) * k).is_identity());
        Rng rng(21);
        Matrix f = testing::random_matrix(rng, 2, 2), g = testing::random_matrix(rng, 3, 3);
        // Naturality of the symmetry.
        CHECK(k * exact::kron(f, g) == exact::kron(g, f) * k);
        // e_1 (x) e_2 -> e_2 (x) e_1
        CHECK(k * Matrix::unit_column(6, 1 * 3 + 2, exact::Field::rationals()) ==
              Matrix::unit_column(6, 2 * 2 + 1, exact::Field::rationals()));
    }

    TEST_CASE("random expressions agree with the reference action") {
        Rng rng(22);
        const std::vector<std::string> alphabet{"X", "Y", "Z", "W"};
        for (int trial = 0; trial < 200; ++trial) {
            ObjectWord dom;
            auto len = testing::uniform_int(rng, 0, 5);
            for (long long i = 0; i < len; ++i) dom.push_back(alphabet[static_cast<std::size_t>(testing::uniform_int(rng, 0, 3))]);
            SymExpr e = random_expr(rng, dom, 4);
            Permutation p = perm_of(e);
            ObjectWord image(dom.size());
            for (std::size_t i = 0; i < dom.size(); ++i) image[p[i]] = dom[i];
            CHECK(image == e.codomain());
            CHECK(eval_in_vec(e, kDims) == permutation_action(p, dom, kDims));
            CHECK(SymExpr::parse(e.to_string()).to_string() == e.to_string());
        }
    }
}

TEST_SUITE("pairing") {
    TEST_CASE("standard pairings satisfy the triangles") {
        for (std::size_t n : {0, 1, 2, 4}) CHECK(check_triangles(standard_pairing(n)));
        CHECK(check_triangles(standard_pairing(3, exact::Field::prime(5))));
    }

    TEST_CASE("transported pairing") {
        // Precomposing eval with P^-1 (x) id and coeval with id (x) P gives
        // another valid pairing for every invertible P.
        Rng rng(23);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 3;
            Matrix p = testing::random_invertible(rng, n);
            Matrix pinv = *exact::inverse(p);
            DualPairing std_p = standard_pairing(n);
            DualPairing t{n, std_p.eval * exact::kron(pinv, Matrix::identity(n)),
                          exact::kron(Matrix::identity(n), p) * std_p.coeval};
            CHECK(check_triangles(t));
            if (!p.is_identity()) {
                DualPairing broken{n, std_p.eval * exact::kron(p * p, Matrix::identity(n)), std_p.coeval};
                if (!(p * p).is_identity()) CHECK_FALSE(check_triangles(broken));
            }
        }
    }

    TEST_CASE("scaled coevaluation breaks the triangles") {
        DualPairing p = standard_pairing(2);
        p.coeval = p.coeval.scaled(2);
        exact::Report r = triangle_report(p);
        CHECK_FALSE(r.ok());
        CHECK(r.failures() == 2);
        CHECK(r.checks()[0].residue == "1");
    }

    TEST_CASE("dual map of standard pairings is the transpose") {
        Matrix f = Matrix::of({{1, 2}, {3, 4}});
        CHECK(dual_map(f, standard_pairing(2), standard_pairing(2)) == Matrix::of({{1, 3}, {2, 4}}));
        Rng rng(24);
        for (int trial = 0; trial < 10; ++trial) {
            Matrix g = testing::random_matrix(rng, 3, 2);
            CHECK(dual_map(g, standard_pairing(3), standard_pairing(2)) == g.transpose());
        }
        CHECK_THROWS_AS(dual_map(f, standard_pairing(3), standard_pairing(2)), DimensionMismatch);
    }

    TEST_CASE("dual map is contravariant") {
        Rng rng(25);
        Matrix f = testing::random_matrix(rng, 2, 3), g = testing::random_matrix(rng, 3, 4);
        auto p2 = standard_pairing(2), p3 = standard_pairing(3), p4 = standard_pairing(4);
        CHECK(dual_map(f * g, p2, p4) == dual_map(g, p3, p4) * dual_map(f, p2, p3));
    }
}

TEST_CASE("sparse and dense evaluation agree") {
    Rng rng(26);
    for (int trial = 0; trial < 50; ++trial) {
        ObjectWord dom = testing::random_word(rng, 4, {"X", "Y", "Z", "W"});
        SymExpr e = random_expr(rng, dom, 4);
        CHECK(eval_in_vec_sparse(e, kDims).to_dense() == eval_in_vec(e, kDims));
        SymExpr back = testing::sort_to(rng, e.codomain(), dom);
        CHECK(back.codomain() == dom);
        CHECK(eval_in_vec_sparse(SymExpr::compose(e, back), kDims) ==
              exact::SparseMatrix::from_dense(eval_in_vec(back, kDims) * eval_in_vec(e, kDims)));
    }
}
