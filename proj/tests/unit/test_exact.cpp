#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "support/random.hpp"
#include "tannaka/errors.hpp"
#include "tannaka/exact/linalg.hpp"
#include "tannaka/exact/sparse.hpp"

using namespace tannaka;
using namespace tannaka::exact;
using tannaka::testing::random_matrix;
using tannaka::testing::Rng;

namespace {

// Determinant by cofactor expansion along the first row. Independent of the
// elimination code it is used to check.
Scalar laplace_det(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Scalar(1);
    if (n == 1) return m(0, 0);
    Scalar det(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        Matrix minor(n - 1, n - 1, m.field());
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        Scalar term = m(0, c) * laplace_det(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Rank = size of the largest square submatrix with nonzero determinant.
std::size_t minor_rank(const Matrix& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(m.rows(), k, 0, cur, rs);
        subsets(m.cols(), k, 0, cur, cs);
        for (const auto& r : rs)
            for (const auto& c : cs) {
                Matrix sub(k, k, m.field());
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
                if (!laplace_det(sub).is_zero()) return k;
            }
    }
    return 0;
}

} // namespace

TEST_SUITE("scalar") {
    TEST_CASE("rationals stay normalized") {
        Scalar a(6, -4);
        CHECK(a.to_string() == "-3/2");
        CHECK((Scalar(1, 3) + Scalar(1, 6)).to_string() == "1/2");
        CHECK((Scalar(2, 3) * Scalar(3, 2)).is_one());
        CHECK((Scalar(5) - Scalar(5)).is_zero());
        CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
        CHECK_THROWS_AS(Scalar(1, 0), DivisionByZero);
    }

    TEST_CASE("overflow falls back to big rationals and back") {
        Scalar big(1LL << 62);
        Scalar cube = big * big * big;
        CHECK(cube.to_mpq() == mpq_class(mpz_class(1) << 186));
        Scalar back = cube / (big * big);
        CHECK(back == big);
        CHECK(back.to_string() == std::to_string(1LL << 62));
    }

    TEST_CASE("random arithmetic agrees with GMP") {
        Rng rng(7);
        for (int trial = 0; trial < 2000; ++trial) {
            long long bound = trial % 3 == 0 ? (1LL << 40) : 50;
            Scalar a(testing::uniform_int(rng, -bound, bound), testing::uniform_int(rng, 1, bound));
            Scalar b(testing::uniform_int(rng, -bound, bound), testing::uniform_int(rng, 1, bound));
            mpq_class qa = a.to_mpq(), qb = b.to_mpq();
            CHECK((a + b).to_mpq() == qa + qb);
            CHECK((a - b).to_mpq() == qa - qb);
            CHECK((a * b).to_mpq() == qa * qb);
            if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
            // lowest terms, positive denominator
            mpq_class s = (a * b + a).to_mpq();
            mpq_class canon = s;
            canon.canonicalize();
            CHECK(s == canon);
            CHECK(s.get_den() > 0);
        }
    }

    TEST_CASE("prime field arithmetic") {
        Field f5 = Field::prime(5);
        Scalar three = f5.from_int(3);
        CHECK((three * three).to_string() == "4 mod 5");
        CHECK((three.inverse() * three).is_one());
        CHECK(f5.parse("3/2") == f5.from_int(4));
        CHECK(f5.from_int(-1) == f5.from_int(4));
        CHECK(three + Scalar(2) == f5.zero());
        CHECK_THROWS_AS(Field::prime(6), InvalidInput);
        CHECK_THROWS_AS(three + Field::prime(7).one(), FieldMismatch);
        CHECK_THROWS_AS(three + Scalar(1, 2), FieldMismatch);
        CHECK_THROWS_AS(f5.zero().inverse(), DivisionByZero);
    }

    TEST_CASE("literal round trip") {
        for (const char* text : {"0", "-7", "3/4", "-12/5", "618970019642690137449562111/10", "2 mod 3"})
            CHECK(Scalar::parse(text).to_string() == text);
        CHECK(Scalar::parse("4/6").to_string() == "2/3");
        CHECK(Scalar::parse("5 mod 3").to_string() == "2 mod 3");
        CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
        CHECK_THROWS_AS(Scalar::parse("1/"), ParseError);
        CHECK_THROWS_AS(Field::rationals().parse("1 mod 3"), FieldMismatch);
        CHECK(Field::from_name("Fp:7").modulus() == 7);
        CHECK(Field::from_name("Q").is_rational());
        CHECK_THROWS_AS(Field::from_name("R"), ParseError);
    }
}

TEST_SUITE("rref") {
    TEST_CASE("identity and rank one") {
        auto id = rref(Matrix::identity(2));
        CHECK(id.echelon == Matrix::identity(2));
        CHECK(id.pivots == std::vector<std::size_t>{0, 1});
        CHECK(id.rank == 2);

        auto r = rref(Matrix::of({{1, 2}, {2, 4}}));
        CHECK(r.echelon == Matrix::of({{1, 2}, {0, 0}}));
        CHECK(r.pivots == std::vector<std::size_t>{0});
        CHECK(r.rank == 1);
    }

    TEST_CASE("rank matches the minor-expansion oracle on random 5x7 matrices") {
        Rng rng(11);
        for (int trial = 0; trial < 40; ++trial) {
            // Low-rank products make deficient ranks common.
            std::size_t inner = static_cast<std::size_t>(testing::uniform_int(rng, 1, 5));
            Matrix m = trial % 2 ? random_matrix(rng, 5, 7, 4, 3)
                                 : random_matrix(rng, 5, inner, 3, 2) * random_matrix(rng, inner, 7, 3, 2);
            CHECK(rref(m).rank == minor_rank(m));
        }
    }

    TEST_CASE("idempotent and rank-nullity") {
        Rng rng(12);
        for (int trial = 0; trial < 50; ++trial) {
            auto rows = static_cast<std::size_t>(testing::uniform_int(rng, 0, 6));
            auto cols = static_cast<std::size_t>(testing::uniform_int(rng, 0, 6));
            Matrix m = random_matrix(rng, rows, cols, 3, 2, 40);
            RrefResult once = rref(m);
            RrefResult twice = rref(once.echelon);
            CHECK(twice.echelon == once.echelon);
            CHECK(twice.pivots == once.pivots);
            CHECK(once.rank + kernel_basis(m).dim() == cols);
        }
    }

    TEST_CASE("over a prime field") {
        Field f2 = Field::prime(2);
        Matrix m = Matrix::of({{1, 1}, {1, 1}}, f2);
        CHECK(rank(m) == 1);
        Matrix n = Matrix::of({{1, 1}, {1, -1}}, f2);  // singular mod 2
        CHECK(rank(n) == 1);
        CHECK(rank(Matrix::of({{1, 1}, {1, -1}})) == 2);
    }
}

TEST_SUITE("kernel and image") {
    TEST_CASE("examples") {
        CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
        CHECK(kernel_basis(Matrix(3, 3)).dim() == 3);
        // f = [[1, 1]]: v = (a, b) with a + b = 0, so the kernel is spanned by (1, -1).
        SubspaceBasis k = kernel_basis(Matrix::of({{1, 1}}));
        REQUIRE(k.dim() == 1);
        CHECK(k.echelon() == Matrix::of({{1, -1}}));
    }

    TEST_CASE("kernel vectors are killed and independent") {
        Rng rng(13);
        for (int trial = 0; trial < 30; ++trial) {
            Matrix m = random_matrix(rng, 3, 6, 3, 1, 30);
            SubspaceBasis k = kernel_basis(m);
            if (k.dim() == 0) continue;
            CHECK((m * k.columns()).is_zero());
            CHECK(rank(k.columns()) == k.dim());
        }
    }

    TEST_CASE("intersection and sum") {
        Rng rng(14);
        for (int trial = 0; trial < 30; ++trial) {
            SubspaceBasis a = SubspaceBasis::span_of_columns(random_matrix(rng, 5, 3, 3, 1, 30));
            SubspaceBasis b = SubspaceBasis::span_of_columns(random_matrix(rng, 5, 3, 3, 1, 30));
            SubspaceBasis meet = intersect_subspaces(a, b);
            SubspaceBasis join = sum_subspaces(a, b);
            CHECK(a.contains(meet));
            CHECK(b.contains(meet));
            CHECK(meet.dim() + join.dim() == a.dim() + b.dim());
        }
    }
}

TEST_SUITE("kron") {
    TEST_CASE("examples") {
        CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
        CHECK(kron(Matrix::of({{2}}), Matrix::of({{3}})) == Matrix::of({{6}}));
        // e_1 (x) e_0 in K^2 (x) K^3 has index 1*3 + 0.
        Matrix v = kron(Matrix::unit_column(2, 1, Field::rationals()), Matrix::unit_column(3, 0, Field::rationals()));
        CHECK(v == Matrix::unit_column(6, 3, Field::rationals()));
    }

    TEST_CASE("interchange and transpose laws") {
        Rng rng(15);
        for (int trial = 0; trial < 30; ++trial) {
            Matrix f = random_matrix(rng, 2, 2), h = random_matrix(rng, 2, 2);
            Matrix g = random_matrix(rng, 2, 3), k = random_matrix(rng, 3, 2);
            CHECK(kron(f * h, g * k) == kron(f, g) * kron(h, k));
            CHECK(kron(f, g).transpose() == kron(f.transpose(), g.transpose()));
        }
    }
}

TEST_SUITE("solving") {
    TEST_CASE("solve and inverse") {
        Rng rng(16);
        for (int trial = 0; trial < 30; ++trial) {
            Matrix p = testing::random_invertible(rng, 4);
            auto inv = inverse(p);
            REQUIRE(inv);
            CHECK((p * *inv).is_identity());
            Matrix b = random_matrix(rng, 4, 2);
            auto x = solve_linear_system(p, b);
            REQUIRE(x);
            CHECK(p * *x == b);
        }
        CHECK_FALSE(inverse(Matrix::of({{1, 2}, {2, 4}})));
        CHECK_FALSE(solve_linear_system(Matrix::of({{1, 1}, {1, 1}}), Matrix::of({{1}, {2}})));
        CHECK(inverse(Matrix(0, 0))->rows() == 0);
    }

    TEST_CASE("direct sum is block diagonal") {
        Matrix s = direct_sum(Matrix::of({{1, 2}}), Matrix::of({{3}}));
        CHECK(s == Matrix::of({{1, 2, 0}, {0, 0, 3}}));
    }
}

TEST_SUITE("quotient") {
    TEST_CASE("no relations") {
        Quotient q = quotient(3, SubspaceBasis(3, Field::rationals()));
        CHECK(q.proj.is_identity());
        CHECK(q.section.is_identity());
    }

    TEST_CASE("one relation") {
        Quotient q = quotient(2, SubspaceBasis::span_of_columns(Matrix::of({{1}, {-1}})));
        CHECK(q.dim() == 1);
        CHECK((q.proj * Matrix::of({{1}, {-1}})).is_zero());
        CHECK(q.representatives == std::vector<std::size_t>{1});
    }

    TEST_CASE("proj o section = id and ker proj = relations") {
        Rng rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            auto n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 7));
            auto k = static_cast<std::size_t>(testing::uniform_int(rng, 0, 4));
            SubspaceBasis rel = SubspaceBasis::span_of_columns(random_matrix(rng, n, k, 3, 2, 30));
            Quotient q = quotient(n, rel);
            CHECK(q.dim() == n - rel.dim());
            CHECK((q.proj * q.section).is_identity());
            CHECK(kernel_basis(q.proj) == rel);
        }
    }

    TEST_CASE("prime field") {
        Field f3 = Field::prime(3);
        SubspaceBasis rel = SubspaceBasis::span_of_columns(Matrix::of({{1}, {1}, {1}}, f3));
        Quotient q = quotient(3, rel);
        CHECK(q.dim() == 2);
        CHECK(kernel_basis(q.proj) == rel);
    }
}

TEST_SUITE("matrix") {
    TEST_CASE("shape errors") {
        CHECK_THROWS_AS(Matrix::of({{1, 2}}) * Matrix::of({{1, 2}}), DimensionMismatch);
        CHECK_THROWS_AS(Matrix::from_strings({{"1"}, {"1", "2"}}, Field::rationals()), DimensionMismatch);
        CHECK_THROWS_AS(Matrix::of({{1}}) * Matrix::of({{1}}, Field::prime(3)), FieldMismatch);
    }

    TEST_CASE("max norm") {
        CHECK(Matrix::of({{1, -7}, {3, 2}}).max_norm().to_string() == "7");
        CHECK(Matrix(0, 0).max_norm().is_zero());
    }
}

TEST_SUITE("sparse") {
    TEST_CASE("agrees with dense products and Kronecker products") {
        Rng rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            auto d = [&] { return static_cast<std::size_t>(testing::uniform_int(rng, 0, 4)); };
            const std::size_t m = d(), n = d(), k = d(), l = d();
            Matrix a = testing::random_matrix(rng, m, n, 3, 2, 50), b = testing::random_matrix(rng, n, k, 3, 2, 50);
            Matrix c = testing::random_matrix(rng, k, l, 3, 1, 50);
            auto sa = exact::SparseMatrix::from_dense(a), sb = exact::SparseMatrix::from_dense(b);
            CHECK((sa * sb).to_dense() == a * b);
            CHECK(exact::kron(sa, exact::SparseMatrix::from_dense(c)).to_dense() == exact::kron(a, c));
            CHECK((sa == exact::SparseMatrix::from_dense(a.scaled(2))) == a.is_zero());
        }
        CHECK(exact::SparseMatrix::identity(3).to_dense().is_identity());
        CHECK_THROWS_AS(exact::SparseMatrix(2, 3) * exact::SparseMatrix(2, 3), DimensionMismatch);
    }

    TEST_CASE("cancellation leaves no stored zeros") {
        Matrix a = Matrix::of({{1, 1}});
        Matrix b = Matrix::of({{1}, {-1}});
        auto p = exact::SparseMatrix::from_dense(a) * exact::SparseMatrix::from_dense(b);
        CHECK(p.column(0).empty());
        CHECK(p == exact::SparseMatrix(1, 1));
    }
}
