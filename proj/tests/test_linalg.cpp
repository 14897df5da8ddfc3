#include <doctest.h>

#include "helpers.hpp"

#include "slt/errors.hpp"
#include "slt/linalg.hpp"
#include "slt/random.hpp"

using namespace slt;
using testing::span;
using testing::vec;

namespace {

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, Field f) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(rng.vector(c, f));
    return Matrix::from_rows(c, rows);
}

oracle::Rows rows_of(const Matrix& m) {
    oracle::Rows out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        oracle::Row r;
        for (const auto& x : m.row(i)) r.push_back(x.re());
        out.push_back(r);
    }
    return out;
}

} // namespace

TEST_CASE("scalar arithmetic over Q and Q(i)") {
    const Scalar half(1, 2);
    CHECK(half + half == Scalar(1));
    CHECK((Scalar(3, 4) * Scalar(4, 3)).is_one());
    CHECK(Scalar(-6, 4) == Scalar(-3, 2));

    const Scalar z(mpq_class(1), mpq_class(2)); // 1 + 2i
    CHECK(z * z.conj() == Scalar(5));
    CHECK((z * z.inverse()).is_one());
    CHECK(z.norm() == 5);
    CHECK_FALSE(z.is_real());
    CHECK((z - z).is_zero());
    CHECK(z.to_string() == "1+2i");
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("rational literals parse strictly") {
    CHECK(Scalar::parse_rational("-3/6") == Scalar(-1, 2));
    CHECK(Scalar::parse_rational("7") == Scalar(7));
    CHECK_THROWS_AS(Scalar::parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse_rational("x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(Scalar::parse_rational(""), ParseError);
}

TEST_CASE("matrix products, adjoint and Kronecker") {
    const Matrix a = Matrix::from_rows(2, std::vector<Vector>{vec({1, 2}), vec({3, 4})});
    const Matrix b = Matrix::from_rows(2, std::vector<Vector>{vec({0, 1}), vec({1, 0})});
    const Matrix ab = a * b;
    CHECK(ab(0, 0) == Scalar(2));
    CHECK(ab(1, 1) == Scalar(3));
    CHECK(a.transpose()(0, 1) == Scalar(3));

    const Matrix k = kronecker(a, b);
    CHECK(k.rows() == 4);
    CHECK(k(0, 1) == Scalar(1));
    CHECK(k(3, 2) == Scalar(4));
    // (A ⊗ B)(C ⊗ D) = AC ⊗ BD
    CHECK(kronecker(a, b) * kronecker(b, a) == kronecker(a * b, b * a));

    Matrix c(1, 1);
    c(0, 0) = Scalar(mpq_class(0), mpq_class(1));
    CHECK(c.adjoint()(0, 0) == Scalar(mpq_class(0), mpq_class(-1)));
}

TEST_CASE("column-stack vectorisation round-trips") {
    const Matrix a = Matrix::from_rows(2, std::vector<Vector>{vec({1, 2}), vec({3, 4})});
    const Vector v = vectorize(a);
    CHECK(v == vec({1, 3, 2, 4}));
    CHECK(unvectorize(v, 2, 2) == a);
}

TEST_CASE("rank agrees with the oracle on random matrices") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto c = static_cast<std::size_t>(rng.uniform(1, 5));
        const Matrix m = random_matrix(rng, r, c, Field::Rational);
        CHECK(rank(m) == oracle::rank(rows_of(m)));
    }
}

TEST_CASE("kernel basis spans the null space") {
    Rng rng(12);
    for (int t = 0; t < 40; ++t) {
        const Field f = t % 2 ? Field::GaussianRational : Field::Rational;
        const Matrix m = random_matrix(rng, 3, 5, f);
        const Matrix k = kernel_basis(m);
        CHECK(k.rows() == 5);
        CHECK(k.cols() + rank(m) == 5);
        CHECK((m * k).is_zero());
        if (k.cols() > 0) CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("inverse and orthogonal projection") {
    Rng rng(13);
    int inverted = 0;
    for (int t = 0; t < 30; ++t) {
        const Field f = t % 2 ? Field::GaussianRational : Field::Rational;
        const Matrix m = random_matrix(rng, 3, 3, f);
        if (rank(m) < 3) {
            CHECK_THROWS_AS(inverse(m), std::domain_error);
            continue;
        }
        ++inverted;
        CHECK(m * inverse(m) == Matrix::identity(3));

        const Matrix b = random_matrix(rng, 4, 2, f);
        if (rank(b) < 2) continue;
        const Matrix p = orthogonal_projection(b);
        CHECK(p * p == p);
        CHECK(p.adjoint() == p);
        CHECK(p * b == b);
    }
    CHECK(inverted > 0);
}

TEST_CASE("row space keeps a reduced echelon basis") {
    RowSpace rs(3);
    CHECK(rs.insert(vec({2, 4, 0})));
    CHECK_FALSE(rs.insert(vec({1, 2, 0})));
    CHECK(rs.insert(vec({0, 0, 3})));
    CHECK(rs.rank() == 2);
    CHECK(rs.contains(vec({1, 2, 5})));
    CHECK_FALSE(rs.contains(vec({0, 1, 0})));
    CHECK(rs.rows()[0] == vec({1, 2, 0}));
}

TEST_CASE("subspace meet, join and perp match the oracle") {
    Rng rng(14);
    for (int t = 0; t < 80; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        const Subspace a = rng.subspace(n, Field::Rational);
        const Subspace b = rng.subspace(n, Field::Rational);
        const auto oa = testing::to_oracle(a);
        const auto ob = testing::to_oracle(b);
        CHECK(testing::to_oracle(meet(a, b)) == oracle::meet(oa, ob));
        CHECK(testing::to_oracle(join(a, b)) == oracle::join(oa, ob));
        CHECK(testing::to_oracle(perp(a)) == oracle::perp(oa));
        CHECK(leq(a, b) == oracle::leq(oa, ob));
        CHECK(meet(a, b).rank() + join(a, b).rank() == a.rank() + b.rank());
    }
}

TEST_CASE("complex orthogonal complement uses the conjugate") {
    Vector v{Scalar(1), Scalar(mpq_class(0), mpq_class(1))};
    const std::vector<Vector> vs{v};
    const Subspace s = Subspace::span(2, vs);
    const Subspace p = perp(s);
    REQUIRE(p.rank() == 1);
    CHECK(inner(p.basis_vectors()[0], v).is_zero());
    CHECK(perp(p) == s);
    CHECK(meet(s, p).is_zero());
    CHECK(join(s, p).is_full());
}

TEST_CASE("subspace canonical form and tensor products") {
    CHECK(span(2, {{2, 2}}) == span(2, {{-1, -1}}));
    CHECK(span(3, {{1, 0, 0}, {1, 1, 0}}) == span(3, {{0, 1, 0}, {3, 0, 0}}));
    CHECK(Subspace::zero(3).is_zero());
    CHECK(Subspace::full(3).is_full());
    const Subspace t = tensor(span(2, {{1, 0}}), span(3, {{0, 1, 0}, {0, 0, 1}}));
    CHECK(t.ambient_dim() == 6);
    CHECK(t.rank() == 2);
    CHECK(t.contains(vec({0, 1, 0, 0, 0, 0})));
    CHECK_FALSE(t.contains(vec({0, 0, 0, 0, 1, 0})));
    CHECK_THROWS_AS(meet(Subspace::full(2), Subspace::full(3)), DimensionMismatch);
}
