#include "doctest.h"

#include "test_util.hpp"

using namespace ctrliso;

namespace {

IntMatrix random_int_matrix(int rows, int cols, SplitMix64& rng) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(rng.next() % 19) - 9;  // entries in [-9, 9]
    return m;
}

}  // namespace

TEST_CASE("char_poly: forced values and the cofactor oracle") {
    CHECK(char_poly(IntMatrix(2, 2)) == IntPoly({0, 0, 1}));
    CHECK(char_poly(IntMatrix::identity(2)) == IntPoly({1, -2, 1}));

    // t^7 - 6 t^5 + 9 t^3 - 4 t, confirmed by cofactor expansion on the 7x7.
    const IntMatrix a = adjacency_matrix(testutil::c6_plus_k1());
    const IntPoly expected({0, -4, 0, 9, 0, -6, 0, 1});
    CHECK(char_poly(a) == expected);
    CHECK(testutil::charpoly_cofactor(a) == expected);

    CHECK_THROWS_AS(char_poly(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("char_poly agrees with cofactor expansion on all graphs up to order 5") {
    for (int n = 1; n <= 5; ++n)
        for_each_graph(n, [](const Graph& g) {
            const IntMatrix a = adjacency_matrix(g);
            CHECK(char_poly(a) == testutil::charpoly_cofactor(a));
        });
}

TEST_CASE("Cayley-Hamilton holds exactly on all graphs up to order 6") {
    for (int n = 1; n <= 6; ++n)
        for_each_graph(n, [](const Graph& g) {
            const IntMatrix a = adjacency_matrix(g);
            CHECK(eval_at_matrix(char_poly(a), a).is_zero());
        });
}

TEST_CASE("rank: forced values") {
    for (int n = 1; n <= 5; ++n) CHECK(rank(IntMatrix::identity(n)) == n);
    CHECK(rank(IntMatrix::all_ones(3, 3)) == 1);
    CHECK(rank(IntMatrix(4, 4)) == 0);

    IntMatrix w(3, 3);  // walk matrix of P3: rows (1,1,2), (1,2,2), (1,1,2)
    w(0, 0) = 1; w(0, 1) = 1; w(0, 2) = 2;
    w(1, 0) = 1; w(1, 1) = 2; w(1, 2) = 2;
    w(2, 0) = 1; w(2, 1) = 1; w(2, 2) = 2;
    CHECK(rank(w) == 2);
}

TEST_CASE("rank equals the rank of the transpose on random matrices") {
    SplitMix64 rng(2024);
    for (int t = 0; t < 50; ++t) {
        const int rows = 1 + static_cast<int>(rng.next() % 8);
        const int cols = 1 + static_cast<int>(rng.next() % 8);
        const IntMatrix m = random_int_matrix(rows, cols, rng);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("rat_inverse: forced values and exactness") {
    CHECK(rat_inverse(RatMatrix::identity(3)) == RatMatrix::identity(3));

    RatMatrix d(2, 2);
    d(0, 0) = 2; d(1, 1) = 3;
    RatMatrix dinv(2, 2);
    dinv(0, 0) = make_rat(1, 2); dinv(1, 1) = make_rat(1, 3);
    CHECK(rat_inverse(d) == dinv);

    RatMatrix m(2, 2);
    m(0, 0) = 1; m(0, 1) = 1; m(1, 0) = 1; m(1, 1) = 2;
    RatMatrix minv(2, 2);
    minv(0, 0) = 2; minv(0, 1) = -1; minv(1, 0) = -1; minv(1, 1) = 1;
    CHECK(rat_inverse(m) == minv);

    RatMatrix singular(2, 2);
    singular(0, 0) = 1; singular(0, 1) = 2; singular(1, 0) = 2; singular(1, 1) = 4;
    CHECK_THROWS_AS(rat_inverse(singular), SingularMatrixError);
}

TEST_CASE("rat_inverse times the input is the identity whenever the rank is full") {
    SplitMix64 rng(77);
    int done = 0;
    while (done < 30) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const IntMatrix m = random_int_matrix(n, n, rng);
        if (rank(m) != n) continue;
        const RatMatrix r = to_rational(m);
        CHECK(rat_inverse(r) * r == RatMatrix::identity(n));
        ++done;
    }
}

TEST_CASE("is_doubly_stochastic") {
    for (const auto& p : testutil::all_permutations(4))
        CHECK(is_doubly_stochastic(permutation_matrix(p)));

    RatMatrix third(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) third(i, j) = make_rat(1, 3);
    CHECK(is_doubly_stochastic(third));

    RatMatrix broken = RatMatrix::identity(3);
    broken(0, 0) = make_rat(1, 2);
    CHECK_FALSE(is_doubly_stochastic(broken));

    RatMatrix negative(2, 2);
    negative(0, 0) = 2; negative(0, 1) = -1;
    negative(1, 0) = -1; negative(1, 1) = 2;
    CHECK_FALSE(is_doubly_stochastic(negative));
}
