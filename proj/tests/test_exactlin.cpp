#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wcdim/exactlin.hpp"

using namespace wcdim;

namespace {

const FieldSpec Q = FieldSpec::rationals();

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
    }
    return m;
}

// [[I_n, I_n - J_n], [1, -1]]: n+1 rows, 2n columns.
ExactMatrix crown_system(std::size_t n) {
    ExactMatrix m(n + 1, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
        for (std::size_t j = 0; j < n; ++j) m(i, n + j) = (i == j ? 0 : -1);
        m(n, i) = 1;
        m(n, n + i) = -1;
    }
    return m;
}

// Rank-deficient by construction: the last row is a sum of the others.
ExactMatrix with_sum_row(ExactMatrix m) {
    ExactMatrix out(m.rows() + 1, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = m(r, c);
            out(m.rows(), c) += m(r, c);
        }
    }
    return out;
}

bool is_zero(const ExactVector& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

}  // namespace

TEST(FieldSpec, AcceptsZeroAndPrimes) {
    EXPECT_TRUE(Q.is_rational());
    EXPECT_EQ(FieldSpec(7).characteristic(), 7u);
    EXPECT_EQ(FieldSpec(2).name(), "GF(2)");
    EXPECT_EQ(Q.name(), "Q");
    EXPECT_EQ(FieldSpec(FieldSpec::max_prime).characteristic(), 2147483647u);
    EXPECT_THROW(FieldSpec(1), InputError);
    EXPECT_THROW(FieldSpec(9), InputError);
    EXPECT_THROW(FieldSpec(std::uint64_t{1} << 31), InputError);
}

TEST(FieldSpec, Residues) {
    const FieldSpec f(5);
    EXPECT_EQ(f.residue(mpq_class(-1)), 4u);
    EXPECT_EQ(f.residue(mpq_class(1, 2)), 3u);
    EXPECT_EQ(f.reduce(mpq_class(12)), mpq_class(2));
    EXPECT_THROW(f.residue(mpq_class(1, 5)), InputError);
    EXPECT_EQ(Q.reduce(mpq_class(1, 3)), mpq_class(1, 3));
}

TEST(Matrix, ShapeAndConstruction) {
    const ExactMatrix m{{1, 2, 3}, {4, 5, 6}};
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_EQ(m(1, 2), 6);
    EXPECT_THROW((ExactMatrix{{1, 2}, {3}}), InputError);
    EXPECT_EQ(m.without_row(0), (ExactMatrix{{4, 5, 6}}));
}

TEST(Rank, Examples) {
    for (std::uint64_t p : {0, 2, 3, 5, 7}) {
        const FieldSpec f(p);
        for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(rank(ExactMatrix::identity(n), f), n);
        EXPECT_EQ(rank(ExactMatrix(0, 4), f), 0u);
        EXPECT_EQ(rank(ExactMatrix(3, 0), f), 0u);
    }
    EXPECT_EQ(rank(ExactMatrix::ones(5, 5), Q), 1u);
    EXPECT_EQ(rank(ExactMatrix{{2, 4}, {1, 3}}, FieldSpec(2)), 1u);
    EXPECT_EQ(rank(ExactMatrix{{mpq_class(1, 2), 1}, {1, 2}}, Q), 1u);
}

TEST(Rank, CrownSystemDependsOnCharacteristic) {
    // n - 2 = 2, so over GF(2) the last row falls into the span of the first four.
    EXPECT_EQ(rank(crown_system(4), FieldSpec(2)), 4u);
    EXPECT_EQ(rank(crown_system(4), Q), 5u);
    EXPECT_EQ(rank(crown_system(4), FieldSpec(3)), 5u);
    EXPECT_EQ(rank(crown_system(5), FieldSpec(3)), 5u);
    EXPECT_EQ(rank(crown_system(5), FieldSpec(2)), 6u);
}

TEST(Rank, MatchesOracles) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        ExactMatrix m = random_matrix(rng, rows, cols, -3, 3);
        if (trial % 3 == 0) m = with_sum_row(m);
        const std::size_t r = rank(m, Q);
        EXPECT_EQ(r, oracle::rational_rank(m));
        EXPECT_LE(r, std::min(m.rows(), m.cols()));
    }
    for (std::uint64_t p : {2, 3, 5}) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t cols = 1 + rng() % (p == 2 ? 8 : 5);
            ExactMatrix m = random_matrix(rng, 1 + rng() % 5, cols, -2, 2);
            if (trial % 2 == 0) m = with_sum_row(m);
            EXPECT_EQ(cols - rank(m, FieldSpec(p)), oracle::counted_nullity(m, p)) << "p=" << p;
        }
    }
}

TEST(Nullspace, Examples) {
    EXPECT_TRUE(nullspace_basis(ExactMatrix::identity(4), Q).empty());
    EXPECT_EQ(nullspace_basis(ExactMatrix{{1, -1}}, Q), (std::vector<ExactVector>{{1, 1}}));

    const ExactMatrix c4_diff{{1, -1, 1, -1}};
    const auto basis = nullspace_basis(c4_diff, Q);
    EXPECT_EQ(basis, (std::vector<ExactVector>{{1, 1, 0, 0}, {-1, 0, 1, 0}, {1, 0, 0, 1}}));

    // Over GF(3), -1 is stored as the residue 2.
    EXPECT_EQ(nullspace_basis(c4_diff, FieldSpec(3)),
              (std::vector<ExactVector>{{1, 1, 0, 0}, {2, 0, 1, 0}, {1, 0, 0, 1}}));
}

TEST(Nullspace, VectorsAreIndependentSolutions) {
    std::mt19937_64 rng(32);
    for (std::uint64_t p : {0, 2, 3, 5}) {
        const FieldSpec f(p);
        for (int trial = 0; trial < 80; ++trial) {
            ExactMatrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 7, -2, 2);
            if (trial % 2 == 0) m = with_sum_row(m);
            const auto basis = nullspace_basis(m, f);
            ASSERT_EQ(basis.size(), m.cols() - rank(m, f));
            for (const auto& v : basis) EXPECT_TRUE(is_zero(multiply(m, v, f)));
            if (basis.empty()) continue;
            ExactMatrix stacked(basis.size(), m.cols());
            for (std::size_t i = 0; i < basis.size(); ++i) {
                for (std::size_t c = 0; c < m.cols(); ++c) stacked(i, c) = basis[i][c];
            }
            EXPECT_EQ(rank(stacked, f), basis.size());
        }
    }
}

TEST(Kronecker, Examples) {
    const ExactMatrix m{{1, 2}, {3, 4}};
    EXPECT_EQ(kronecker(ExactMatrix::identity(2), m),
              (ExactMatrix{{1, 2, 0, 0}, {3, 4, 0, 0}, {0, 0, 1, 2}, {0, 0, 3, 4}}));
    EXPECT_EQ(kronecker(ExactMatrix{{5}}, m), (ExactMatrix{{5, 10}, {15, 20}}));
    EXPECT_EQ(kronecker(ExactMatrix{{1, -1}}, ExactMatrix{{1}, {2}}), (ExactMatrix{{1, -1}, {2, -2}}));
    const auto k = kronecker(ExactMatrix(2, 3), ExactMatrix(4, 5));
    EXPECT_EQ(k.rows(), 8u);
    EXPECT_EQ(k.cols(), 15u);
}

TEST(Kronecker, RankIsMultiplicative) {
    std::mt19937_64 rng(33);
    for (std::uint64_t p : {0, 2, 3, 5}) {
        const FieldSpec f(p);
        for (int trial = 0; trial < 100; ++trial) {
            ExactMatrix a = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 4, -2, 2);
            ExactMatrix m = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 4, -2, 2);
            if (trial % 4 == 0) a = with_sum_row(a);
            EXPECT_EQ(rank(kronecker(a, m), f), rank(a, f) * rank(m, f)) << "p=" << p;
        }
    }
}

TEST(ReduceFirstRow, Examples) {
    EXPECT_EQ(reduce_first_row(ExactMatrix{{1, 1}, {1, 0}}), (ExactMatrix{{0, -1}}));
    const auto r = reduce_first_row(ExactMatrix{{1, 2, 3}});
    EXPECT_EQ(r.rows(), 0u);
    EXPECT_EQ(r.cols(), 3u);
    EXPECT_THROW(reduce_first_row(ExactMatrix(0, 3)), InputError);
}

TEST(ReduceFirstRow, RankDropsByAtMostOne) {
    // rank(m) - rank(reduced) is 1 exactly when the all-ones column lies in the
    // column space of m (some x has m x = 1).
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 300; ++trial) {
        ExactMatrix m = random_matrix(rng, 4, 5, -1, 1);
        if (trial % 3 == 0) m = with_sum_row(m.without_row(3));
        const std::size_t full = rank(m, Q);
        const std::size_t k = rank(reduce_first_row(m), Q);
        ASSERT_TRUE(full == k || full == k + 1);

        ExactMatrix augmented(m.rows(), m.cols() + 1);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
            augmented(r, m.cols()) = 1;
        }
        EXPECT_EQ(full == k + 1, rank(augmented, Q) == full);
    }
}

TEST(ReduceFirstRow, SpanMembershipOfFirstRowDoesNotDecideTheDrop) {
    // Row 0 duplicates row 1, yet the rank still drops by one.
    const ExactMatrix dup{{1, 0}, {1, 0}};
    EXPECT_TRUE(row_in_span_of_others(dup, 0, Q));
    EXPECT_EQ(rank(dup, Q), 1u);
    EXPECT_EQ(rank(reduce_first_row(dup), Q), 0u);

    // Row 0 is outside the span of the others, yet the rank does not drop.
    const ExactMatrix indep{{1, 0}, {0, 1}, {0, 2}};
    EXPECT_FALSE(row_in_span_of_others(indep, 0, Q));
    EXPECT_EQ(rank(indep, Q), 2u);
    EXPECT_EQ(rank(reduce_first_row(indep), Q), 2u);
}

TEST(RowSpan, DependentRows) {
    const ExactMatrix m{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    EXPECT_TRUE(has_dependent_rows(m, Q));
    EXPECT_FALSE(has_dependent_rows(ExactMatrix::identity(3), Q));
    for (std::size_t r = 0; r < 3; ++r) EXPECT_TRUE(row_in_span_of_others(m, r, Q));
    EXPECT_THROW(row_in_span_of_others(m, 3, Q), InputError);

    const ExactMatrix tail{{1, 0}, {0, 1}, {0, 2}};
    EXPECT_EQ(move_dependent_row_first(tail, Q), (ExactMatrix{{0, 1}, {1, 0}, {0, 2}}));
    EXPECT_EQ(move_dependent_row_first(ExactMatrix::identity(3), Q), ExactMatrix::identity(3));

    // Over GF(2), [1,1] + [1,1] = 0 makes the duplicate pair the only dependency.
    const ExactMatrix two{{1, 0}, {1, 1}, {1, 1}};
    EXPECT_EQ(move_dependent_row_first(two, FieldSpec(2)), (ExactMatrix{{1, 1}, {1, 0}, {1, 1}}));
}
