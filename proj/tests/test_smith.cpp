#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mclag/smith.hpp"
#include "test_util.hpp"

using namespace mclag;

namespace {

void check_certificates(const IntMatrix& a) {
    SmithDecomposition snf = smith_normal_form(a);
    CHECK(snf.u * a * snf.v == snf.d);
    Int du = snf.u.determinant(), dv = snf.v.determinant();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (std::size_t i = 0; i < snf.d.rows(); ++i)
        for (std::size_t j = 0; j < snf.d.cols(); ++j)
            if (i != j) CHECK(snf.d(i, j) == 0);
    for (std::size_t k = 0; k + 1 < snf.invariant_factors.size(); ++k) {
        CHECK(snf.invariant_factors[k] > 0);
        CHECK(snf.invariant_factors[k + 1] % snf.invariant_factors[k] == 0);
    }
}

} // namespace

TEST_CASE("smith normal form on the pinned examples") {
    SECTION("identity") {
        SmithDecomposition snf = smith_normal_form(IntMatrix::identity(2));
        CHECK(snf.d == IntMatrix::identity(2));
        CHECK(snf.invariant_factors == std::vector<Int>{1, 1});
    }
    SECTION("zero matrix") {
        SmithDecomposition snf = smith_normal_form(IntMatrix(2, 2));
        CHECK(snf.d == IntMatrix(2, 2));
        CHECK(snf.invariant_factors.empty());
    }
    SECTION("[[2,4],[6,8]]") {
        IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
        SmithDecomposition snf = smith_normal_form(a);
        // oracle: gcd of all entries is 2 and |det| = 8, which forces the
        // chain d1 = 2, d1*d2 = 8
        CHECK(snf.invariant_factors == std::vector<Int>{2, 4});
        CHECK(snf.u * a * snf.v == snf.d);
    }
    SECTION("empty shapes") {
        CHECK(smith_normal_form(IntMatrix(0, 3)).invariant_factors.empty());
        CHECK(smith_normal_form(IntMatrix(3, 0)).invariant_factors.empty());
    }
}

TEST_CASE("smith normal form is deterministic") {
    std::mt19937_64 rng(7);
    IntMatrix a = testutil::random_matrix(rng, 5, 6);
    SmithDecomposition s1 = smith_normal_form(a);
    SmithDecomposition s2 = smith_normal_form(a);
    CHECK(s1.d == s2.d);
    CHECK(s1.u == s2.u);
    CHECK(s1.v == s2.v);
}

TEST_CASE("certificates hold on random matrices") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> dim(0, 8);
    for (int trial = 0; trial < 80; ++trial)
        check_certificates(testutil::random_matrix(rng, dim(rng), dim(rng)));
}

TEST_CASE("factors-only path agrees with the certified path") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::size_t> dim(0, 8);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix a = testutil::random_matrix(rng, dim(rng), dim(rng));
        CHECK(detail::snf_factors(a) == smith_normal_form(a).invariant_factors);
    }
}

TEST_CASE("kernel basis") {
    SECTION("injective map has empty kernel") {
        CHECK(kernel_basis(IntMatrix::identity(2)).cols() == 0);
    }
    SECTION("1x2 [[1,1]]") {
        IntMatrix k = kernel_basis(IntMatrix::from_rows({{1, 1}}));
        REQUIRE(k.cols() == 1);
        // forced up to sign
        CHECK((k(0, 0) == 1 || k(0, 0) == -1));
        CHECK(k(0, 0) + k(1, 0) == 0);
    }
    SECTION("kernel vectors are annihilated and the basis is saturated") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<std::size_t> dim(1, 8);
        for (int trial = 0; trial < 40; ++trial) {
            IntMatrix a = testutil::random_matrix(rng, dim(rng), dim(rng));
            IntMatrix k = kernel_basis(a);
            CHECK((a * k).is_zero());
            // rank-nullity against the SNF rank
            CHECK(k.cols() + smith_normal_form(a).invariant_factors.size() == a.cols());
            // saturation: the basis spans a primitive sublattice
            if (k.cols() > 0) {
                auto factors = smith_normal_form(k).invariant_factors;
                for (const Int& f : factors) CHECK(f == 1);
            }
        }
    }
}

TEST_CASE("cokernel invariants") {
    CHECK(cokernel_invariants(IntMatrix::from_rows({{1, 0}, {0, 2}})) == FgAbelianGroup(0, {2}));
    CHECK(cokernel_invariants(IntMatrix(3, 0)) == FgAbelianGroup::free(3));
    CHECK(cokernel_invariants(IntMatrix::identity(4)).is_trivial());

    SECTION("invariant under unimodular row/column operations") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 25; ++trial) {
            IntMatrix a = testutil::random_matrix(rng, 4, 5, -5, 5);
            FgAbelianGroup before = cokernel_invariants(a);
            IntMatrix p = testutil::random_unimodular(rng, 4);
            IntMatrix q = testutil::random_unimodular(rng, 5);
            CHECK(cokernel_invariants(p * a * q) == before);
        }
    }
}

TEST_CASE("cokernel agrees with the modular enumeration oracle") {
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 20) {
        IntMatrix rel = testutil::random_matrix(rng, 3, 3, -2, 2);
        long long det = testutil::tiny_det(rel);
        if (det == 0) continue;
        long long m = det < 0 ? -det : det;
        if (m > 12) continue; // keep the enumeration tiny
        ++done;
        std::vector<long long> expected = testutil::enumeration_torsion_factors(rel, m);
        FgAbelianGroup got = cokernel_invariants(rel);
        CHECK(got.free_rank() == 0);
        REQUIRE(got.invariant_factors().size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(got.invariant_factors()[i] == expected[i]);
    }
}

TEST_CASE("solve in column lattice") {
    SECTION("identity") {
        std::vector<Int> b = {3, -4};
        auto x = solve_in_column_lattice(IntMatrix::identity(2), b);
        REQUIRE(x.has_value());
        CHECK(*x == b);
    }
    SECTION("parity obstruction") {
        CHECK_FALSE(solve_in_column_lattice(IntMatrix::from_rows({{2}}), {Int(1)}).has_value());
    }
    SECTION("divisible case") {
        auto x = solve_in_column_lattice(IntMatrix::from_rows({{2}}), {Int(6)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == 3);
    }
    SECTION("dimension mismatch") {
        CHECK_THROWS_AS(solve_in_column_lattice(IntMatrix::identity(2), {Int(1)}),
                        DimensionMismatch);
    }
    SECTION("random solvable and unsolvable systems") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 30; ++trial) {
            IntMatrix a = testutil::random_matrix(rng, 4, 3, -5, 5);
            IntMatrix xs = testutil::random_matrix(rng, 3, 1, -7, 7);
            std::vector<Int> b = a.apply(xs.column(0));
            auto x = solve_in_column_lattice(a, b);
            REQUIRE(x.has_value());
            CHECK(a.apply(*x) == b);
        }
    }
}

TEST_CASE("generates_full_lattice") {
    CHECK(generates_full_lattice({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3));
    CHECK_FALSE(generates_full_lattice({{2, 0}, {0, 1}}, 2)); // index-2 sublattice
    CHECK_FALSE(generates_full_lattice({{1, 0}}, 2));
    CHECK_THROWS_AS(generates_full_lattice({{1, 0}}, 1), DimensionMismatch);
}

TEST_CASE("quotient structure orders and generation") {
    // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 = Z/6
    IntMatrix rel = IntMatrix::from_rows({{2, 0}, {0, 3}});
    QuotientStructure q(rel);
    CHECK(q.group() == FgAbelianGroup(0, {6}));
    auto o = q.order_of({1, 1});
    REQUIRE(o.has_value());
    CHECK(*o == 6);
    CHECK(q.generates({1, 1}));
    CHECK_FALSE(q.generates({1, 0}));
    auto o2 = q.order_of({0, 0});
    REQUIRE(o2.has_value());
    CHECK(*o2 == 1);

    // free direction: infinite order
    QuotientStructure qf(IntMatrix(2, 0));
    CHECK_FALSE(qf.order_of({1, 0}).has_value());
}
