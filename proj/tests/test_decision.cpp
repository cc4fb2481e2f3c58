#include "finitype/decision.hpp"
#include "finitype/oracle.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace finitype;
using finitype::testing::Rng;

TEST_CASE("decision examples") {
    SUBCASE("A2") {
        const Decision d = decide(SquareIntMatrix{{0, 1}, {-1, 0}});
        CHECK(d.verdict == Decision::Verdict::FiniteType);
        CHECK(d.reason == Decision::Reason::None);
        REQUIRE(d.companion.has_value());
        CHECK(d.companion->matrix() == SquareIntMatrix{{2, 1}, {1, 2}});
    }
    SUBCASE("Markov") {
        const Decision d = decide(SquareIntMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
        CHECK(d.verdict == Decision::Verdict::NotFinite);
        CHECK(d.reason == Decision::Reason::CompanionNotPositive);
        CHECK(d.bad_minor == 2);
    }
    SUBCASE("alternating square") {
        const Decision d = decide(SquareIntMatrix{{0, 1, 0, 1}, {-1, 0, -1, 0}, {0, 1, 0, 1}, {-1, 0, -1, 0}});
        CHECK(d.verdict == Decision::Verdict::NotFinite);
        CHECK(d.reason == Decision::Reason::NonCyclicCycle);
        REQUIRE(d.orientation_failure.has_value());
        CHECK(d.orientation_failure->vertices == std::vector<std::size_t>{0, 1, 2, 3});
    }
    SUBCASE("not skew-symmetrizable") {
        const Decision d = decide(SquareIntMatrix{{0, 1}, {1, 0}});
        CHECK(d.verdict == Decision::Verdict::NotSkewSymmetrizable);
        CHECK(d.reason == Decision::Reason::NotSkewSymmetrizable);
        CHECK(d.domain_error.has_value());
        CHECK_FALSE(d.finite());
    }
    SUBCASE("complete graph on four vertices") {
        SquareIntMatrix b(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                b(i, j) = 1;
                b(j, i) = -1;
            }
        CHECK(decide(b).reason == Decision::Reason::EdgeBoundExceeded);
    }
    SUBCASE("trivial sizes") {
        CHECK(decide(SquareIntMatrix(0)).finite());
        CHECK(decide(SquareIntMatrix(1)).finite());
        CHECK(decide(SquareIntMatrix(4)).finite());
    }
}

TEST_CASE("Dynkin families are finite, affine ones are not") {
    using finitype::testing::d_matrix;
    using finitype::testing::path_matrix;
    for (std::size_t n = 2; n <= 9; ++n)
        for (std::uint64_t o = 0; o < (1U << (n - 1)); o += 1 + (o % 3)) {
            CHECK(decide(path_matrix(n, o)).finite());
            CHECK(decide(path_matrix(n, o, n - 2, 1, 2)).finite());  // B_n / C_n
            CHECK(decide(path_matrix(n, o, 0, 2, 1)).finite());
            if (n >= 4) CHECK(decide(d_matrix(n, o)).finite());
        }
    // Affine: a weight-4 pair, and a rank-3 path with a double bond at each end.
    CHECK_FALSE(decide(SquareIntMatrix{{0, 1}, {-4, 0}}).finite());
    SquareIntMatrix c3 = path_matrix(3, 0, 0, 1, 2);
    c3(1, 2) = 2;
    c3(2, 1) = -1;
    CHECK_FALSE(decide(c3).finite());
}

TEST_CASE("certificates re-check") {
    Rng rng(307);
    for (int trial = 0; trial < 300; ++trial) {
        const SkewForm f = finitype::testing::random_skew_form(rng, 1 + rng() % 7, 0.5, 3);
        const Decision d = decide(f);
        REQUIRE(d.verdict != Decision::Verdict::NotSkewSymmetrizable);
        if (d.finite()) {
            REQUIRE(d.companion.has_value());
            const SquareIntMatrix& c = d.companion->matrix();
            CHECK(symmetrizes(f.symmetrizer(), c));
            for (std::size_t k = 1; k <= c.size(); ++k)
                CHECK(sgn(finitype::testing::cofactor_determinant(c.leading_block(k))) > 0);
        } else if (d.reason == Decision::Reason::CompanionNotPositive) {
            REQUIRE(d.bad_minor.has_value());
            const SquareIntMatrix& c = d.companion->matrix();
            CHECK(sgn(finitype::testing::cofactor_determinant(c.leading_block(*d.bad_minor))) <= 0);
            for (std::size_t k = 1; k < *d.bad_minor; ++k)
                CHECK(sgn(finitype::testing::cofactor_determinant(c.leading_block(k))) > 0);
        } else if (d.reason == Decision::Reason::NonCyclicCycle) {
            const Quiver g = build_quiver(f);
            CHECK_FALSE(finitype::testing::is_cyclic(g, d.orientation_failure->vertices));
        }
    }
}

TEST_CASE("decision agrees with the mutation-class search on small ranks") {
    Rng rng(311);
    for (int trial = 0; trial < 150; ++trial) {
        const SkewForm f = finitype::testing::random_skew_form(rng, 2 + rng() % 2, 0.7, 2);
        const auto r = explore_mutation_class(f);
        REQUIRE(r.status != MutationClassReport::Status::LimitExceeded);
        CHECK(decide(f).finite() == (r.status == MutationClassReport::Status::FiniteClass));
    }
}
