#include <doctest.h>

#include "xrc/fixtures.hpp"
#include "xrc/rp1.hpp"

using namespace xrc;

namespace {
BoundaryPoint bp(long v) { return BoundaryPoint(v); }
BoundaryPoint bp(long n, long d) { return BoundaryPoint(Rational(n, d)); }
const BoundaryPoint inf = BoundaryPoint::infinity();
}  // namespace

TEST_CASE("boundary point text round trip") {
    CHECK(BoundaryPoint::parse("3/4").str() == "3/4");
    CHECK(BoundaryPoint::parse("-6/4").str() == "-3/2");
    CHECK(BoundaryPoint::parse("7").str() == "7");
    CHECK(BoundaryPoint::parse("inf").str() == "inf");
    CHECK(BoundaryPoint::parse("inf") == inf);
    CHECK(BoundaryPoint::parse("2/4") == bp(1, 2));
    CHECK_THROWS_AS(BoundaryPoint::parse("1/0"), DomainError);
    CHECK_THROWS_AS(BoundaryPoint::parse("x"), DomainError);
}

TEST_CASE("cyclic order on RP1") {
    CHECK(cyclic_ordered(bp(0), bp(1), bp(2)));
    CHECK(cyclic_ordered(bp(1), inf, bp(-1)));
    CHECK_FALSE(cyclic_ordered(bp(2), bp(1), bp(0)));
    // rotation invariance, transposition antisymmetry
    CHECK(cyclic_ordered(bp(1), bp(2), bp(0)));
    CHECK(cyclic_ordered(bp(2), bp(0), bp(1)));
    CHECK_FALSE(cyclic_ordered(bp(1), bp(0), bp(2)));
    CHECK_THROWS_AS(cyclic_ordered(bp(0), bp(0), bp(1)), DomainError);
}

TEST_CASE("ordered quadruples") {
    CHECK(quadruple_ordered(bp(0), bp(1), bp(2), bp(3)));
    CHECK_FALSE(quadruple_ordered(bp(0), bp(2), bp(1), bp(3)));
    CHECK(quadruple_ordered(bp(1), bp(2), bp(3), bp(0)));  // rotation
    CHECK(quadruple_ordered(bp(0), bp(1), inf, bp(-5)));
    CHECK_THROWS_AS(quadruple_ordered(bp(0), bp(1), bp(1), bp(3)), DomainError);
}

TEST_CASE("linking cases") {
    CHECK(linking(bp(0), bp(1), bp(2), bp(3)) == Linking::unlinked);
    CHECK(linking(bp(0), bp(2), bp(1), bp(3)) == Linking::positively_linked);
    CHECK(linking(bp(0), bp(2), bp(3), bp(1)) == Linking::negatively_linked);
    CHECK(linking(bp(1), inf, bp(0), bp(2)) == Linking::negatively_linked);
}

TEST_CASE("canonical cross ratio values") {
    CHECK(canonical_cross_ratio(bp(0), bp(1), bp(2), bp(3)) == 0);
    CHECK(canonical_cross_ratio(bp(0), bp(2), bp(1), bp(3)) == 1);
    CHECK(canonical_cross_ratio(bp(2), bp(0), bp(1), bp(3)) == -1);
    // degenerate extension: first-pair or second-pair coincidence gives 0
    CHECK(canonical_cross_ratio(bp(0), bp(0), bp(1), bp(2)) == 0);
    CHECK(canonical_cross_ratio(bp(1), bp(2), bp(0), bp(0)) == 0);
    CHECK_THROWS_AS(canonical_cross_ratio(bp(0), bp(1), bp(0), bp(2)), DomainError);
}

TEST_CASE("canonical orientation cochain") {
    CHECK(canonical_orientation_cochain(bp(0), bp(1), bp(2)) == Rational(1, 2));
    CHECK(canonical_orientation_cochain(bp(0), bp(2), bp(1)) == Rational(-1, 2));
    CHECK(canonical_orientation_cochain(bp(0), bp(0), bp(1)) == 0);
    CHECK(canonical_orientation_cochain(bp(1), inf, bp(-1)) == Rational(1, 2));
}

TEST_CASE("orientation cochain is a cocycle on arbitrary points") {
    // Including coincidences: the 0-extension keeps the coboundary zero.
    std::vector<BoundaryPoint> pts = {bp(0), bp(1), bp(1), bp(-2), inf, bp(1, 2)};
    for (const auto& a : pts)
        for (const auto& b : pts)
            for (const auto& c : pts)
                for (const auto& d : pts) {
                    Rational v = canonical_orientation_cochain(b, c, d) -
                                 canonical_orientation_cochain(a, c, d) +
                                 canonical_orientation_cochain(a, b, d) -
                                 canonical_orientation_cochain(a, b, c);
                    CHECK(v == 0);
                }
}

TEST_CASE("configuration cyclic positions") {
    Configuration cfg({bp(3), bp(0), inf, bp(-2)});
    // circular order anchored at the smallest point: -2, 0, 3, inf
    CHECK(cfg.position(3) == 0);
    CHECK(cfg.position(1) == 1);
    CHECK(cfg.position(0) == 2);
    CHECK(cfg.position(2) == 3);
    CHECK(cfg.cyclically_ordered(1, 0, 2));       // 0 -> 3 -> inf
    CHECK(cfg.cyclically_ordered(2, 3, 1));       // inf -> -2 -> 0 wraps
    CHECK(cfg.quadruple_cyclically_ordered(3, 1, 0, 2));
    CHECK_FALSE(cfg.quadruple_cyclically_ordered(3, 0, 1, 2));
    CHECK_THROWS_AS(Configuration({bp(1), bp(1)}), DomainError);
}

TEST_CASE("positional canonical values agree with the predicate route") {
    Lcg64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Configuration cfg = random_configuration(rng, 5, true);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                for (int k = 0; k < 5; ++k)
                    for (int l = 0; l < 5; ++l) {
                        if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                        Rational direct = canonical_cross_ratio(cfg.point(i), cfg.point(j),
                                                                cfg.point(k), cfg.point(l));
                        CHECK(direct == Rational(cfg.canonical_value(i, j, k, l)));
                    }
    }
}

TEST_CASE("canonical cross ratio is invariant under order-preserving relabeling") {
    // Two configurations with the same cyclic order type must give the same
    // canonical table.
    Configuration a({bp(0), bp(1), bp(2), bp(3), bp(4)});
    Configuration b({bp(-7), bp(-1, 3), bp(5, 2), bp(40), inf});
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k)
                for (int l = 0; l < 5; ++l) {
                    if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                    CHECK(a.canonical_value(i, j, k, l) == b.canonical_value(i, j, k, l));
                }
}
