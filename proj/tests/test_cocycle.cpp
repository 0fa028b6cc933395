#include <doctest.h>

#include "xrc/cocycle.hpp"
#include "xrc/fixtures.hpp"

using namespace xrc;

namespace {
Configuration line_config(int n) {
    std::vector<BoundaryPoint> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(static_cast<long>(i));
    return Configuration(std::move(pts));
}
}  // namespace

TEST_CASE("check_axioms on canonical, perturbed and zero tables") {
    Configuration cfg = line_config(5);
    CrossRatioTable t0 = CrossRatioTable::canonical(cfg);
    CHECK(check_axioms(t0).empty());

    CrossRatioTable faulty = t0;
    faulty.set(0, 1, 2, 3, t0.at(0, 1, 2, 3) + 1);
    auto report = check_axioms(faulty);
    REQUIRE_FALSE(report.empty());
    // the report names a concrete instance
    CHECK_FALSE(report.front().describe().empty());

    CHECK(check_axioms(CrossRatioTable(5)).empty());
}

TEST_CASE("phi from the canonical table via the averaging formula") {
    Configuration cfg = line_config(4);
    CrossRatioTable t0 = CrossRatioTable::canonical(cfg);
    // canonical ingredients straight from the two defining rules
    CHECK(t0.at(0, 2, 1, 3) == 1);
    CHECK(t0.at(2, 1, 0, 3) == 0);
    CHECK(t0.at(1, 0, 2, 3) == 0);
    CHECK(phi_from_crossratio(t0, 0, 1, 2, 3) == Rational(1, 2));
    CHECK(phi_from_crossratio(t0, 0, 2, 1, 3) == Rational(-1, 2));
    CHECK(phi_from_crossratio(CrossRatioTable(4), 0, 1, 2, 3) == 0);
    // degenerate triples give 0; a colliding auxiliary label is an error
    CHECK(phi_from_crossratio(t0, 0, 0, 2, 3) == 0);
    CHECK_THROWS_AS(phi_from_crossratio(t0, 0, 1, 2, 2), DomainError);
}

TEST_CASE("cochain_from_crossratio of the canonical table is the orientation cochain") {
    for (int n = 4; n <= 6; ++n) {
        Configuration cfg = line_config(n);
        AltCochain2 phi = cochain_from_crossratio(CrossRatioTable::canonical(cfg));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    Rational expect = cfg.cyclically_ordered(i, j, k) ? Rational(1, 2)
                                                                      : Rational(-1, 2);
                    CHECK(phi.at(i, j, k) == expect);
                }
    }
}

TEST_CASE("cochain_from_crossratio rejects bad input") {
    CHECK_THROWS_AS(cochain_from_crossratio(CrossRatioTable(3)), DomainError);
    CrossRatioTable bad(4);
    bad.set(0, 1, 2, 3, Rational(1));  // antisymmetry partners left at 0
    CHECK_THROWS_AS(cochain_from_crossratio(bad), DomainError);
}

TEST_CASE("nu independence of the averaging formula") {
    Lcg64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Configuration cfg = random_configuration(rng, 6, false);
        CrossRatioTable t = random_valid_table(rng, cfg);
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                for (int c = 0; c < 6; ++c) {
                    if (a == b || b == c || a == c) continue;
                    Rational ref;
                    bool have = false;
                    for (int nu = 0; nu < 6; ++nu) {
                        if (nu == a || nu == b || nu == c) continue;
                        Rational v = phi_from_crossratio(t, a, b, c, nu);
                        if (have) CHECK(v == ref);
                        ref = v;
                        have = true;
                    }
                }
    }
}

TEST_CASE("coboundary2 examples") {
    Configuration cfg = line_config(4);
    AltCochain2 phi = cochain_from_crossratio(CrossRatioTable::canonical(cfg));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) CHECK(coboundary2_value(phi, a, b, c, d) == 0);

    AltCochain2 spike(4);
    spike.set(0, 1, 2, Rational(1));
    CHECK(coboundary2_value(spike, 3, 0, 1, 2) == 1);
    CHECK_FALSE(is_cocycle(spike));
    CHECK(coboundary2_value(AltCochain2(4), 0, 1, 2, 3) == 0);
}

TEST_CASE("coboundary1 examples") {
    const int n = 5;
    SUBCASE("coboundaries of functions are closed") {
        Cochain1 b(n);
        auto f = [](int x) { return Rational(3 * x + 1, 2); };
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) b.set(x, y, f(y) - f(x));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) CHECK(coboundary1_value(b, x, y, z) == 0);
    }
    SUBCASE("constant cochain") {
        Cochain1 b(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) b.set(x, y, Rational(7));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) CHECK(coboundary1_value(b, x, y, z) == 7);
    }
    SUBCASE("product cochain") {
        Cochain1 b(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) b.set(x, y, Rational(x * y));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    CHECK(coboundary1_value(b, x, y, z) == Rational(y * z - x * z + x * y));
    }
}

TEST_CASE("the composed coboundaries vanish on raw 1-cochains") {
    // d(d b) = 0 for arbitrary homogeneous b, alternating or not
    Lcg64 rng(37);
    const int n = 5;
    Cochain1 b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.set(i, j, rng.rational(9, 4));
    auto phi = [&](int x, int y, int z) { return coboundary1_value(b, x, y, z); };
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
                for (int e = 0; e < n; ++e)
                    CHECK(phi(c, d, e) - phi(a, d, e) + phi(a, c, e) - phi(a, c, d) == 0);
}

TEST_CASE("crossratio_from_cocycle examples and round trips") {
    Configuration cfg = line_config(4);
    CrossRatioTable t0 = CrossRatioTable::canonical(cfg);
    AltCochain2 orient = cochain_from_crossratio(t0);
    CHECK(crossratio_from_cocycle(orient) == t0);
    CHECK(crossratio_from_cocycle(AltCochain2(4)) == CrossRatioTable(4));

    AltCochain2 spike(4);
    spike.set(0, 1, 2, Rational(1));
    CHECK_THROWS_AS(crossratio_from_cocycle(spike), DomainError);

    Lcg64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        Configuration c = random_configuration(rng, n, false);
        CrossRatioTable t = random_valid_table(rng, c);
        AltCochain2 phi = cochain_from_crossratio(t);
        CHECK(is_cocycle(phi));
        CHECK(crossratio_from_cocycle(phi) == t);  // round trip A

        AltCochain2 psi = random_alternating_cocycle(rng, n);
        CHECK(cochain_from_crossratio(crossratio_from_cocycle(psi)) == psi);  // round trip B
    }
}

TEST_CASE("sup norm and raw maximum") {
    Configuration cfg = line_config(5);
    CrossRatioTable t0 = CrossRatioTable::canonical(cfg);
    CHECK(sup_norm(t0) == 1);
    CHECK(max_entry(t0) == 1);
    CHECK(sup_norm(CrossRatioTable(5)) == 0);
    CHECK(sup_norm(t0.scaled(Rational(3))) == 3);
    CHECK(sup_norm(t0.scaled(Rational(-3))) == 3);
    CHECK(max_entry(t0.scaled(Rational(-3))) == 3);  // -3 * (-1) attained

    // Gromov norm comparison: sup|phi| <= (3/2) sup_norm(t)
    Lcg64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Configuration c = random_configuration(rng, 5, false);
        CrossRatioTable t = random_valid_table(rng, c);
        AltCochain2 phi = cochain_from_crossratio(t);
        CHECK(phi.sup_abs() <= Rational(3, 2) * sup_norm(t));
    }
}
