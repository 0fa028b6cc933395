#include <doctest.h>

#include "xrc/fixtures.hpp"
#include "xrc/measure.hpp"

using namespace xrc;

namespace {
Configuration line_config(int n) {
    std::vector<BoundaryPoint> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(static_cast<long>(i));
    return Configuration(std::move(pts));
}
}  // namespace

TEST_CASE("rectangle admissibility is cyclic order") {
    RectMeasure m(line_config(4));
    CHECK(m.admissible(0, 1, 2, 3));
    CHECK(m.admissible(2, 3, 0, 1));
    CHECK_FALSE(m.admissible(0, 2, 1, 3));  // linked pairs overlap as arcs
    CHECK_FALSE(m.admissible(0, 1, 3, 2));
    CHECK_THROWS_AS(m.at(0, 2, 1, 3), DomainError);
}

TEST_CASE("atom measures: unit atoms on a 4-point configuration") {
    Configuration cfg = line_config(4);
    std::vector<Rational> rho = {Rational(1), Rational(0), Rational(0), Rational(0)};
    std::vector<Rational> sigma = {Rational(0), Rational(0), Rational(1), Rational(0)};
    RectMeasure m = measure_from_atoms(cfg, rho, sigma);
    CHECK(m.at(0, 1, 2, 3) == 1);
    CHECK(m.at(2, 3, 0, 1) == -1);
    CHECK(check_measure(m).empty());

    // rho == sigma collapses to the zero measure
    RectMeasure z = measure_from_atoms(cfg, rho, rho);
    bool all_zero = true;
    z.for_each_rect([&](int a, int b, int c, int d) { all_zero &= (z.at(a, b, c, d) == 0); });
    CHECK(all_zero);
}

TEST_CASE("check_measure catches a perturbed entry") {
    Lcg64 rng(3);
    Configuration cfg = random_configuration(rng, 5, false);
    RectMeasure m = random_atom_measure(rng, cfg);
    CHECK(check_measure(m).empty());
    bool touched = false;
    m.for_each_rect([&](int a, int b, int c, int d) {
        if (!touched) {
            m.set(a, b, c, d, m.at(a, b, c, d) + 1);
            touched = true;
        }
    });
    auto report = check_measure(m);
    REQUIRE_FALSE(report.empty());
    CHECK_FALSE(report.front().describe().empty());
}

TEST_CASE("psi of the canonical table vanishes") {
    for (int n = 4; n <= 6; ++n) {
        Configuration cfg = line_config(n);
        RectMeasure m = psi(cfg, CrossRatioTable::canonical(cfg));
        m.for_each_rect([&](int a, int b, int c, int d) { CHECK(m.at(a, b, c, d) == 0); });
    }
}

TEST_CASE("psi rejects invalid tables") {
    Configuration cfg = line_config(4);
    CrossRatioTable bad(4);
    bad.set(0, 1, 2, 3, Rational(2));
    CHECK_THROWS_AS(psi(cfg, bad), DomainError);
}

TEST_CASE("reconstruction from the zero measure is the zero table") {
    Configuration cfg = line_config(5);
    RectMeasure zero(cfg);
    CHECK(crossratio_from_measure(zero, {0, 1, 2, 3}) == CrossRatioTable(5));
}

TEST_CASE("reconstruction errors") {
    Configuration cfg = line_config(5);
    RectMeasure zero(cfg);
    CHECK_THROWS_AS(crossratio_from_measure(zero, {0, 2, 1, 3}), DomainError);  // base not ordered
    RectMeasure broken(cfg);
    broken.set(0, 1, 2, 3, Rational(1));  // flip partner still zero
    CHECK_THROWS_AS(crossratio_from_measure(broken, {0, 1, 2, 3}), DomainError);
}

TEST_CASE("atom fixture round trip through the correspondence") {
    Configuration cfg = line_config(4);
    std::vector<Rational> rho = {Rational(1), Rational(0), Rational(0), Rational(0)};
    std::vector<Rational> sigma = {Rational(0), Rational(0), Rational(1), Rational(0)};
    RectMeasure m = measure_from_atoms(cfg, rho, sigma);
    CrossRatioTable t = crossratio_from_measure(m, {0, 1, 2, 3});
    CHECK(t.at(0, 1, 2, 3) == 1);
    CHECK(check_axioms(t).empty());
    CHECK(psi(cfg, t).same_values(m));
}

TEST_CASE("psi o crossratio_from_measure is the identity; all bases, seeded measures") {
    Lcg64 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        Configuration cfg = random_configuration(rng, n, false);
        RectMeasure m = random_atom_measure(rng, cfg);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        if (!m.admissible(a, b, c, d)) continue;
                        CrossRatioTable t = crossratio_from_measure(m, {a, b, c, d});
                        CHECK(check_axioms(t).empty());
                        CHECK(t.at(a, c, b, d) == 0);  // pinned at the base
                        CHECK(psi(cfg, t).same_values(m));
                    }
    }
}

TEST_CASE("reconstruction of psi(t) recovers t modulo the canonical table") {
    Lcg64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        Configuration cfg = random_configuration(rng, n, false);
        CrossRatioTable t = random_valid_table(rng, cfg);
        std::array<int, 4> base = random_ordered_base(rng, cfg);
        CrossRatioTable back = crossratio_from_measure(psi(cfg, t), base);
        // difference must be exactly (base-linked value) * canonical
        Rational c = t.at(base[0], base[2], base[1], base[3]);
        CrossRatioTable expect = t;
        expect.add_scaled(CrossRatioTable::canonical(cfg), -c);
        CHECK(back == expect);
    }
}

TEST_CASE("reconstruction is base independent up to the pinned coefficient") {
    // Any two bases give tables differing by a canonical multiple.
    Lcg64 rng(31);
    Configuration cfg = random_configuration(rng, 5, false);
    RectMeasure m = random_atom_measure(rng, cfg);
    CrossRatioTable t1 = crossratio_from_measure(m, random_ordered_base(rng, cfg));
    CrossRatioTable t2 = crossratio_from_measure(m, random_ordered_base(rng, cfg));
    CrossRatioTable t0 = CrossRatioTable::canonical(cfg);
    // t1 - t2 = c * t0 with c read off at a linked anchor tuple
    int ai = -1, aj = 0, ak = 0, al = 0;
    t0.for_each_tuple([&](int i, int j, int k, int l) {
        if (ai < 0 && t0.at(i, j, k, l) != 0) { ai = i; aj = j; ak = k; al = l; }
    });
    REQUIRE(ai >= 0);
    Rational anchor = t0.at(ai, aj, ak, al);
    Rational c = t1.at(ai, aj, ak, al) - t2.at(ai, aj, ak, al);
    t1.for_each_tuple([&](int i, int j, int k, int l) {
        CHECK((t1.at(i, j, k, l) - t2.at(i, j, k, l)) * anchor == c * t0.at(i, j, k, l));
    });
}

TEST_CASE("general measures (atom combinations) round trip too") {
    // the correspondence is linear, so spanning combinations exercise the
    // whole measure space, not just the rank-two atom fixtures
    Lcg64 rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        Configuration cfg = random_configuration(rng, n, false);
        RectMeasure m1 = random_atom_measure(rng, cfg);
        RectMeasure m2 = random_atom_measure(rng, cfg);
        RectMeasure m3 = random_atom_measure(rng, cfg);
        Rational c2 = rng.rational(5, 3), c3 = rng.rational(5, 3);
        RectMeasure m(cfg);
        m.for_each_rect([&](int a, int b, int c, int d) {
            m.set(a, b, c, d,
                  m1.at(a, b, c, d) + c2 * m2.at(a, b, c, d) + c3 * m3.at(a, b, c, d));
        });
        REQUIRE(check_measure(m).empty());
        std::array<int, 4> base = random_ordered_base(rng, cfg);
        CrossRatioTable t = crossratio_from_measure(m, base);
        CHECK(check_axioms(t).empty());
        CHECK(t.at(base[0], base[2], base[1], base[3]) == 0);
        CHECK(psi(cfg, t).same_values(m));
    }
}

namespace {
// rank of sampled measure value vectors by plain elimination
size_t sample_rank(std::vector<std::vector<Rational>> vecs) {
    size_t rank = 0;
    for (size_t i = 0; i < vecs.size(); ++i) {
        auto row = vecs[i];
        for (size_t r = 0; r < rank; ++r) {
            size_t pc = 0;
            while (pc < vecs[r].size() && vecs[r][pc] == 0) ++pc;
            if (pc < row.size() && row[pc] != 0) {
                Rational f = row[pc] / vecs[r][pc];
                for (size_t j = 0; j < row.size(); ++j) row[j] -= f * vecs[r][j];
            }
        }
        bool nonzero = false;
        for (const auto& x : row) nonzero |= (x != 0);
        if (nonzero) vecs[rank++] = row;
    }
    return rank;
}
}  // namespace

TEST_CASE("measure space dimension matches the table space minus the kernel") {
    // the space of valid measures on n cyclic points has dimension
    // C(n,2) - (n-1) - 1; atom measures span it
    Lcg64 rng(41);
    for (int n : {4, 5, 6}) {
        Configuration cfg = line_config(n);
        std::vector<std::vector<Rational>> vecs;
        for (int trial = 0; trial < 4 * n; ++trial) {
            RectMeasure m = random_atom_measure(rng, cfg);
            std::vector<Rational> v;
            m.for_each_rect([&](int a, int b, int c, int d) { v.push_back(m.at(a, b, c, d)); });
            vecs.push_back(std::move(v));
        }
        size_t expect = static_cast<size_t>(n * (n - 1) / 2 - (n - 1) - 1);
        CHECK(sample_rank(std::move(vecs)) == expect);
    }
}
