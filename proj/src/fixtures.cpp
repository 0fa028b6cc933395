#include "xrc/fixtures.hpp"

#include <algorithm>

namespace xrc {

Configuration random_configuration(Lcg64& rng, int n, bool allow_infinity) {
    std::vector<BoundaryPoint> pts;
    while (static_cast<int>(pts.size()) < n) {
        BoundaryPoint cand = (allow_infinity && rng.below(8) == 0)
                                 ? BoundaryPoint::infinity()
                                 : BoundaryPoint(rng.rational(24, 8));
        if (std::find(pts.begin(), pts.end(), cand) == pts.end()) pts.push_back(cand);
    }
    return Configuration(std::move(pts));
}

MobiusMap random_mobius(Lcg64& rng) {
    for (;;) {
        long long p = rng.int_in(-9, 9), q = rng.int_in(-9, 9);
        long long r = rng.int_in(-9, 9), s = rng.int_in(-9, 9);
        long long det = p * s - q * r;
        if (det == 0) continue;
        if (det < 0) {
            std::swap(p, q);
            std::swap(r, s);
        }
        return MobiusMap(Rational(p), Rational(q), Rational(r), Rational(s));
    }
}

RectMeasure random_atom_measure(Lcg64& rng, const Configuration& config) {
    std::vector<Rational> rho, sigma;
    for (int i = 0; i < config.size(); ++i) rho.push_back(rng.rational(6, 4));
    for (int i = 0; i < config.size(); ++i) sigma.push_back(rng.rational(6, 4));
    return measure_from_atoms(config, rho, sigma);
}

std::array<int, 4> random_ordered_base(Lcg64& rng, const Configuration& config) {
    const int n = config.size();
    if (n < 4) throw DomainError("size-error: need at least 4 points for a base quadruple");
    std::array<int, 4> labels{};
    int chosen = 0;
    while (chosen < 4) {
        int cand = static_cast<int>(rng.below(n));
        bool dup = false;
        for (int i = 0; i < chosen; ++i) dup = dup || labels[i] == cand;
        if (!dup) labels[chosen++] = cand;
    }
    std::sort(labels.begin(), labels.end(),
              [&](int a, int b) { return config.position(a) < config.position(b); });
    int rot = static_cast<int>(rng.below(4));
    std::rotate(labels.begin(), labels.begin() + rot, labels.end());
    return labels;
}

CrossRatioTable random_valid_table(Lcg64& rng, const Configuration& config) {
    RectMeasure m = random_atom_measure(rng, config);
    std::array<int, 4> base = random_ordered_base(rng, config);
    CrossRatioTable t = crossratio_from_measure(m, base);
    t.add_scaled(CrossRatioTable::canonical(config), rng.rational(5, 3));
    return t;
}

AltCochain2 random_alternating_cocycle(Lcg64& rng, int n) {
    Cochain1 b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational v = rng.rational(6, 4);
            b.set(i, j, v);
            b.set(j, i, -v);
        }
    AltCochain2 phi(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) phi.set(i, j, k, coboundary1_value(b, i, j, k));
    return phi;
}

}  // namespace xrc
