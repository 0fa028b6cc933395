#include "xrc/measure.hpp"

#include <sstream>

namespace xrc {

RectMeasure::RectMeasure(Configuration config) : config_(std::move(config)) {
    const size_t n = static_cast<size_t>(config_.size());
    v_.assign(n * n * n * n, Rational(0));
}

bool RectMeasure::admissible(int a, int b, int c, int d) const {
    const int n = size();
    if (a < 0 || b < 0 || c < 0 || d < 0 || a >= n || b >= n || c >= n || d >= n) return false;
    if (a == b || a == c || a == d || b == c || b == d || c == d) return false;
    return config_.quadruple_cyclically_ordered(a, b, c, d);
}

int RectMeasure::index(int a, int b, int c, int d) const {
    if (!admissible(a, b, c, d))
        throw DomainError("inadmissible-rectangle: arcs must be disjoint with distinct endpoints");
    const int n = size();
    return ((a * n + b) * n + c) * n + d;
}

const Rational& RectMeasure::at(int a, int b, int c, int d) const {
    return v_[index(a, b, c, d)];
}

void RectMeasure::set(int a, int b, int c, int d, const Rational& v) {
    v_[index(a, b, c, d)] = v;
}

bool RectMeasure::same_values(const RectMeasure& o) const {
    if (o.size() != size()) return false;
    bool eq = true;
    for_each_rect([&](int a, int b, int c, int d) {
        if (at(a, b, c, d) != o.at(a, b, c, d)) eq = false;
    });
    return eq;
}

std::string MeasureViolation::describe() const {
    std::ostringstream os;
    if (kind == Kind::additivity)
        os << "additivity violated at [" << labels[0] << ',' << labels[1] << ")+[" << labels[1]
           << ',' << labels[2] << ") x [" << labels[3] << ',' << labels[4] << ")";
    else
        os << "flip-antiinvariance violated at [" << labels[0] << ',' << labels[1] << ") x ["
           << labels[2] << ',' << labels[3] << ")";
    return os.str();
}

std::vector<MeasureViolation> check_measure(const RectMeasure& m) {
    std::vector<MeasureViolation> out;
    const int n = m.size();
    const Configuration& cfg = m.config();
    m.for_each_rect([&](int a, int b, int c, int d) {
        if (m.at(a, b, c, d) != -m.at(c, d, a, b))
            out.push_back({MeasureViolation::Kind::flip, {a, b, c, d, -1}});
    });
    // Additivity: [a,b') = [a,b) u [b,b') disjoint from [c,d) means
    // (a,b,b') and (a,b',c,d) are cyclically ordered.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int bp = 0; bp < n; ++bp) {
                if (a == b || a == bp || b == bp) continue;
                if (!cfg.cyclically_ordered(a, b, bp)) continue;
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        if (c == d || c == a || c == b || c == bp || d == a || d == b || d == bp)
                            continue;
                        if (!cfg.quadruple_cyclically_ordered(a, bp, c, d)) continue;
                        if (m.at(a, b, c, d) + m.at(b, bp, c, d) != m.at(a, bp, c, d))
                            out.push_back({MeasureViolation::Kind::additivity, {a, b, bp, c, d}});
                    }
            }
    return out;
}

namespace {
// Sum of weights over configuration points in the half-open arc [x,y).
Rational arc_sum(const Configuration& cfg, const std::vector<Rational>& w, int x, int y) {
    Rational s = w.at(x);
    for (int m = 0; m < cfg.size(); ++m) {
        if (m == x || m == y) continue;
        if (cfg.cyclically_ordered(x, m, y)) s += w[m];
    }
    return s;
}
}  // namespace

RectMeasure measure_from_atoms(const Configuration& config, const std::vector<Rational>& rho,
                               const std::vector<Rational>& sigma) {
    if (static_cast<int>(rho.size()) != config.size() ||
        static_cast<int>(sigma.size()) != config.size())
        throw DomainError("size-error: atom weights must match the configuration");
    RectMeasure m(config);
    m.for_each_rect([&](int a, int b, int c, int d) {
        Rational rab = arc_sum(config, rho, a, b);
        Rational scd = arc_sum(config, sigma, c, d);
        Rational sab = arc_sum(config, sigma, a, b);
        Rational rcd = arc_sum(config, rho, c, d);
        m.set(a, b, c, d, rab * scd - sab * rcd);
    });
    return m;
}

RectMeasure psi(const Configuration& config, const CrossRatioTable& t) {
    if (t.size() != config.size()) throw DomainError("size-error: table/configuration mismatch");
    auto bad = check_axioms(t);
    if (!bad.empty()) throw DomainError("axiom-violation: " + bad.front().describe());
    RectMeasure m(config);
    m.for_each_rect([&](int a, int b, int c, int d) { m.set(a, b, c, d, t.at(a, b, c, d)); });
    return m;
}

CrossRatioTable crossratio_from_measure(const RectMeasure& m, const std::array<int, 4>& base) {
    const Configuration& cfg = m.config();
    const int n = cfg.size();
    if (n < 4) throw DomainError("size-error: need at least 4 points");
    if (!m.admissible(base[0], base[1], base[2], base[3]))
        throw DomainError("base-not-ordered: base quadruple must be cyclically ordered");
    auto bad = check_measure(m);
    if (!bad.empty()) throw DomainError("measure-violation: " + bad.front().describe());

    // Atom decomposition: elementary arcs A_p = [q_p, q_{p+1}) in cyclic
    // position space. Ordered rectangles decompose into atom rectangles
    // A_p x A_r with p,r cyclically non-adjacent, so those atoms determine mu.
    auto label_at = [&](int p) { return cfg.label_at_position(((p % n) + n) % n); };
    std::vector<std::vector<Rational>> atom(n, std::vector<Rational>(n, Rational(0)));
    for (int p = 0; p < n; ++p)
        for (int r = 0; r < n; ++r) {
            int diff = ((r - p) % n + n) % n;
            if (diff <= 1 || diff == n - 1) continue;
            atom[p][r] = m.at(label_at(p), label_at(p + 1), label_at(r), label_at(r + 1));
        }
    // Fill the adjacent-atom slots so every row sums to zero; the one free
    // constant is the canonical-table coefficient fixed by the base below.
    std::vector<Rational> rowsum(n, Rational(0));
    for (int p = 0; p < n; ++p)
        for (int r = 0; r < n; ++r) rowsum[p] += atom[p][r];
    std::vector<Rational> x(n, Rational(0));
    for (int p = 1; p < n; ++p) x[p] = x[p - 1] - rowsum[p];
    if (x[n - 1] != rowsum[0])
        throw DomainError("measure-violation: atom row sums are inconsistent");
    for (int p = 0; p < n; ++p) {
        atom[p][(p + 1) % n] = x[p];
        atom[(p + 1) % n][p] = -x[p];
    }
    // Two-sided prefix sums give the 1-cochain b; the table is the cyclic sum
    // of b around the 4-cycle of the quadruple.
    std::vector<std::vector<Rational>> B(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (int p = 1; p <= n; ++p)
        for (int r = 1; r <= n; ++r)
            B[p][r] = B[p - 1][r] + B[p][r - 1] - B[p - 1][r - 1] + atom[p - 1][r - 1];

    CrossRatioTable t(n);
    t.for_each_tuple([&](int i, int j, int k, int l) {
        int pi = cfg.position(i), pj = cfg.position(j), pk = cfg.position(k), pl = cfg.position(l);
        // b(p,q) = B[p][q] is antisymmetric because the atom matrix is.
        Rational v = B[pi][pk] + B[pk][pj] + B[pj][pl] + B[pl][pi];
        t.set(i, j, k, l, v);
    });
    // Pin the free canonical coefficient: zero at the linked rearrangement
    // (a,c,b,d) of the base.
    CrossRatioTable t0 = CrossRatioTable::canonical(cfg);
    Rational c = t.at(base[0], base[2], base[1], base[3]);
    t.add_scaled(t0, -c);
    return t;
}

}  // namespace xrc
