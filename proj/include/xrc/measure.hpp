#pragma once

#include <array>
#include <string>
#include <vector>

#include "xrc/cocycle.hpp"

namespace xrc {

/// A finitely additive flip-antiinvariant signed measure on pairs of disjoint
/// half-open arcs with endpoints in a configuration. A rectangle
/// [a,b) x [c,d) with pairwise distinct endpoints is disjoint exactly when
/// (a,b,c,d) is cyclically ordered, so values are keyed by those quadruples.
class RectMeasure {
public:
    explicit RectMeasure(Configuration config);

    const Configuration& config() const { return config_; }
    int size() const { return config_.size(); }

    bool admissible(int a, int b, int c, int d) const;

    // Value of mu[a,b) x [c,d); throws on inadmissible rectangles.
    const Rational& at(int a, int b, int c, int d) const;
    void set(int a, int b, int c, int d, const Rational& v);

    bool same_values(const RectMeasure& o) const;

    // Visits every admissible rectangle (a,b,c,d).
    template <class F>
    void for_each_rect(F&& f) const {
        const int n = size();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        if (a != b && a != c && a != d && b != c && b != d && c != d &&
                            config_.quadruple_cyclically_ordered(a, b, c, d))
                            f(a, b, c, d);
    }

private:
    int index(int a, int b, int c, int d) const;
    Configuration config_;
    std::vector<Rational> v_;
};

struct MeasureViolation {
    enum class Kind { additivity, flip };
    Kind kind;
    std::array<int, 5> labels;  // additivity: (a,b,b',c,d); flip: (a,b,c,d,-1)
    std::string describe() const;
};

// Exhaustive report over all additivity instances
// mu[a,b)x[c,d) + mu[b,b')x[c,d) = mu[a,b')x[c,d) and all flip instances
// mu[a,b)x[c,d) = -mu[c,d)x[a,b).
std::vector<MeasureViolation> check_measure(const RectMeasure& m);

// mu[a,b)x[c,d) = rho[a,b)*sigma[c,d) - sigma[a,b)*rho[c,d), where rho[x,y)
// sums the atom weights of configuration points inside the half-open arc.
RectMeasure measure_from_atoms(const Configuration& config, const std::vector<Rational>& rho,
                               const std::vector<Rational>& sigma);

// The forward correspondence: mu[a,b)x[c,d) = t(a,b,c,d) on ordered
// quadruples. Requires the table to pass the axioms.
RectMeasure psi(const Configuration& config, const CrossRatioTable& t);

// The constructive inverse: rebuilds the unique anti-symmetric cross ratio
// that induces m and vanishes at the linked rearrangement (a,c,b,d) of the
// given ordered base quadruple (a,b,c,d).
CrossRatioTable crossratio_from_measure(const RectMeasure& m, const std::array<int, 4>& base);

}  // namespace xrc
