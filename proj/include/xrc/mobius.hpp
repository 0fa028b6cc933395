#pragma once

#include <string>
#include <vector>

#include "xrc/cocycle.hpp"
#include "xrc/rp1.hpp"

namespace xrc {

/// An orientation-preserving rational Möbius map, stored as the canonical
/// integer representative of its projective class: content 1, first nonzero
/// entry of (p,q,r,s) positive, determinant > 0.
class MobiusMap {
public:
    MobiusMap();  // identity
    MobiusMap(const Rational& p, const Rational& q, const Rational& r, const Rational& s);

    static MobiusMap parse(std::string_view s);  // "p q / r s"
    std::string str() const;

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    const Int& s() const { return s_; }

    Int det() const { return p_ * s_ - q_ * r_; }
    Int trace() const { return p_ + s_; }
    bool is_identity() const { return p_ == 1 && q_ == 0 && r_ == 0 && s_ == 1; }

    // (p x + q) / (r x + s), total on RP^1.
    BoundaryPoint apply(const BoundaryPoint& x) const;

    MobiusMap compose(const MobiusMap& o) const;  // this after o
    MobiusMap inverse() const;

    bool operator==(const MobiusMap& o) const {
        return p_ == o.p_ && q_ == o.q_ && r_ == o.r_ && s_ == o.s_;
    }
    bool operator!=(const MobiusMap& o) const { return !(*this == o); }

private:
    void canonicalize();
    Int p_, q_, r_, s_;
};

inline MobiusMap operator*(const MobiusMap& a, const MobiusMap& b) { return a.compose(b); }

enum class MapClass { identity, elliptic, parabolic, hyperbolic };

std::string map_class_name(MapClass c);

// Sign of tr^2 - 4 det on the canonical representative.
MapClass classify(const MobiusMap& m);

enum class Stability { attracting, repelling, neutral };

struct FixedPointInfo {
    BoundaryPoint point;
    Stability stability;
};

struct IsolatedRoot {
    Rational lo, hi;  // open interval containing exactly one fixed point
    Stability stability;
};

struct FixedPoints {
    bool exactly_representable = true;
    std::vector<FixedPointInfo> exact;     // when representable (0, 1 or 2 points)
    std::vector<IsolatedRoot> isolated;    // hyperbolic with non-square discriminant
};

// Fixed points on RP^1 with attracting/repelling labels decided by exact
// comparison of the derivative magnitude. Hyperbolic maps with a non-square
// discriminant report the flag plus disjoint rational isolating intervals.
// Throws on the identity.
FixedPoints fixed_points(const MobiusMap& m);

// Squared chordal distance on RP^1: exact rational, 0 iff equal, with the
// point at infinity handled as the limit.
Rational chordal_sq(const BoundaryPoint& x, const BoundaryPoint& y);

struct NorthSouthReport {
    bool ok = true;
    int samples_checked = 0;
    std::string detail;  // first failing sample, empty when ok
};

// Desk-scale verification of north-south dynamics: iterating a hyperbolic map
// from sampled non-fixed integer points must move monotonically along the
// circle toward the attracting fixed point (never crossing the repelling one)
// and land close to it within the iteration budget. Works with exact fixed
// points or with their isolating intervals. Throws unless the map is
// hyperbolic.
NorthSouthReport north_south_check(const MobiusMap& m, int sample_count = 10, int max_iter = 60);

struct InvarianceViolation {
    std::array<int, 4> labels;
    Rational before, after;
};

// Verifies [Ma,Mb,Mc,Md]_0 = [a,b,c,d]_0 over all quadruples of the
// configuration (the canonical cross ratio evaluates at arbitrary points).
std::vector<InvarianceViolation> invariance_check_canonical(const Configuration& config,
                                                            const MobiusMap& m);

// Verifies t o M = t for a finite table; M must permute the configuration's
// point set, otherwise an orbit-escape error is thrown.
std::vector<InvarianceViolation> invariance_check_table(const Configuration& config,
                                                        const CrossRatioTable& t,
                                                        const MobiusMap& m);

}  // namespace xrc
