#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xrc/rational.hpp"

namespace xrc {

/// A point of the rational projective line RP^1 = Q ∪ {∞}, the exact model of
/// the boundary circle. Rational values are kept canonical (lowest terms,
/// positive denominator) by the underlying rational type, so equality is
/// structural.
class BoundaryPoint {
public:
    BoundaryPoint() : finite_(true), value_(0) {}
    explicit BoundaryPoint(Rational v) : finite_(true), value_(std::move(v)) {}
    explicit BoundaryPoint(long v) : finite_(true), value_(v) {}

    static BoundaryPoint infinity() {
        BoundaryPoint p;
        p.finite_ = false;
        p.value_ = 0;
        return p;
    }

    bool is_infinity() const { return !finite_; }

    const Rational& value() const {
        if (!finite_) throw DomainError("BoundaryPoint: value() on infinity");
        return value_;
    }

    bool operator==(const BoundaryPoint& o) const {
        return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
    }
    bool operator!=(const BoundaryPoint& o) const { return !(*this == o); }

    // Textual form: "p/q" in lowest terms, integers as "p", infinity as "inf".
    std::string str() const;
    static BoundaryPoint parse(std::string_view s);

    // Linear order with ∞ greatest; sorting by it lists points in the cyclic
    // order of the circle (increasing reals, then ∞, wrapping to -large).
    static bool linear_less(const BoundaryPoint& a, const BoundaryPoint& b);

private:
    bool finite_;
    Rational value_;
};

// Orientation of a triple of pairwise distinct boundary points: +1 if
// positively cyclically ordered, -1 otherwise. Throws on duplicates.
int orientation(const BoundaryPoint& x, const BoundaryPoint& y, const BoundaryPoint& z);

// True iff (x,y,z) is positively cyclically ordered on RP^1. Invariant under
// cyclic rotation, negated by any transposition.
bool cyclic_ordered(const BoundaryPoint& x, const BoundaryPoint& y, const BoundaryPoint& z);

// True iff all consecutive triples of (a,b,c,d) are positively ordered.
bool quadruple_ordered(const BoundaryPoint& a, const BoundaryPoint& b,
                       const BoundaryPoint& c, const BoundaryPoint& d);

enum class Linking {
    unlinked,           // c,d in the same component of RP^1 \ {a,b}
    positively_linked,  // (a,c,b,d) ordered
    negatively_linked,  // (a,d,b,c) ordered
};

Linking linking(const BoundaryPoint& a, const BoundaryPoint& b,
                const BoundaryPoint& c, const BoundaryPoint& d);

// The canonical cross ratio [a,b,c,d]_0 ∈ {-1,0,+1}: 0 when {a,b} and {c,d}
// do not link (in particular on ordered quadruples), +1 when (a,c,b,d) is
// ordered, -1 when (a,d,b,c) is ordered. Degenerate quadruples with a == b or
// c == d evaluate to 0; any other coincidence is an error.
Rational canonical_cross_ratio(const BoundaryPoint& a, const BoundaryPoint& b,
                               const BoundaryPoint& c, const BoundaryPoint& d);

// The canonical orientation cochain φ0 on the circle: +1/2 on positively
// ordered triples, -1/2 on negatively ordered ones, 0 whenever two of the
// three points coincide. Alternating and closed on arbitrary point tuples.
Rational canonical_orientation_cochain(const BoundaryPoint& a, const BoundaryPoint& b,
                                       const BoundaryPoint& c);

/// A finite labeled configuration of pairwise distinct boundary points.
/// Labels are list indices 0..n-1; the induced cyclic order is precomputed.
class Configuration {
public:
    explicit Configuration(std::vector<BoundaryPoint> points);

    int size() const { return static_cast<int>(points_.size()); }
    const BoundaryPoint& point(int label) const { return points_.at(label); }
    const std::vector<BoundaryPoint>& points() const { return points_; }

    // Cyclic position of a label (rank in the circular order, anchored at the
    // linearly smallest point).
    int position(int label) const { return pos_.at(label); }
    int label_at_position(int pos) const { return by_pos_.at(pos); }

    bool cyclically_ordered(int i, int j, int k) const;
    bool quadruple_cyclically_ordered(int i, int j, int k, int l) const;

    // Linking of {i,j} against {k,l}, computed from cyclic positions.
    Linking linking_labels(int i, int j, int k, int l) const;

    // Canonical cross ratio on labels; positional, no rational arithmetic.
    int canonical_value(int i, int j, int k, int l) const;

private:
    void require_label(int label) const;
    void require_distinct4(int i, int j, int k, int l) const;

    std::vector<BoundaryPoint> points_;
    std::vector<int> pos_;
    std::vector<int> by_pos_;
};

}  // namespace xrc
