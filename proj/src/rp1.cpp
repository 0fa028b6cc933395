#include "xrc/rp1.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace xrc {

std::string rational_str(const Rational& x) {
    std::ostringstream os;
    os << numerator(x);
    if (denominator(x) != 1) os << '/' << denominator(x);
    return os.str();
}

Rational parse_rational(std::string_view s) {
    if (s.empty()) throw DomainError("parse_rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
        Int num(std::string(s.substr(0, slash)));
        Int den(std::string(s.substr(slash + 1)));
        if (den == 0) throw DomainError("parse_rational: zero denominator");
        return make_rational(num, den);
    } catch (const std::exception& e) {
        throw DomainError(std::string("parse_rational: cannot parse '") + std::string(s) + "'");
    }
}

std::string BoundaryPoint::str() const {
    if (!finite_) return "inf";
    return rational_str(value_);
}

BoundaryPoint BoundaryPoint::parse(std::string_view s) {
    if (s == "inf" || s == "Inf" || s == "INF") return infinity();
    return BoundaryPoint(parse_rational(s));
}

bool BoundaryPoint::linear_less(const BoundaryPoint& a, const BoundaryPoint& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return a.value() < b.value();
}

int orientation(const BoundaryPoint& x, const BoundaryPoint& y, const BoundaryPoint& z) {
    if (x == y || y == z || x == z)
        throw DomainError("duplicate-point: orientation requires pairwise distinct points");
    // With all points finite the triple is positively ordered iff
    // (y-x)(z-y)(z-x) > 0; an ∞ argument is the corresponding limit.
    if (x.is_infinity()) return sign(Rational(z.value() - y.value()));
    if (y.is_infinity()) return sign(Rational(x.value() - z.value()));
    if (z.is_infinity()) return sign(Rational(y.value() - x.value()));
    Rational p = (y.value() - x.value()) * (z.value() - y.value()) * (z.value() - x.value());
    return sign(p);
}

bool cyclic_ordered(const BoundaryPoint& x, const BoundaryPoint& y, const BoundaryPoint& z) {
    return orientation(x, y, z) > 0;
}

bool quadruple_ordered(const BoundaryPoint& a, const BoundaryPoint& b,
                       const BoundaryPoint& c, const BoundaryPoint& d) {
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw DomainError("duplicate-point: quadruple_ordered requires pairwise distinct points");
    // For distinct circle points the two leading triples force the rest.
    return cyclic_ordered(a, b, c) && cyclic_ordered(b, c, d);
}

Linking linking(const BoundaryPoint& a, const BoundaryPoint& b,
                const BoundaryPoint& c, const BoundaryPoint& d) {
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw DomainError("duplicate-point: linking requires pairwise distinct points");
    // c,d in the same component of RP^1 \ {a,b} iff they see {a,b} with the
    // same orientation.
    if (orientation(a, c, b) == orientation(a, d, b)) return Linking::unlinked;
    return quadruple_ordered(a, c, b, d) ? Linking::positively_linked : Linking::negatively_linked;
}

Rational canonical_cross_ratio(const BoundaryPoint& a, const BoundaryPoint& b,
                               const BoundaryPoint& c, const BoundaryPoint& d) {
    if (a == b || c == d) {
        // Degenerate extension by 0; the remaining points must stay apart.
        bool cross = (a == c) || (a == d) || (b == c) || (b == d);
        if (cross)
            throw DomainError("duplicate-point: canonical cross ratio allows only a==b or c==d");
        return Rational(0);
    }
    switch (linking(a, b, c, d)) {
        case Linking::unlinked: return Rational(0);
        case Linking::positively_linked: return Rational(1);
        case Linking::negatively_linked: return Rational(-1);
    }
    return Rational(0);  // unreachable
}

Rational canonical_orientation_cochain(const BoundaryPoint& a, const BoundaryPoint& b,
                                       const BoundaryPoint& c) {
    if (a == b || b == c || a == c) return Rational(0);
    return orientation(a, b, c) > 0 ? Rational(1, 2) : Rational(-1, 2);
}

Configuration::Configuration(std::vector<BoundaryPoint> points) : points_(std::move(points)) {
    const int n = static_cast<int>(points_.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points_[i] == points_[j])
                throw DomainError("duplicate-point: configuration points must be pairwise distinct");
    by_pos_.resize(n);
    std::iota(by_pos_.begin(), by_pos_.end(), 0);
    std::sort(by_pos_.begin(), by_pos_.end(), [&](int i, int j) {
        return BoundaryPoint::linear_less(points_[i], points_[j]);
    });
    pos_.assign(n, 0);
    for (int p = 0; p < n; ++p) pos_[by_pos_[p]] = p;
}

void Configuration::require_label(int label) const {
    if (label < 0 || label >= size()) throw DomainError("unknown-label: out of range");
}

void Configuration::require_distinct4(int i, int j, int k, int l) const {
    require_label(i);
    require_label(j);
    require_label(k);
    require_label(l);
    if (i == j || i == k || i == l || j == k || j == l || k == l)
        throw DomainError("duplicate-point: labels must be pairwise distinct");
}

bool Configuration::cyclically_ordered(int i, int j, int k) const {
    require_label(i);
    require_label(j);
    require_label(k);
    if (i == j || j == k || i == k)
        throw DomainError("duplicate-point: labels must be pairwise distinct");
    const int n = size();
    int a = ((pos_[j] - pos_[i]) % n + n) % n;
    int b = ((pos_[k] - pos_[i]) % n + n) % n;
    return a < b;
}

bool Configuration::quadruple_cyclically_ordered(int i, int j, int k, int l) const {
    require_distinct4(i, j, k, l);
    const int n = size();
    int a = ((pos_[j] - pos_[i]) % n + n) % n;
    int b = ((pos_[k] - pos_[i]) % n + n) % n;
    int c = ((pos_[l] - pos_[i]) % n + n) % n;
    return a < b && b < c;
}

Linking Configuration::linking_labels(int i, int j, int k, int l) const {
    require_distinct4(i, j, k, l);
    const int n = size();
    int pj = ((pos_[j] - pos_[i]) % n + n) % n;
    int pk = ((pos_[k] - pos_[i]) % n + n) % n;
    int pl = ((pos_[l] - pos_[i]) % n + n) % n;
    bool k_inside = pk < pj;
    bool l_inside = pl < pj;
    if (k_inside == l_inside) return Linking::unlinked;
    // Linked; (i,k,j,l) ordered iff k is the one inside the arc (i,j).
    return k_inside ? Linking::positively_linked : Linking::negatively_linked;
}

int Configuration::canonical_value(int i, int j, int k, int l) const {
    switch (linking_labels(i, j, k, l)) {
        case Linking::unlinked: return 0;
        case Linking::positively_linked: return 1;
        case Linking::negatively_linked: return -1;
    }
    return 0;  // unreachable
}

}  // namespace xrc
