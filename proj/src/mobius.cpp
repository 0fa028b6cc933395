#include "xrc/mobius.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>

namespace xrc {

namespace {
Int gcd4(const Int& a, const Int& b, const Int& c, const Int& d) {
    using boost::multiprecision::gcd;
    return gcd(gcd(abs(a), abs(b)), gcd(abs(c), abs(d)));
}
}  // namespace

MobiusMap::MobiusMap() : p_(1), q_(0), r_(0), s_(1) {}

MobiusMap::MobiusMap(const Rational& p, const Rational& q, const Rational& r, const Rational& s) {
    // Clear denominators to an integer representative.
    Int l = denominator(p);
    l = boost::multiprecision::lcm(l, denominator(q));
    l = boost::multiprecision::lcm(l, denominator(r));
    l = boost::multiprecision::lcm(l, denominator(s));
    p_ = numerator(p) * (l / denominator(p));
    q_ = numerator(q) * (l / denominator(q));
    r_ = numerator(r) * (l / denominator(r));
    s_ = numerator(s) * (l / denominator(s));
    canonicalize();
}

void MobiusMap::canonicalize() {
    if (det() <= 0)
        throw DomainError("orientation-reversing: Mobius maps require positive determinant");
    Int g = gcd4(p_, q_, r_, s_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
        s_ /= g;
    }
    const Int* first = nullptr;
    for (const Int* e : {&p_, &q_, &r_, &s_})
        if (*e != 0) {
            first = e;
            break;
        }
    if (first && *first < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
        s_ = -s_;
    }
}

MobiusMap MobiusMap::parse(std::string_view s) {
    std::string buf(s);
    for (char& c : buf)
        if (c == '/') c = ' ';
    std::istringstream is(buf);
    std::string a, b, c, d, extra;
    if (!(is >> a >> b >> c >> d) || (is >> extra))
        throw DomainError("parse: Mobius map must be \"p q / r s\"");
    return MobiusMap(parse_rational(a), parse_rational(b), parse_rational(c), parse_rational(d));
}

std::string MobiusMap::str() const {
    std::ostringstream os;
    os << p_ << ' ' << q_ << " / " << r_ << ' ' << s_;
    return os.str();
}

BoundaryPoint MobiusMap::apply(const BoundaryPoint& x) const {
    if (x.is_infinity()) {
        if (r_ == 0) return BoundaryPoint::infinity();
        return BoundaryPoint(make_rational(p_, r_));
    }
    Rational num = Rational(p_) * x.value() + Rational(q_);
    Rational den = Rational(r_) * x.value() + Rational(s_);
    if (den == 0) return BoundaryPoint::infinity();
    return BoundaryPoint(num / den);
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
    MobiusMap m;
    m.p_ = p_ * o.p_ + q_ * o.r_;
    m.q_ = p_ * o.q_ + q_ * o.s_;
    m.r_ = r_ * o.p_ + s_ * o.r_;
    m.s_ = r_ * o.q_ + s_ * o.s_;
    m.canonicalize();
    return m;
}

MobiusMap MobiusMap::inverse() const {
    MobiusMap m;
    m.p_ = s_;
    m.q_ = -q_;
    m.r_ = -r_;
    m.s_ = p_;
    m.canonicalize();
    return m;
}

std::string map_class_name(MapClass c) {
    switch (c) {
        case MapClass::identity: return "identity";
        case MapClass::elliptic: return "elliptic";
        case MapClass::parabolic: return "parabolic";
        case MapClass::hyperbolic: return "hyperbolic";
    }
    return "?";
}

MapClass classify(const MobiusMap& m) {
    if (m.is_identity()) return MapClass::identity;
    Int disc = m.trace() * m.trace() - 4 * m.det();
    if (disc < 0) return MapClass::elliptic;
    if (disc == 0) return MapClass::parabolic;
    return MapClass::hyperbolic;
}

namespace {

bool is_perfect_square(const Int& x, Int& root) {
    if (x < 0) return false;
    root = boost::multiprecision::sqrt(x);
    return root * root == x;
}

// |M'(xi)| vs 1 at a rational fixed point: compare (r xi + s)^2 with det.
Stability stability_at(const MobiusMap& m, const BoundaryPoint& xi) {
    Rational sq;
    if (xi.is_infinity()) {
        // Conjugating by the inversion puts the derivative at (p/det)^-2 ...
        sq = Rational(m.p() * m.p());
    } else {
        Rational t = Rational(m.r()) * xi.value() + Rational(m.s());
        sq = t * t;
    }
    Rational d(m.det());
    if (sq > d) return Stability::attracting;
    if (sq < d) return Stability::repelling;
    return Stability::neutral;
}

}  // namespace

FixedPoints fixed_points(const MobiusMap& m) {
    if (m.is_identity()) throw DomainError("identity-map: every point is fixed");
    FixedPoints out;
    const Int &p = m.p(), &q = m.q(), &r = m.r(), &s = m.s();
    if (r == 0) {
        // x = infinity is fixed; finite fixed points solve (s - p) x = q.
        if (s == p) {
            out.exact.push_back({BoundaryPoint::infinity(), Stability::neutral});
            return out;  // parabolic translation
        }
        BoundaryPoint fin(make_rational(q, s - p));
        BoundaryPoint inf = BoundaryPoint::infinity();
        out.exact.push_back({inf, stability_at(m, inf)});
        out.exact.push_back({fin, stability_at(m, fin)});
        return out;
    }
    // r x^2 + (s - p) x - q = 0.
    Int disc = m.trace() * m.trace() - 4 * m.det();
    if (disc < 0) return out;  // elliptic, no real fixed points
    if (disc == 0) {
        BoundaryPoint fp(make_rational(p - s, 2 * r));
        out.exact.push_back({fp, Stability::neutral});
        return out;
    }
    Int root;
    if (is_perfect_square(disc, root)) {
        BoundaryPoint x1(make_rational(p - s + root, 2 * r));
        BoundaryPoint x2(make_rational(p - s - root, 2 * r));
        out.exact.push_back({x1, stability_at(m, x1)});
        out.exact.push_back({x2, stability_at(m, x2)});
        return out;
    }
    // Irrational pair: isolate each root by bisection around the vertex.
    out.exactly_representable = false;
    Rational a(r), b(s - p), c(-q);
    auto f = [&](const Rational& x) { return a * x * x + b * x + c; };
    Rational vertex = -b / (2 * a);
    Rational radius(1);
    while (f(vertex - radius) * f(vertex) >= 0 || f(vertex + radius) * f(vertex) >= 0)
        radius *= 2;
    auto isolate = [&](Rational lo, Rational hi) {
        for (int it = 0; it < 24; ++it) {
            Rational mid = (lo + hi) / 2;
            Rational fm = f(mid);
            if (fm == 0) break;  // cannot happen for non-square disc
            if (sign(fm) == sign(f(lo)))
                lo = mid;
            else
                hi = mid;
        }
        return std::pair<Rational, Rational>(lo, hi);
    };
    auto [llo, lhi] = isolate(vertex - radius, vertex);
    auto [rlo, rhi] = isolate(vertex, vertex + radius);
    // The attracting fixed point is ((p-s) + sign(tr) sqrt(disc)) / (2r); it
    // is the larger root exactly when sign(tr) == sign(r).
    bool attract_larger = (sign(m.trace()) == sign(Int(r)));
    out.isolated.push_back({llo, lhi, attract_larger ? Stability::repelling : Stability::attracting});
    out.isolated.push_back({rlo, rhi, attract_larger ? Stability::attracting : Stability::repelling});
    return out;
}

Rational chordal_sq(const BoundaryPoint& x, const BoundaryPoint& y) {
    if (x.is_infinity() && y.is_infinity()) return Rational(0);
    if (x.is_infinity()) return Rational(1) / (1 + y.value() * y.value());
    if (y.is_infinity()) return Rational(1) / (1 + x.value() * x.value());
    Rational d = x.value() - y.value();
    return d * d / ((1 + x.value() * x.value()) * (1 + y.value() * y.value()));
}

namespace {

// z lies in the open arc from u to v that avoids w.
bool in_arc_avoiding(const BoundaryPoint& u, const BoundaryPoint& z, const BoundaryPoint& v,
                     const BoundaryPoint& w) {
    if (z == u || z == v || z == w || u == v || u == w || v == w) return false;
    return orientation(u, z, v) != orientation(u, w, v);
}

bool inside_interval(const BoundaryPoint& y, const IsolatedRoot& r) {
    return !y.is_infinity() && y.value() > r.lo && y.value() < r.hi;
}

}  // namespace

NorthSouthReport north_south_check(const MobiusMap& m, int sample_count, int max_iter) {
    if (classify(m) != MapClass::hyperbolic)
        throw DomainError("not-hyperbolic: north-south dynamics requires a hyperbolic map");
    auto fp = fixed_points(m);
    NorthSouthReport rep;

    const Rational close(1, 1000000);  // squared chordal arrival threshold
    auto check_sample = [&](const BoundaryPoint& start) -> bool {
        BoundaryPoint y = start;
        bool arrived = false;
        for (int it = 0; it < max_iter; ++it) {
            BoundaryPoint next = m.apply(y);
            if (fp.exactly_representable) {
                const BoundaryPoint& a =
                    fp.exact[fp.exact[0].stability == Stability::attracting ? 0 : 1].point;
                const BoundaryPoint& r =
                    fp.exact[fp.exact[0].stability == Stability::attracting ? 1 : 0].point;
                if (arrived || chordal_sq(next, a) <= close) {
                    arrived = true;
                } else if (next != a && !in_arc_avoiding(y, next, a, r)) {
                    return false;  // non-monotone step
                }
            } else {
                const IsolatedRoot& ia =
                    fp.isolated[fp.isolated[0].stability == Stability::attracting ? 0 : 1];
                const IsolatedRoot& ir =
                    fp.isolated[fp.isolated[0].stability == Stability::attracting ? 1 : 0];
                if (arrived) {
                    if (!inside_interval(next, ia)) return false;  // left the attractor interval
                } else if (inside_interval(next, ia)) {
                    arrived = true;
                } else {
                    const BoundaryPoint ams[2] = {BoundaryPoint(ia.lo), BoundaryPoint(ia.hi)};
                    const BoundaryPoint rms[2] = {BoundaryPoint(ir.lo), BoundaryPoint(ir.hi)};
                    bool monotone = false;
                    for (const auto& am : ams)
                        for (const auto& rm : rms) monotone |= in_arc_avoiding(y, next, am, rm);
                    if (!monotone) return false;
                }
            }
            y = next;
        }
        return arrived;
    };

    for (long cand = 0; rep.samples_checked < sample_count; ++cand) {
        for (long sgn : {1L, -1L}) {
            if (cand == 0 && sgn < 0) continue;
            if (rep.samples_checked >= sample_count) break;
            BoundaryPoint x(sgn * cand);
            bool skip = false;
            if (fp.exactly_representable) {
                for (const auto& f : fp.exact) skip |= (x == f.point);
            } else {
                for (const auto& r : fp.isolated) skip |= inside_interval(x, r);
            }
            if (skip) continue;
            ++rep.samples_checked;
            if (!check_sample(x)) {
                rep.ok = false;
                rep.detail = "sample " + x.str() + " failed the north-south check";
                return rep;
            }
        }
    }
    return rep;
}

std::vector<InvarianceViolation> invariance_check_canonical(const Configuration& config,
                                                            const MobiusMap& m) {
    std::vector<BoundaryPoint> image;
    image.reserve(config.size());
    for (int i = 0; i < config.size(); ++i) image.push_back(m.apply(config.point(i)));
    Configuration mapped(std::move(image));
    std::vector<InvarianceViolation> out;
    const int n = config.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                    int before = config.canonical_value(i, j, k, l);
                    int after = mapped.canonical_value(i, j, k, l);
                    if (before != after)
                        out.push_back({{i, j, k, l}, Rational(before), Rational(after)});
                }
    return out;
}

std::vector<InvarianceViolation> invariance_check_table(const Configuration& config,
                                                        const CrossRatioTable& t,
                                                        const MobiusMap& m) {
    if (t.size() != config.size()) throw DomainError("size-error: table/configuration mismatch");
    const int n = config.size();
    std::vector<int> perm(n, -1);
    for (int i = 0; i < n; ++i) {
        BoundaryPoint im = m.apply(config.point(i));
        for (int j = 0; j < n; ++j)
            if (config.point(j) == im) {
                perm[i] = j;
                break;
            }
        if (perm[i] < 0)
            throw DomainError("orbit-escape: map moves a configuration point outside the configuration");
    }
    std::vector<InvarianceViolation> out;
    t.for_each_tuple([&](int i, int j, int k, int l) {
        const Rational& before = t.at(i, j, k, l);
        const Rational& after = t.at(perm[i], perm[j], perm[k], perm[l]);
        if (before != after) out.push_back({{i, j, k, l}, before, after});
    });
    return out;
}

}  // namespace xrc
