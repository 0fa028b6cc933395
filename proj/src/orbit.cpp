#include "xrc/orbit.hpp"

#include <map>
#include <sstream>
#include <unordered_map>

namespace xrc {

BoundaryCochain canonical_boundary_cochain() {
    return [](const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c) {
        return canonical_orientation_cochain(a, b, c);
    };
}

Rational orbit_cocycle(const BoundaryCochain& phi, const WordEvaluator& ev,
                       const BoundaryPoint& xi, const GroupWord& w1, const GroupWord& w2,
                       const GroupWord& w3) {
    return phi(ev.apply(w1, xi), ev.apply(w2, xi), ev.apply(w3, xi));
}

namespace {
void require_distinct_bracket(const BoundaryPoint& a, const BoundaryPoint& b,
                              const BoundaryPoint& c, const BoundaryPoint& d) {
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw DomainError("collision: nu-bracket requires four pairwise distinct points");
}
}  // namespace

Rational nu_cochain_canonical(const WordEvaluator& ev, const BoundaryPoint& xi,
                              const BoundaryPoint& eta, const GroupWord& w) {
    BoundaryPoint wxi = ev.apply(w, xi);
    BoundaryPoint weta = ev.apply(w, eta);
    require_distinct_bracket(wxi, eta, xi, weta);
    return canonical_cross_ratio(wxi, eta, xi, weta);
}

Rational nu_cochain_table(const Configuration& config, const CrossRatioTable& t,
                          const WordEvaluator& ev, const BoundaryPoint& xi,
                          const BoundaryPoint& eta, const GroupWord& w) {
    if (t.size() != config.size()) throw DomainError("size-error: table/configuration mismatch");
    BoundaryPoint wxi = ev.apply(w, xi);
    BoundaryPoint weta = ev.apply(w, eta);
    require_distinct_bracket(wxi, eta, xi, weta);
    auto find = [&](const BoundaryPoint& p) {
        for (int i = 0; i < config.size(); ++i)
            if (config.point(i) == p) return i;
        throw DomainError("orbit-escape: bracket point is not in the configuration");
    };
    return t.at(find(wxi), find(eta), find(xi), find(weta));
}

Rational prism_transfer(const BoundaryCochain& phi, const WordEvaluator& ev,
                        const BoundaryPoint& xi, const BoundaryPoint& eta, const GroupWord& w1,
                        const GroupWord& w2) {
    BoundaryPoint a1 = ev.apply(w1, xi), b1 = ev.apply(w1, eta);
    BoundaryPoint a2 = ev.apply(w2, xi), b2 = ev.apply(w2, eta);
    return phi(a1, b1, b2) - phi(a1, a2, b2);
}

namespace {

// Deduplicated orbit points plus a memo for cochain values by point id, so
// exhaustive word scans cost table lookups instead of rational arithmetic.
struct PointTable {
    std::vector<BoundaryPoint> points;
    std::map<std::pair<bool, Rational>, int> ids;

    int id_of(const BoundaryPoint& p) {
        auto key = std::make_pair(p.is_infinity(), p.is_infinity() ? Rational(0) : p.value());
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(points.size());
        points.push_back(p);
        ids.emplace(key, id);
        return id;
    }
};

class CochainMemo {
public:
    CochainMemo(const BoundaryCochain& phi, const PointTable& pts) : phi_(phi), pts_(pts) {}

    const Rational& at(int a, int b, int c) {
        long long n = static_cast<long long>(pts_.points.size());
        long long key = (a * n + b) * n + c;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Rational v = phi_(pts_.points[a], pts_.points[b], pts_.points[c]);
        return memo_.emplace(key, std::move(v)).first->second;
    }

private:
    const BoundaryCochain& phi_;
    const PointTable& pts_;
    std::unordered_map<long long, Rational> memo_;
};

std::string word_tuple(std::initializer_list<const GroupWord*> ws) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const GroupWord* w : ws) {
        if (!first) os << ',';
        os << w->str();
        first = false;
    }
    os << ')';
    return os.str();
}

}  // namespace

OrbitCheckResult orbit_cocycle_check(const BoundaryCochain& phi, const WordEvaluator& ev,
                                     const BoundaryPoint& xi, int max_length) {
    auto words = reduced_words_up_to(max_length);
    const int W = static_cast<int>(words.size());
    PointTable pts;
    std::vector<int> pid(W);
    for (int i = 0; i < W; ++i) pid[i] = pts.id_of(ev.apply(words[i], xi));
    CochainMemo mu(phi, pts);

    OrbitCheckResult res;
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (int i = 0; i < W && res.alternating; ++i)
        for (int j = i; j < W && res.alternating; ++j)
            for (int k = j; k < W; ++k) {
                ++res.triples;
                int idx[3] = {pid[i], pid[j], pid[k]};
                const Rational& base = mu.at(idx[0], idx[1], idx[2]);
                for (int p = 0; p < 6; ++p) {
                    const Rational& v = mu.at(idx[perms[p][0]], idx[perms[p][1]], idx[perms[p][2]]);
                    bool even = p < 3;
                    if (v != (even ? base : Rational(-base))) {
                        res.alternating = false;
                        res.witness = word_tuple({&words[i], &words[j], &words[k]});
                        break;
                    }
                }
            }
    if (!res.alternating) {
        res.closed = false;
        return res;
    }
    for (int i = 0; i < W && res.closed; ++i)
        for (int j = i + 1; j < W && res.closed; ++j)
            for (int k = j + 1; k < W && res.closed; ++k)
                for (int l = k + 1; l < W; ++l) {
                    Rational d = mu.at(pid[j], pid[k], pid[l]) - mu.at(pid[i], pid[k], pid[l]) +
                                 mu.at(pid[i], pid[j], pid[l]) - mu.at(pid[i], pid[j], pid[k]);
                    if (d != 0) {
                        res.closed = false;
                        res.witness = word_tuple({&words[i], &words[j], &words[k], &words[l]});
                        break;
                    }
                }
    return res;
}

PrismCheckResult prism_coboundary_check(const BoundaryCochain& phi, const WordEvaluator& ev,
                                        const BoundaryPoint& xi, const BoundaryPoint& eta,
                                        int max_length) {
    auto words = reduced_words_up_to(max_length);
    const int W = static_cast<int>(words.size());
    PointTable pts;
    std::vector<int> pxi(W), peta(W);
    for (int i = 0; i < W; ++i) {
        pxi[i] = pts.id_of(ev.apply(words[i], xi));
        peta[i] = pts.id_of(ev.apply(words[i], eta));
    }
    CochainMemo val(phi, pts);
    // h(w1,w2) = phi(w1 xi, w1 eta, w2 eta) - phi(w1 xi, w2 xi, w2 eta)
    std::vector<Rational> h(static_cast<size_t>(W) * W);
    for (int i = 0; i < W; ++i)
        for (int j = 0; j < W; ++j)
            h[i * W + j] = val.at(pxi[i], peta[i], peta[j]) - val.at(pxi[i], pxi[j], peta[j]);

    PrismCheckResult res;
    for (int i = 0; i < W; ++i)
        for (int j = 0; j < W; ++j)
            for (int k = 0; k < W; ++k) {
                ++res.triples;
                Rational lhs = val.at(peta[i], peta[j], peta[k]) - val.at(pxi[i], pxi[j], pxi[k]);
                Rational rhs = h[j * W + k] - h[i * W + k] + h[i * W + j];
                if (lhs != rhs) {
                    res.ok = false;
                    res.witness = word_tuple({&words[i], &words[j], &words[k]});
                    res.lhs = lhs;
                    res.rhs = rhs;
                    return res;
                }
            }
    return res;
}

}  // namespace xrc
