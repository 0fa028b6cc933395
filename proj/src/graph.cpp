#include "xrc/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>

namespace xrc {

FiniteGraphSpace::FiniteGraphSpace(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n <= 0) throw DomainError("size-error: graph needs at least one vertex");
    adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("unknown-vertex: edge endpoint out of range");
        if (u == v) throw DomainError("invalid-edge: loops are not allowed");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    dist_.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::deque<int> queue{s};
        dist_[s][s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj_[u])
                if (dist_[s][v] < 0) {
                    dist_[s][v] = dist_[s][u] + 1;
                    queue.push_back(v);
                }
        }
        for (int v = 0; v < n; ++v)
            if (dist_[s][v] < 0) throw DomainError("disconnected: graph must be connected");
    }
}

void FiniteGraphSpace::require_vertex(int v) const {
    if (v < 0 || v >= n_) throw DomainError("unknown-vertex: out of range");
}

int FiniteGraphSpace::distance(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    return dist_[u][v];
}

const std::vector<int>& FiniteGraphSpace::neighbors(int v) const {
    require_vertex(v);
    return adj_[v];
}

int FiniteGraphSpace::eccentricity(int v) const {
    require_vertex(v);
    return *std::max_element(dist_[v].begin(), dist_[v].end());
}

Rational gromov_product(const FiniteGraphSpace& g, int y, int z, int x) {
    return Rational(g.distance(y, x) + g.distance(z, x) - g.distance(y, z), 2);
}

Rational four_point_delta(const FiniteGraphSpace& g) {
    const int n = g.size();
    int worst2 = 0;  // doubled deficiency
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    int xz2 = g.distance(x, w) + g.distance(z, w) - g.distance(x, z);
                    int xy2 = g.distance(x, w) + g.distance(y, w) - g.distance(x, y);
                    int yz2 = g.distance(y, w) + g.distance(z, w) - g.distance(y, z);
                    int def = std::min(xy2, yz2) - xz2;
                    if (def > worst2) worst2 = def;
                }
    return Rational(worst2, 2);
}

namespace {

// Per ordered pair: vertices on some enumerated geodesic, and for each vertex
// v the worst distance to an enumerated geodesic.
struct PairGeodesics {
    std::vector<char> on_geodesic;
    std::vector<int> max_dist;  // max over geodesics of d(v, geodesic)
    bool capped = false;
};

PairGeodesics enumerate_pair(const FiniteGraphSpace& g, int a, int b, long long cap) {
    const int n = g.size();
    PairGeodesics pg;
    pg.on_geodesic.assign(n, 0);
    pg.max_dist.assign(n, -1);
    std::vector<int> path;
    long long count = 0;
    // Walk backward from b along the predecessor structure toward a.
    std::function<void(int)> dfs = [&](int v) {
        if (count >= cap) {
            pg.capped = true;
            return;
        }
        path.push_back(v);
        if (v == a) {
            ++count;
            for (int u : path) pg.on_geodesic[u] = 1;
            for (int w = 0; w < n; ++w) {
                int dmin = std::numeric_limits<int>::max();
                for (int u : path) dmin = std::min(dmin, g.distance(w, u));
                pg.max_dist[w] = std::max(pg.max_dist[w], dmin);
            }
        } else {
            for (int u : g.neighbors(v))
                if (g.distance(a, u) == g.distance(a, v) - 1) dfs(u);
        }
        path.pop_back();
    };
    dfs(b);
    return pg;
}

}  // namespace

SlimDeltaResult slim_triangle_delta(const FiniteGraphSpace& g, long long cap_per_pair) {
    const int n = g.size();
    if (n > 64) throw DomainError("size-error: slim-triangle scan supports at most 64 vertices");
    std::map<std::pair<int, int>, PairGeodesics> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            pairs.emplace(std::make_pair(a, b), enumerate_pair(g, a, b, cap_per_pair));
    SlimDeltaResult res;
    for (auto& [key, pg] : pairs)
        if (pg.capped) res.cap_hit = true;
    auto at = [&](int a, int b) -> const PairGeodesics& {
        return pairs.at(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                const std::array<std::array<int, 2>, 3> sides = {{{x, y}, {y, z}, {x, z}}};
                for (int s = 0; s < 3; ++s) {
                    const auto& side = at(sides[s][0], sides[s][1]);
                    const auto& o1 = at(sides[(s + 1) % 3][0], sides[(s + 1) % 3][1]);
                    const auto& o2 = at(sides[(s + 2) % 3][0], sides[(s + 2) % 3][1]);
                    for (int v = 0; v < n; ++v) {
                        if (!side.on_geodesic[v]) continue;
                        // Worst triangle: both partner geodesics chosen adversarially.
                        int d = std::min(o1.max_dist[v], o2.max_dist[v]);
                        if (d > res.delta) res.delta = d;
                    }
                }
            }
    return res;
}

RayPrefix::RayPrefix(const FiniteGraphSpace& g, std::vector<int> vertices) : v_(std::move(vertices)) {
    if (v_.empty()) throw DomainError("invalid-ray: empty vertex sequence");
    for (size_t t = 0; t < v_.size(); ++t)
        if (g.distance(v_[0], v_[t]) != static_cast<int>(t))
            throw DomainError("invalid-ray: d(v0, v_t) = t fails, not a geodesic prefix");
}

BusemannEstimate busemann_estimate(const FiniteGraphSpace& g, int y, const RayPrefix& ray) {
    const int T = ray.tip_index();
    if (T < 4) throw DomainError("prefix-too-short: need T >= 4");
    const auto& v = ray.vertices();
    BusemannEstimate est;
    bool first = true;
    for (int t = 0; t <= T; ++t) {
        long long b = g.distance(y, v[t]) - t;
        if (2 * t >= T) {  // tail half
            if (first || b > est.value) est.value = b;
            first = false;
        }
    }
    est.stabilized = true;
    std::optional<long long> tail;
    for (int t = 0; t <= T; ++t) {
        if (4 * t < 3 * T) continue;  // final quarter only
        long long b = g.distance(y, v[t]) - t;
        if (tail && *tail != b) est.stabilized = false;
        tail = b;
    }
    return est;
}

namespace {

// An estimate is usable once it has genuinely settled: constant on the final
// quarter and with the tail-half maximum equal to that constant (points too
// close to the ray's tip report a stale maximum otherwise).
std::optional<long long> settled_estimate(const FiniteGraphSpace& g, int y, const RayPrefix& ray) {
    auto est = busemann_estimate(g, y, ray);
    if (!est.stabilized) return std::nullopt;
    const int T = ray.tip_index();
    long long tip_value = g.distance(y, ray.vertices()[T]) - T;
    if (est.value != tip_value) return std::nullopt;
    return est.value;
}

// beta(y, x): sup over settled estimates along rays based at x.
std::optional<long long> family_estimate(const FiniteGraphSpace& g,
                                         const std::vector<const RayPrefix*>& rays_at, int y,
                                         int* excluded) {
    std::optional<long long> best;
    for (const RayPrefix* r : rays_at) {
        auto v = settled_estimate(g, y, *r);
        if (!v) {
            if (excluded) ++*excluded;
            continue;
        }
        if (!best || *v > *best) best = *v;
    }
    return best;
}

}  // namespace

BusemannReport busemann_inequality_report(const FiniteGraphSpace& g,
                                          const std::vector<RayPrefix>& rays,
                                          const std::vector<int>& samples) {
    BusemannReport rep;
    std::map<int, std::vector<const RayPrefix*>> by_base;
    for (const auto& r : rays) by_base[r.basepoint()].push_back(&r);

    std::map<std::pair<int, int>, std::optional<long long>> beta;  // (y, basepoint)
    auto beta_of = [&](int y, int x) -> std::optional<long long> {
        auto key = std::make_pair(y, x);
        auto it = beta.find(key);
        if (it != beta.end()) return it->second;
        std::optional<long long> v;
        auto rb = by_base.find(x);
        if (rb != by_base.end()) v = family_estimate(g, rb->second, y, &rep.excluded);
        beta.emplace(key, v);
        return v;
    };

    std::vector<int> basepoints;
    for (auto& [b, _] : by_base) basepoints.push_back(b);

    for (int y : samples)
        for (int x : basepoints) {
            auto b = beta_of(y, x);
            if (!b) continue;
            long long slack = std::llabs(*b) - g.distance(y, x);
            if (!rep.has_pairs || slack > rep.lipschitz_max_slack) {
                rep.lipschitz_max_slack = slack;
                rep.lipschitz_witness = {y, x};
            }
            rep.has_pairs = true;
            if (slack > 0) ++rep.lipschitz_violations;
        }

    for (int z : samples)
        for (int x : basepoints)
            for (int y : basepoints) {
                if (x == y) continue;
                auto bzy = beta_of(z, y), bzx = beta_of(z, x), byx = beta_of(y, x);
                if (!bzy || !bzx || !byx) continue;
                long long v = std::llabs(*bzy - *bzx + *byx);
                if (!rep.has_cocycle || v > rep.cocycle_c) {
                    rep.cocycle_c = v;
                    rep.cocycle_witness = {z, y, x};
                }
                rep.has_cocycle = true;
            }

    for (size_t ri = 0; ri < rays.size(); ++ri) {
        const auto& ray = rays[ri];
        int x = ray.basepoint();
        for (int t = 0; t <= ray.tip_index(); ++t) {
            int v = ray.vertices()[t];
            auto b = beta_of(v, x);
            if (!b) continue;
            long long val = std::llabs(*b + g.distance(v, x));
            if (!rep.has_ray || val > rep.ray_c) {
                rep.ray_c = val;
                rep.ray_witness = {static_cast<int>(ri), t};
            }
            rep.has_ray = true;
        }
    }
    rep.empty = !rep.has_pairs;
    return rep;
}

std::vector<int> horosphere_points(const FiniteGraphSpace& g, const std::vector<RayPrefix>& rays,
                                   int x, long long tol) {
    std::vector<const RayPrefix*> all;
    for (const auto& r : rays) all.push_back(&r);
    auto bx = family_estimate(g, all, x, nullptr);
    if (!bx) throw DomainError("non-stabilized: no stabilized estimate at the reference vertex");
    std::vector<int> out;
    for (int y = 0; y < g.size(); ++y) {
        auto by = family_estimate(g, all, y, nullptr);
        if (!by) continue;
        if (std::llabs(*by - *bx) <= tol) out.push_back(y);
    }
    return out;
}

}  // namespace xrc
