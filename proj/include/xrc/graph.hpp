#pragma once

#include <array>
#include <optional>
#include <vector>

#include "xrc/rational.hpp"

namespace xrc {

/// A finite connected unweighted graph with its all-pairs distance table, the
/// desk-scale stand-in for a proper geodesic metric space.
class FiniteGraphSpace {
public:
    FiniteGraphSpace(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    int distance(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int eccentricity(int v) const;

private:
    void require_vertex(int v) const;
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> dist_;
};

// (y,z)_x = (d(y,x) + d(z,x) - d(y,z)) / 2; a nonnegative half-integer.
Rational gromov_product(const FiniteGraphSpace& g, int y, int z, int x);

// Minimal delta with (x,z)_w >= min((x,y)_w, (y,z)_w) - delta over all vertex
// 4-tuples (exhaustive scan).
Rational four_point_delta(const FiniteGraphSpace& g);

struct SlimDeltaResult {
    int delta = 0;
    bool cap_hit = false;  // some pair had its geodesic enumeration truncated
};

// Minimal integer delta such that in every enumerated geodesic triangle each
// side lies in the delta-neighborhood of the union of the other two sides.
// Geodesics are enumerated from the shortest-path predecessor structure,
// capped per pair. Requires at most 64 vertices.
SlimDeltaResult slim_triangle_delta(const FiniteGraphSpace& g, long long cap_per_pair = 10000);

/// A geodesic ray prefix v_0,...,v_T with d(v_0, v_t) = t for every t.
class RayPrefix {
public:
    RayPrefix(const FiniteGraphSpace& g, std::vector<int> vertices);
    const std::vector<int>& vertices() const { return v_; }
    int tip_index() const { return static_cast<int>(v_.size()) - 1; }  // T
    int basepoint() const { return v_.front(); }

private:
    std::vector<int> v_;
};

struct BusemannEstimate {
    long long value = 0;    // max of d(y, v_t) - t over the tail half
    bool stabilized = false;  // d(y, v_t) - t constant on the final quarter
};

// Single-ray estimate of the Busemann function at y; requires T >= 4.
BusemannEstimate busemann_estimate(const FiniteGraphSpace& g, int y, const RayPrefix& ray);

struct BusemannReport {
    // |beta(y,x)| <= d(y,x): must hold exactly (zero slack).
    bool has_pairs = false;
    long long lipschitz_max_slack = 0;  // max of |beta(y,x)| - d(y,x)
    int lipschitz_violations = 0;
    std::array<int, 2> lipschitz_witness{-1, -1};
    // Smallest sufficient c for |beta(z,y) - beta(z,x) + beta(y,x)| <= c.
    bool has_cocycle = false;
    long long cocycle_c = 0;
    std::array<int, 3> cocycle_witness{-1, -1, -1};
    // Smallest sufficient c for |beta(ray(t),x) + d(ray(t),x)| <= c.
    bool has_ray = false;
    long long ray_c = 0;
    std::array<int, 2> ray_witness{-1, -1};  // ray index, t
    int excluded = 0;  // non-stabilized estimates skipped
    bool empty = true;  // no stabilized sample at all
};

// Empirical worst constants of the three displayed Busemann inequalities over
// the sample set. beta(y,x) is the max over stabilized estimates along rays
// based at x; non-stabilized estimates are excluded and counted.
BusemannReport busemann_inequality_report(const FiniteGraphSpace& g,
                                          const std::vector<RayPrefix>& rays,
                                          const std::vector<int>& samples);

// Vertices y with |b(y) - b(x)| <= tol, where b is the ray-family estimate
// (max over stabilized single-ray estimates). Vertices without a stabilized
// estimate are omitted; x itself must be estimable.
std::vector<int> horosphere_points(const FiniteGraphSpace& g, const std::vector<RayPrefix>& rays,
                                   int x, long long tol);

}  // namespace xrc
