#pragma once

#include <functional>

#include "xrc/words.hpp"

namespace xrc {

// A bounded alternating function on boundary triples, extended by 0 on
// coincidences (the shape pulled back along orbit maps).
using BoundaryCochain =
    std::function<Rational(const BoundaryPoint&, const BoundaryPoint&, const BoundaryPoint&)>;

// The canonical orientation cochain as a BoundaryCochain.
BoundaryCochain canonical_boundary_cochain();

// Orbit pullback mu(w1,w2,w3) = phi(w1 xi, w2 xi, w3 xi); alternating and
// closed on group triples because phi is.
Rational orbit_cocycle(const BoundaryCochain& phi, const WordEvaluator& ev,
                       const BoundaryPoint& xi, const GroupWord& w1, const GroupWord& w2,
                       const GroupWord& w3);

// nu(w) = [w xi, eta, xi, w eta]_0; the four points must be pairwise distinct.
Rational nu_cochain_canonical(const WordEvaluator& ev, const BoundaryPoint& xi,
                              const BoundaryPoint& eta, const GroupWord& w);

// Same bracket read out of a finite table; every orbit point must be a
// configuration point (orbit-escape error otherwise).
Rational nu_cochain_table(const Configuration& config, const CrossRatioTable& t,
                          const WordEvaluator& ev, const BoundaryPoint& xi,
                          const BoundaryPoint& eta, const GroupWord& w);

// The basepoint-change 1-cochain from the prism decomposition:
// h(w1,w2) = phi(w1 xi, w1 eta, w2 eta) - phi(w1 xi, w2 xi, w2 eta).
// Its coboundary equals (orbit cocycle at eta) - (orbit cocycle at xi).
Rational prism_transfer(const BoundaryCochain& phi, const WordEvaluator& ev,
                        const BoundaryPoint& xi, const BoundaryPoint& eta, const GroupWord& w1,
                        const GroupWord& w2);

struct OrbitCheckResult {
    bool alternating = true;
    bool closed = true;
    long long triples = 0;
    std::string witness;  // first failing tuple, empty when both hold
};

// Exhaustive check that the orbit pullback at xi is alternating on all word
// triples of length <= L and closed. Alternation is checked on every
// permutation of every triple; with alternation established, closure on
// sorted quadruples covers the general case.
OrbitCheckResult orbit_cocycle_check(const BoundaryCochain& phi, const WordEvaluator& ev,
                                     const BoundaryPoint& xi, int max_length);

struct PrismCheckResult {
    bool ok = true;
    long long triples = 0;
    std::string witness;
    Rational lhs, rhs;  // at the witness
};

// Verifies mu' - mu = coboundary of the prism transfer over all ordered
// triples of reduced words of length <= L (mu, mu' the orbit cocycles at xi,
// eta). Orbit points and cochain values are cached per reduced word.
PrismCheckResult prism_coboundary_check(const BoundaryCochain& phi, const WordEvaluator& ev,
                                        const BoundaryPoint& xi, const BoundaryPoint& eta,
                                        int max_length);

}  // namespace xrc
