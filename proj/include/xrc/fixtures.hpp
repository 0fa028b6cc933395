#pragma once

#include <array>
#include <cstdint>

#include "xrc/measure.hpp"
#include "xrc/mobius.hpp"

namespace xrc {

/// The shared fixture generator: the 64-bit linear congruential recurrence
/// s <- s * 6364136223846793005 + 1442695040888963407 (mod 2^64), with the
/// updated state as output. Identical seeds reproduce identical fixtures
/// across runs and bindings; the constants are documented in the README.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return s_;
    }

    std::uint64_t below(std::uint64_t k) { return next() % k; }

    long long int_in(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rational rational(long long max_num, long long max_den) {
        long long num = int_in(-max_num, max_num);
        long long den = int_in(1, max_den);
        return Rational(num, den);
    }

private:
    std::uint64_t s_;
};

// n pairwise distinct boundary points; numerators in [-24,24], denominators
// in [1,8], and (when allowed) roughly one draw in eight replaced by inf.
Configuration random_configuration(Lcg64& rng, int n, bool allow_infinity);

// Integer entries in [-9,9], resampled until the determinant is nonzero;
// negative determinants are fixed by a column swap.
MobiusMap random_mobius(Lcg64& rng);

RectMeasure random_atom_measure(Lcg64& rng, const Configuration& config);

// A cyclically ordered quadruple of labels, uniformly among subsets/rotations.
std::array<int, 4> random_ordered_base(Lcg64& rng, const Configuration& config);

// A valid cross ratio: the reconstruction of a random atom measure plus a
// random rational multiple of the canonical table.
CrossRatioTable random_valid_table(Lcg64& rng, const Configuration& config);

// A random alternating cocycle, materialized as the coboundary of a random
// alternating 1-cochain (every alternating cocycle on a finite label set is
// such a coboundary).
AltCochain2 random_alternating_cocycle(Lcg64& rng, int n);

}  // namespace xrc
