#pragma once

#include <array>
#include <string>
#include <vector>

#include "xrc/rp1.hpp"

namespace xrc {

/// An anti-symmetric cross ratio on a finite label set {0..n-1}: a total map
/// from ordered 4-tuples of pairwise distinct labels to exact rationals.
/// Stored densely; the axioms are a checkable property, not a constructor
/// invariant, so faulty tables can be built and fed to the checker.
class CrossRatioTable {
public:
    explicit CrossRatioTable(int n);

    // The order/linking cross ratio of the configuration's points.
    static CrossRatioTable canonical(const Configuration& config);

    int size() const { return n_; }

    const Rational& at(int i, int j, int k, int l) const;
    void set(int i, int j, int k, int l, const Rational& v);

    bool operator==(const CrossRatioTable& o) const { return n_ == o.n_ && v_ == o.v_; }
    bool operator!=(const CrossRatioTable& o) const { return !(*this == o); }

    CrossRatioTable& add_scaled(const CrossRatioTable& o, const Rational& c);
    CrossRatioTable scaled(const Rational& c) const;

    // Visits every ordered 4-tuple of pairwise distinct labels.
    template <class F>
    void for_each_tuple(F&& f) const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k)
                    for (int l = 0; l < n_; ++l)
                        if (i != j && i != k && i != l && j != k && j != l && k != l) f(i, j, k, l);
    }

private:
    int index(int i, int j, int k, int l) const;
    int n_;
    std::vector<Rational> v_;
};

struct AxiomViolation {
    enum class Kind { antisym_first_pair, antisym_pair_swap, additivity };
    Kind kind;
    std::array<int, 5> labels;  // fifth label used by additivity instances only
    std::string describe() const;
};

// Exhaustive report of axiom i)/ii)/iii) failures; empty iff the table is a
// valid anti-symmetric cross ratio.
std::vector<AxiomViolation> check_axioms(const CrossRatioTable& t);

/// An alternating 2-cochain on labels: zero on triples with a repeated label,
/// odd permutations negate. Alternation is a constructor invariant (values are
/// stored once per unordered triple).
class AltCochain2 {
public:
    explicit AltCochain2(int n);

    int size() const { return n_; }

    // Total: 0 on repeated labels.
    Rational at(int i, int j, int k) const;
    // Sets the whole S3-orbit through the signed value.
    void set(int i, int j, int k, const Rational& v);

    bool operator==(const AltCochain2& o) const { return n_ == o.n_ && rep_ == o.rep_; }
    bool operator!=(const AltCochain2& o) const { return !(*this == o); }

    Rational sup_abs() const;

private:
    int rep_index(int i, int j, int k) const;  // requires i<j<k
    int n_;
    std::vector<Rational> rep_;
};

/// A homogeneous 1-cochain on labels (not required alternating).
class Cochain1 {
public:
    explicit Cochain1(int n);
    int size() const { return n_; }
    const Rational& at(int i, int j) const { return v_.at(i * n_ + j); }
    void set(int i, int j, const Rational& v) { v_.at(i * n_ + j) = v; }

private:
    int n_;
    std::vector<Rational> v_;
};

// φ(ξ,η,ζ) = ([ξ,ζ,η,ν] + [ζ,η,ξ,ν] + [η,ξ,ζ,ν]) / 2, independent of the
// auxiliary label ν when the table satisfies the axioms. A collision among
// ξ,η,ζ yields 0; ν colliding with the triple is an error.
Rational phi_from_crossratio(const CrossRatioTable& t, int xi, int eta, int zeta, int nu);

// Builds the full alternating cocycle from a valid table (axiom-checked;
// requires n >= 4 so an auxiliary label exists).
AltCochain2 cochain_from_crossratio(const CrossRatioTable& t);

// Homogeneous coboundary of a 2-cochain: φ(b,c,d)-φ(a,c,d)+φ(a,b,d)-φ(a,b,c).
Rational coboundary2_value(const AltCochain2& phi, int a, int b, int c, int d);
bool is_cocycle(const AltCochain2& phi);

// Homogeneous coboundary of a 1-cochain: (x,y,z) -> b(y,z)-b(x,z)+b(x,y).
Rational coboundary1_value(const Cochain1& b, int x, int y, int z);

// The inverse map: [g,g',h,h'] = φ(h,g',g) - φ(g',g,h'). Requires φ closed.
CrossRatioTable crossratio_from_cocycle(const AltCochain2& phi);

// Norm as sup of absolute values; the raw (signed) maximum entry is exposed
// separately. Both are 0 on tables with no admissible tuple (n < 4).
Rational sup_norm(const CrossRatioTable& t);
Rational max_entry(const CrossRatioTable& t);

}  // namespace xrc
