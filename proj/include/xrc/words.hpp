#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "xrc/mobius.hpp"

namespace xrc {

/// A freely reduced word over the generator pair {g,h}; capital letters are
/// inverses. Multiplication reduces, so words behave as elements of F2.
class GroupWord {
public:
    GroupWord() = default;
    static GroupWord parse(std::string_view s);  // validates alphabet, reduces

    const std::string& letters() const { return letters_; }
    size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    GroupWord operator*(const GroupWord& o) const;
    GroupWord inverse() const;

    bool operator==(const GroupWord& o) const { return letters_ == o.letters_; }
    bool operator!=(const GroupWord& o) const { return !(*this == o); }

    std::string str() const { return letters_.empty() ? "e" : letters_; }

private:
    static char invert_letter(char c);
    std::string letters_;
};

// All freely reduced words of length <= L, ordered by length then
// lexicographically (deterministic enumeration order).
std::vector<GroupWord> reduced_words_up_to(int max_length);

/// Evaluates words in a fixed generator pair, caching matrices per reduced
/// prefix (exhaustive word scans revisit each prefix many times). The cache is
/// observationally transparent; concurrent scans should each own an evaluator.
class WordEvaluator {
public:
    WordEvaluator(MobiusMap g, MobiusMap h);

    // g = (2 0; 0 1) and h = s g s^-1 with s = (1 1; -1 1): a hyperbolic
    // ping-pong pair with fixed points {0, inf} and {-1, +1}.
    static WordEvaluator standard();

    const MobiusMap& generator_g() const { return g_; }
    const MobiusMap& generator_h() const { return h_; }

    const MobiusMap& eval(const GroupWord& w) const;
    BoundaryPoint apply(const GroupWord& w, const BoundaryPoint& x) const {
        return eval(w).apply(x);
    }

private:
    MobiusMap g_, h_;
    mutable std::unordered_map<std::string, MobiusMap> cache_;
};

// Occurrences of w as a subword of the reduced word x, minus occurrences of
// w^-1. Requires w nonempty.
long long brooks_counting(const GroupWord& w, const GroupWord& x);

// Signed count of a generator's letters (a homomorphism F2 -> Z).
long long exponent_sum(char generator, const GroupWord& w);

// Finite-truncation defect: max over pairs of reduced words of length <= L of
// |q(w1) + q(w2) - q(w1 w2)|. Monotone nondecreasing in L.
Rational quasimorphism_defect(const std::function<Rational(const GroupWord&)>& q, int max_length);

}  // namespace xrc
