#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace xrc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Domain-rule failures (duplicate points, axiom violations, inadmissible
// rectangles, ...). The message names the violated rule.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const Int& x) { return x.sign(); }

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// num/den with the sign moved to the numerator; the two-argument rational
// constructor rejects negative denominators outright.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw DomainError("division by zero in rational construction");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

// Renders a rational as "p" or "p/q" with q > 0 in lowest terms.
std::string rational_str(const Rational& x);

// Parses "p", "p/q" or "-p/q"; whitespace is not allowed.
Rational parse_rational(std::string_view s);

}  // namespace xrc
