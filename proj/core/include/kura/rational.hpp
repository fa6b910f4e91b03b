#ifndef KURA_RATIONAL_HPP
#define KURA_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace kura {

// Exact scalar field. GMP keeps rationals canonical: lowest terms, positive
// denominator.
using Integer  = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                               boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numerator(const Rational& q) {
    return Integer(boost::multiprecision::numerator(
        boost::multiprecision::mpq_rational(q.backend().data())));
}
inline Integer denominator(const Rational& q) {
    return Integer(boost::multiprecision::denominator(
        boost::multiprecision::mpq_rational(q.backend().data())));
}

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const Integer& n) { return n.sign(); }

/// Renders "p/q" with q > 0, or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading '-'). Throws SemanticError on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace kura

#endif
