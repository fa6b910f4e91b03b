#include "kura/constraint.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace kura {

std::string rel_to_string(Rel r) {
    switch (r) {
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        case Rel::Eq: return "=";
        case Rel::Ge: return ">=";
        case Rel::Gt: return ">";
    }
    return "?";
}

Rel flip_rel(Rel r) {
    switch (r) {
        case Rel::Lt: return Rel::Gt;
        case Rel::Le: return Rel::Ge;
        case Rel::Ge: return Rel::Le;
        case Rel::Gt: return Rel::Lt;
        case Rel::Eq: return Rel::Eq;
    }
    return r;
}

Line normalize_line(IVec a, Rational b) {
    if (is_zero(a)) throw SemanticError("constraint normal must be nonzero");
    Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(a[0]),
                                           boost::multiprecision::abs(a[1]));
    Rational bb = b;
    if (g > 1) {
        a[0] /= g;
        a[1] /= g;
        bb /= Rational(g);
    }
    int lead = a[0] != 0 ? a[0].sign() : a[1].sign();
    if (lead < 0) {
        a = neg(a);
        bb = -bb;
    }
    return Line{a, bb};
}

LinConstraint::LinConstraint(IVec a, Rel r, Rational b) {
    if (is_zero(a)) throw SemanticError("constraint normal must be nonzero");
    int lead = a[0] != 0 ? a[0].sign() : a[1].sign();
    line = normalize_line(a, b);
    rel = lead < 0 ? flip_rel(r) : r;
}

bool LinConstraint::satisfied(const Point& x) const {
    int s = sign_of(dot(line.a, x) - line.b);
    switch (rel) {
        case Rel::Lt: return s < 0;
        case Rel::Le: return s <= 0;
        case Rel::Eq: return s == 0;
        case Rel::Ge: return s >= 0;
        case Rel::Gt: return s > 0;
    }
    return false;
}

LinConstraint make_constraint(const std::array<Rational, 2>& a, Rel r, const Rational& b) {
    Integer m = boost::multiprecision::lcm(denominator(a[0]), denominator(a[1]));
    IVec ai{numerator(a[0]) * (m / denominator(a[0])),
            numerator(a[1]) * (m / denominator(a[1]))};
    return LinConstraint(ai, r, b * Rational(m));
}

std::string LinConstraint::str(int dim) const {
    std::string lhs = line.a[0].str() + "*x";
    if (dim == 2) lhs += " + " + line.a[1].str() + "*y";
    return lhs + " " + rel_to_string(rel) + " " + to_string(line.b);
}

}  // namespace kura
