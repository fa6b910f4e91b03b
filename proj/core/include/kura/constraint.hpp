#ifndef KURA_CONSTRAINT_HPP
#define KURA_CONSTRAINT_HPP

#include <compare>
#include <string>
#include <vector>

#include "kura/geometry.hpp"

namespace kura {

enum class Rel { Lt, Le, Eq, Ge, Gt };

std::string rel_to_string(Rel r);

/// A hyperplane a.x = b with a primitive integer normal (gcd 1) and a
/// lexicographically positive leading coefficient, so equal hyperplanes
/// compare equal.
struct Line {
    IVec a{Integer(0), Integer(0)};
    Rational b;

    bool operator==(const Line& o) const { return a == o.a && b == o.b; }
    bool operator<(const Line& o) const {
        if (a[0] != o.a[0]) return a[0] < o.a[0];
        if (a[1] != o.a[1]) return a[1] < o.a[1];
        return b < o.b;
    }
};

/// Builds the canonical form of a.x = b. Throws SemanticError if a is zero.
Line normalize_line(IVec a, Rational b);

/// One linear constraint a.x rel b over a canonical hyperplane. `flip` records
/// whether canonicalization reversed the normal, so the stored relation always
/// refers to the canonical (a, b).
struct LinConstraint {
    Line line;
    Rel rel = Rel::Le;

    LinConstraint() = default;
    /// Normalizes (a, b, rel); the relation is adjusted when the sign of a flips.
    LinConstraint(IVec a, Rel r, Rational b);

    bool satisfied(const Point& x) const;
    std::string str(int dim) const;

    bool operator==(const LinConstraint& o) const {
        return line == o.line && rel == o.rel;
    }
    bool operator<(const LinConstraint& o) const {
        if (!(line == o.line)) return line < o.line;
        return rel < o.rel;
    }
};

/// Scales rational coefficients to a primitive integer normal and constructs
/// the canonical constraint.
LinConstraint make_constraint(const std::array<Rational, 2>& a, Rel r, const Rational& b);

Rel flip_rel(Rel r);

}  // namespace kura

#endif
