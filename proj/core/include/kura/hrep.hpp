#ifndef KURA_HREP_HPP
#define KURA_HREP_HPP

#include <optional>
#include <vector>

#include "kura/constraint.hpp"

namespace kura {

/// One halfspace row a.x < b (strict) or a.x <= b, with a primitive integer
/// normal whose orientation is semantic (not canonicalized).
struct HrepRow {
    IVec a;
    Rational b;
    bool strict = false;

    bool operator==(const HrepRow& o) const {
        return a == o.a && b == o.b && strict == o.strict;
    }
};

/// Convex set as a finite list of open/closed halfspace constraints.
/// Ingestion normalizes every relation to {<, <=}: >= and > flip the normal,
/// = splits into two <=.
class ConvexHRep {
public:
    explicit ConvexHRep(Space space) : space_(space) {}
    ConvexHRep(Space space, std::vector<HrepRow> rows)
        : space_(space), rows_(std::move(rows)) {}

    static ConvexHRep from_constraints(Space space,
                                       const std::vector<LinConstraint>& cs);
    /// Fixed representation of the empty set: { x <= 0, -x <= -1 }.
    static ConvexHRep canonical_empty(Space space);

    const Space& space() const { return space_; }
    const std::vector<HrepRow>& rows() const { return rows_; }
    void add_row(HrepRow r) { rows_.push_back(std::move(r)); }

    /// Exact feasibility test.
    bool is_empty() const;
    /// Some rational point of the set, if nonempty.
    std::optional<Point> witness() const;
    bool contains(const Point& x) const;

private:
    Space space_;
    std::vector<HrepRow> rows_;
};

/// All-strict system when feasible (the algebraic interior of a polyhedron is
/// its all-strict form), otherwise the canonical empty set.
ConvexHRep cor_hrep(const ConvexHRep& S);

/// All-weak system when S is nonempty (a nonempty mixed-strictness convex set
/// contains the relative interior of its closed hull), otherwise canonical
/// empty.
ConvexHRep lin_hrep(const ConvexHRep& S);

/// Exact linear programming over rows by Fourier-Motzkin elimination.
/// `farkas` carries nonnegative multipliers combining the rows into the
/// contradictory constraint 0 rel c when infeasible.
struct FeasibilityResult {
    bool feasible = false;
    Point witness{Rational(0), Rational(0)};
    std::vector<Rational> farkas;
    bool farkas_strict = false;  // the derived contradiction is strict
};

FeasibilityResult solve_rows(const std::vector<HrepRow>& rows, int dim);

/// Exact supremum of l.x over the closed polyhedron given by weak rows.
struct Extremum {
    enum Kind { Empty, Unbounded, Finite } kind = Empty;
    Rational value;
};

Extremum polyhedron_sup(const std::vector<HrepRow>& rows,
                        const std::array<Rational, 2>& l, int dim);

}  // namespace kura

#endif
