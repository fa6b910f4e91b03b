#include "kura/random_sets.hpp"

#include "kura/operators.hpp"

namespace kura {

namespace {

Line random_line(Rng& rng, Space space) {
    for (;;) {
        Integer a0(rng.int_in(-3, 3));
        Integer a1 = space.dim == 2 ? Integer(rng.int_in(-3, 3)) : Integer(0);
        if (a0 == 0 && a1 == 0) continue;
        return normalize_line({a0, a1}, rng.small_rational(3, 2));
    }
}

Rel random_halfplane_rel(Rng& rng, bool allow_eq) {
    switch (rng.int_in(0, allow_eq ? 4 : 3)) {
        case 0: return Rel::Lt;
        case 1: return Rel::Le;
        case 2: return Rel::Gt;
        case 3: return Rel::Ge;
        default: return Rel::Eq;
    }
}

}  // namespace

FlaggedSet random_semilinear(Rng& rng, Space space, int max_lines) {
    int n = int(rng.int_in(0, max_lines));
    std::vector<Line> lines;
    for (int i = 0; i < n; ++i) lines.push_back(random_line(rng, space));
    auto arr = Arrangement::build(std::move(lines), space);
    FlagBits flags(arr->face_count());
    for (int g = 0; g < arr->face_count(); ++g) flags[g] = rng.coin();
    return FlaggedSet(arr, std::move(flags));
}

FlaggedSet random_convex(Rng& rng, Space space) {
    std::vector<Formula> atoms;
    if (space.dim == 1) {
        int shape = int(rng.int_in(0, 9));
        Rational lo = rng.small_rational();
        Rational hi = rng.small_rational();
        if (hi < lo) std::swap(lo, hi);
        if (shape == 0) {  // halfline
            atoms.push_back(Formula::atom(make_constraint(
                {Rational(1), Rational(0)}, rng.coin() ? Rel::Le : Rel::Lt, hi)));
        } else if (shape == 1) {  // point
            atoms.push_back(
                Formula::atom(make_constraint({Rational(1), Rational(0)}, Rel::Eq, lo)));
        } else {  // interval with mixed ends
            atoms.push_back(Formula::atom(make_constraint(
                {Rational(1), Rational(0)}, rng.coin() ? Rel::Ge : Rel::Gt, lo)));
            atoms.push_back(Formula::atom(make_constraint(
                {Rational(1), Rational(0)}, rng.coin() ? Rel::Le : Rel::Lt, hi)));
        }
    } else {
        int k = int(rng.int_in(1, 6));
        bool lower_dim = rng.int_in(0, 9) == 0;
        for (int i = 0; i < k; ++i) {
            Line l = random_line(rng, space);
            atoms.push_back(Formula::atom(
                LinConstraint(l.a, random_halfplane_rel(rng, lower_dim), l.b)));
        }
    }
    return formula_to_set(Formula::conj(std::move(atoms)), space);
}

FlaggedSet random_convex_with_core(Rng& rng, Space space) {
    for (;;) {
        FlaggedSet S = random_convex(rng, space);
        if (!cor(S).none()) return S;
    }
}

ConvexHRep random_hrep(Rng& rng, Space space) {
    for (;;) {
        std::vector<LinConstraint> cs;
        int k = int(rng.int_in(1, space.dim == 1 ? 3 : 5));
        for (int i = 0; i < k; ++i) {
            Line l = random_line(rng, space);
            cs.push_back(LinConstraint(l.a, random_halfplane_rel(rng, true), l.b));
        }
        ConvexHRep S = ConvexHRep::from_constraints(space, cs);
        if (!S.is_empty()) return S;
    }
}

Point random_point(Rng& rng, Space space, int bound) {
    Point p{rng.small_rational(bound, 3), Rational(0)};
    if (space.dim == 2) p[1] = rng.small_rational(bound, 3);
    return p;
}

}  // namespace kura
