#ifndef KURA_OPERATORS_HPP
#define KURA_OPERATORS_HPP

#include <string>

#include "kura/flagged_set.hpp"

namespace kura {

/// The point x + t*d as t -> 0+. The sign of any affine form along the germ is
/// its sign at x when nonzero, otherwise the sign of its derivative along d.
struct GermProbe {
    Point x;
    IVec d;
};

/// Algebraic interior: points of S that start a closed segment into S in every
/// direction. Computed by local star rules on the same arrangement: a top face
/// keeps its flag; a lower face stays only if it and every face of its star
/// are flagged.
FlaggedSet cor(const FlaggedSet& S);

/// Algebraic closure: S plus every point with a punctured initial segment into
/// S. Star rules: a top face keeps its flag; a lower face is flagged if it or
/// any face of its star is.
FlaggedSet lin(const FlaggedSet& S);

/// Topological closure via the incidence poset (sign-vector containment).
/// Independent of the star rules; coincides with lin on this class.
FlaggedSet topo_closure(const FlaggedSet& S);

/// complement . topo_closure . complement.
FlaggedSet topo_interior(const FlaggedSet& S);

/// True iff x + t*d lies in S for all small t > 0.
bool germ_member(const FlaggedSet& S, const GermProbe& probe);

/// Pointwise oracle for lin: membership, or some candidate germ direction
/// enters S. Candidates: +-directions of each line through x and one middle
/// direction per angular sector between consecutive such lines (a single
/// generic direction when no line passes through x).
bool lin_pointwise(const FlaggedSet& S, const Point& x);

/// Pointwise oracle for cor: membership and every candidate germ enters S.
bool cor_pointwise(const FlaggedSet& S, const Point& x);

bool is_algebraically_open(const FlaggedSet& S);
bool is_algebraically_closed(const FlaggedSet& S);

/// Exact convexity decision. Checks that every line trace of S is a single
/// interval, that lin(S) equals the intersection of the arrangement halfplanes
/// containing it, and that the relative interior of lin(S) lies in S.
bool is_convex(const FlaggedSet& S);

/// Record of one operator identity instance checked on a seed.
struct OperatorReport {
    std::string identity;
    FlaggedSet seed;
    FlaggedSet lhs;
    FlaggedSet rhs;
    bool verdict;
};

OperatorReport make_report(std::string identity, FlaggedSet seed, FlaggedSet lhs,
                           FlaggedSet rhs);

}  // namespace kura

#endif
