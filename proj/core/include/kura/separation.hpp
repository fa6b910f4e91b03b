#ifndef KURA_SEPARATION_HPP
#define KURA_SEPARATION_HPP

#include <variant>

#include "kura/flagged_set.hpp"
#include "kura/hrep.hpp"

namespace kura {

/// Element of the algebraic dual paired with a threshold: the hyperplane
/// l(x) = alpha. l is never zero in a valid certificate.
struct LinearFunctional {
    std::array<Rational, 2> l{Rational(0), Rational(0)};
    Rational alpha;
};

enum class CertKind { CorPoint, CorSet };

/// Witness that l(s) <= alpha <= l(t) for all s in S, t in T, strictly on
/// cor(S). When `checked` is set the inequalities were verified exactly.
struct SeparationCertificate {
    LinearFunctional functional;
    CertKind kind = CertKind::CorSet;
    bool checked = false;
};

struct IntersectionWitness {
    Point p;
};

using SeparationResult = std::variant<IntersectionWitness, SeparationCertificate>;

/// Decides cor(S) /\ T = empty. Returns a rational point of the intersection,
/// or an exactly verified separating functional built from the Farkas
/// multipliers of the infeasible system. Requires S, T nonempty and
/// cor(S) != empty (PreconditionError otherwise).
SeparationResult separate(const ConvexHRep& S, const ConvexHRep& T);

struct InCor {};

using CorMembershipResult = std::variant<InCor, SeparationCertificate>;

/// x lies in cor(S) iff every constraint is strict at x; otherwise some
/// violated or tight constraint is itself a separating functional.
/// Requires S nonempty.
CorMembershipResult cor_membership_certificate(const ConvexHRep& S, const Point& x);

/// Exact certificate check: sup over S of l at most alpha, alpha at most inf
/// over T, and l < alpha on all of cor(S). Throws ValidationError when l = 0.
bool verify_separator(const ConvexHRep& S, const ConvexHRep& T,
                      const SeparationCertificate& cert);

/// Bridge to the flagged-set engine: the conjunction of S's constraints.
FlaggedSet hrep_to_flagged(const ConvexHRep& S);

/// Singleton {x} as an H-representation.
ConvexHRep point_hrep(Space space, const Point& x);

}  // namespace kura

#endif
