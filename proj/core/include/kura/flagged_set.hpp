#ifndef KURA_FLAGGED_SET_HPP
#define KURA_FLAGGED_SET_HPP

#include <boost/dynamic_bitset.hpp>
#include <utility>

#include "kura/arrangement.hpp"
#include "kura/formula.hpp"

namespace kura {

using FlagBits = boost::dynamic_bitset<std::uint64_t>;

/// A semilinear set: a line arrangement with one membership flag per face.
/// Values are immutable; all operations return fresh sets.
class FlaggedSet {
public:
    FlaggedSet(ArrangementPtr arr, FlagBits flags);

    static FlaggedSet empty(Space space);
    static FlaggedSet whole(Space space);

    const Arrangement& arrangement() const { return *arr_; }
    const ArrangementPtr& arrangement_ptr() const { return arr_; }
    const FlagBits& flags() const { return flags_; }
    const Space& space() const { return arr_->space(); }

    bool flag(FaceId id) const { return flags_[arr_->face_index(id)]; }
    bool none() const { return flags_.none(); }
    bool all() const { return flags_.all(); }

private:
    ArrangementPtr arr_;
    FlagBits flags_;
};

/// Arrangement over the formula's hyperplanes, each face flagged by evaluating
/// the formula at its representative.
FlaggedSet formula_to_set(const Formula& f, Space space);

/// Builds the set over a given arrangement whose lines must include every line
/// of the formula (unchecked beyond flag evaluation).
FlaggedSet formula_on(const Formula& f, ArrangementPtr arr);

bool member(const FlaggedSet& A, const Point& x);

/// Re-expresses both sets over the union of their arrangements. Membership of
/// every rational point is unchanged.
std::pair<FlaggedSet, FlaggedSet> refine(const FlaggedSet& A, const FlaggedSet& B);

/// Re-expresses A over `target`, whose lines must contain A's lines.
FlaggedSet transfer(const FlaggedSet& A, const ArrangementPtr& target);

FlaggedSet complement(const FlaggedSet& A);
FlaggedSet set_union(const FlaggedSet& A, const FlaggedSet& B);
FlaggedSet set_intersection(const FlaggedSet& A, const FlaggedSet& B);
FlaggedSet set_difference(const FlaggedSet& A, const FlaggedSet& B);

/// Sound and complete semantic equality: flags agree after refinement.
bool equal(const FlaggedSet& A, const FlaggedSet& B);
/// A is a subset of B.
bool subset(const FlaggedSet& A, const FlaggedSet& B);

}  // namespace kura

#endif
