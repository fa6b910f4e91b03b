#include "kura/flagged_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "kura/errors.hpp"

namespace kura {

FlaggedSet::FlaggedSet(ArrangementPtr arr, FlagBits flags)
    : arr_(std::move(arr)), flags_(std::move(flags)) {
    if (int(flags_.size()) != arr_->face_count())
        throw std::logic_error("flag vector does not match face count");
}

FlaggedSet FlaggedSet::empty(Space space) {
    auto arr = Arrangement::build({}, space);
    return FlaggedSet(arr, FlagBits(arr->face_count()));
}

FlaggedSet FlaggedSet::whole(Space space) {
    auto arr = Arrangement::build({}, space);
    FlagBits f(arr->face_count());
    f.set();
    return FlaggedSet(arr, std::move(f));
}

FlaggedSet formula_on(const Formula& f, ArrangementPtr arr) {
    FlagBits flags(arr->face_count());
    for (int g = 0; g < arr->face_count(); ++g)
        flags[g] = f.evaluate(arr->representative(arr->face_at(g)));
    return FlaggedSet(std::move(arr), std::move(flags));
}

FlaggedSet formula_to_set(const Formula& f, Space space) {
    std::set<Line> ls;
    f.collect_lines(ls);
    auto arr = Arrangement::build({ls.begin(), ls.end()}, space);
    return formula_on(f, std::move(arr));
}

bool member(const FlaggedSet& A, const Point& x) {
    return A.flag(A.arrangement().locate(x));
}

FlaggedSet transfer(const FlaggedSet& A, const ArrangementPtr& target) {
    if (A.arrangement_ptr() == target || A.arrangement().same_lines(*target))
        return FlaggedSet(target, A.flags());
    FlagBits flags(target->face_count());
    for (int g = 0; g < target->face_count(); ++g)
        flags[g] = member(A, target->representative(target->face_at(g)));
    return FlaggedSet(target, std::move(flags));
}

namespace {

/// Shared arrangement refining both operands, reusing one side when possible.
ArrangementPtr common_arrangement(const FlaggedSet& A, const FlaggedSet& B) {
    if (!(A.space() == B.space()))
        throw SemanticError("sets live in different dimensions");
    if (A.arrangement_ptr() == B.arrangement_ptr()) return A.arrangement_ptr();
    const auto& la = A.arrangement().lines();
    const auto& lb = B.arrangement().lines();
    if (la == lb) return A.arrangement_ptr();
    if (std::includes(la.begin(), la.end(), lb.begin(), lb.end()))
        return A.arrangement_ptr();
    if (std::includes(lb.begin(), lb.end(), la.begin(), la.end()))
        return B.arrangement_ptr();
    std::vector<Line> merged;
    std::set_union(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(merged));
    return Arrangement::build(std::move(merged), A.space());
}

}  // namespace

std::pair<FlaggedSet, FlaggedSet> refine(const FlaggedSet& A, const FlaggedSet& B) {
    ArrangementPtr c = common_arrangement(A, B);
    return {transfer(A, c), transfer(B, c)};
}

FlaggedSet complement(const FlaggedSet& A) {
    return FlaggedSet(A.arrangement_ptr(), ~A.flags());
}

FlaggedSet set_union(const FlaggedSet& A, const FlaggedSet& B) {
    auto [a, b] = refine(A, B);
    return FlaggedSet(a.arrangement_ptr(), a.flags() | b.flags());
}

FlaggedSet set_intersection(const FlaggedSet& A, const FlaggedSet& B) {
    auto [a, b] = refine(A, B);
    return FlaggedSet(a.arrangement_ptr(), a.flags() & b.flags());
}

FlaggedSet set_difference(const FlaggedSet& A, const FlaggedSet& B) {
    auto [a, b] = refine(A, B);
    return FlaggedSet(a.arrangement_ptr(), a.flags() & ~b.flags());
}

bool equal(const FlaggedSet& A, const FlaggedSet& B) {
    auto [a, b] = refine(A, B);
    return a.flags() == b.flags();
}

bool subset(const FlaggedSet& A, const FlaggedSet& B) {
    auto [a, b] = refine(A, B);
    return (a.flags() & ~b.flags()).none();
}

}  // namespace kura
