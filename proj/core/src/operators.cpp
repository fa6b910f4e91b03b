#include "kura/operators.hpp"

#include <algorithm>
#include <set>

#include "kura/errors.hpp"

namespace kura {

namespace {

bool star_all_flagged(const FlaggedSet& S, const VertexFace& v) {
    for (FaceId g : v.star)
        if (!S.flag(g)) return false;
    return true;
}

bool star_any_flagged(const FlaggedSet& S, const VertexFace& v) {
    for (FaceId g : v.star)
        if (S.flag(g)) return true;
    return false;
}

}  // namespace

FlaggedSet cor(const FlaggedSet& S) {
    const Arrangement& arr = S.arrangement();
    FlagBits out(S.flags());
    int dim = arr.space().dim;
    for (std::size_t i = 0; i < arr.edges().size(); ++i) {
        FaceId id{FaceKind::Edge, int(i)};
        if (!S.flag(id)) continue;
        if (dim == 2) {
            const EdgeFace& e = arr.edges()[i];
            bool keep = S.flag({FaceKind::Cell, e.side_cell[0]}) &&
                        S.flag({FaceKind::Cell, e.side_cell[1]});
            if (!keep) out[arr.face_index(id)] = false;
        }
        // dim 1: intervals are top faces, flag passes through
    }
    for (std::size_t i = 0; i < arr.vertices().size(); ++i) {
        FaceId id{FaceKind::Vertex, int(i)};
        if (!S.flag(id)) continue;
        if (!star_all_flagged(S, arr.vertices()[i])) out[arr.face_index(id)] = false;
    }
    return FlaggedSet(S.arrangement_ptr(), std::move(out));
}

FlaggedSet lin(const FlaggedSet& S) {
    const Arrangement& arr = S.arrangement();
    FlagBits out(S.flags());
    int dim = arr.space().dim;
    for (std::size_t i = 0; i < arr.edges().size(); ++i) {
        FaceId id{FaceKind::Edge, int(i)};
        if (S.flag(id) || dim == 1) continue;
        const EdgeFace& e = arr.edges()[i];
        if (S.flag({FaceKind::Cell, e.side_cell[0]}) ||
            S.flag({FaceKind::Cell, e.side_cell[1]}))
            out[arr.face_index(id)] = true;
    }
    for (std::size_t i = 0; i < arr.vertices().size(); ++i) {
        FaceId id{FaceKind::Vertex, int(i)};
        if (S.flag(id)) continue;
        if (star_any_flagged(S, arr.vertices()[i])) out[arr.face_index(id)] = true;
    }
    return FlaggedSet(S.arrangement_ptr(), std::move(out));
}

FlaggedSet topo_closure(const FlaggedSet& S) {
    const Arrangement& arr = S.arrangement();
    int n = arr.face_count();
    FlagBits out(n);
    for (int g = 0; g < n; ++g) {
        if (!S.flags()[g]) continue;
        FaceId gid = arr.face_at(g);
        for (int f = 0; f < n; ++f)
            if (!out[f] && arr.in_closure_of(arr.face_at(f), gid)) out[f] = true;
    }
    return FlaggedSet(S.arrangement_ptr(), std::move(out));
}

FlaggedSet topo_interior(const FlaggedSet& S) {
    return complement(topo_closure(complement(S)));
}

bool germ_member(const FlaggedSet& S, const GermProbe& probe) {
    return S.flag(S.arrangement().germ_face(probe.x, probe.d));
}

namespace {

/// Candidate germ direction classes at x: +-direction of each line through x,
/// one middle direction per sector between consecutive incident lines, and a
/// single generic direction when x is off every line. Finitely many classes
/// suffice because a germ's face depends only on its signs against the lines
/// through x.
std::vector<IVec> candidate_directions(const Arrangement& arr, const Point& x) {
    if (arr.space().dim == 1) return {{Integer(1), Integer(0)}, {Integer(-1), Integer(0)}};
    std::vector<int> through;
    for (std::size_t i = 0; i < arr.lines().size(); ++i)
        if (sign_of(dot(arr.lines()[i].a, x) - arr.lines()[i].b) == 0)
            through.push_back(int(i));
    if (through.empty()) return {{Integer(1), Integer(0)}};
    std::vector<IVec> dirs;
    for (int li : through) {
        dirs.push_back(line_dir(arr.lines()[li]));
        dirs.push_back(neg(line_dir(arr.lines()[li])));
    }
    std::vector<IVec> out = dirs;
    if (through.size() == 1) {
        out.push_back(arr.lines()[through[0]].a);
        out.push_back(neg(arr.lines()[through[0]].a));
        return out;
    }
    std::sort(dirs.begin(), dirs.end(), AngleLess{});
    for (std::size_t c = 0; c < dirs.size(); ++c)
        out.push_back(add(dirs[c], dirs[(c + 1) % dirs.size()]));
    return out;
}

}  // namespace

bool lin_pointwise(const FlaggedSet& S, const Point& x) {
    if (member(S, x)) return true;
    for (const IVec& d : candidate_directions(S.arrangement(), x))
        if (germ_member(S, {x, d})) return true;
    return false;
}

bool cor_pointwise(const FlaggedSet& S, const Point& x) {
    if (!member(S, x)) return false;
    for (const IVec& d : candidate_directions(S.arrangement(), x))
        if (!germ_member(S, {x, d})) return false;
    return true;
}

bool is_algebraically_open(const FlaggedSet& S) { return equal(S, cor(S)); }

bool is_algebraically_closed(const FlaggedSet& S) { return equal(S, lin(S)); }

namespace {

bool contiguous(const std::vector<bool>& flags) {
    int first = -1, last = -1;
    for (int i = 0; i < int(flags.size()); ++i)
        if (flags[i]) {
            if (first < 0) first = i;
            last = i;
        }
    for (int i = first; first >= 0 && i <= last; ++i)
        if (!flags[i]) return false;
    return true;
}

std::vector<bool> trace_flags(const FlaggedSet& S, const std::vector<FaceId>& faces) {
    std::vector<bool> out;
    out.reserve(faces.size());
    for (FaceId f : faces) out.push_back(S.flag(f));
    return out;
}

/// Every 1-dimensional trace of S is a single (possibly empty) interval.
bool traces_are_intervals(const FlaggedSet& S) {
    const Arrangement& arr = S.arrangement();
    if (arr.space().dim == 1) return contiguous(trace_flags(S, arr.faces_along_space()));
    for (std::size_t li = 0; li < arr.lines().size(); ++li)
        if (!contiguous(trace_flags(S, arr.faces_along_line(int(li)))))
            return false;
    return true;
}

/// Intersection of the closed arrangement halfplanes that contain L, as a flag
/// vector over L's arrangement. A closed semilinear set equals this
/// intersection iff it is convex.
FlagBits supporting_hull_flags(const FlaggedSet& L) {
    const Arrangement& arr = L.arrangement();
    int n = arr.face_count();
    FlagBits hull(n);
    hull.set();
    for (std::size_t li = 0; li < arr.lines().size(); ++li) {
        for (int side = -1; side <= 1; side += 2) {
            FlagBits hp(n);
            for (int g = 0; g < n; ++g) {
                int s = arr.key_of(arr.face_at(g)).sign(int(li));
                hp[g] = (s == 0 || s == side);
            }
            if ((L.flags() & ~hp).none()) hull &= hp;
        }
    }
    return hull;
}

/// Relative interior of a convex closed lower-dimensional L carried by one
/// line: drop the extreme vertices along the carrier.
bool lowdim_relint_subset(const FlaggedSet& L, const FlaggedSet& S) {
    const Arrangement& arr = L.arrangement();
    int carrier = -1;
    for (std::size_t i = 0; i < arr.edges().size(); ++i)
        if (L.flag({FaceKind::Edge, int(i)})) {
            int li = arr.edges()[i].line;
            if (carrier >= 0 && carrier != li) return false;
            carrier = li;
        }
    if (carrier < 0) {
        // isolated vertices only
        int count = 0, which = -1;
        for (std::size_t i = 0; i < arr.vertices().size(); ++i)
            if (L.flag({FaceKind::Vertex, int(i)})) ++count, which = int(i);
        if (count > 1) return false;
        return count == 0 || S.flag({FaceKind::Vertex, which});
    }
    // all flagged vertices must lie on the carrier line
    for (std::size_t i = 0; i < arr.vertices().size(); ++i)
        if (L.flag({FaceKind::Vertex, int(i)}) &&
            arr.vertices()[i].key.sign(carrier) != 0)
            return false;
    std::vector<FaceId> faces = arr.faces_along_line(carrier);
    std::vector<bool> fl = trace_flags(L, faces);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (!fl[i]) continue;
        if (faces[i].kind == FaceKind::Vertex) {
            bool interior = i > 0 && i + 1 < faces.size() && fl[i - 1] && fl[i + 1];
            if (!interior) continue;  // endpoint, not in the relative interior
        }
        if (!S.flag(faces[i])) return false;
    }
    return true;
}

}  // namespace

bool is_convex(const FlaggedSet& S) {
    if (S.flags().none()) return true;
    if (!traces_are_intervals(S)) return false;
    FlaggedSet L = lin(S);
    if (L.flags() != supporting_hull_flags(L)) return false;
    // relint(L) must be contained in S
    const Arrangement& arr = S.arrangement();
    bool full_dim = false;
    if (arr.space().dim == 1) {
        for (std::size_t i = 0; i < arr.edges().size() && !full_dim; ++i)
            full_dim = L.flag({FaceKind::Edge, int(i)});
    } else {
        for (std::size_t i = 0; i < arr.cells().size() && !full_dim; ++i)
            full_dim = L.flag({FaceKind::Cell, int(i)});
    }
    if (full_dim) return (cor(L).flags() & ~S.flags()).none();
    if (arr.space().dim == 1) {
        // flagged breakpoints only
        int count = 0, which = -1;
        for (std::size_t i = 0; i < arr.vertices().size(); ++i)
            if (L.flag({FaceKind::Vertex, int(i)})) ++count, which = int(i);
        if (count > 1) return false;
        return count == 0 || S.flag({FaceKind::Vertex, which});
    }
    return lowdim_relint_subset(L, S);
}

OperatorReport make_report(std::string identity, FlaggedSet seed, FlaggedSet lhs,
                           FlaggedSet rhs) {
    bool v = equal(lhs, rhs);
    return OperatorReport{std::move(identity), std::move(seed), std::move(lhs),
                          std::move(rhs), v};
}

}  // namespace kura
