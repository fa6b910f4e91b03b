#ifndef KURA_ARRANGEMENT_HPP
#define KURA_ARRANGEMENT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "kura/constraint.hpp"

namespace kura {

inline constexpr int kMaxLines = 64;

/// Sign pattern of a point against every line of an arrangement, packed as two
/// bitmasks. Cheap to compare, so faces can be keyed by it.
struct SignKey {
    std::uint64_t neg = 0;
    std::uint64_t zero = 0;

    auto operator<=>(const SignKey&) const = default;

    void set(int i, int s) {
        if (s < 0)
            neg |= (1ULL << i);
        else if (s == 0)
            zero |= (1ULL << i);
    }
    int sign(int i) const {
        if ((zero >> i) & 1) return 0;
        return ((neg >> i) & 1) ? -1 : 1;
    }
    int zero_count() const { return __builtin_popcountll(zero); }
    SignKey with_sign(int i, int s) const {
        SignKey k = *this;
        k.neg &= ~(1ULL << i);
        k.zero &= ~(1ULL << i);
        k.set(i, s);
        return k;
    }
};

enum class FaceKind { Vertex, Edge, Cell };

struct FaceId {
    FaceKind kind = FaceKind::Vertex;
    int index = 0;
    auto operator<=>(const FaceId&) const = default;
};

struct VertexFace {
    Point p;
    SignKey key;
    std::vector<int> on_lines;   // indices of lines through p, ascending
    std::vector<FaceId> star;    // higher-dimensional faces whose closure contains p
};

/// Maximal relatively open piece of a carrier line between consecutive
/// vertices. In dimension 1 these are the open intervals between breakpoints
/// and `line` is -1.
struct EdgeFace {
    int line = -1;
    int v_from = -1;             // -1 when unbounded below (in param order)
    int v_to = -1;
    Point rep;
    SignKey key;
    int side_cell[2] = {-1, -1}; // cells on the negative / positive side (dim 2)
};

struct CellFace {
    SignKey key;
    Point rep;
};

/// Exact face lattice of a line arrangement in dimension 1 or 2.
///
/// Faces partition the ambient space: every rational point lies in exactly one
/// vertex, edge, or cell. Each face carries a rational representative interior
/// to it and its sign pattern over all lines. Immutable after construction.
class Arrangement {
public:
    /// Deduplicates and canonically orders `lines`, then builds the lattice.
    /// Throws CapacityError for more than kMaxLines distinct lines and
    /// SemanticError if a line does not match the space dimension.
    static std::shared_ptr<const Arrangement> build(std::vector<Line> lines, Space space);

    const Space& space() const { return space_; }
    const std::vector<Line>& lines() const { return lines_; }
    const std::vector<VertexFace>& vertices() const { return vertices_; }
    const std::vector<EdgeFace>& edges() const { return edges_; }
    const std::vector<CellFace>& cells() const { return cells_; }

    int face_count() const {
        return int(vertices_.size() + edges_.size() + cells_.size());
    }
    int face_index(FaceId id) const;
    FaceId face_at(int global_index) const;
    /// Geometric dimension of the face: 0, 1 or 2.
    int face_dim(FaceId id) const;
    const Point& representative(FaceId id) const;
    const SignKey& key_of(FaceId id) const;

    SignKey sign_key(const Point& x) const;
    /// Face containing x. Total on rational points of the right dimension.
    FaceId locate(const Point& x) const;
    /// Face first entered by x + t*d as t -> 0+ (d nonzero).
    FaceId germ_face(const Point& x, const IVec& d) const;

    /// Sign-vector containment test: true iff f lies in the closure of g.
    bool in_closure_of(FaceId f, FaceId g) const;

    /// Vertices and edges on line `li` interleaved in parameter order:
    /// edge, vertex, edge, ..., vertex, edge.
    std::vector<FaceId> faces_along_line(int li) const;
    /// All faces of a 1-dimensional arrangement in coordinate order.
    std::vector<FaceId> faces_along_space() const;

    /// True if the lists of lines coincide (then the whole face lattices and
    /// face orders coincide as well, since construction is canonical).
    bool same_lines(const Arrangement& other) const;

private:
    Arrangement() : space_(2) {}
    void build_dim1();
    void build_dim2();
    void compute_bbox();
    Point ray_rep(const Point& from, const IVec& dir) const;
    Point line_rep(const Point& anchor, const IVec& dir) const;

    Space space_;
    std::vector<Line> lines_;
    std::vector<VertexFace> vertices_;
    std::vector<EdgeFace> edges_;
    std::vector<CellFace> cells_;

    std::map<Point, int> vertex_by_point_;
    std::map<SignKey, int> top_by_key_;  // cells (dim 2) or intervals (dim 1)

    struct LineFaces {
        std::vector<Rational> vparams;   // ascending parameters of vertices on the line
        std::vector<int> vids;
        std::vector<int> eids;           // eids.size() == vids.size() + 1
    };
    std::vector<LineFaces> line_faces_;

    Point bbox_lo_, bbox_hi_;            // covers all vertices and line anchors, +1 margin
};

using ArrangementPtr = std::shared_ptr<const Arrangement>;

/// Parameter of p along the direction vector of line l (any monotone exact
/// parametrization of the line).
Rational line_param(const Line& l, const Point& p);
/// Direction vector of the line (rot90 of the normal).
IVec line_dir(const Line& l);

}  // namespace kura

#endif
