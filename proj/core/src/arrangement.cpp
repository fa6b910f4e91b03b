#include "kura/arrangement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kura/errors.hpp"

namespace kura {

IVec line_dir(const Line& l) { return {-l.a[1], l.a[0]}; }

Rational line_param(const Line& l, const Point& p) { return dot(line_dir(l), p); }

namespace {

Point lerp(const Point& p, const Rational& t, const IVec& d) {
    return {p[0] + t * Rational(d[0]), p[1] + t * Rational(d[1])};
}

Point midpoint(const Point& p, const Point& q) {
    return {(p[0] + q[0]) / 2, (p[1] + q[1]) / 2};
}

Point line_anchor(const Line& l) {
    if (l.a[1] != 0) return {Rational(0), l.b / Rational(l.a[1])};
    return {l.b / Rational(l.a[0]), Rational(0)};
}

}  // namespace

std::shared_ptr<const Arrangement> Arrangement::build(std::vector<Line> lines, Space space) {
    auto arr = std::shared_ptr<Arrangement>(new Arrangement());
    arr->space_ = space;
    std::set<Line> dedup(lines.begin(), lines.end());
    arr->lines_.assign(dedup.begin(), dedup.end());
    if (int(arr->lines_.size()) > kMaxLines)
        throw CapacityError("arrangement capacity exceeded: " +
                            std::to_string(arr->lines_.size()) + " lines, limit " +
                            std::to_string(kMaxLines));
    if (space.dim == 1)
        for (const Line& l : arr->lines_)
            if (l.a[1] != 0)
                throw SemanticError("2-dimensional constraint in a 1-dimensional space");
    arr->compute_bbox();
    if (space.dim == 1)
        arr->build_dim1();
    else
        arr->build_dim2();
    return arr;
}

void Arrangement::compute_bbox() {
    bool any = false;
    Point lo{Rational(0), Rational(0)}, hi{Rational(0), Rational(0)};
    auto absorb = [&](const Point& p) {
        if (!any) {
            lo = hi = p;
            any = true;
            return;
        }
        for (int c = 0; c < 2; ++c) {
            if (p[c] < lo[c]) lo[c] = p[c];
            if (p[c] > hi[c]) hi[c] = p[c];
        }
    };
    for (const Line& l : lines_) absorb(line_anchor(l));
    if (space_.dim == 2) {
        for (std::size_t i = 0; i < lines_.size(); ++i)
            for (std::size_t j = i + 1; j < lines_.size(); ++j) {
                Integer det = cross(lines_[i].a, lines_[j].a);
                if (det == 0) continue;
                Rational rdet(det);
                Point p{(lines_[i].b * Rational(lines_[j].a[1]) -
                         lines_[j].b * Rational(lines_[i].a[1])) /
                            rdet,
                        (Rational(lines_[i].a[0]) * lines_[j].b -
                         Rational(lines_[j].a[0]) * lines_[i].b) /
                            rdet};
                absorb(p);
            }
    }
    bbox_lo_ = {lo[0] - 1, lo[1] - 1};
    bbox_hi_ = {hi[0] + 1, hi[1] + 1};
}

Point Arrangement::ray_rep(const Point& from, const IVec& dir) const {
    // exit parameter of the bounding box, halved; `from` is strictly inside
    bool have = false;
    Rational t_exit;
    for (int c = 0; c < 2; ++c) {
        if (dir[c] == 0) continue;
        Rational bound = dir[c] > 0 ? bbox_hi_[c] : bbox_lo_[c];
        Rational t = (bound - from[c]) / Rational(dir[c]);
        if (!have || t < t_exit) {
            t_exit = t;
            have = true;
        }
    }
    if (!have) throw std::logic_error("ray with zero direction");
    return lerp(from, t_exit / 2, dir);
}

Point Arrangement::line_rep(const Point& anchor, const IVec& dir) const {
    bool have_p = false, have_m = false;
    Rational tp, tm;
    for (int c = 0; c < 2; ++c) {
        if (dir[c] == 0) continue;
        Rational fwd = ((dir[c] > 0 ? bbox_hi_[c] : bbox_lo_[c]) - anchor[c]) / Rational(dir[c]);
        Rational bwd = ((dir[c] > 0 ? bbox_lo_[c] : bbox_hi_[c]) - anchor[c]) / Rational(dir[c]);
        if (!have_p || fwd < tp) tp = fwd, have_p = true;
        if (!have_m || bwd > tm) tm = bwd, have_m = true;
    }
    if (!have_p) throw std::logic_error("line with zero direction");
    return lerp(anchor, (tp + tm) / 2, dir);
}

void Arrangement::build_dim1() {
    // lines are x = b, already in ascending b order
    int n = int(lines_.size());
    vertices_.reserve(n);
    for (int i = 0; i < n; ++i) {
        VertexFace v;
        v.p = {lines_[i].b / Rational(lines_[i].a[0]), Rational(0)};
        v.key = sign_key(v.p);
        v.on_lines = {i};
        vertex_by_point_[v.p] = i;
        vertices_.push_back(std::move(v));
    }
    edges_.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
        EdgeFace e;
        e.v_from = j > 0 ? j - 1 : -1;
        e.v_to = j < n ? j : -1;
        if (n == 0)
            e.rep = {Rational(0), Rational(0)};
        else if (j == 0)
            e.rep = {vertices_[0].p[0] - 1, Rational(0)};
        else if (j == n)
            e.rep = {vertices_[n - 1].p[0] + 1, Rational(0)};
        else
            e.rep = midpoint(vertices_[j - 1].p, vertices_[j].p);
        e.key = sign_key(e.rep);
        top_by_key_[e.key] = j;
        edges_.push_back(std::move(e));
    }
    for (int i = 0; i < n; ++i)
        vertices_[i].star = {FaceId{FaceKind::Edge, i}, FaceId{FaceKind::Edge, i + 1}};
}

void Arrangement::build_dim2() {
    int n = int(lines_.size());
    // vertices: pairwise intersections, deduplicated in lexicographic order
    std::set<Point> pts;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Integer det = cross(lines_[i].a, lines_[j].a);
            if (det == 0) continue;
            Rational rdet(det);
            pts.insert({(lines_[i].b * Rational(lines_[j].a[1]) -
                         lines_[j].b * Rational(lines_[i].a[1])) /
                            rdet,
                        (Rational(lines_[i].a[0]) * lines_[j].b -
                         Rational(lines_[j].a[0]) * lines_[i].b) /
                            rdet});
        }
    vertices_.reserve(pts.size());
    line_faces_.resize(n);
    for (const Point& p : pts) {
        VertexFace v;
        v.p = p;
        v.key = sign_key(p);
        for (int i = 0; i < n; ++i)
            if (v.key.sign(i) == 0) v.on_lines.push_back(i);
        int id = int(vertices_.size());
        vertex_by_point_[p] = id;
        for (int li : v.on_lines) line_faces_[li].vids.push_back(id);
        vertices_.push_back(std::move(v));
    }
    // per-line vertex order and edges
    for (int li = 0; li < n; ++li) {
        LineFaces& lf = line_faces_[li];
        std::sort(lf.vids.begin(), lf.vids.end(), [&](int x, int y) {
            return line_param(lines_[li], vertices_[x].p) <
                   line_param(lines_[li], vertices_[y].p);
        });
        for (int v : lf.vids) lf.vparams.push_back(line_param(lines_[li], vertices_[v].p));
        IVec dir = line_dir(lines_[li]);
        int k = int(lf.vids.size());
        for (int j = 0; j <= k; ++j) {
            EdgeFace e;
            e.line = li;
            e.v_from = j > 0 ? lf.vids[j - 1] : -1;
            e.v_to = j < k ? lf.vids[j] : -1;
            if (k == 0)
                e.rep = line_rep(line_anchor(lines_[li]), dir);
            else if (j == 0)
                e.rep = ray_rep(vertices_[lf.vids[0]].p, neg(dir));
            else if (j == k)
                e.rep = ray_rep(vertices_[lf.vids[k - 1]].p, dir);
            else
                e.rep = midpoint(vertices_[lf.vids[j - 1]].p, vertices_[lf.vids[j]].p);
            e.key = sign_key(e.rep);
            if (e.key.zero_count() != 1 || e.key.sign(li) != 0)
                throw std::logic_error("edge representative off its carrier line");
            lf.eids.push_back(int(edges_.size()));
            edges_.push_back(std::move(e));
        }
    }
    // cells: exact column sweep; every cell meets a sample column between
    // consecutive critical abscissae (or beyond the extremes)
    std::set<Rational> xs;
    for (const VertexFace& v : vertices_) xs.insert(v.p[0]);
    for (const Line& l : lines_)
        if (l.a[1] == 0) xs.insert(l.b / Rational(l.a[0]));
    std::vector<Rational> samples;
    if (xs.empty()) {
        samples.push_back(Rational(0));
    } else {
        auto it = xs.begin();
        samples.push_back(*it - 1);
        Rational prev = *it;
        for (++it; it != xs.end(); ++it) {
            samples.push_back((prev + *it) / 2);
            prev = *it;
        }
        samples.push_back(prev + 1);
    }
    std::map<SignKey, Point> found;
    for (const Rational& s : samples) {
        std::set<Rational> ys;
        for (const Line& l : lines_)
            if (l.a[1] != 0) ys.insert((l.b - Rational(l.a[0]) * s) / Rational(l.a[1]));
        std::vector<Rational> ysamples;
        if (ys.empty()) {
            ysamples.push_back(Rational(0));
        } else {
            auto it = ys.begin();
            ysamples.push_back(*it - 1);
            Rational prev = *it;
            for (++it; it != ys.end(); ++it) {
                ysamples.push_back((prev + *it) / 2);
                prev = *it;
            }
            ysamples.push_back(prev + 1);
        }
        for (const Rational& y : ysamples) {
            Point p{s, y};
            SignKey k = sign_key(p);
            if (k.zero_count() != 0) throw std::logic_error("cell sample on a line");
            found.emplace(k, p);
        }
    }
    cells_.reserve(found.size());
    for (auto& [key, rep] : found) {
        top_by_key_[key] = int(cells_.size());
        cells_.push_back(CellFace{key, rep});
    }
    // edge incidence: replace the carrier-line zero by each side's sign
    for (EdgeFace& e : edges_) {
        for (int side = 0; side < 2; ++side) {
            SignKey k = e.key.with_sign(e.line, side == 0 ? -1 : 1);
            auto it = top_by_key_.find(k);
            if (it == top_by_key_.end())
                throw std::logic_error("missing side cell of an edge");
            e.side_cell[side] = it->second;
        }
    }
    // vertex stars: adjacent edge pieces along each incident line, plus the
    // cell of every angular sector between consecutive incident directions
    for (VertexFace& v : vertices_) {
        for (int li : v.on_lines) {
            const LineFaces& lf = line_faces_[li];
            Rational t = line_param(lines_[li], v.p);
            auto it = std::lower_bound(lf.vparams.begin(), lf.vparams.end(), t);
            int j = int(it - lf.vparams.begin());
            v.star.push_back(FaceId{FaceKind::Edge, lf.eids[j]});
            v.star.push_back(FaceId{FaceKind::Edge, lf.eids[j + 1]});
        }
        std::vector<IVec> dirs;
        for (int li : v.on_lines) {
            dirs.push_back(line_dir(lines_[li]));
            dirs.push_back(neg(line_dir(lines_[li])));
        }
        std::sort(dirs.begin(), dirs.end(), AngleLess{});
        int m = int(dirs.size());
        for (int c = 0; c < m; ++c) {
            IVec mid = add(dirs[c], dirs[(c + 1) % m]);
            if (is_zero(mid)) throw std::logic_error("degenerate sector at a vertex");
            SignKey k = v.key;
            for (int li : v.on_lines) {
                int s = sign_of(dot(lines_[li].a, mid));
                if (s == 0) throw std::logic_error("sector direction on a line");
                k = k.with_sign(li, s);
            }
            auto it = top_by_key_.find(k);
            if (it == top_by_key_.end()) throw std::logic_error("missing sector cell");
            v.star.push_back(FaceId{FaceKind::Cell, it->second});
        }
    }
}

int Arrangement::face_index(FaceId id) const {
    switch (id.kind) {
        case FaceKind::Vertex: return id.index;
        case FaceKind::Edge: return int(vertices_.size()) + id.index;
        case FaceKind::Cell: return int(vertices_.size() + edges_.size()) + id.index;
    }
    return -1;
}

FaceId Arrangement::face_at(int g) const {
    if (g < int(vertices_.size())) return {FaceKind::Vertex, g};
    g -= int(vertices_.size());
    if (g < int(edges_.size())) return {FaceKind::Edge, g};
    return {FaceKind::Cell, g - int(edges_.size())};
}

int Arrangement::face_dim(FaceId id) const {
    switch (id.kind) {
        case FaceKind::Vertex: return 0;
        case FaceKind::Edge: return 1;
        case FaceKind::Cell: return 2;
    }
    return -1;
}

const Point& Arrangement::representative(FaceId id) const {
    switch (id.kind) {
        case FaceKind::Vertex: return vertices_[id.index].p;
        case FaceKind::Edge: return edges_[id.index].rep;
        case FaceKind::Cell: return cells_[id.index].rep;
    }
    throw std::logic_error("bad face id");
}

const SignKey& Arrangement::key_of(FaceId id) const {
    switch (id.kind) {
        case FaceKind::Vertex: return vertices_[id.index].key;
        case FaceKind::Edge: return edges_[id.index].key;
        case FaceKind::Cell: return cells_[id.index].key;
    }
    throw std::logic_error("bad face id");
}

SignKey Arrangement::sign_key(const Point& x) const {
    SignKey k;
    for (std::size_t i = 0; i < lines_.size(); ++i)
        k.set(int(i), sign_of(dot(lines_[i].a, x) - lines_[i].b));
    return k;
}

FaceId Arrangement::locate(const Point& x) const {
    SignKey k = sign_key(x);
    int zc = k.zero_count();
    if (zc == 0) {
        auto it = top_by_key_.find(k);
        if (it == top_by_key_.end()) throw std::logic_error("point locates to no face");
        return {space_.dim == 1 ? FaceKind::Edge : FaceKind::Cell, it->second};
    }
    if (space_.dim == 1) return {FaceKind::Vertex, __builtin_ctzll(k.zero)};
    if (zc == 1) {
        int li = __builtin_ctzll(k.zero);
        const LineFaces& lf = line_faces_[li];
        Rational t = line_param(lines_[li], x);
        auto it = std::lower_bound(lf.vparams.begin(), lf.vparams.end(), t);
        return {FaceKind::Edge, lf.eids[it - lf.vparams.begin()]};
    }
    auto it = vertex_by_point_.find(x);
    if (it == vertex_by_point_.end()) throw std::logic_error("point locates to no face");
    return {FaceKind::Vertex, it->second};
}

FaceId Arrangement::germ_face(const Point& x, const IVec& d) const {
    if (is_zero(d)) throw SemanticError("germ direction must be nonzero");
    if (space_.dim == 1 && d[1] != 0)
        throw SemanticError("2-dimensional direction in a 1-dimensional space");
    SignKey k;
    int along = -1;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        int s = sign_of(dot(lines_[i].a, x) - lines_[i].b);
        if (s == 0) s = sign_of(dot(lines_[i].a, d));
        if (s == 0)
            along = int(i);
        else
            k.set(int(i), s);
    }
    if (along == -1) {
        auto it = top_by_key_.find(k);
        if (it == top_by_key_.end()) throw std::logic_error("germ locates to no face");
        return {space_.dim == 1 ? FaceKind::Edge : FaceKind::Cell, it->second};
    }
    // the germ travels along line `along`
    const LineFaces& lf = line_faces_[along];
    Rational t = line_param(lines_[along], x);
    int side = sign_of(dot(d, line_dir(lines_[along])));
    auto it = std::lower_bound(lf.vparams.begin(), lf.vparams.end(), t);
    int j = int(it - lf.vparams.begin());
    if (it != lf.vparams.end() && *it == t) j += (side > 0) ? 1 : 0;
    return {FaceKind::Edge, lf.eids[j]};
}

bool Arrangement::in_closure_of(FaceId f, FaceId g) const {
    const SignKey& kf = key_of(f);
    const SignKey& kg = key_of(g);
    std::uint64_t mask =
        lines_.size() == 64 ? ~0ULL : ((1ULL << lines_.size()) - 1);
    std::uint64_t pos_f = mask & ~kf.neg & ~kf.zero;
    std::uint64_t pos_g = mask & ~kg.neg & ~kg.zero;
    return (kg.zero & ~kf.zero) == 0 && (pos_g & kf.neg) == 0 && (kg.neg & pos_f) == 0;
}

std::vector<FaceId> Arrangement::faces_along_line(int li) const {
    if (space_.dim != 2) throw std::logic_error("faces_along_line needs dimension 2");
    const LineFaces& lf = line_faces_[li];
    std::vector<FaceId> out;
    for (std::size_t j = 0; j < lf.vids.size(); ++j) {
        out.push_back({FaceKind::Edge, lf.eids[j]});
        out.push_back({FaceKind::Vertex, lf.vids[j]});
    }
    out.push_back({FaceKind::Edge, lf.eids[lf.vids.size()]});
    return out;
}

std::vector<FaceId> Arrangement::faces_along_space() const {
    if (space_.dim != 1) throw std::logic_error("faces_along_space needs dimension 1");
    std::vector<FaceId> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        out.push_back({FaceKind::Edge, int(i)});
        out.push_back({FaceKind::Vertex, int(i)});
    }
    out.push_back({FaceKind::Edge, int(edges_.size()) - 1});
    return out;
}

bool Arrangement::same_lines(const Arrangement& other) const {
    return space_ == other.space_ && lines_ == other.lines_;
}

}  // namespace kura
