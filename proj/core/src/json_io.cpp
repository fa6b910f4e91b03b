#include "kura/json_io.hpp"

#include <sstream>

namespace kura {

Json rational_json(const Rational& q) { return to_string(q); }

namespace {

Json integer_json(const Integer& n) {
    static const Integer lo = Integer(std::numeric_limits<std::int64_t>::min());
    static const Integer hi = Integer(std::numeric_limits<std::int64_t>::max());
    if (n < lo || n > hi) return n.str();
    return n.convert_to<std::int64_t>();
}

}  // namespace

Json set_json(const FlaggedSet& S) {
    const Arrangement& arr = S.arrangement();
    Json lines = Json::array();
    for (const Line& l : arr.lines()) {
        Json row = Json::array();
        row.push_back(integer_json(l.a[0]));
        if (arr.space().dim == 2) row.push_back(integer_json(l.a[1]));
        row.push_back(rational_json(l.b));
        lines.push_back(std::move(row));
    }
    auto flags_of = [&](FaceKind kind, std::size_t count) {
        Json out = Json::array();
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(S.flag({kind, int(i)}) ? 1 : 0);
        return out;
    };
    Json flags;
    flags["vertices"] = flags_of(FaceKind::Vertex, arr.vertices().size());
    flags["edges"] = flags_of(FaceKind::Edge, arr.edges().size());
    flags["cells"] = flags_of(FaceKind::Cell, arr.cells().size());
    Json out;
    out["dim"] = arr.space().dim;
    out["lines"] = std::move(lines);
    out["flags"] = std::move(flags);
    return out;
}

Json report_json(const OperatorReport& r) {
    Json out;
    out["identity"] = r.identity;
    out["seed"] = set_json(r.seed);
    out["lhs"] = set_json(r.lhs);
    out["rhs"] = set_json(r.rhs);
    out["verdict"] = r.verdict;
    return out;
}

Json orbit_json(const Orbit& o) {
    Json out;
    out["seed"] = set_json(o.seed);
    out["size"] = o.members.size();
    Json members = Json::array();
    for (std::size_t i = 0; i < o.members.size(); ++i) {
        Json m;
        m["index"] = i;
        m["witness"] = word_display(o.witness[i].str());
        m["set"] = set_json(o.members[i]);
        members.push_back(std::move(m));
    }
    out["members"] = std::move(members);
    Json trans = Json::array();
    for (const auto& [key, to] : o.transitions) {
        Json t;
        t["from"] = key.first;
        t["letter"] = std::string(1, key.second);
        t["to"] = to;
        trans.push_back(std::move(t));
    }
    out["transitions"] = std::move(trans);
    return out;
}

Json monoid_json(const MonoidTable& t, RewriteMode mode) {
    Json out;
    out["mode"] = mode == RewriteMode::General ? "general" : "convex";
    out["count"] = t.words.size();
    Json words = Json::array();
    for (const std::string& w : t.words) words.push_back(word_display(w));
    out["words"] = std::move(words);
    Json table = Json::array();
    for (std::size_t i = 0; i < t.entry.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < t.entry[i].size(); ++j)
            row.push_back(word_display(t.entry[i][j]));
        table.push_back(std::move(row));
    }
    out["table"] = std::move(table);
    if (mode == RewriteMode::Convex) {
        Json marks = Json::array();
        for (const auto& row : t.used_convex_rule) {
            Json r = Json::array();
            for (bool b : row) r.push_back(b ? 1 : 0);
            marks.push_back(std::move(r));
        }
        out["used_convex_rule"] = std::move(marks);
    }
    return out;
}

Json certificate_json(const SeparationCertificate& c) {
    Json out;
    Json l = Json::array();
    l.push_back(rational_json(c.functional.l[0]));
    l.push_back(rational_json(c.functional.l[1]));
    out["l"] = std::move(l);
    out["alpha"] = rational_json(c.functional.alpha);
    out["kind"] = c.kind == CertKind::CorPoint ? "cor-point" : "cor-set";
    out["checked"] = c.checked;
    return out;
}

Json witness_json(const Point& p, int dim) {
    Json pt = Json::array();
    for (int c = 0; c < dim; ++c) pt.push_back(rational_json(p[c]));
    Json out;
    out["point"] = std::move(pt);
    return out;
}

namespace {

std::string dim1_text(const FlaggedSet& S) {
    const Arrangement& arr = S.arrangement();
    std::vector<FaceId> faces = arr.faces_along_space();
    std::vector<bool> fl;
    for (FaceId f : faces) fl.push_back(S.flag(f));
    std::ostringstream out;
    bool any = false;
    std::size_t i = 0;
    while (i < faces.size()) {
        if (!fl[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < faces.size() && fl[j + 1]) ++j;
        if (any) out << " U ";
        any = true;
        if (i == j && faces[i].kind == FaceKind::Vertex) {
            out << "{" << to_string(arr.vertices()[faces[i].index].p[0]) << "}";
        } else {
            if (faces[i].kind == FaceKind::Vertex) {
                out << "[" << to_string(arr.vertices()[faces[i].index].p[0]);
            } else {
                const EdgeFace& e = arr.edges()[faces[i].index];
                out << "(" << (e.v_from < 0 ? std::string("-inf")
                                            : to_string(arr.vertices()[e.v_from].p[0]));
            }
            out << ",";
            if (faces[j].kind == FaceKind::Vertex) {
                out << to_string(arr.vertices()[faces[j].index].p[0]) << "]";
            } else {
                const EdgeFace& e = arr.edges()[faces[j].index];
                out << (e.v_to < 0 ? std::string("+inf")
                                   : to_string(arr.vertices()[e.v_to].p[0]))
                    << ")";
            }
        }
        i = j + 1;
    }
    if (!any) return "empty";
    return out.str();
}

std::string flag_string(const FlaggedSet& S, FaceKind kind, std::size_t count) {
    std::string s;
    for (std::size_t i = 0; i < count; ++i) s += S.flag({kind, int(i)}) ? '1' : '0';
    return s;
}

}  // namespace

std::string set_text(const FlaggedSet& S) {
    const Arrangement& arr = S.arrangement();
    if (arr.space().dim == 1) return dim1_text(S);
    std::ostringstream out;
    out << "dim2 lines=[";
    for (std::size_t i = 0; i < arr.lines().size(); ++i) {
        if (i) out << " ";
        const Line& l = arr.lines()[i];
        out << l.a[0].str() << "," << l.a[1].str() << "," << to_string(l.b);
    }
    out << "] V:" << flag_string(S, FaceKind::Vertex, arr.vertices().size())
        << " E:" << flag_string(S, FaceKind::Edge, arr.edges().size())
        << " C:" << flag_string(S, FaceKind::Cell, arr.cells().size());
    return out.str();
}

std::string orbit_text(const Orbit& o) {
    std::ostringstream out;
    out << "orbit size " << o.members.size() << "\n";
    for (std::size_t i = 0; i < o.members.size(); ++i) {
        int to_f = o.transitions.at({int(i), 'f'});
        int to_g = o.transitions.at({int(i), 'g'});
        out << "[" << i << "] w=" << word_display(o.witness[i].str()) << "  "
            << set_text(o.members[i]) << "  f->[" << to_f << "] g->[" << to_g
            << "]\n";
    }
    return out.str();
}

std::string monoid_text(const MonoidTable& t, bool show_table) {
    std::ostringstream out;
    out << t.words.size() << " canonical words\n";
    for (const std::string& w : t.words) out << word_display(w) << "\n";
    if (!show_table) return out.str();
    std::size_t width = 1;
    for (const std::string& w : t.words) width = std::max(width, w.size());
    for (const auto& row : t.entry)
        for (const std::string& w : row) width = std::max(width, w.size());
    width += 1;
    auto pad = [&](const std::string& s) {
        std::string d = word_display(s);
        return d + std::string(width + 1 - d.size(), ' ');
    };
    out << "\n" << pad("*");
    for (const std::string& w : t.words) out << pad(w);
    out << "\n";
    for (std::size_t i = 0; i < t.words.size(); ++i) {
        out << pad(t.words[i]);
        for (std::size_t j = 0; j < t.words.size(); ++j) {
            std::string cell = word_display(t.entry[i][j]);
            if (!t.used_convex_rule.empty() && t.used_convex_rule[i][j]) cell += "*";
            out << cell << std::string(width + 1 - cell.size(), ' ');
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace kura
