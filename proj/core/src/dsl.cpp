#include "kura/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "kura/errors.hpp"
#include "kura/hrep.hpp"
#include "kura/operators.hpp"
#include "kura/orbit.hpp"

namespace kura::dsl {

namespace {

enum class Tok {
    Ident, Number, RelOp, StrLit,
    LParen, RParen, Comma, Semi,
    End
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    Rational number;
    Rel rel = Rel::Eq;
    Pos pos;
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_space();
        cur_ = Token{};
        cur_.pos = pos_;
        cur_.offset = i_;
        if (i_ >= src_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = src_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            cur_.kind = Tok::Ident;
            cur_.text = src_.substr(i_, j - i_);
            bump(j - i_);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[i_ + 1])))) {
            std::size_t j = i_ + 1;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            if (j < src_.size() && src_[j] == '/' && j + 1 < src_.size() &&
                std::isdigit(static_cast<unsigned char>(src_[j + 1]))) {
                ++j;
                while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j])))
                    ++j;
            }
            cur_.kind = Tok::Number;
            cur_.text = src_.substr(i_, j - i_);
            cur_.number = parse_rational(cur_.text);
            bump(j - i_);
            return;
        }
        if (c == '\'' || c == '"') {
            std::size_t j = i_ + 1;
            while (j < src_.size() && src_[j] != c) ++j;
            if (j >= src_.size())
                throw SyntaxError("unterminated string literal", pos_.line, pos_.col);
            cur_.kind = Tok::StrLit;
            cur_.text = src_.substr(i_ + 1, j - i_ - 1);
            bump(j - i_ + 1);
            return;
        }
        auto two = [&](const char* s) {
            return i_ + 1 < src_.size() && src_[i_] == s[0] && src_[i_ + 1] == s[1];
        };
        if (two("==")) { rel_token(Rel::Eq, "==", 2); return; }
        if (two("<=")) { rel_token(Rel::Le, "<=", 2); return; }
        if (two(">=")) { rel_token(Rel::Ge, ">=", 2); return; }
        switch (c) {
            case '<': rel_token(Rel::Lt, "<", 1); return;
            case '>': rel_token(Rel::Gt, ">", 1); return;
            case '=': rel_token(Rel::Eq, "=", 1); return;
            case '(': single(Tok::LParen, c); return;
            case ')': single(Tok::RParen, c); return;
            case ',': single(Tok::Comma, c); return;
            case ';': single(Tok::Semi, c); return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_.line,
                          pos_.col);
    }

    void rel_token(Rel r, const char* text, int len) {
        cur_.kind = Tok::RelOp;
        cur_.rel = r;
        cur_.text = text;
        bump(len);
    }
    void single(Tok k, char c) {
        cur_.kind = k;
        cur_.text = std::string(1, c);
        bump(1);
    }
    void skip_space() {
        for (;;) {
            while (i_ < src_.size() &&
                   std::isspace(static_cast<unsigned char>(src_[i_])))
                bump(1);
            if (i_ < src_.size() && src_[i_] == '#') {
                while (i_ < src_.size() && src_[i_] != '\n') bump(1);
                continue;
            }
            break;
        }
    }
    void bump(std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src_[i_] == '\n') {
                ++pos_.line;
                pos_.col = 1;
            } else {
                ++pos_.col;
            }
            ++i_;
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Pos pos_{1, 1};
    Token cur_;
};

const std::set<std::string> kFns = {"union", "inter", "diff", "cmpl", "lin", "cor",
                                    "cl",    "int",   "hs",   "seg",  "pt",  "box"};

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src), lex_(src) {}

    Script parse_program() {
        Script s;
        while (lex_.peek().kind != Tok::End) s.stmts.push_back(parse_stmt());
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& expected, const Token& got) {
        throw SyntaxError("expected " + expected +
                              (got.kind == Tok::End ? ", found end of input"
                                                    : ", found '" + got.text + "'"),
                          got.pos.line, got.pos.col);
    }
    Token expect(Tok k, const std::string& what) {
        if (lex_.peek().kind != k) fail(what, lex_.peek());
        return lex_.take();
    }

    Stmt parse_stmt() {
        Token head = lex_.peek();
        if (head.kind != Tok::Ident) fail("a statement", head);
        Stmt st;
        st.pos = head.pos;
        std::size_t start = head.offset;
        if (head.text == "let") {
            lex_.take();
            st.kind = Stmt::Kind::Let;
            Token id = expect(Tok::Ident, "an identifier");
            if (kFns.count(id.text) || id.text == "empty" || id.text == "space")
                throw SyntaxError("'" + id.text + "' is reserved", id.pos.line, id.pos.col);
            st.ident = id.text;
            Token eq = lex_.peek();
            if (eq.kind != Tok::RelOp || eq.rel != Rel::Eq || eq.text != "=")
                fail("'='", eq);
            lex_.take();
            st.e1 = parse_sexpr();
        } else if (head.text == "show") {
            lex_.take();
            st.kind = Stmt::Kind::Show;
            st.e1 = parse_sexpr();
        } else if (head.text == "assert") {
            lex_.take();
            st.kind = Stmt::Kind::Assert;
            st.e1 = parse_sexpr();
            Token op = lex_.peek();
            if (op.kind != Tok::RelOp || (op.text != "==" && op.text != "<="))
                fail("'==' or '<='", op);
            lex_.take();
            st.assert_eq = op.text == "==";
            st.e2 = parse_sexpr();
        } else if (head.text == "orbit") {
            lex_.take();
            st.kind = Stmt::Kind::Orbit;
            expect(Tok::LParen, "'('");
            st.e1 = parse_sexpr();
            expect(Tok::RParen, "')'");
        } else if (head.text == "monoid") {
            lex_.take();
            st.kind = Stmt::Kind::Monoid;
            expect(Tok::LParen, "'('");
            Token m = expect(Tok::Ident, "'general' or 'convex'");
            if (m.text != "general" && m.text != "convex")
                throw SyntaxError("mode must be general or convex", m.pos.line, m.pos.col);
            st.mode = m.text;
            expect(Tok::RParen, "')'");
        } else if (head.text == "separate") {
            lex_.take();
            st.kind = Stmt::Kind::Separate;
            expect(Tok::LParen, "'('");
            st.e1 = parse_sexpr();
            expect(Tok::Comma, "','");
            st.e2 = parse_sexpr();
            expect(Tok::RParen, "')'");
        } else {
            fail("a statement keyword (let, show, assert, orbit, monoid, separate)", head);
        }
        Token semi = expect(Tok::Semi, "';'");
        st.text = src_.substr(start, semi.offset + 1 - start);
        return st;
    }

    SExpr parse_sexpr() {
        Token t = lex_.peek();
        if (t.kind != Tok::Ident) fail("an expression", t);
        SExpr e;
        e.pos = t.pos;
        lex_.take();
        if (t.text == "empty") {
            e.kind = SExpr::Kind::Empty;
            return e;
        }
        if (t.text == "space") {
            e.kind = SExpr::Kind::SpaceAll;
            return e;
        }
        if (!kFns.count(t.text)) {
            e.kind = SExpr::Kind::Ident;
            e.name = t.text;
            return e;
        }
        e.kind = SExpr::Kind::Call;
        e.name = t.text;
        expect(Tok::LParen, "'('");
        if (lex_.peek().kind != Tok::RParen) {
            e.args.push_back(parse_arg());
            while (lex_.peek().kind == Tok::Comma) {
                lex_.take();
                e.args.push_back(parse_arg());
            }
        }
        expect(Tok::RParen, "')'");
        return e;
    }

    Arg parse_arg() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: return Arg(lex_.take().number);
            case Tok::RelOp: return Arg(lex_.take().rel);
            case Tok::StrLit: return Arg(lex_.take().text);
            case Tok::Ident: return Arg(parse_sexpr());
            default: fail("an argument", t);
        }
    }

    const std::string& src_;
    Lexer lex_;
};

}  // namespace

Script parse(const std::string& source) { return Parser(source).parse_program(); }

namespace {

void print_sexpr(std::ostringstream& out, const SExpr& e) {
    switch (e.kind) {
        case SExpr::Kind::Empty: out << "empty"; return;
        case SExpr::Kind::SpaceAll: out << "space"; return;
        case SExpr::Kind::Ident: out << e.name; return;
        case SExpr::Kind::Call: break;
    }
    out << e.name << "(";
    for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out << ", ";
        const Arg& a = e.args[i];
        if (std::holds_alternative<Rational>(a))
            out << to_string(std::get<Rational>(a));
        else if (std::holds_alternative<Rel>(a))
            out << rel_to_string(std::get<Rel>(a));
        else if (std::holds_alternative<std::string>(a))
            out << "'" << std::get<std::string>(a) << "'";
        else
            print_sexpr(out, std::get<SExpr>(a));
    }
    out << ")";
}

}  // namespace

std::string print(const Script& s) {
    std::ostringstream out;
    for (const Stmt& st : s.stmts) {
        switch (st.kind) {
            case Stmt::Kind::Let:
                out << "let " << st.ident << " = ";
                print_sexpr(out, st.e1);
                break;
            case Stmt::Kind::Show:
                out << "show ";
                print_sexpr(out, st.e1);
                break;
            case Stmt::Kind::Assert:
                out << "assert ";
                print_sexpr(out, st.e1);
                out << (st.assert_eq ? " == " : " <= ");
                print_sexpr(out, st.e2);
                break;
            case Stmt::Kind::Orbit:
                out << "orbit(";
                print_sexpr(out, st.e1);
                out << ")";
                break;
            case Stmt::Kind::Monoid:
                out << "monoid(" << st.mode << ")";
                break;
            case Stmt::Kind::Separate:
                out << "separate(";
                print_sexpr(out, st.e1);
                out << ", ";
                print_sexpr(out, st.e2);
                out << ")";
                break;
        }
        out << ";\n";
    }
    return out.str();
}

namespace {

bool arg_equal(const Arg& a, const Arg& b);

bool sexpr_equal(const SExpr& a, const SExpr& b) {
    if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size())
        return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!arg_equal(a.args[i], b.args[i])) return false;
    return true;
}

bool arg_equal(const Arg& a, const Arg& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<Rational>(a))
        return std::get<Rational>(a) == std::get<Rational>(b);
    if (std::holds_alternative<Rel>(a)) return std::get<Rel>(a) == std::get<Rel>(b);
    if (std::holds_alternative<std::string>(a))
        return std::get<std::string>(a) == std::get<std::string>(b);
    return sexpr_equal(std::get<SExpr>(a), std::get<SExpr>(b));
}

}  // namespace

bool ast_equal(const Script& a, const Script& b) {
    if (a.stmts.size() != b.stmts.size()) return false;
    for (std::size_t i = 0; i < a.stmts.size(); ++i) {
        const Stmt& x = a.stmts[i];
        const Stmt& y = b.stmts[i];
        if (x.kind != y.kind || x.ident != y.ident || x.mode != y.mode ||
            x.assert_eq != y.assert_eq)
            return false;
        if (!sexpr_equal(x.e1, y.e1) || !sexpr_equal(x.e2, y.e2)) return false;
    }
    return true;
}

namespace {

/// Dimension demanded by a constructor call, or 0 when neutral.
int call_dim(const SExpr& e) {
    if (e.kind != SExpr::Kind::Call) return 0;
    if (e.name == "hs") return e.args.size() == 4 ? 2 : (e.args.size() == 3 ? 1 : 0);
    if (e.name == "pt") return e.args.size() == 2 ? 2 : (e.args.size() == 1 ? 1 : 0);
    if (e.name == "seg") return 1;
    if (e.name == "box") return e.args.size() == 4 ? 2 : (e.args.size() == 2 ? 1 : 0);
    return 0;
}

void infer_dim(const SExpr& e, int& dim, const Pos& pos) {
    int d = call_dim(e);
    if (d != 0) {
        if (dim != 0 && dim != d)
            throw SemanticError("dimension mismatch at line " + std::to_string(pos.line) +
                                ": script mixes 1- and 2-dimensional constructors");
        dim = d;
    }
    for (const Arg& a : e.args)
        if (std::holds_alternative<SExpr>(a)) infer_dim(std::get<SExpr>(a), dim, pos);
}

struct Env {
    Space space;
    std::map<std::string, FlaggedSet> sets;
    std::map<std::string, std::optional<ConvexHRep>> hreps;
};

Rational arg_num(const SExpr& e, std::size_t i) {
    if (i >= e.args.size() || !std::holds_alternative<Rational>(e.args[i]))
        throw SemanticError(e.name + ": argument " + std::to_string(i + 1) +
                            " must be a number");
    return std::get<Rational>(e.args[i]);
}

Rel arg_rel(const SExpr& e, std::size_t i) {
    if (i >= e.args.size() || !std::holds_alternative<Rel>(e.args[i]))
        throw SemanticError(e.name + ": argument " + std::to_string(i + 1) +
                            " must be a relation");
    return std::get<Rel>(e.args[i]);
}

const SExpr& arg_expr(const SExpr& e, std::size_t i) {
    if (i >= e.args.size() || !std::holds_alternative<SExpr>(e.args[i]))
        throw SemanticError(e.name + ": argument " + std::to_string(i + 1) +
                            " must be a set expression");
    return std::get<SExpr>(e.args[i]);
}

void need_args(const SExpr& e, std::size_t n) {
    if (e.args.size() != n)
        throw SemanticError(e.name + " takes " + std::to_string(n) + " arguments, got " +
                            std::to_string(e.args.size()));
}

/// Constraint list of a conjunctive constructor; used by both evaluators.
std::vector<LinConstraint> constructor_constraints(const SExpr& e, const Space& space) {
    std::vector<LinConstraint> out;
    if (e.name == "hs") {
        if (space.dim == 2) {
            need_args(e, 4);
            out.push_back(make_constraint({arg_num(e, 0), arg_num(e, 1)}, arg_rel(e, 2),
                                          arg_num(e, 3)));
        } else {
            need_args(e, 3);
            out.push_back(
                make_constraint({arg_num(e, 0), Rational(0)}, arg_rel(e, 1), arg_num(e, 2)));
        }
        return out;
    }
    if (e.name == "pt") {
        need_args(e, std::size_t(space.dim));
        out.push_back(make_constraint({Rational(1), Rational(0)}, Rel::Eq, arg_num(e, 0)));
        if (space.dim == 2)
            out.push_back(
                make_constraint({Rational(0), Rational(1)}, Rel::Eq, arg_num(e, 1)));
        return out;
    }
    if (e.name == "seg") {
        need_args(e, 3);
        if (space.dim != 1) throw SemanticError("seg is 1-dimensional");
        if (!std::holds_alternative<std::string>(e.args[2]))
            throw SemanticError("seg: argument 3 must be an inclusion code 'cc'|'co'|'oc'|'oo'");
        const std::string& code = std::get<std::string>(e.args[2]);
        if (code.size() != 2 || (code[0] != 'c' && code[0] != 'o') ||
            (code[1] != 'c' && code[1] != 'o'))
            throw SemanticError("seg: inclusion code must be one of cc, co, oc, oo");
        out.push_back(make_constraint({Rational(1), Rational(0)},
                                      code[0] == 'c' ? Rel::Ge : Rel::Gt, arg_num(e, 0)));
        out.push_back(make_constraint({Rational(1), Rational(0)},
                                      code[1] == 'c' ? Rel::Le : Rel::Lt, arg_num(e, 1)));
        return out;
    }
    if (e.name == "box") {
        if (space.dim == 2) {
            need_args(e, 4);
            out.push_back(
                make_constraint({Rational(1), Rational(0)}, Rel::Ge, arg_num(e, 0)));
            out.push_back(
                make_constraint({Rational(1), Rational(0)}, Rel::Le, arg_num(e, 1)));
            out.push_back(
                make_constraint({Rational(0), Rational(1)}, Rel::Ge, arg_num(e, 2)));
            out.push_back(
                make_constraint({Rational(0), Rational(1)}, Rel::Le, arg_num(e, 3)));
        } else {
            need_args(e, 2);
            out.push_back(
                make_constraint({Rational(1), Rational(0)}, Rel::Ge, arg_num(e, 0)));
            out.push_back(
                make_constraint({Rational(1), Rational(0)}, Rel::Le, arg_num(e, 1)));
        }
        return out;
    }
    throw std::logic_error("not a constructor");
}

bool is_constructor(const SExpr& e) {
    return e.kind == SExpr::Kind::Call &&
           (e.name == "hs" || e.name == "pt" || e.name == "seg" || e.name == "box");
}

FlaggedSet eval_set(const SExpr& e, Env& env) {
    switch (e.kind) {
        case SExpr::Kind::Empty: return FlaggedSet::empty(env.space);
        case SExpr::Kind::SpaceAll: return FlaggedSet::whole(env.space);
        case SExpr::Kind::Ident: {
            auto it = env.sets.find(e.name);
            if (it == env.sets.end())
                throw SemanticError("unbound identifier '" + e.name + "'");
            return it->second;
        }
        case SExpr::Kind::Call: break;
    }
    if (is_constructor(e)) {
        std::vector<Formula> atoms;
        for (LinConstraint& c : constructor_constraints(e, env.space))
            atoms.push_back(Formula::atom(std::move(c)));
        return formula_to_set(Formula::conj(std::move(atoms)), env.space);
    }
    if (e.name == "cmpl" || e.name == "lin" || e.name == "cor" || e.name == "cl" ||
        e.name == "int") {
        need_args(e, 1);
        FlaggedSet a = eval_set(arg_expr(e, 0), env);
        if (e.name == "cmpl") return complement(a);
        if (e.name == "lin") return lin(a);
        if (e.name == "cor") return cor(a);
        if (e.name == "cl") return topo_closure(a);
        return topo_interior(a);
    }
    if (e.name == "diff") {
        need_args(e, 2);
        return set_difference(eval_set(arg_expr(e, 0), env), eval_set(arg_expr(e, 1), env));
    }
    if (e.name == "union" || e.name == "inter") {
        if (e.args.size() < 2)
            throw SemanticError(e.name + " takes at least 2 arguments");
        FlaggedSet acc = eval_set(arg_expr(e, 0), env);
        for (std::size_t i = 1; i < e.args.size(); ++i) {
            FlaggedSet b = eval_set(arg_expr(e, i), env);
            acc = e.name == "union" ? set_union(acc, b) : set_intersection(acc, b);
        }
        return acc;
    }
    throw SemanticError("unknown function '" + e.name + "'");
}

/// Conjunctive view for the separation oracle: constructors, inter, and the
/// four operators that stay within convex H-representations.
std::optional<ConvexHRep> eval_hrep(const SExpr& e, Env& env) {
    switch (e.kind) {
        case SExpr::Kind::Empty: return ConvexHRep::canonical_empty(env.space);
        case SExpr::Kind::SpaceAll: return ConvexHRep(env.space);
        case SExpr::Kind::Ident: {
            auto it = env.hreps.find(e.name);
            if (it == env.hreps.end())
                throw SemanticError("unbound identifier '" + e.name + "'");
            return it->second;
        }
        case SExpr::Kind::Call: break;
    }
    if (is_constructor(e))
        return ConvexHRep::from_constraints(env.space,
                                            constructor_constraints(e, env.space));
    if (e.name == "inter") {
        ConvexHRep acc(env.space);
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            auto part = eval_hrep(arg_expr(e, i), env);
            if (!part) return std::nullopt;
            for (const HrepRow& r : part->rows()) acc.add_row(r);
        }
        return acc;
    }
    if (e.name == "lin" || e.name == "cl") {
        need_args(e, 1);
        auto a = eval_hrep(arg_expr(e, 0), env);
        if (!a) return std::nullopt;
        return lin_hrep(*a);
    }
    if (e.name == "cor" || e.name == "int") {
        need_args(e, 1);
        auto a = eval_hrep(arg_expr(e, 0), env);
        if (!a) return std::nullopt;
        return cor_hrep(*a);
    }
    return std::nullopt;  // union/cmpl/diff leave the convex fragment
}

std::string set_out(const FlaggedSet& S, bool json_sets) {
    return json_sets ? set_json(S).dump() : set_text(S);
}

}  // namespace

std::string Report::text() const {
    std::ostringstream out;
    for (const StatementResult& r : statements) {
        out << r.kind << " " << r.input << "\n";
        if (!r.output.empty()) {
            std::istringstream lines(r.output);
            std::string line;
            while (std::getline(lines, line)) out << "  " << line << "\n";
        }
        if (r.verdict) out << "  " << (*r.verdict ? "pass" : "FAIL") << "\n";
    }
    out << "summary: " << statements.size() << " statements, " << asserts
        << " asserts, " << failed << " failed\n";
    return out.str();
}

Json Report::json() const {
    Json stmts = Json::array();
    for (const StatementResult& r : statements) {
        Json s;
        s["kind"] = r.kind;
        s["input"] = r.input;
        if (!r.output.empty() && r.output.front() == '{')
            s["output"] = Json::parse(r.output);
        else
            s["output"] = r.output;
        if (r.verdict)
            s["verdict"] = *r.verdict;
        else
            s["verdict"] = nullptr;
        stmts.push_back(std::move(s));
    }
    Json out;
    out["statements"] = std::move(stmts);
    Json summary;
    summary["statements"] = statements.size();
    summary["asserts"] = asserts;
    summary["failed"] = failed;
    summary["verdict"] = failed == 0 ? "pass" : "fail";
    out["summary"] = std::move(summary);
    return out;
}

Report evaluate(const Script& s, std::optional<int> forced_dim, bool json_sets) {
    int dim = 0;
    for (const Stmt& st : s.stmts) {
        infer_dim(st.e1, dim, st.pos);
        infer_dim(st.e2, dim, st.pos);
    }
    if (forced_dim) {
        if (dim != 0 && dim != *forced_dim)
            throw SemanticError("dimension mismatch: constructors need dimension " +
                                std::to_string(dim) + " but --dim says " +
                                std::to_string(*forced_dim));
        dim = *forced_dim;
    }
    if (dim == 0) dim = 1;
    Env env{Space(dim), {}, {}};
    Report rep;
    for (const Stmt& st : s.stmts) {
        StatementResult r;
        r.input = st.text;
        switch (st.kind) {
            case Stmt::Kind::Let: {
                r.kind = "let";
                FlaggedSet v = eval_set(st.e1, env);
                env.sets.insert_or_assign(st.ident, v);
                env.hreps.insert_or_assign(st.ident, eval_hrep(st.e1, env));
                r.output = set_out(v, json_sets);
                break;
            }
            case Stmt::Kind::Show: {
                r.kind = "show";
                r.output = set_out(eval_set(st.e1, env), json_sets);
                break;
            }
            case Stmt::Kind::Assert: {
                r.kind = "assert";
                FlaggedSet a = eval_set(st.e1, env);
                FlaggedSet b = eval_set(st.e2, env);
                bool ok = st.assert_eq ? equal(a, b) : subset(a, b);
                r.verdict = ok;
                ++rep.asserts;
                if (!ok) ++rep.failed;
                break;
            }
            case Stmt::Kind::Orbit: {
                r.kind = "orbit";
                Orbit o = enumerate_orbit(eval_set(st.e1, env));
                r.output = json_sets ? orbit_json(o).dump() : orbit_text(o);
                break;
            }
            case Stmt::Kind::Monoid: {
                r.kind = "monoid";
                RewriteMode mode =
                    st.mode == "general" ? RewriteMode::General : RewriteMode::Convex;
                MonoidTable t = monoid_table(mode);
                r.output = json_sets ? monoid_json(t, mode).dump() : monoid_text(t, false);
                break;
            }
            case Stmt::Kind::Separate: {
                r.kind = "separate";
                auto S = eval_hrep(st.e1, env);
                auto T = eval_hrep(st.e2, env);
                if (!S || !T)
                    throw SemanticError(
                        "separate needs convex conjunctive expressions "
                        "(hs/pt/seg/box, inter, lin, cor)");
                SeparationResult res = separate(*S, *T);
                if (std::holds_alternative<IntersectionWitness>(res)) {
                    const Point& w = std::get<IntersectionWitness>(res).p;
                    r.output = json_sets
                                   ? witness_json(w, dim).dump()
                                   : "intersects at " + to_string(w[0]) +
                                         (dim == 2 ? "," + to_string(w[1]) : "");
                } else {
                    const SeparationCertificate& c = std::get<SeparationCertificate>(res);
                    r.output = json_sets
                                   ? certificate_json(c).dump()
                                   : "separated: l=(" + to_string(c.functional.l[0]) +
                                         (dim == 2 ? "," + to_string(c.functional.l[1])
                                                   : std::string()) +
                                         ") alpha=" + to_string(c.functional.alpha) +
                                         (c.checked ? " checked" : " UNCHECKED");
                }
                break;
            }
        }
        rep.statements.push_back(std::move(r));
    }
    return rep;
}

}  // namespace kura::dsl
