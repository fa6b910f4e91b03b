#ifndef KURA_DSL_HPP
#define KURA_DSL_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kura/constraint.hpp"
#include "kura/json_io.hpp"

namespace kura::dsl {

struct Pos {
    int line = 1;
    int col = 1;
};

struct SExpr;

/// Call argument: number, relation symbol, quoted code, or a nested
/// expression.
using Arg = std::variant<Rational, Rel, std::string, SExpr>;

struct SExpr {
    enum class Kind { Ident, Empty, SpaceAll, Call };
    Kind kind = Kind::Empty;
    std::string name;       // identifier or function
    std::vector<Arg> args;  // Call only
    Pos pos;
};

struct Stmt {
    enum class Kind { Let, Show, Assert, Orbit, Monoid, Separate };
    Kind kind = Kind::Show;
    Pos pos;
    std::string ident;      // Let
    SExpr e1, e2;
    bool assert_eq = true;  // Assert: == (else <=)
    std::string mode;       // Monoid: general | convex
    std::string text;       // source slice of the statement
};

struct Script {
    std::vector<Stmt> stmts;
};

/// Recursive-descent parse; no backtracking. Throws SyntaxError with the
/// source position on malformed input.
Script parse(const std::string& source);

/// Canonical textual form; parse(print(s)) equals s up to positions.
std::string print(const Script& s);

bool ast_equal(const Script& a, const Script& b);

struct StatementResult {
    std::string kind;
    std::string input;
    std::string output;
    std::optional<bool> verdict;
};

struct Report {
    std::vector<StatementResult> statements;
    int asserts = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }

    std::string text() const;
    Json json() const;
};

/// Evaluates a parsed script. The space dimension is inferred from the
/// constructors used (hs/pt/box arity, seg); `forced_dim` pins it when no
/// constructor occurs. Unbound identifiers and dimension conflicts raise
/// SemanticError; failed asserts are recorded, not thrown.
Report evaluate(const Script& s, std::optional<int> forced_dim = std::nullopt,
                bool json_sets = false);

}  // namespace kura::dsl

#endif
