#include "kura/monoid.hpp"

#include <algorithm>
#include <set>

#include "kura/errors.hpp"

namespace kura {

const std::vector<Rule>& rules_for(RewriteMode mode) {
    // order matters: the h-contraction rules must win over h-expansion, which
    // is applied separately once shrinking reaches a fixpoint
    static const std::vector<Rule> general = {
        {"gg", "", false},
        {"ff", "f", false},
        {"fgfgfgf", "fgf", false},
    };
    static const std::vector<Rule> convex = {
        {"gg", "", false},
        {"ff", "f", false},
        {"hh", "h", true},
        {"fh", "f", true},
        {"hf", "h", true},
        {"fgfgf", "f", true},
        {"fgfg", "f", true},
        {"fgfgfgf", "fgf", false},
    };
    return mode == RewriteMode::General ? general : convex;
}

namespace {

void validate_letters(const std::string& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 'f' && w[i] != 'g' && w[i] != 'h')
            throw SemanticError(std::string("operator word may use only f, g, h; got '") +
                                w[i] + "' at position " + std::to_string(i + 1));
}

/// Position (1-based) of the first h with a g somewhere to its right, or 0.
std::size_t unsafe_h_position(const std::string& w) {
    std::size_t last_g = w.rfind('g');
    if (last_g == std::string::npos) return 0;
    std::size_t h = w.find('h');
    if (h != std::string::npos && h < last_g) return h + 1;
    return 0;
}

bool suffix_safe(const std::string& w, std::size_t end) {
    for (std::size_t i = end; i < w.size(); ++i)
        if (w[i] == 'g') return false;
    return true;
}

}  // namespace

Reduction reduce_traced(const std::string& word, RewriteMode mode) {
    validate_letters(word);
    if (mode == RewriteMode::Convex) {
        if (std::size_t p = unsafe_h_position(word))
            throw PreconditionError(
                "h at position " + std::to_string(p) +
                " acts on a complemented (non convex-safe) argument");
    }
    const std::vector<Rule>& rules = rules_for(mode);
    Reduction out{word, false};
    std::string& w = out.word;
    for (;;) {
        bool fired = true;
        while (fired) {
            fired = false;
            for (std::size_t i = 0; i < w.size() && !fired; ++i) {
                for (const Rule& r : rules) {
                    if (w.compare(i, r.lhs.size(), r.lhs) != 0) continue;
                    if (r.convex_seed && !suffix_safe(w, i + r.lhs.size())) continue;
                    w = w.substr(0, i) + r.rhs + w.substr(i + r.lhs.size());
                    out.used_convex_rule |= r.convex_seed;
                    fired = true;
                    break;
                }
            }
        }
        if (mode != RewriteMode::Convex) break;
        // at a shrink fixpoint at most one h survives; eliminate it via the
        // complement form of the interior and shrink again
        std::size_t h = w.find('h');
        if (h == std::string::npos) break;
        w = w.substr(0, h) + "gfg" + w.substr(h + 1);
        out.used_convex_rule = true;
    }
    return out;
}

std::string reduce(const std::string& word, RewriteMode mode) {
    return reduce_traced(word, mode).word;
}

std::vector<std::string> enumerate_canonical(RewriteMode mode, int max_len) {
    if (max_len < 7)
        throw SemanticError("canonical enumeration needs max_len >= 7");
    if (max_len > 22) throw CapacityError("max_len too large");
    std::set<std::string> seen;
    std::vector<std::string> stack{""};
    seen.insert(reduce("", mode));
    // all {f,g}-words up to max_len
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : stack)
            for (char c : {'f', 'g'}) next.push_back(w + c);
        for (const std::string& w : next) seen.insert(reduce(w, mode));
        stack = std::move(next);
    }
    std::vector<std::string> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

MonoidTable monoid_table(RewriteMode mode) {
    MonoidTable t;
    t.words = enumerate_canonical(mode, 9);
    int n = int(t.words.size());
    t.entry.assign(n, std::vector<std::string>(n));
    t.used_convex_rule.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Reduction r = reduce_traced(t.words[i] + t.words[j], mode);
            t.entry[i][j] = r.word;
            t.used_convex_rule[i][j] = r.used_convex_rule;
        }
    return t;
}

std::string word_display(const std::string& w) { return w.empty() ? "e" : w; }

}  // namespace kura
