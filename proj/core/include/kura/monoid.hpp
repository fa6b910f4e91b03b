#ifndef KURA_MONOID_HPP
#define KURA_MONOID_HPP

#include <string>
#include <vector>

namespace kura {

/// `General` models an idempotent monotone closure on arbitrary sets; `Convex`
/// models operators applied to a convex seed with nonempty algebraic interior.
enum class RewriteMode { General, Convex };

/// One rewrite rule. Convex-seed rules may fire only where the remaining
/// suffix to the right of the match consists of convexity-preserving letters
/// {f, h}; g destroys the convex-seed class.
struct Rule {
    std::string lhs;
    std::string rhs;
    bool convex_seed = false;  // requires Convex mode and a safe suffix
};

/// The active rule set of a mode. Every rule either shortens the word or
/// strictly reduces the number of h letters.
const std::vector<Rule>& rules_for(RewriteMode mode);

struct Reduction {
    std::string word;
    bool used_convex_rule = false;
};

/// Rewrites to a fixpoint. In Convex mode every h of the input must sit in a
/// safe position (no g to its right); otherwise a PreconditionError with the
/// offending position is thrown.
Reduction reduce_traced(const std::string& word, RewriteMode mode);
std::string reduce(const std::string& word, RewriteMode mode);

/// All reduced {f, g}-words of length at most max_len, deduplicated and sorted
/// by length then lexicographically. General mode yields exactly 14 words,
/// Convex mode exactly 8. Requires max_len >= 7.
std::vector<std::string> enumerate_canonical(RewriteMode mode, int max_len);

/// Composition table over the canonical words: entry[u][v] = reduce(uv).
struct MonoidTable {
    std::vector<std::string> words;
    std::vector<std::vector<std::string>> entry;
    std::vector<std::vector<bool>> used_convex_rule;
};

MonoidTable monoid_table(RewriteMode mode);

/// Display form: "e" for the empty word.
std::string word_display(const std::string& w);

}  // namespace kura

#endif
