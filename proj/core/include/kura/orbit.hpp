#ifndef KURA_ORBIT_HPP
#define KURA_ORBIT_HPP

#include <map>
#include <vector>

#include "kura/op_word.hpp"
#include "kura/operators.hpp"

namespace kura {

/// The finite family {wA : w over {f, g}} with one minimal witness word per
/// distinct set. Members are pairwise non-equal, the family is closed under f
/// and g, and members[0] is the seed with witness epsilon.
struct Orbit {
    FlaggedSet seed;
    std::vector<FlaggedSet> members;                // BFS discovery order
    std::vector<OpWord> witness;                    // minimal, f tried before g
    std::map<std::pair<int, char>, int> transitions;  // (member, letter) -> member
};

/// Breadth-first closure of A under f and g using semantic equality.
Orbit enumerate_orbit(const FlaggedSet& A);

/// The eight operator words that cover every orbit of a convex seed:
/// e, g, f, gf, fg, gfg, fgf, gfgf.
const std::vector<OpWord>& convex_cover_words();

/// One evaluated step of a composition chain.
struct ChainStep {
    OpWord word;
    int member = -1;        // orbit member the value equals
    int first_seen = -1;    // earlier step index holding the same set, or -1
};

/// Result of checking the convex orbit bound on one seed.
struct ConvexOrbitReport {
    Orbit orbit;
    bool size_within_bound = false;   // at most 8 members
    bool covered = false;             // every member reached by a cover word
    std::vector<int> cover_member;    // cover word index -> orbit member
    std::vector<ChainStep> chain_closure_first;     // A, fA, gfA, fgfA, gfgfA, fgfgfA
    std::vector<ChainStep> chain_complement_first;  // A, gA, fgA, gfgA, fgfgA
    bool verdict = false;
};

/// Verifies the bound of 8 for a convex seed. Throws PreconditionError naming
/// the is_convex gate when the seed is not convex.
ConvexOrbitReport verify_convex_orbit_bound(const FlaggedSet& A);

/// Walks the orbit's transition map along w (right to left) from the seed.
int walk_transitions(const Orbit& orbit, const OpWord& w);

}  // namespace kura

#endif
