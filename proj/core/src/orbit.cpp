#include "kura/orbit.hpp"

#include <deque>

#include "kura/errors.hpp"

namespace kura {

OpWord::OpWord(std::string s) : letters(std::move(s)) {
    for (char c : letters)
        if (c != 'f' && c != 'g' && c != 'h')
            throw SemanticError(std::string("operator word may use only f, g, h; got '") +
                                c + "'");
}

OpWord OpWord::canonical_display() const {
    std::string w = letters;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == 'g' && w[i + 1] == 'g') {
                w.erase(i, 2);
                changed = true;
                break;
            }
            if (w[i] == 'f' && w[i + 1] == 'f') {
                w.erase(i, 1);
                changed = true;
                break;
            }
        }
    }
    return OpWord(w);
}

FlaggedSet apply_word(const OpWord& w, const FlaggedSet& A) {
    FlaggedSet cur = A;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        switch (*it) {
            case 'f': cur = lin(cur); break;
            case 'g': cur = complement(cur); break;
            case 'h': cur = cor(cur); break;
            default: throw SemanticError("bad letter in operator word");
        }
    }
    return cur;
}

Orbit enumerate_orbit(const FlaggedSet& A) {
    Orbit orbit{A, {}, {}, {}};
    // f and g never change the arrangement, so members share the seed's and
    // semantic equality is a flag comparison
    std::map<FlagBits, int> seen;
    orbit.members.push_back(A);
    orbit.witness.emplace_back();
    seen[A.flags()] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (char letter : {'f', 'g'}) {
            FlaggedSet next = letter == 'f' ? lin(orbit.members[i])
                                            : complement(orbit.members[i]);
            auto [it, fresh] = seen.emplace(next.flags(), int(orbit.members.size()));
            if (fresh) {
                orbit.members.push_back(next);
                orbit.witness.push_back(OpWord(letter + orbit.witness[i].letters));
                queue.push_back(it->second);
            }
            orbit.transitions[{i, letter}] = it->second;
        }
    }
    return orbit;
}

const std::vector<OpWord>& convex_cover_words() {
    static const std::vector<OpWord> words = {
        OpWord(""),   OpWord("g"),   OpWord("f"),   OpWord("gf"),
        OpWord("fg"), OpWord("gfg"), OpWord("fgf"), OpWord("gfgf")};
    return words;
}

namespace {

std::vector<ChainStep> evaluate_chain(const Orbit& orbit,
                                      const std::vector<OpWord>& words) {
    std::vector<ChainStep> steps;
    std::vector<int> members;
    for (const OpWord& w : words) {
        int m = walk_transitions(orbit, w);
        int first = -1;
        for (std::size_t j = 0; j < members.size(); ++j)
            if (members[j] == m) {
                first = int(j);
                break;
            }
        members.push_back(m);
        steps.push_back(ChainStep{w, m, first});
    }
    return steps;
}

}  // namespace

int walk_transitions(const Orbit& orbit, const OpWord& w) {
    int cur = 0;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        auto found = orbit.transitions.find({cur, *it});
        if (found == orbit.transitions.end())
            throw SemanticError("transition map walks only f and g");
        cur = found->second;
    }
    return cur;
}

ConvexOrbitReport verify_convex_orbit_bound(const FlaggedSet& A) {
    if (!is_convex(A))
        throw PreconditionError("verify_convex_orbit_bound requires a convex seed "
                                "(is_convex gate failed)");
    ConvexOrbitReport rep{enumerate_orbit(A)};
    rep.size_within_bound = rep.orbit.members.size() <= 8;
    rep.cover_member.clear();
    std::vector<bool> reached(rep.orbit.members.size(), false);
    for (const OpWord& w : convex_cover_words()) {
        int m = walk_transitions(rep.orbit, w);
        rep.cover_member.push_back(m);
        reached[m] = true;
    }
    rep.covered = true;
    for (bool r : reached) rep.covered = rep.covered && r;
    rep.chain_closure_first = evaluate_chain(
        rep.orbit, {OpWord(""), OpWord("f"), OpWord("gf"), OpWord("fgf"),
                    OpWord("gfgf"), OpWord("fgfgf")});
    rep.chain_complement_first = evaluate_chain(
        rep.orbit,
        {OpWord(""), OpWord("g"), OpWord("fg"), OpWord("gfg"), OpWord("fgfg")});
    rep.verdict = rep.size_within_bound && rep.covered;
    return rep;
}

}  // namespace kura
