#ifndef KURA_OP_WORD_HPP
#define KURA_OP_WORD_HPP

#include <string>

#include "kura/flagged_set.hpp"

namespace kura {

/// Word over {f, g, h}: f = algebraic closure, g = complement, h = algebraic
/// interior. Letters apply right to left.
struct OpWord {
    std::string letters;

    OpWord() = default;
    explicit OpWord(std::string s);

    const std::string& str() const { return letters; }
    bool empty() const { return letters.empty(); }

    /// Display form with "gg" removed and "ff" contracted (sound on any set).
    OpWord canonical_display() const;

    bool operator==(const OpWord& o) const { return letters == o.letters; }
    bool operator<(const OpWord& o) const {
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }
};

FlaggedSet apply_word(const OpWord& w, const FlaggedSet& A);

}  // namespace kura

#endif
