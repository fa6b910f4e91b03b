#ifndef KURA_RANDOM_SETS_HPP
#define KURA_RANDOM_SETS_HPP

#include <cstdint>
#include <random>

#include "kura/flagged_set.hpp"
#include "kura/hrep.hpp"

namespace kura {

/// Deterministic source for all randomized suites; identical seeds give
/// identical sequences on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    /// Uniform-ish in [lo, hi], inclusive.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + std::int64_t(next() % std::uint64_t(hi - lo + 1));
    }
    bool coin() { return next() & 1; }
    Rational small_rational(int bound = 4, int max_den = 3) {
        Integer num(int_in(-bound, bound));
        Integer den(int_in(1, max_den));
        return Rational(num) / Rational(den);
    }

private:
    std::mt19937_64 eng_;
};

/// Random flagged arrangement: up to max_lines small-coefficient lines with
/// independently random face flags.
FlaggedSet random_semilinear(Rng& rng, Space space, int max_lines = 5);

/// Random convex seed. Dimension 1: an interval with mixed open/closed ends
/// (occasionally a halfline, point, or empty crossing). Dimension 2: an
/// intersection of up to 6 halfplanes with mixed strictness, sometimes
/// containing an equality, so lower-dimensional cases occur.
FlaggedSet random_convex(Rng& rng, Space space);

/// Random convex seed with nonempty algebraic interior (rejection sampling).
FlaggedSet random_convex_with_core(Rng& rng, Space space);

/// Random nonempty H-representation for the separation suites.
ConvexHRep random_hrep(Rng& rng, Space space);

Point random_point(Rng& rng, Space space, int bound = 4);

}  // namespace kura

#endif
