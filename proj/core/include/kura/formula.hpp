#ifndef KURA_FORMULA_HPP
#define KURA_FORMULA_HPP

#include <memory>
#include <set>
#include <vector>

#include "kura/constraint.hpp"

namespace kura {

/// Boolean combination of linear constraints; the ingestion form for sets.
class Formula {
public:
    enum class Kind { True, False, Atom, Not, And, Or };

    static Formula truth() { return Formula(Kind::True); }
    static Formula falsity() { return Formula(Kind::False); }
    static Formula atom(LinConstraint c);
    static Formula negate(Formula f);
    static Formula conj(std::vector<Formula> fs);
    static Formula disj(std::vector<Formula> fs);

    Kind kind() const { return kind_; }
    bool evaluate(const Point& x) const;
    void collect_lines(std::set<Line>& out) const;

private:
    explicit Formula(Kind k) : kind_(k) {}
    Kind kind_;
    LinConstraint atom_;
    std::vector<Formula> kids_;
};

}  // namespace kura

#endif
