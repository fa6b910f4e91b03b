#include "kura/formula.hpp"

namespace kura {

Formula Formula::atom(LinConstraint c) {
    Formula f(Kind::Atom);
    f.atom_ = std::move(c);
    return f;
}

Formula Formula::negate(Formula f) {
    Formula g(Kind::Not);
    g.kids_.push_back(std::move(f));
    return g;
}

Formula Formula::conj(std::vector<Formula> fs) {
    Formula g(Kind::And);
    g.kids_ = std::move(fs);
    return g;
}

Formula Formula::disj(std::vector<Formula> fs) {
    Formula g(Kind::Or);
    g.kids_ = std::move(fs);
    return g;
}

bool Formula::evaluate(const Point& x) const {
    switch (kind_) {
        case Kind::True: return true;
        case Kind::False: return false;
        case Kind::Atom: return atom_.satisfied(x);
        case Kind::Not: return !kids_[0].evaluate(x);
        case Kind::And:
            for (const Formula& k : kids_)
                if (!k.evaluate(x)) return false;
            return true;
        case Kind::Or:
            for (const Formula& k : kids_)
                if (k.evaluate(x)) return true;
            return false;
    }
    return false;
}

void Formula::collect_lines(std::set<Line>& out) const {
    if (kind_ == Kind::Atom) out.insert(atom_.line);
    for (const Formula& k : kids_) k.collect_lines(out);
}

}  // namespace kura
