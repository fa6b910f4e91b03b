#include "kura/hrep.hpp"

#include <algorithm>
#include <stdexcept>

#include "kura/errors.hpp"

namespace kura {

ConvexHRep ConvexHRep::from_constraints(Space space,
                                        const std::vector<LinConstraint>& cs) {
    ConvexHRep out(space);
    for (const LinConstraint& c : cs) {
        if (space.dim == 1 && c.line.a[1] != 0)
            throw SemanticError("2-dimensional constraint in a 1-dimensional space");
        auto push = [&](IVec a, Rational b, bool strict) {
            HrepRow row{std::move(a), std::move(b), strict};
            if (std::find(out.rows_.begin(), out.rows_.end(), row) == out.rows_.end())
                out.rows_.push_back(std::move(row));
        };
        switch (c.rel) {
            case Rel::Lt: push(c.line.a, c.line.b, true); break;
            case Rel::Le: push(c.line.a, c.line.b, false); break;
            case Rel::Gt: push(neg(c.line.a), -c.line.b, true); break;
            case Rel::Ge: push(neg(c.line.a), -c.line.b, false); break;
            case Rel::Eq:
                push(c.line.a, c.line.b, false);
                push(neg(c.line.a), -c.line.b, false);
                break;
        }
    }
    return out;
}

ConvexHRep ConvexHRep::canonical_empty(Space space) {
    ConvexHRep out(space);
    out.rows_.push_back(HrepRow{{Integer(1), Integer(0)}, Rational(0), false});
    out.rows_.push_back(HrepRow{{Integer(-1), Integer(0)}, Rational(-1), false});
    return out;
}

bool ConvexHRep::is_empty() const { return !solve_rows(rows_, space_.dim).feasible; }

std::optional<Point> ConvexHRep::witness() const {
    FeasibilityResult r = solve_rows(rows_, space_.dim);
    if (!r.feasible) return std::nullopt;
    return r.witness;
}

bool ConvexHRep::contains(const Point& x) const {
    for (const HrepRow& r : rows_) {
        int s = sign_of(dot(r.a, x) - r.b);
        if (r.strict ? s >= 0 : s > 0) return false;
    }
    return true;
}

ConvexHRep cor_hrep(const ConvexHRep& S) {
    std::vector<HrepRow> strict;
    strict.reserve(S.rows().size());
    for (HrepRow r : S.rows()) {
        r.strict = true;
        strict.push_back(std::move(r));
    }
    if (!solve_rows(strict, S.space().dim).feasible)
        return ConvexHRep::canonical_empty(S.space());
    return ConvexHRep(S.space(), std::move(strict));
}

ConvexHRep lin_hrep(const ConvexHRep& S) {
    if (S.is_empty()) return ConvexHRep::canonical_empty(S.space());
    std::vector<HrepRow> weak;
    weak.reserve(S.rows().size());
    for (HrepRow r : S.rows()) {
        r.strict = false;
        weak.push_back(std::move(r));
    }
    return ConvexHRep(S.space(), std::move(weak));
}

namespace {

/// Internal Fourier-Motzkin row with Farkas bookkeeping: the row is the
/// combination sum_i mult[i] * rows[i] of the original system.
struct FmRow {
    Rational cx, cy, c;
    bool strict = false;
    std::vector<Rational> mult;
};

std::vector<FmRow> eliminate(const std::vector<FmRow>& rows, bool second_var) {
    auto coef = [&](const FmRow& r) -> const Rational& { return second_var ? r.cy : r.cx; };
    std::vector<FmRow> out;
    std::vector<const FmRow*> uppers, lowers;
    for (const FmRow& r : rows) {
        int s = sign_of(coef(r));
        if (s == 0)
            out.push_back(r);
        else if (s > 0)
            uppers.push_back(&r);
        else
            lowers.push_back(&r);
    }
    for (const FmRow* u : uppers)
        for (const FmRow* lo : lowers) {
            Rational cu = coef(*u), cl = -coef(*lo);  // both positive
            FmRow n;
            n.cx = cl * u->cx + cu * lo->cx;
            n.cy = cl * u->cy + cu * lo->cy;
            n.c = cl * u->c + cu * lo->c;
            n.strict = u->strict || lo->strict;
            n.mult.resize(u->mult.size());
            for (std::size_t i = 0; i < n.mult.size(); ++i)
                n.mult[i] = cl * u->mult[i] + cu * lo->mult[i];
            if (second_var) n.cy = Rational(0);
            else n.cx = Rational(0);
            out.push_back(std::move(n));
        }
    return out;
}

struct Bound {
    bool present = false;
    Rational value;
    bool strict = false;

    void tighten_upper(const Rational& v, bool s) {
        if (!present || v < value) {
            value = v;
            strict = s;
            present = true;
        } else if (v == value) {
            strict = strict || s;
        }
    }
    void tighten_lower(const Rational& v, bool s) {
        if (!present || v > value) {
            value = v;
            strict = s;
            present = true;
        } else if (v == value) {
            strict = strict || s;
        }
    }
};

/// A value inside the interval described by the bounds; the caller guarantees
/// feasibility (Fourier-Motzkin already ruled out contradictions).
Rational pick_value(const Bound& lo, const Bound& hi) {
    if (lo.present && hi.present) {
        if (lo.value < hi.value) return (lo.value + hi.value) / 2;
        if (lo.value == hi.value && !lo.strict && !hi.strict) return lo.value;
        throw std::logic_error("empty interval after a feasible elimination");
    }
    if (lo.present) return lo.strict ? lo.value + 1 : lo.value;
    if (hi.present) return hi.strict ? hi.value - 1 : hi.value;
    return Rational(0);
}

}  // namespace

FeasibilityResult solve_rows(const std::vector<HrepRow>& rows, int dim) {
    std::vector<FmRow> sys;
    sys.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        FmRow r;
        r.cx = Rational(rows[i].a[0]);
        r.cy = Rational(rows[i].a[1]);
        r.c = rows[i].b;
        r.strict = rows[i].strict;
        r.mult.assign(rows.size(), Rational(0));
        r.mult[i] = Rational(1);
        sys.push_back(std::move(r));
    }
    std::vector<FmRow> x_stage = dim == 2 ? eliminate(sys, true) : sys;
    std::vector<FmRow> final_stage = eliminate(x_stage, false);
    FeasibilityResult res;
    for (const FmRow& r : final_stage) {
        int s = sign_of(r.c);
        if ((r.strict && s <= 0) || (!r.strict && s < 0)) {
            res.feasible = false;
            res.farkas = r.mult;
            res.farkas_strict = r.strict;
            return res;
        }
    }
    res.feasible = true;
    // back-substitution
    Bound xlo, xhi;
    for (const FmRow& r : x_stage) {
        int s = sign_of(r.cx);
        if (s == 0) continue;
        Rational v = r.c / r.cx;
        if (s > 0)
            xhi.tighten_upper(v, r.strict);
        else
            xlo.tighten_lower(v, r.strict);
    }
    Rational x = pick_value(xlo, xhi);
    Rational y(0);
    if (dim == 2) {
        Bound ylo, yhi;
        for (const FmRow& r : sys) {
            int s = sign_of(r.cy);
            if (s == 0) continue;
            Rational v = (r.c - r.cx * x) / r.cy;
            if (s > 0)
                yhi.tighten_upper(v, r.strict);
            else
                ylo.tighten_lower(v, r.strict);
        }
        y = pick_value(ylo, yhi);
    }
    res.witness = {x, y};
    return res;
}

namespace {

Point row_anchor(const HrepRow& r) {
    if (r.a[1] != 0) return {Rational(0), r.b / Rational(r.a[1])};
    return {r.b / Rational(r.a[0]), Rational(0)};
}

}  // namespace

Extremum polyhedron_sup(const std::vector<HrepRow>& rows,
                        const std::array<Rational, 2>& l, int dim) {
    std::vector<HrepRow> weak;
    weak.reserve(rows.size());
    for (HrepRow r : rows) {
        r.strict = false;
        weak.push_back(std::move(r));
    }
    if (!solve_rows(weak, dim).feasible) return Extremum{Extremum::Empty, Rational(0)};
    // bounded above iff the recession cone admits no improving direction
    Integer m = boost::multiprecision::lcm(denominator(l[0]), denominator(l[1]));
    IVec li{numerator(l[0]) * (m / denominator(l[0])),
            numerator(l[1]) * (m / denominator(l[1]))};
    if (!is_zero(li)) {
        std::vector<HrepRow> cone;
        for (const HrepRow& r : weak) cone.push_back(HrepRow{r.a, Rational(0), false});
        cone.push_back(HrepRow{neg(li), Rational(-1), false});  // l.d >= 1
        if (solve_rows(cone, dim).feasible)
            return Extremum{Extremum::Unbounded, Rational(0)};
    }
    if (is_zero(li)) return Extremum{Extremum::Finite, Rational(0)};
    if (dim == 1) {
        Bound xlo, xhi;
        for (const HrepRow& r : weak) {
            int s = sign_of(r.a[0]);
            if (s == 0) continue;
            Rational v = r.b / Rational(r.a[0]);
            if (s > 0)
                xhi.tighten_upper(v, false);
            else
                xlo.tighten_lower(v, false);
        }
        if (l[0] > 0) {
            if (!xhi.present) throw std::logic_error("unbounded sup slipped the cone test");
            return Extremum{Extremum::Finite, l[0] * xhi.value};
        }
        if (!xlo.present) throw std::logic_error("unbounded sup slipped the cone test");
        return Extremum{Extremum::Finite, l[0] * xlo.value};
    }
    // dimension 2: the supremum is attained on some tight-row face; optimize
    // exactly over each 1-dimensional face P /\ {a_i . x = b_i}
    bool have = false;
    Rational best;
    for (std::size_t i = 0; i < weak.size(); ++i) {
        const HrepRow& ri = weak[i];
        Point p0 = row_anchor(ri);
        IVec u{-ri.a[1], ri.a[0]};
        Bound tlo, thi;
        bool empty_face = false;
        for (std::size_t j = 0; j < weak.size() && !empty_face; ++j) {
            if (j == i) continue;
            const HrepRow& rj = weak[j];
            Integer cu = dot(rj.a, u);
            Rational rest = rj.b - dot(rj.a, p0);
            int s = sign_of(cu);
            if (s == 0) {
                if (rest < 0) empty_face = true;
            } else if (s > 0) {
                thi.tighten_upper(rest / Rational(cu), false);
            } else {
                tlo.tighten_lower(rest / Rational(cu), false);
            }
        }
        if (empty_face) continue;
        if (tlo.present && thi.present && tlo.value > thi.value) continue;
        Rational base = l[0] * p0[0] + l[1] * p0[1];
        Rational slope = l[0] * Rational(u[0]) + l[1] * Rational(u[1]);
        Rational value;
        int ss = sign_of(slope);
        if (ss == 0) {
            value = base;
        } else if (ss > 0) {
            if (!thi.present) throw std::logic_error("unbounded face slipped the cone test");
            value = base + slope * thi.value;
        } else {
            if (!tlo.present) throw std::logic_error("unbounded face slipped the cone test");
            value = base + slope * tlo.value;
        }
        if (!have || value > best) {
            best = value;
            have = true;
        }
    }
    if (!have) throw std::logic_error("finite sup with no boundary face");
    return Extremum{Extremum::Finite, best};
}

}  // namespace kura
