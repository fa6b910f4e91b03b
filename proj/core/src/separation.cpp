#include "kura/separation.hpp"

#include <stdexcept>

#include "kura/errors.hpp"

namespace kura {

namespace {

std::vector<HrepRow> strict_rows(const ConvexHRep& S) {
    std::vector<HrepRow> out;
    out.reserve(S.rows().size());
    for (HrepRow r : S.rows()) {
        r.strict = true;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

ConvexHRep point_hrep(Space space, const Point& x) {
    ConvexHRep out(space);
    for (int c = 0; c < space.dim; ++c) {
        IVec a{Integer(c == 0 ? 1 : 0), Integer(c == 0 ? 0 : 1)};
        Integer m = denominator(x[c]);
        IVec ai{a[0] * m, a[1] * m};
        Rational b = x[c] * Rational(m);
        out.add_row(HrepRow{ai, b, false});
        out.add_row(HrepRow{neg(ai), -b, false});
    }
    return out;
}

SeparationResult separate(const ConvexHRep& S, const ConvexHRep& T) {
    if (!(S.space() == T.space()))
        throw SemanticError("separation inputs live in different dimensions");
    if (S.is_empty() || T.is_empty())
        throw PreconditionError("separate requires nonempty S and T");
    std::vector<HrepRow> strictS = strict_rows(S);
    if (!solve_rows(strictS, S.space().dim).feasible)
        throw PreconditionError("separate requires cor(S) nonempty");
    std::vector<HrepRow> combined = strictS;
    combined.insert(combined.end(), T.rows().begin(), T.rows().end());
    FeasibilityResult r = solve_rows(combined, S.space().dim);
    if (r.feasible) return IntersectionWitness{r.witness};
    // Farkas multipliers of the S-side rows combine into the functional
    std::array<Rational, 2> l{Rational(0), Rational(0)};
    Rational alpha(0);
    for (std::size_t i = 0; i < strictS.size(); ++i) {
        l[0] += r.farkas[i] * Rational(strictS[i].a[0]);
        l[1] += r.farkas[i] * Rational(strictS[i].a[1]);
        alpha += r.farkas[i] * strictS[i].b;
    }
    if (l[0] == 0 && l[1] == 0)
        throw std::logic_error("degenerate Farkas combination despite nonempty inputs");
    SeparationCertificate cert{LinearFunctional{l, alpha}, CertKind::CorSet, false};
    cert.checked = verify_separator(S, T, cert);
    return cert;
}

CorMembershipResult cor_membership_certificate(const ConvexHRep& S, const Point& x) {
    if (S.space().dim == 1 && x[1] != 0)
        throw SemanticError("2-dimensional point in a 1-dimensional space");
    if (S.is_empty())
        throw PreconditionError("cor_membership_certificate requires nonempty S");
    const HrepRow* witness_row = nullptr;
    for (const HrepRow& r : S.rows()) {
        if (sign_of(dot(r.a, x) - r.b) >= 0) {
            witness_row = &r;
            break;
        }
    }
    if (!witness_row) return InCor{};
    SeparationCertificate cert{
        LinearFunctional{{Rational(witness_row->a[0]), Rational(witness_row->a[1])},
                         witness_row->b},
        CertKind::CorPoint, false};
    cert.checked = verify_separator(S, point_hrep(S.space(), x), cert);
    return cert;
}

bool verify_separator(const ConvexHRep& S, const ConvexHRep& T,
                      const SeparationCertificate& cert) {
    const auto& l = cert.functional.l;
    const Rational& alpha = cert.functional.alpha;
    if (l[0] == 0 && l[1] == 0)
        throw ValidationError("certificate functional must be nonzero");
    int dim = S.space().dim;
    if (dim == 1 && l[1] != 0)
        throw ValidationError("certificate functional does not match the dimension");
    // sup over S of l <= alpha
    if (!S.is_empty()) {
        Extremum sup = polyhedron_sup(S.rows(), l, dim);
        if (sup.kind == Extremum::Unbounded) return false;
        if (sup.kind == Extremum::Finite && sup.value > alpha) return false;
    }
    // alpha <= inf over T of l
    if (!T.is_empty()) {
        std::array<Rational, 2> nl{-l[0], -l[1]};
        Extremum infneg = polyhedron_sup(T.rows(), nl, dim);
        if (infneg.kind == Extremum::Unbounded) return false;
        if (infneg.kind == Extremum::Finite && -infneg.value < alpha) return false;
    }
    // strictness on cor(S): no point of the all-strict system reaches alpha
    std::vector<HrepRow> strictS = strict_rows(S);
    Integer m = boost::multiprecision::lcm(denominator(l[0]), denominator(l[1]));
    IVec li{numerator(l[0]) * (m / denominator(l[0])),
            numerator(l[1]) * (m / denominator(l[1]))};
    strictS.push_back(HrepRow{neg(li), -alpha * Rational(m), false});  // l.x >= alpha
    if (solve_rows(strictS, dim).feasible) return false;
    return true;
}

FlaggedSet hrep_to_flagged(const ConvexHRep& S) {
    std::vector<Formula> atoms;
    for (const HrepRow& r : S.rows())
        atoms.push_back(Formula::atom(LinConstraint(r.a, r.strict ? Rel::Lt : Rel::Le, r.b)));
    if (atoms.empty()) return FlaggedSet::whole(S.space());
    return formula_to_set(Formula::conj(std::move(atoms)), S.space());
}

}  // namespace kura
