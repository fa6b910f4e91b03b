#include "kura/selftest.hpp"

#include <functional>

#include "kura/monoid.hpp"
#include "kura/orbit.hpp"
#include "kura/random_sets.hpp"
#include "kura/separation.hpp"

namespace kura {

namespace {

Space alt_space(int i) { return Space(i % 2 == 0 ? 1 : 2); }

struct Failure {
    std::string detail;
};

using CheckBody = std::function<void(Rng&, int)>;

CheckResult run_check(const std::string& name, int cases, std::uint64_t seed,
                      const CheckBody& body) {
    CheckResult res{name, true, cases, ""};
    Rng rng(seed);
    try {
        for (int i = 0; i < cases; ++i) body(rng, i);
    } catch (const Failure& f) {
        res.pass = false;
        res.detail = f.detail;
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    return res;
}

void expect(bool ok, const std::string& what, int i) {
    if (!ok) throw Failure{what + " (instance " + std::to_string(i) + ")"};
}

}  // namespace

std::vector<CheckResult> run_selftest(int seeds, std::uint64_t rng_seed) {
    std::vector<CheckResult> out;
    int idx = 0;
    auto check = [&](const std::string& name, int cases, const CheckBody& body) {
        out.push_back(run_check(name, cases, rng_seed + 1000003ULL * ++idx, body));
    };

    check("refinement_invariance", seeds, [](Rng& rng, int i) {
        Space sp = alt_space(i);
        FlaggedSet A = random_semilinear(rng, sp);
        FlaggedSet B = random_semilinear(rng, sp);
        auto [ra, rb] = refine(A, B);
        for (int k = 0; k < 20; ++k) {
            Point p = random_point(rng, sp);
            expect(member(A, p) == member(ra, p), "refinement changed membership", i);
            expect(member(B, p) == member(rb, p), "refinement changed membership", i);
        }
        auto [aa, ab] = refine(A, A);
        expect(aa.flags() == ab.flags(), "refine(A,A) flags differ", i);
    });

    check("face_partition_and_representatives", seeds, [](Rng& rng, int i) {
        Space sp = alt_space(i);
        FlaggedSet A = random_semilinear(rng, sp);
        const Arrangement& arr = A.arrangement();
        for (int k = 0; k < 10; ++k) {
            Point p = random_point(rng, sp);
            arr.locate(p);  // throws when a point locates to no face
        }
        for (int g = 0; g < arr.face_count(); ++g) {
            FaceId f = arr.face_at(g);
            expect(arr.locate(arr.representative(f)) == f,
                   "representative locates to a different face", i);
        }
    });

    check("boolean_algebra", seeds, [](Rng& rng, int i) {
        Space sp = alt_space(i);
        FlaggedSet A = random_semilinear(rng, sp);
        FlaggedSet B = random_semilinear(rng, sp);
        expect(equal(complement(complement(A)), A), "complement not an involution", i);
        expect(equal(complement(set_union(A, B)),
                     set_intersection(complement(A), complement(B))),
               "De Morgan (union) fails", i);
        expect(equal(complement(set_intersection(A, B)),
                     set_union(complement(A), complement(B))),
               "De Morgan (intersection) fails", i);
        expect(set_intersection(A, complement(A)).none(), "A /\\ ~A nonempty", i);
        expect(equal(set_difference(A, B), set_intersection(A, complement(B))),
               "difference mismatch", i);
    });

    check("equality_semantics", seeds, [](Rng& rng, int i) {
        Space sp = alt_space(i);
        FlaggedSet A = random_semilinear(rng, sp);
        FlaggedSet B = random_semilinear(rng, sp);
        if (equal(A, B)) {
            for (int k = 0; k < 20; ++k) {
                Point p = random_point(rng, sp);
                expect(member(A, p) == member(B, p), "equal sets disagree at a probe", i);
            }
        }
        expect(equal(A, A), "equality not reflexive", i);
    });

    check("extensivity_and_monotonicity", seeds, [](Rng& rng, int i) {
        Space sp = alt_space(i);
        FlaggedSet A = random_semilinear(rng, sp);
        expect(subset(cor(A), A), "cor not contractive", i);
        expect(subset(A, lin(A)), "lin not extensive", i);
        FlaggedSet B = set_union(A, random_semilinear(rng, sp));
        expect(subset(cor(A), cor(B)), "cor not monotone", i);
        expect(subset(lin(A), lin(B)), "lin not monotone", i);
    });

    check("operator_arrangement_stability", seeds, [](Rng& rng, int i) {
        Space sp = alt_space(i);
        FlaggedSet A = random_semilinear(rng, sp);
        for (const FlaggedSet& R :
             {cor(A), lin(A), topo_closure(A), topo_interior(A), complement(A)})
            expect(R.arrangement_ptr() == A.arrangement_ptr(),
                   "operator changed the arrangement", i);
    });

    check("cor_idempotent_all_sets", seeds, [](Rng& rng, int i) {
        FlaggedSet A = random_semilinear(rng, alt_space(i));
        expect(equal(cor(cor(A)), cor(A)), "cor cor != cor", i);
    });

    check("absorption_on_convex_cores", seeds, [](Rng& rng, int i) {
        FlaggedSet S = random_convex_with_core(rng, alt_space(i));
        expect(equal(lin(cor(S)), lin(S)), "lin(cor S) != lin S", i);
        expect(equal(cor(lin(S)), cor(S)), "cor(lin S) != cor S", i);
    });

    check("complement_duality", seeds, [](Rng& rng, int i) {
        FlaggedSet S = random_convex(rng, alt_space(i));
        expect(equal(complement(cor(S)), lin(complement(S))),
               "~cor(S) != lin(~S) on a convex seed", i);
        FlaggedSet A = random_semilinear(rng, alt_space(i));
        expect(equal(complement(cor(A)), lin(complement(A))),
               "~cor(A) != lin(~A) on a semilinear seed", i);
    });

    check("topological_coincidence", seeds, [](Rng& rng, int i) {
        FlaggedSet A = random_semilinear(rng, alt_space(i));
        expect(equal(lin(A), topo_closure(A)), "lin != topological closure", i);
        expect(equal(cor(A), topo_interior(A)), "cor != topological interior", i);
    });

    check("engine_vs_pointwise_oracle", seeds, [](Rng& rng, int i) {
        FlaggedSet A = random_semilinear(rng, alt_space(i));
        const Arrangement& arr = A.arrangement();
        FlaggedSet L = lin(A), C = cor(A);
        for (int g = 0; g < arr.face_count(); ++g) {
            FaceId f = arr.face_at(g);
            const Point& rep = arr.representative(f);
            expect(L.flag(f) == lin_pointwise(A, rep), "lin flag vs pointwise oracle", i);
            expect(C.flag(f) == cor_pointwise(A, rep), "cor flag vs pointwise oracle", i);
        }
    });

    check("convexity_decision", seeds, [](Rng& rng, int i) {
        FlaggedSet S = random_convex(rng, alt_space(i));
        expect(is_convex(S), "constraint-built convex seed judged non-convex", i);
        // midpoint cross-validation on flagged-face representatives
        const Arrangement& arr = S.arrangement();
        std::vector<Point> reps;
        for (int g = 0; g < arr.face_count(); ++g)
            if (S.flags()[g]) reps.push_back(arr.representative(arr.face_at(g)));
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = a + 1; b < reps.size(); ++b) {
                Point mid{(reps[a][0] + reps[b][0]) / 2, (reps[a][1] + reps[b][1]) / 2};
                expect(member(S, mid), "midpoint escaped a convex set", i);
            }
    });

    check("orbit_bound_convex", seeds, [](Rng& rng, int i) {
        FlaggedSet S = random_convex(rng, alt_space(i));
        ConvexOrbitReport rep = verify_convex_orbit_bound(S);
        expect(rep.verdict, "convex orbit exceeded the bound of 8", i);
    });

    check("orbit_bound_general", seeds, [](Rng& rng, int i) {
        FlaggedSet A = random_semilinear(rng, alt_space(i));
        Orbit o = enumerate_orbit(A);
        expect(o.members.size() <= 14, "orbit exceeded 14 members", i);
    });

    check("proof_chain_identities", seeds, [](Rng& rng, int i) {
        FlaggedSet S = random_convex_with_core(rng, alt_space(i));
        expect(equal(apply_word(OpWord("fgfg"), S), apply_word(OpWord("f"), S)),
               "fgfg != f on a convex seed with core", i);
        expect(equal(apply_word(OpWord("fgfgf"), S), apply_word(OpWord("f"), S)),
               "fgfgf != f on a convex seed with core", i);
    });

    check("monoid_counts", 1, [](Rng&, int i) {
        expect(enumerate_canonical(RewriteMode::General, 9).size() == 14,
               "general canonical count is not 14", i);
        std::vector<std::string> expected{"", "f", "g", "fg", "gf", "fgf", "gfg", "gfgf"};
        std::sort(expected.begin(), expected.end(), [](auto& a, auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        expect(enumerate_canonical(RewriteMode::Convex, 9) == expected,
               "convex canonical words differ from the expected eight", i);
        for (RewriteMode mode : {RewriteMode::General, RewriteMode::Convex}) {
            MonoidTable t = monoid_table(mode);
            for (const auto& row : t.entry)
                for (const std::string& w : row)
                    expect(std::find(t.words.begin(), t.words.end(), w) != t.words.end(),
                           "composition table not closed", i);
        }
    });

    check("rewrite_vs_engine", seeds, [](Rng& rng, int i) {
        FlaggedSet S = random_convex_with_core(rng, alt_space(i));
        for (const std::string& w :
             {std::string("fgfg"), std::string("gfgfg"), std::string("fgh"),
              std::string("hf"), std::string("fgfgf"), std::string("h")}) {
            std::string r = reduce(w, RewriteMode::Convex);
            expect(equal(apply_word(OpWord(w), S), apply_word(OpWord(r), S)),
                   "convex reduction changed the value on a convex seed", i);
        }
        FlaggedSet A = random_semilinear(rng, alt_space(i));
        expect(equal(apply_word(OpWord("fgfgfgf"), A), apply_word(OpWord("fgf"), A)),
               "fgfgfgf != fgf on a semilinear seed", i);
    });

    check("separation_membership", seeds, [](Rng& rng, int i) {
        Space sp = alt_space(i);
        ConvexHRep S = random_hrep(rng, sp);
        Point x = random_point(rng, sp);
        CorMembershipResult r = cor_membership_certificate(S, x);
        bool in_cor = cor_pointwise(hrep_to_flagged(S), x);
        if (std::holds_alternative<InCor>(r)) {
            expect(in_cor, "InCor verdict contradicts the pointwise oracle", i);
        } else {
            expect(!in_cor, "certificate issued for an interior point", i);
            expect(std::get<SeparationCertificate>(r).checked,
                   "membership certificate failed verification", i);
        }
    });

    check("separation_biconditional", seeds, [](Rng& rng, int i) {
        Space sp = alt_space(i);
        ConvexHRep S = random_hrep(rng, sp);
        if (cor_hrep(S).is_empty()) return;
        ConvexHRep T = random_hrep(rng, sp);
        SeparationResult r = separate(S, T);
        bool truly_meets =
            !set_intersection(hrep_to_flagged(cor_hrep(S)), hrep_to_flagged(T)).none();
        if (std::holds_alternative<IntersectionWitness>(r)) {
            expect(truly_meets, "witness issued though cor(S) misses T", i);
            const Point& w = std::get<IntersectionWitness>(r).p;
            expect(cor_hrep(S).contains(w) && T.contains(w),
                   "intersection witness outside the sets", i);
        } else {
            expect(!truly_meets, "certificate issued though cor(S) meets T", i);
            expect(std::get<SeparationCertificate>(r).checked,
                   "separation certificate failed verification", i);
        }
    });

    check("hrep_operator_bridge", seeds, [](Rng& rng, int i) {
        Space sp = alt_space(i);
        ConvexHRep S = random_hrep(rng, sp);
        expect(equal(hrep_to_flagged(cor_hrep(S)), cor(hrep_to_flagged(S))),
               "cor_hrep does not commute with the flagged bridge", i);
        expect(equal(hrep_to_flagged(lin_hrep(S)), lin(hrep_to_flagged(S))),
               "lin_hrep does not commute with the flagged bridge", i);
    });

    return out;
}

}  // namespace kura
