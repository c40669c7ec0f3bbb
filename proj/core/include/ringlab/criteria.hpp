#pragma once

#include "ringlab/injectivity.hpp"
#include "ringlab/linalg.hpp"
#include "ringlab/ringspec.hpp"

namespace ringlab {

enum class Verdict { Holds, Fails, Inapplicable, Undecided };
const char* to_string(Verdict v);

struct CriterionVerdict {
    std::string id;      // stable identifier, e.g. "row-span"
    Verdict verdict = Verdict::Inapplicable;
    std::string detail;  // human-readable certificate / reason
    // machine-checkable failure data, when meaningful
    std::optional<Mat> failing_conjugate;
    int failing_row = -1;  // 0-based
};

enum class SpanMode { SelfOnly, AllConjugates };

/// Every conjugate u*Dprime*u^-1 (or Dprime alone in SelfOnly mode) must have
/// its i-th rows span D^n for every i. Dprime must be a division subring.
CriterionVerdict row_span_criterion(const FieldPtr& D, int n, const std::vector<Mat>& dprime,
                                    SpanMode mode, const Bounds& bounds = {});

/// n = 2 shortcut: a middle class exists iff all members of Dprime are lower
/// triangular or all are upper triangular. Holds = middle class predicted.
CriterionVerdict triangularity_criterion(const std::vector<Mat>& dprime);

/// All module maps (D,D')_i -> (D, M_n(D))_j given in closed form: pairs
/// (d0, A0) with row j of A0 equal to d0 * e_i, acting by
/// (d, A) -> (d0*d, A0*A). Indices 0-based. Must coincide with brute-force
/// hom enumeration (asserted in tests).
struct CornerHomSet {
    ModPtr dom, cod;
    std::vector<ModuleMap> maps;  // sorted by value table
};
CornerHomSet corner_hom_formula(RingPtr triR, int i, int j, const Bounds& bounds = {});

/// (D,D')_i and (D,D')_j are isomorphic iff Dprime contains A with row j of A
/// equal to c * e_i for some nonzero c. Indices 0-based.
CriterionVerdict local_factor_iso(const FieldPtr& D, int n, const std::vector<Mat>& dprime,
                                  int i, int j);

/// The union of left lines D*(first row of A), A in Dprime, covers D^n iff
/// the tri-ring has a unique local length-two module up to isomorphism.
CriterionVerdict line_cover_criterion(const FieldPtr& D, int n, const std::vector<Mat>& dprime);

/// The F-span of powers of the companion matrix of an irreducible monic P:
/// a field of size |F|^deg(P) inside M_deg(F), properly containing the
/// scalars when deg >= 2.
std::vector<Mat> companion_subfield(const FieldPtr& F, const Poly& P);

/// For a division subring K of M_p(F) properly containing the scalars with p
/// prime: every conjugate has full row span for every row index, and the
/// minimal polynomial of any non-scalar member has degree exactly p.
CriterionVerdict prime_degree_span_check(const FieldPtr& F, int p, const std::vector<Mat>& K,
                                         const Bounds& bounds = {});

struct StructuralPredicates {
    bool commutative = false;
    bool local = false;
    bool serial = false;
    bool gv = false;  // every simple injective or projective
    bool si = false;  // equals gv for finite rings; recorded separately
    bool qf = false;  // self-injective
    bool homogeneous_socle = false;
    bool soc_eq_j_eq_z = false;
    bool j_squared_zero = false;
    bool radical_contains_proper_nonzero_ideal = false;
};
StructuralPredicates structural_predicates(RingCtx& ctx);

enum class RingVerdict { NoMiddleClass, HasMiddleClass, Undecided };
enum class EvidenceKind { TheoremCertified, WitnessRefuted, CitedTheoremOnly, BoundedConsistencyOnly };
const char* to_string(RingVerdict v);
const char* to_string(EvidenceKind e);

struct RingClassification {
    std::string recipe;
    StructuralPredicates predicates;
    RingVerdict verdict = RingVerdict::Undecided;
    EvidenceKind evidence = EvidenceKind::BoundedConsistencyOnly;
    std::string rule;  // which decision path fired
    std::vector<CriterionVerdict> criteria;
    std::optional<MiddleWitness> witness;
    long long modules_scanned = 0;
    int semisimple_factor_count = 0;
    int other_factor_count = 0;
};

/// Decision tree: strip semisimple factors, then decide on the rest by the
/// commutative length-two test, the row-span criterion (tri recipes), the
/// serial/J^2=0/homogeneous-socle test, or the radical-ideal test; otherwise
/// undecided. Always runs the bounded witness search and cross-checks;
/// a certified no-middle-class verdict with an oracle witness is fatal.
RingClassification classify_ring_no_middle_class(RingCtx& ctx);

struct SimpleMCClassification {
    std::string recipe;
    bool no_simple_middle_class = true;
    SimpleMiddleClassResult oracle;
    bool simple_destitute = false;
    std::string dichotomy_case;  // which side of the structural dichotomy applies
    std::vector<CriterionVerdict> checks;
};

/// Complete oracle decision plus verification against the structural
/// dichotomy (semisimple-plus-T with T either SI with homogeneous socle or
/// unique-noninjective-simple with homogeneous singular socle); a mismatch
/// throws. Also records simple-destitute status and checks it equals
/// "semisimple or unique simple class".
SimpleMCClassification classify_simple_middle_class(RingCtx& ctx);

/// Necessary structural conditions for rings certified to have no simple
/// middle class: socle projective or singular; with singular socle, a unique
/// noninjective simple, homogeneous socle, indecomposable ring; with zero
/// singular submodule, nonzero poor homogeneous socle on the nonsemisimple
/// part. Violations throw.
std::vector<CriterionVerdict> theorem_shape_validators(RingCtx& ctx);

}  // namespace ringlab
