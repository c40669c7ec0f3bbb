#include "ringlab/criteria.hpp"

#include <algorithm>
#include <map>

#include "ringlab/ringstruct.hpp"

namespace ringlab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Inapplicable: return "inapplicable";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

const char* to_string(RingVerdict v) {
    switch (v) {
        case RingVerdict::NoMiddleClass: return "no-middle-class";
        case RingVerdict::HasMiddleClass: return "has-middle-class";
        case RingVerdict::Undecided: return "undecided";
    }
    return "?";
}

const char* to_string(EvidenceKind e) {
    switch (e) {
        case EvidenceKind::TheoremCertified: return "theorem-certified";
        case EvidenceKind::WitnessRefuted: return "witness-refuted";
        case EvidenceKind::CitedTheoremOnly: return "cited-theorem-only";
        case EvidenceKind::BoundedConsistencyOnly: return "bounded-consistency-only";
    }
    return "?";
}

namespace {

bool division_set(const std::vector<Mat>& s) {
    std::vector<Mat> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    bool has_id = false;
    for (const auto& m : s) {
        if (m == Mat::identity(m.F, m.rows)) has_id = true;
        if (m.is_zero()) continue;
        if (!m.invertible()) return false;
        Mat inv = m.inverse();
        if (!std::binary_search(sorted.begin(), sorted.end(), inv)) return false;
    }
    return has_id;
}

std::vector<Mat> all_matrices(const FieldPtr& F, int n) {
    const int q = static_cast<int>(F->size());
    std::vector<Mat> out;
    std::vector<int> digits(static_cast<std::size_t>(n) * n, 0);
    for (;;) {
        out.emplace_back(F, n, n, digits);
        int pos = 0;
        while (pos < n * n && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == n * n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool full_row_span(const FieldPtr& D, int n, const std::vector<Mat>& set, int i) {
    std::vector<std::vector<int>> rows;
    rows.reserve(set.size());
    for (const auto& m : set) rows.push_back(m.row(i));
    return row_span_dim(rows, n, D) == n;
}

}  // namespace

CriterionVerdict row_span_criterion(const FieldPtr& D, int n, const std::vector<Mat>& dprime,
                                    SpanMode mode, const Bounds& bounds) {
    CriterionVerdict v;
    v.id = "row-span";
    if (!division_set(dprime)) {
        v.verdict = Verdict::Inapplicable;
        v.detail = "matrix set is not a division subring";
        return v;
    }
    if (mode == SpanMode::SelfOnly) {
        for (int i = 0; i < n; ++i) {
            if (!full_row_span(D, n, dprime, i)) {
                v.verdict = Verdict::Fails;
                v.failing_row = i;
                v.detail = "row " + std::to_string(i + 1) + " does not span";
                return v;
            }
        }
        v.verdict = Verdict::Holds;
        v.detail = "all row indices span (self only)";
        return v;
    }
    std::vector<Mat> units;
    try {
        units = gl_enumerate(n, D, bounds);
    } catch (const BoundExceeded& e) {
        v.verdict = Verdict::Undecided;
        v.detail = std::string("conjugate enumeration bound: ") + e.what();
        return v;
    }
    for (const auto& u : units) {
        Mat uinv = u.inverse();
        std::vector<Mat> conj;
        conj.reserve(dprime.size());
        for (const auto& m : dprime) conj.push_back(u * m * uinv);
        for (int i = 0; i < n; ++i) {
            if (!full_row_span(D, n, conj, i)) {
                v.verdict = Verdict::Fails;
                v.failing_conjugate = u;
                v.failing_row = i;
                v.detail = "conjugate by " + u.str() + " fails at row " + std::to_string(i + 1);
                return v;
            }
        }
    }
    v.verdict = Verdict::Holds;
    v.detail = "all rows span over all " + std::to_string(units.size()) + " conjugating units";
    return v;
}

CriterionVerdict triangularity_criterion(const std::vector<Mat>& dprime) {
    CriterionVerdict v;
    v.id = "two-by-two-triangularity";
    for (const auto& m : dprime)
        if (m.rows != 2 || m.cols != 2) {
            v.verdict = Verdict::Inapplicable;
            v.detail = "only defined for 2x2 matrix sets";
            return v;
        }
    bool lower = std::all_of(dprime.begin(), dprime.end(),
                             [](const Mat& m) { return m.lower_triangular(); });
    bool upper = std::all_of(dprime.begin(), dprime.end(),
                             [](const Mat& m) { return m.upper_triangular(); });
    if (lower || upper) {
        v.verdict = Verdict::Holds;
        v.detail = std::string("all members ") + (lower ? "lower" : "upper") +
                   " triangular: middle class predicted";
    } else {
        v.verdict = Verdict::Fails;
        v.detail = "mixed triangular shapes: no middle class predicted";
    }
    return v;
}

CornerHomSet corner_hom_formula(RingPtr triR, int i, int j, const Bounds& bounds) {
    if (!triR->tri) throw SemanticError("corner_hom_formula: ring was not built as tri(...)");
    const TriInfo& t = *triR->tri;
    const int n = t.n;
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw SemanticError("corner_hom_formula: row index out of range");
    const FieldPtr& F = t.D;
    const int q = static_cast<int>(F->size());

    auto full = all_matrices(F, n);
    long long cod_size = static_cast<long long>(q) * static_cast<long long>(full.size());
    if (cod_size > bounds.max_module_size)
        throw BoundExceeded("corner_hom_formula: target module exceeds the module size bound");

    CornerHomSet out;
    out.dom = realize_paired(triR, t.dprime, i);
    out.cod = realize_paired(triR, full, j);

    std::map<std::vector<int>, int> cod_idx;  // full is sorted by all_matrices
    for (std::size_t w = 0; w < full.size(); ++w) cod_idx[full[w].a] = static_cast<int>(w);

    // free entries of A0: all rows except row j, row-major
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < n; ++r)
        if (r != j)
            for (int c = 0; c < n; ++c) free_pos.emplace_back(r, c);

    for (int d0 = 0; d0 < q; ++d0) {
        std::vector<int> digits(free_pos.size(), 0);
        for (;;) {
            Mat a0(F, n, n);
            a0.at(j, i) = d0;
            for (std::size_t p = 0; p < free_pos.size(); ++p)
                a0.at(free_pos[p].first, free_pos[p].second) = digits[p];

            std::vector<int> val(out.dom->size);
            for (int x = 0; x < out.dom->size; ++x) {
                int a = x % q, wi = x / q;
                Mat b = a0 * t.dprime[wi];
                val[x] = cod_idx.at(b.a) * q + F->mul(d0, a);
            }
            out.maps.push_back(ModuleMap{out.dom, out.cod, std::move(val)});

            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
            if (pos == digits.size()) break;
            if (digits.empty()) break;
        }
        if (free_pos.empty()) continue;
    }
    std::sort(out.maps.begin(), out.maps.end(),
              [](const ModuleMap& a, const ModuleMap& b) { return a.val < b.val; });
    out.maps.erase(std::unique(out.maps.begin(), out.maps.end(),
                               [](const ModuleMap& a, const ModuleMap& b) { return a.val == b.val; }),
                   out.maps.end());
    return out;
}

CriterionVerdict local_factor_iso(const FieldPtr& D, int n, const std::vector<Mat>& dprime,
                                  int i, int j) {
    CriterionVerdict v;
    v.id = "local-factor-iso";
    if (i < 0 || i >= n || j < 0 || j >= n) {
        v.verdict = Verdict::Inapplicable;
        v.detail = "row index out of range";
        return v;
    }
    for (const auto& m : dprime) {
        int c = m.at(j, i);
        if (c == D->zero()) continue;
        bool clean = true;
        for (int k = 0; k < n && clean; ++k)
            if (k != i && m.at(j, k) != D->zero()) clean = false;
        if (clean) {
            v.verdict = Verdict::Holds;
            v.detail = "witness matrix " + m.str() + " with c = " + D->elem_str(c);
            return v;
        }
    }
    v.verdict = Verdict::Fails;
    v.detail = "no member has row " + std::to_string(j + 1) + " supported on column " +
               std::to_string(i + 1) + " only";
    return v;
}

CriterionVerdict line_cover_criterion(const FieldPtr& D, int n, const std::vector<Mat>& dprime) {
    CriterionVerdict v;
    v.id = "first-row-line-cover";
    const int q = static_cast<int>(D->size());
    long long total = 1;
    for (int k = 0; k < n; ++k) total *= q;
    std::vector<char> covered(static_cast<std::size_t>(total), 0);
    for (const auto& m : dprime) {
        auto r = m.row(0);
        for (int d = 0; d < q; ++d) {
            long long code = 0, base = 1;
            for (int k = 0; k < n; ++k) {
                code += static_cast<long long>(D->mul(d, r[k])) * base;
                base *= q;
            }
            covered[static_cast<std::size_t>(code)] = 1;
        }
    }
    long long hit = std::count(covered.begin(), covered.end(), char(1));
    if (hit == total) {
        v.verdict = Verdict::Holds;
        v.detail = "left lines through first rows cover all " + std::to_string(total) + " vectors";
    } else {
        v.verdict = Verdict::Fails;
        v.detail = "covered " + std::to_string(hit) + " of " + std::to_string(total) + " vectors";
    }
    return v;
}

std::vector<Mat> companion_subfield(const FieldPtr& F, const Poly& P) {
    if (!P.monic() || P.degree() < 1) throw SemanticError("companion_subfield: need a monic polynomial");
    if (!poly_irreducible(P)) throw SemanticError("companion_subfield: polynomial is reducible");
    Mat c = companion(P);
    auto closure = subalgebra_closure({c}, F, 1 << 20);
    long long expect = 1;
    for (int k = 0; k < P.degree(); ++k) expect *= F->size();
    if (static_cast<long long>(closure.elems.size()) != expect || !closure.is_division_subring)
        throw SemanticError("companion_subfield: closure is not the expected field");
    return closure.elems;
}

CriterionVerdict prime_degree_span_check(const FieldPtr& F, int p, const std::vector<Mat>& K,
                                         const Bounds& bounds) {
    CriterionVerdict v;
    v.id = "prime-degree-span";
    if (!is_prime(p)) {
        v.verdict = Verdict::Inapplicable;
        v.detail = "matrix size is not prime";
        return v;
    }
    const Mat* nonscalar = nullptr;
    for (const auto& m : K) {
        if (m.rows != p || m.cols != p) {
            v.verdict = Verdict::Inapplicable;
            v.detail = "matrix sizes inconsistent with p";
            return v;
        }
        if (!m.is_scalar()) nonscalar = &m;
    }
    if (!nonscalar) {
        v.verdict = Verdict::Inapplicable;
        v.detail = "set does not properly contain the scalar matrices";
        return v;
    }
    if (!division_set(K)) {
        v.verdict = Verdict::Inapplicable;
        v.detail = "matrix set is not a division subring";
        return v;
    }
    Poly mp = min_poly(*nonscalar);
    if (mp.degree() != p) {
        v.verdict = Verdict::Fails;
        v.detail = "minimal polynomial degree " + std::to_string(mp.degree()) +
                   " differs from " + std::to_string(p);
        return v;
    }
    CriterionVerdict span = row_span_criterion(F, p, K, SpanMode::AllConjugates, bounds);
    v.verdict = span.verdict;
    v.failing_conjugate = span.failing_conjugate;
    v.failing_row = span.failing_row;
    v.detail = "min-poly degree " + std::to_string(p) + "; " + span.detail;
    return v;
}

namespace {

bool chain_lattice(const Module& m, const Bounds& bounds) {
    const auto& lat = enumerate_submodules(m, bounds);
    for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t b = a + 1; b < lat.size(); ++b) {
            bool ab = std::includes(lat[b].begin(), lat[b].end(), lat[a].begin(), lat[a].end());
            bool ba = std::includes(lat[a].begin(), lat[a].end(), lat[b].begin(), lat[b].end());
            if (!ab && !ba) return false;
        }
    return true;
}

}  // namespace

StructuralPredicates structural_predicates(RingCtx& ctx) {
    StructuralPredicates p;
    const Ring& R = *ctx.R;
    p.commutative = is_commutative(R);
    p.local = is_local_ring(R);

    const auto& jac = ctx.radical();
    p.j_squared_zero = true;
    for (int a : jac) {
        for (int b : jac)
            if (R.mul(a, b) != 0) { p.j_squared_zero = false; break; }
        if (!p.j_squared_zero) break;
    }

    const auto& prof = ctx.profile(ctx.regular());
    p.soc_eq_j_eq_z = ctx.right_socle() == jac && ctx.right_socle() == prof.singular;

    auto minimals = minimal_submodules(*ctx.regular(), ctx.bounds);
    p.homogeneous_socle = true;
    for (std::size_t a = 1; a < minimals.size(); ++a) {
        if (!ctx.isomorphic(submodule_module(ctx.regular(), minimals[0]),
                            submodule_module(ctx.regular(), minimals[a]))) {
            p.homogeneous_socle = false;
            break;
        }
    }

    p.gv = true;
    for (const auto& s : ctx.simples())
        if (!s.projective && !is_injective(ctx, s.mod)) { p.gv = false; break; }
    p.si = p.gv;  // finite rings are semilocal, where the two classes coincide

    p.qf = is_injective(ctx, ctx.regular());

    p.serial = true;
    auto prims = primitive_orthogonal_idempotents(R);
    RingPtr op = opposite_ring(R);
    ModPtr op_reg = realize_regular(op);
    for (int e : prims) {
        Subset er, re;
        for (int x = 0; x < R.size; ++x) {
            er.push_back(R.mul(e, x));
            re.push_back(R.mul(x, e));
        }
        std::sort(er.begin(), er.end());
        er.erase(std::unique(er.begin(), er.end()), er.end());
        std::sort(re.begin(), re.end());
        re.erase(std::unique(re.begin(), re.end()), re.end());
        if (!chain_lattice(*submodule_module(ctx.regular(), er), ctx.bounds) ||
            !chain_lattice(*submodule_module(op_reg, re), ctx.bounds)) {
            p.serial = false;
            break;
        }
    }

    p.radical_contains_proper_nonzero_ideal =
        ideals_within_radical(R, ctx.bounds).radical_properly_contains_nonzero_ideal;
    return p;
}

namespace {

// The non-semisimple part of the decomposition as a ring: null when the ring
// is semisimple, the whole ring when no factor is semisimple, otherwise the
// corner cut out by the sum of the non-semisimple central idempotents.
RingPtr nonsemisimple_part(RingCtx& ctx, const Decomposition& dec) {
    if (dec.other_factors.empty()) return nullptr;
    if (dec.semisimple_factors.empty()) return ctx.R;
    if (dec.other_factors.size() == 1) return dec.factors[dec.other_factors[0]].ring;
    const Ring& R = *ctx.R;
    int f = 0;
    for (std::size_t idx : dec.other_factors) f = R.add(f, dec.factors[idx].idempotent);
    Subset carrier;
    for (int x = 0; x < R.size; ++x) carrier.push_back(R.mul(f, x));
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    return corner_ring(R, carrier, f, R.recipe + ".nonss").ring;
}

}  // namespace

RingClassification classify_ring_no_middle_class(RingCtx& ctx) {
    RingClassification out;
    out.recipe = ctx.R->recipe;
    out.predicates = structural_predicates(ctx);

    auto dec = decompose_ring(*ctx.R, ctx.bounds);
    out.semisimple_factor_count = static_cast<int>(dec.semisimple_factors.size());
    out.other_factor_count = static_cast<int>(dec.other_factors.size());

    auto ws = middle_witness_search(ctx, ctx.bounds.max_module_size);
    out.modules_scanned = ws.modules_scanned;
    out.witness = ws.witness;

    auto decide = [&](RingVerdict verdict, EvidenceKind ev, const std::string& rule) {
        out.verdict = verdict;
        out.evidence = ev;
        out.rule = rule;
        if (out.verdict == RingVerdict::NoMiddleClass && out.witness)
            throw SemanticError("criteria/oracle disagreement: certified no-middle-class but the "
                                "witness search found a middle module over " + out.recipe);
    };

    if (ctx.semisimple()) {
        decide(RingVerdict::NoMiddleClass, EvidenceKind::TheoremCertified, "semisimple");
        return out;
    }

    RingPtr T = nonsemisimple_part(ctx, dec);
    RingCtx tctx(T, ctx.bounds);

    if (out.predicates.commutative) {
        bool no_mc = is_local_ring(*T) && tctx.profile(tctx.regular()).length == 2;
        decide(no_mc ? RingVerdict::NoMiddleClass : RingVerdict::HasMiddleClass,
               EvidenceKind::TheoremCertified, "commutative-local-length-two");
        return out;
    }

    if (ctx.R->tri) {
        const TriInfo& t = *ctx.R->tri;
        CriterionVerdict span =
            row_span_criterion(t.D, t.n, t.dprime, SpanMode::AllConjugates, ctx.bounds);
        out.criteria.push_back(span);
        if (span.verdict == Verdict::Holds) {
            decide(RingVerdict::NoMiddleClass, EvidenceKind::TheoremCertified, "row-span");
            return out;
        }
        if (span.verdict == Verdict::Fails) {
            decide(RingVerdict::HasMiddleClass, EvidenceKind::TheoremCertified, "row-span");
            return out;
        }
        // undecided span falls through to the remaining paths
    }

    StructuralPredicates tp = (T == ctx.R) ? out.predicates : structural_predicates(tctx);
    if (tp.serial && tp.j_squared_zero && tp.homogeneous_socle) {
        decide(RingVerdict::NoMiddleClass, EvidenceKind::TheoremCertified,
               "serial-radical-square-zero-homogeneous");
        return out;
    }
    if (tp.local && !tp.radical_contains_proper_nonzero_ideal) {
        decide(RingVerdict::NoMiddleClass, EvidenceKind::TheoremCertified,
               "local-minimal-radical");
        return out;
    }
    if (tp.radical_contains_proper_nonzero_ideal) {
        decide(RingVerdict::HasMiddleClass,
               out.witness ? EvidenceKind::WitnessRefuted : EvidenceKind::CitedTheoremOnly,
               "radical-ideal");
        return out;
    }
    if (out.witness) {
        decide(RingVerdict::HasMiddleClass, EvidenceKind::WitnessRefuted, "witness-search");
        return out;
    }
    decide(RingVerdict::Undecided, EvidenceKind::BoundedConsistencyOnly, "witness-search");
    return out;
}

SimpleMCClassification classify_simple_middle_class(RingCtx& ctx) {
    SimpleMCClassification out;
    out.recipe = ctx.R->recipe;
    out.oracle = has_no_simple_middle_class(ctx);
    out.no_simple_middle_class = out.oracle.no_simple_middle_class;

    out.simple_destitute = true;
    for (const auto& s : ctx.simples())
        if (!is_poor(ctx, s.mod)) { out.simple_destitute = false; break; }
    bool destitute_expected = ctx.semisimple() || ctx.simples().size() == 1;
    if (out.simple_destitute != destitute_expected)
        throw SemanticError("simple-destitute status disagrees with the unique-simple "
                            "characterization over " + out.recipe);
    {
        CriterionVerdict cv;
        cv.id = "simple-destitute";
        cv.verdict = out.simple_destitute ? Verdict::Holds : Verdict::Fails;
        cv.detail = out.simple_destitute ? "every simple class is poor"
                                         : "some simple class is not poor";
        out.checks.push_back(cv);
    }

    auto dec = decompose_ring(*ctx.R, ctx.bounds);
    RingPtr T = nonsemisimple_part(ctx, dec);
    bool predicted;
    if (!T) {
        predicted = true;
        out.dichotomy_case = "semisimple";
    } else {
        RingCtx own(T, ctx.bounds);
        RingCtx& tctx = (T == ctx.R) ? ctx : own;
        StructuralPredicates tp = structural_predicates(tctx);
        const auto& tprof = tctx.profile(tctx.regular());
        bool socle_singular = std::includes(tprof.singular.begin(), tprof.singular.end(),
                                            tctx.right_socle().begin(), tctx.right_socle().end());
        int noninjective = 0;
        for (const auto& s : tctx.simples())
            if (!is_injective(tctx, s.mod)) ++noninjective;
        bool case1 = tp.si && tp.homogeneous_socle;
        bool case2 = noninjective == 1 && tp.homogeneous_socle && socle_singular;
        predicted = case1 || case2;
        out.dichotomy_case = case1   ? "si-homogeneous-socle"
                             : case2 ? "unique-noninjective-singular-socle"
                                     : "none";
    }
    if (predicted != out.no_simple_middle_class)
        throw SemanticError("simple-middle-class dichotomy disagrees with the oracle over " +
                            out.recipe);
    {
        CriterionVerdict cv;
        cv.id = "simple-mc-dichotomy";
        cv.verdict = Verdict::Holds;
        cv.detail = "structural case: " + out.dichotomy_case;
        out.checks.push_back(cv);
    }
    return out;
}

std::vector<CriterionVerdict> theorem_shape_validators(RingCtx& ctx) {
    std::vector<CriterionVerdict> out;
    auto push = [&](const std::string& id, Verdict v, const std::string& detail) {
        out.push_back(CriterionVerdict{id, v, detail, std::nullopt, -1});
    };

    auto oracle = has_no_simple_middle_class(ctx);
    if (!oracle.no_simple_middle_class) {
        push("shape-validators", Verdict::Inapplicable, "ring has a simple middle class");
        return out;
    }
    if (ctx.semisimple()) {
        push("shape-validators", Verdict::Inapplicable, "semisimple ring");
        return out;
    }

    // All shape conditions concern the non-semisimple part of the ring; the
    // semisimple factors contribute only projective (injective) socle.
    auto dec = decompose_ring(*ctx.R, ctx.bounds);
    RingPtr T = nonsemisimple_part(ctx, dec);
    RingCtx own(T, ctx.bounds);
    RingCtx& tctx = (T == ctx.R) ? ctx : own;

    const auto& prof = tctx.profile(tctx.regular());
    const auto& socle = tctx.right_socle();
    bool socle_singular =
        std::includes(prof.singular.begin(), prof.singular.end(), socle.begin(), socle.end());

    auto minimals = minimal_submodules(*tctx.regular(), tctx.bounds);
    bool socle_projective = true;
    for (const auto& k : minimals) {
        auto sub = submodule_module(tctx.regular(), k);
        bool proj = false;
        for (const auto& s : tctx.simples())
            if (s.projective && tctx.isomorphic(s.mod, sub)) { proj = true; break; }
        if (!proj) { socle_projective = false; break; }
    }

    if (!socle_projective && !socle_singular)
        throw SemanticError("socle neither projective nor singular over " + ctx.R->recipe);
    push("socle-projective-or-singular", Verdict::Holds,
         socle_projective ? "socle projective" : "socle singular");

    if (socle_singular && socle.size() > 1) {
        int noninjective = 0;
        for (const auto& s : tctx.simples())
            if (!is_injective(tctx, s.mod)) ++noninjective;
        bool homogeneous = true;
        for (std::size_t a = 1; a < minimals.size(); ++a)
            if (!tctx.isomorphic(submodule_module(tctx.regular(), minimals[0]),
                                 submodule_module(tctx.regular(), minimals[a]))) {
                homogeneous = false;
                break;
            }
        bool indecomposable = central_idempotents(*T).size() == 2;
        if (noninjective != 1 || !homogeneous || !indecomposable)
            throw SemanticError("singular-socle shape conditions violated over " + ctx.R->recipe);
        push("singular-socle-shape", Verdict::Holds,
             "unique noninjective simple, homogeneous socle, indecomposable");
    } else {
        push("singular-socle-shape", Verdict::Inapplicable, "socle not singular");
    }

    if (prof.singular.size() == 1) {
        // nonsingular part: it must carry a nonzero poor homogeneous socle
        bool homogeneous = true;
        for (std::size_t a = 1; a < minimals.size(); ++a)
            if (!tctx.isomorphic(submodule_module(tctx.regular(), minimals[0]),
                                 submodule_module(tctx.regular(), minimals[a]))) {
                homogeneous = false;
                break;
            }
        bool poor = is_poor(tctx, submodule_module(tctx.regular(), socle));
        if (socle.size() <= 1 || !homogeneous || !poor)
            throw SemanticError("nonsingular shape conditions violated over " + ctx.R->recipe);
        push("nonsingular-socle-shape", Verdict::Holds, "nonzero poor homogeneous socle");
    } else {
        push("nonsingular-socle-shape", Verdict::Inapplicable, "ring is not nonsingular");
    }
    return out;
}

}  // namespace ringlab
