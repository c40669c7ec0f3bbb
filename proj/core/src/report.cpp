#include "ringlab/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ringlab {

const char* const kReportSchema = "injdom-report/1";

namespace {

using Json = nlohmann::ordered_json;

Json bounds_json(const Bounds& b) {
    return Json{{"max_field_size", b.max_field_size},
                {"max_gl_matrices", b.max_gl_matrices},
                {"max_ring_size", b.max_ring_size},
                {"max_module_size", b.max_module_size},
                {"max_submodules", b.max_submodules},
                {"max_hom_candidates", b.max_hom_candidates}};
}

Json criterion_json(const CriterionVerdict& c) {
    Json j{{"id", c.id}, {"anchor", c.id}, {"verdict", to_string(c.verdict)},
           {"certificate", c.detail}};
    if (c.failing_row >= 0) j["failing_row"] = c.failing_row + 1;
    if (c.failing_conjugate) j["failing_conjugate"] = c.failing_conjugate->a;
    return j;
}

Json predicates_json(const StructuralPredicates& p) {
    return Json{{"commutative", p.commutative},
                {"local", p.local},
                {"serial", p.serial},
                {"GV", p.gv},
                {"SI", p.si},
                {"QF", p.qf},
                {"homogeneous_socle", p.homogeneous_socle},
                {"Soc=J=Z", p.soc_eq_j_eq_z},
                {"J_squared_zero", p.j_squared_zero},
                {"radical_contains_proper_nonzero_ideal", p.radical_contains_proper_nonzero_ideal}};
}

Json profile_json(const InjectivityProfile& p) {
    Json verdicts = Json::array();
    for (const auto& [name, v] : p.verdicts) verdicts.push_back(Json{{"module", name}, {"injective_relative", v}});
    return Json{{"injective", p.injective},
                {"poor", p.poor},
                {"semisimple_ring", p.semisimple_ring},
                {"verdicts", verdicts}};
}

Json failure_json(const ExtensionFailure& f) {
    return Json{{"test_module", f.test_module},
                {"submodule", f.submodule},
                {"map", f.map_vals},
                {"candidates_examined", f.candidates_examined}};
}

Json witness_json(const MiddleWitness& w) {
    return Json{{"module", w.module->name},
                {"size", w.module->size},
                {"profile", profile_json(w.profile)},
                {"nonsemisimple_domain_member", w.nonsemisimple_domain_member},
                {"extension_failure", failure_json(w.failure)}};
}

Json head(const std::string& recipe, const Bounds& bounds, const ReportOptions& opt) {
    Json j{{"schema", kReportSchema}, {"recipe", recipe}, {"bounds", bounds_json(bounds)},
           {"seed", opt.seed}};
    if (opt.include_timings) j["timings"] = Json{{"elapsed_seconds", opt.elapsed_seconds}};
    return j;
}

Json classification_json(const RingClassification& rc, const Bounds& bounds,
                         const ReportOptions& opt) {
    Json j = head(rc.recipe, bounds, opt);
    j["predicates"] = predicates_json(rc.predicates);
    j["middle_class_verdict"] = to_string(rc.verdict);
    j["evidence_kind"] = to_string(rc.evidence);
    j["rule"] = rc.rule;
    Json verdicts = Json::array();
    for (const auto& c : rc.criteria) verdicts.push_back(criterion_json(c));
    j["verdicts"] = verdicts;
    j["semisimple_factors"] = rc.semisimple_factor_count;
    j["other_factors"] = rc.other_factor_count;
    j["modules_scanned"] = rc.modules_scanned;
    j["witness"] = rc.witness ? witness_json(*rc.witness) : Json(nullptr);
    return j;
}

std::string verdict_phrase(const RingClassification& rc) {
    if (rc.verdict == RingVerdict::NoMiddleClass && rc.rule == "commutative-local-length-two")
        return "no middle class (commutative local, composition length 2)";
    if (rc.verdict == RingVerdict::NoMiddleClass)
        return std::string("no middle class (") + rc.rule + ")";
    if (rc.verdict == RingVerdict::HasMiddleClass)
        return std::string("has middle class (") + rc.rule + ")";
    return "undecided by criteria";
}

std::string classification_text(const RingClassification& rc) {
    std::ostringstream os;
    os << "ring: " << rc.recipe << "\n";
    os << "verdict: " << verdict_phrase(rc) << "\n";
    os << "evidence: " << to_string(rc.evidence) << "\n";
    const auto& p = rc.predicates;
    os << "predicates: commutative=" << p.commutative << " local=" << p.local
       << " serial=" << p.serial << " GV=" << p.gv << " QF=" << p.qf
       << " homogeneous_socle=" << p.homogeneous_socle << " Soc=J=Z:" << p.soc_eq_j_eq_z
       << " J^2=0:" << p.j_squared_zero
       << " radical_ideal_flag=" << p.radical_contains_proper_nonzero_ideal << "\n";
    for (const auto& c : rc.criteria)
        os << "criterion " << c.id << ": " << to_string(c.verdict) << " (" << c.detail << ")\n";
    if (rc.witness)
        os << "witness: " << rc.witness->module->name << " size " << rc.witness->module->size
           << ", injective relative to " << rc.witness->nonsemisimple_domain_member << "\n";
    else
        os << "witness: none among " << rc.modules_scanned << " modules scanned\n";
    return os.str();
}

std::string render(const Json& j, Format fmt, const std::string& text) {
    if (fmt == Format::Json) return j.dump(2) + "\n";
    return text;
}

}  // namespace

std::string emit_classification(const RingClassification& rc, const Bounds& bounds, Format fmt,
                                const ReportOptions& opt) {
    return render(classification_json(rc, bounds, opt), fmt, classification_text(rc));
}

std::string emit_simple_mc(const SimpleMCClassification& smc, RingCtx& ctx, const Bounds& bounds,
                           Format fmt, const ReportOptions& opt) {
    Json j = head(smc.recipe, bounds, opt);
    j["no_simple_middle_class"] = smc.no_simple_middle_class;
    j["simple_destitute"] = smc.simple_destitute;
    j["dichotomy_case"] = smc.dichotomy_case;
    Json per = Json::array();
    for (const auto& s : smc.oracle.per_simple)
        per.push_back(Json{{"module", s.mod->name},
                           {"size", s.mod->size},
                           {"class", to_string(s.cls)},
                           {"projective", s.projective}});
    j["simples"] = per;
    Json verdicts = Json::array();
    for (const auto& c : smc.checks) verdicts.push_back(criterion_json(c));
    j["verdicts"] = verdicts;

    std::ostringstream os;
    os << "ring: " << smc.recipe << "\n";
    os << "simple middle class: " << (smc.no_simple_middle_class ? "none" : "present") << "\n";
    os << "simple-destitute: " << (smc.simple_destitute ? "yes" : "no") << "\n";
    os << "structural case: " << smc.dichotomy_case << "\n";
    for (const auto& s : smc.oracle.per_simple)
        os << "simple " << s.mod->name << " (size " << s.mod->size << "): " << to_string(s.cls)
           << (s.projective ? ", projective" : "") << "\n";
    (void)ctx;
    return render(j, fmt, os.str());
}

std::string emit_oracle(RingCtx& ctx, const Bounds& bounds, Format fmt, const ReportOptions& opt) {
    InjectivityProfile profile;
    ExtensionFailure failure;
    ModClass cls = classify_module(ctx, ctx.regular(), &profile, &failure);
    Json j = head(ctx.R->recipe, bounds, opt);
    j["module"] = ctx.regular()->name;
    j["class"] = to_string(cls);
    j["profile"] = profile_json(profile);
    if (!profile.injective) j["extension_failure"] = failure_json(failure);

    std::ostringstream os;
    os << "ring: " << ctx.R->recipe << "\n";
    os << "module " << ctx.regular()->name << ": " << to_string(cls) << "\n";
    for (const auto& [name, v] : profile.verdicts)
        os << "  injective relative to " << name << ": " << (v ? "yes" : "no") << "\n";
    return render(j, fmt, os.str());
}

std::string emit_witness(const WitnessSearch& ws, const std::string& recipe, const Bounds& bounds,
                         Format fmt, const ReportOptions& opt) {
    Json j = head(recipe, bounds, opt);
    j["modules_scanned"] = ws.modules_scanned;
    j["witness"] = ws.witness ? witness_json(*ws.witness) : Json(nullptr);

    std::ostringstream os;
    os << "ring: " << recipe << "\n";
    if (ws.witness)
        os << "middle witness: " << ws.witness->module->name << " size "
           << ws.witness->module->size << "\n";
    else
        os << "no middle witness among " << ws.modules_scanned << " modules scanned\n";
    return render(j, fmt, os.str());
}

std::string emit_simples(RingCtx& ctx, const Bounds& bounds, Format fmt,
                         const ReportOptions& opt) {
    Json j = head(ctx.R->recipe, bounds, opt);
    Json per = Json::array();
    std::ostringstream os;
    os << "ring: " << ctx.R->recipe << "\n";
    for (const auto& s : ctx.simples()) {
        bool inj = is_injective(ctx, s.mod);
        bool poor = is_poor(ctx, s.mod);
        per.push_back(Json{{"module", s.mod->name},
                           {"size", s.mod->size},
                           {"injective", inj},
                           {"poor", poor},
                           {"projective", s.projective}});
        os << "simple " << s.mod->name << " size " << s.mod->size << ": injective=" << inj
           << " poor=" << poor << " projective=" << s.projective << "\n";
    }
    j["simples"] = per;
    return render(j, fmt, os.str());
}

std::string emit_cross_check(const RingClassification& rc, const Bounds& bounds, Format fmt,
                             const ReportOptions& opt) {
    bool witness_found = rc.witness.has_value();
    bool agree = !(rc.verdict == RingVerdict::NoMiddleClass && witness_found);
    Json j = classification_json(rc, bounds, opt);
    j["oracle_witness_found"] = witness_found;
    j["agreement"] = agree;

    std::ostringstream os;
    os << classification_text(rc);
    os << "criteria verdict: " << to_string(rc.verdict) << "\n";
    os << "oracle: " << (witness_found ? "witness found" : "no witness within bound") << "\n";
    os << "agreement: " << (agree ? "yes" : "NO") << "\n";
    return render(j, fmt, os.str());
}

std::string emit_full_report(RingCtx& ctx, const Bounds& bounds, Format fmt,
                             const ReportOptions& opt) {
    RingClassification rc = classify_ring_no_middle_class(ctx);
    SimpleMCClassification smc = classify_simple_middle_class(ctx);
    auto shapes = theorem_shape_validators(ctx);

    Json j = classification_json(rc, bounds, opt);
    j["no_simple_middle_class"] = smc.no_simple_middle_class;
    j["simple_destitute"] = smc.simple_destitute;
    j["dichotomy_case"] = smc.dichotomy_case;
    Json sv = Json::array();
    for (const auto& c : smc.checks) sv.push_back(criterion_json(c));
    for (const auto& c : shapes) sv.push_back(criterion_json(c));
    j["shape_verdicts"] = sv;

    std::ostringstream os;
    os << classification_text(rc);
    os << "simple middle class: " << (smc.no_simple_middle_class ? "none" : "present") << "\n";
    os << "simple-destitute: " << (smc.simple_destitute ? "yes" : "no") << "\n";
    for (const auto& c : shapes)
        os << "shape " << c.id << ": " << to_string(c.verdict) << " (" << c.detail << ")\n";
    return render(j, fmt, os.str());
}

}  // namespace ringlab
