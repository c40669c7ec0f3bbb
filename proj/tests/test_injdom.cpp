#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"
#include "doctest.h"

using namespace ringlab;
using namespace ringlab::testing;

namespace {

/// Re-check an extension-failure certificate against brute-force enumeration:
/// map_vals must be a genuine map K -> M that no member of Hom(N, M) restricts to.
void check_failure_certificate(RingCtx& ctx, const ModPtr& m, const ModPtr& n,
                               const ExtensionFailure& fail) {
    REQUIRE(fail.test_module == n->name);
    auto sub = submodule_module(n, fail.submodule);
    auto sub_maps = hom_enumerate(sub, m, ctx.bounds);
    bool is_map = false;
    for (const auto& f : sub_maps)
        if (f.val == fail.map_vals) { is_map = true; break; }
    CHECK(is_map);
    for (const auto& f : hom_enumerate(n, m, ctx.bounds)) {
        bool restricts = true;
        for (std::size_t i = 0; i < fail.submodule.size(); ++i)
            if (f.val[fail.submodule[i]] != fail.map_vals[i]) { restricts = false; break; }
        CHECK_FALSE(restricts);
    }
}

ModPtr module_of_size(RingCtx& ctx, int size) {
    for (const auto& m : cyclic_modules(ctx))
        if (m->size == size) return m;
    REQUIRE(false);
    return nullptr;
}

}  // namespace

TEST_CASE("relative injectivity over zmod(8)") {
    RingCtx ctx(build("zmod(8)"));
    auto z2 = module_of_size(ctx, 2);
    auto z4 = module_of_size(ctx, 4);
    auto z8 = ctx.regular();

    // everything is injective relative to a semisimple test module
    CHECK(relatively_injective(ctx, z2, z2));
    CHECK(relatively_injective(ctx, z4, z2));
    CHECK(relatively_injective(ctx, z8, z2));

    // Z/4 is Z/4-injective but not Z/8-injective
    CHECK(relatively_injective(ctx, z4, z4));
    ExtensionFailure fail;
    CHECK_FALSE(relatively_injective(ctx, z4, z8, &fail));
    check_failure_certificate(ctx, z4, z8, fail);

    // Z/2 is not Z/4-injective: the identity on the socle does not extend
    CHECK_FALSE(relatively_injective(ctx, z2, z4, &fail));
    check_failure_certificate(ctx, z2, z4, fail);

    CHECK(is_injective(ctx, z8));
    CHECK_FALSE(is_injective(ctx, z4));
    CHECK_FALSE(is_injective(ctx, z2));

    CHECK(is_poor(ctx, z2));
    CHECK_FALSE(is_poor(ctx, z4));
    CHECK_FALSE(is_poor(ctx, z8));

    CHECK(classify_module(ctx, z8) == ModClass::Injective);
    CHECK(classify_module(ctx, z4) == ModClass::Middle);
    CHECK(classify_module(ctx, z2) == ModClass::Poor);
}

TEST_CASE("zmod(4): no middle class among all modules") {
    RingCtx ctx(build("zmod(4)"));
    auto z2 = module_of_size(ctx, 2);
    CHECK(classify_module(ctx, ctx.regular()) == ModClass::Injective);
    CHECK(classify_module(ctx, z2) == ModClass::Poor);
    InjectivityProfile profile;
    classify_module(ctx, z2, &profile);
    CHECK_FALSE(profile.injective);
    CHECK(profile.poor);
    CHECK_FALSE(profile.semisimple_ring);
    // first verdict is the Baer test, then one entry per length-two local class
    REQUIRE(profile.verdicts.size() == 2);
    CHECK(profile.verdicts[0].first == "R_R");
    CHECK_FALSE(profile.verdicts[0].second);
    CHECK_FALSE(profile.verdicts[1].second);
}

TEST_CASE("semisimple rings: every module is injective, poorness is vacuous") {
    for (const std::string& s : {"gf(2,2)", "zmod(6)", "mat(gf(2),2)"}) {
        RingCtx ctx(build(s));
        CHECK(ctx.semisimple());
        for (const auto& m : cyclic_modules(ctx)) {
            InjectivityProfile profile;
            CHECK(classify_module(ctx, m, &profile) == ModClass::Injective);
            CHECK(profile.semisimple_ring);
            CHECK(profile.injective);
            CHECK(profile.poor);  // vacuously: the test set is empty
        }
    }
}

TEST_CASE("sey ring module facts") {
    RingCtx ctx(build("trimat(zmod(4),zmod(2))"));
    CHECK_FALSE(is_injective(ctx, ctx.regular()));
    REQUIRE(ctx.simples().size() == 2);
    int injective_simples = 0, poor_simples = 0;
    for (const auto& si : ctx.simples()) {
        auto cls = classify_module(ctx, si.mod);
        injective_simples += cls == ModClass::Injective ? 1 : 0;
        poor_simples += cls == ModClass::Poor ? 1 : 0;
    }
    CHECK(injective_simples == 1);
    CHECK(poor_simples == 1);
}

TEST_CASE("witness searches") {
    auto search = [](const std::string& s) {
        RingCtx ctx(build(s));
        return middle_witness_search(ctx, ctx.bounds.max_module_size);
    };

    // rings with a middle class
    for (const std::string& s :
         {"zmod(8)", "trimat(zmod(4),zmod(2))", "idealize(gf(2),2)", "tri(gf(2);2;scalars)"}) {
        auto ws = search(s);
        REQUIRE_MESSAGE(ws.witness.has_value(), s);
        CHECK_MESSAGE(ws.witness->module->size == 4, s);
        CHECK_FALSE(ws.witness->nonsemisimple_domain_member.empty());
        RingCtx ctx(build(s));
        CHECK(classify_module(ctx, ws.witness->module) == ModClass::Middle);
    }

    // rings without one
    for (const std::string& s : {"zmod(4)", "zmod(6)", "zmod(12)", "gf(2,2)", "tri(gf(2);1;full)",
                                 "tri(gf(2);2;companion[1,1,1])"}) {
        auto ws = search(s);
        CHECK_MESSAGE(!ws.witness.has_value(), s);
        RingCtx ctx(build(s));
        if (!ctx.semisimple()) CHECK_MESSAGE(ws.modules_scanned > 0, s);
    }
}

TEST_CASE("witness search is deterministic") {
    auto run = []() {
        RingCtx ctx(build("zmod(8)"));
        auto ws = middle_witness_search(ctx, ctx.bounds.max_module_size);
        REQUIRE(ws.witness.has_value());
        return std::make_tuple(ws.witness->module->name, ws.witness->module->size,
                               ws.modules_scanned, ws.witness->failure.map_vals);
    };
    CHECK(run() == run());
}

TEST_CASE("simple middle class verdicts") {
    {
        RingCtx ctx(build("zmod(8)"));
        auto r = has_no_simple_middle_class(ctx);
        CHECK(r.no_simple_middle_class);
        REQUIRE(r.per_simple.size() == 1);
        CHECK(r.per_simple[0].cls == ModClass::Poor);
    }
    {
        RingCtx ctx(build("prod(zmod(4),zmod(4))"));
        auto r = has_no_simple_middle_class(ctx);
        CHECK_FALSE(r.no_simple_middle_class);
        REQUIRE(r.per_simple.size() == 2);
        for (const auto& p : r.per_simple) CHECK(p.cls == ModClass::Middle);
    }
    {
        RingCtx ctx(build("trimat(zmod(4),zmod(2))"));
        auto r = has_no_simple_middle_class(ctx);
        CHECK(r.no_simple_middle_class);
    }
    {
        RingCtx ctx(build("gf(2,2)"));
        auto r = has_no_simple_middle_class(ctx);
        CHECK(r.no_simple_middle_class);
        REQUIRE(r.per_simple.size() == 1);
        CHECK(r.per_simple[0].cls == ModClass::Injective);
    }
}

TEST_CASE("injectivity is inherited by direct summands of the test module") {
    // if M is (A+B)-injective then M is A-injective and B-injective
    RingCtx ctx(build("zmod(12)"));
    auto mods = cyclic_modules(ctx, 12);
    for (const auto& a : mods)
        for (const auto& b : mods) {
            if (a->size * b->size > 64) continue;
            auto ab = direct_sum(a, b);
            for (const auto& m : mods) {
                if (relatively_injective(ctx, m, ab)) {
                    CHECK(relatively_injective(ctx, m, a));
                    CHECK(relatively_injective(ctx, m, b));
                }
            }
        }
}
