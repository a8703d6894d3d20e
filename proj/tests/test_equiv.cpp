/*
   Copyright 2026 The scatlin Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace scatlin;

namespace {

QPoly fh(const FieldPtr& F, Elem h) { return build(F, {FamilyTag::new_fh, h}); }

EquivWitness trinomial_witness(const Field& F, Elem h) {
    const Elem one = F.one(), hi = F.inv(h), h2 = F.mul(h, h), h3 = F.mul(h2, h);
    return {0, F.sub(hi, h), one, F.add(F.sub(F.sub(hi, one), h3), h2), F.sub(F.sub(h, h2), one)};
}

/// Independent image check through naive arithmetic: every (x, f(x)) maps into U_g.
bool maps_onto(const QPoly& f, const QPoly& g, const EquivWitness& w) {
    const Field& F = *f.field();
    const oracle::NaiveField N(F);
    const auto fv = oracle::evaluate_all(f), gv = oracle::evaluate_all(g);
    u64 pe = 1;
    for (long long i = 0; i < w.e; ++i) pe *= F.p();
    const u64 a = F.to_packed(w.a), b = F.to_packed(w.b), c = F.to_packed(w.c), d = F.to_packed(w.d);
    std::vector<bool> hit(N.size(), false);
    for (u64 x = 0; x < N.size(); ++x) {
        const u64 xr = N.pow(x, pe), yr = N.pow(fv[x], pe);
        const u64 u = N.add(N.mul(a, xr), N.mul(b, yr));
        const u64 v = N.add(N.mul(c, xr), N.mul(d, yr));
        if (gv[u] != v || hit[u]) return false;
        hit[u] = true;
    }
    return true;
}

}  // namespace

TEST(Equiv, IdentityWitness) {
    const auto F = Field::make(3, 1);
    const QPoly f = fh(F, enumerate_h(*F, HVariant::odd)[0]);
    const auto v = gl_equivalent(f, f);
    ASSERT_EQ(v.kind, EquivKind::equivalent);
    EXPECT_TRUE(verify_witness(f, f, *v.witness));
    EXPECT_TRUE(verify_witness(f, f, {0, F->one(), F->zero(), F->zero(), F->one()}));
}

TEST(Equiv, TrinomialExplicitWitness) {
    const auto F = Field::make(3, 1);
    int n = 0;
    for (Elem h : enumerate_h(*F, HVariant::odd)) {
        if (!F->in_subfield(h, 2)) continue;
        ++n;
        const QPoly f = fh(F, h), t = build(F, {FamilyTag::trinomial, h});
        const auto w = trinomial_witness(*F, h);
        EXPECT_TRUE(verify_witness(f, t, w));
        EXPECT_TRUE(maps_onto(f, t, w));
        const auto v = gl_equivalent(f, t);
        ASSERT_EQ(v.kind, EquivKind::equivalent);
        EXPECT_TRUE(maps_onto(f, t, *v.witness));
        const auto inv = invert_witness(*F, *v.witness);
        EXPECT_TRUE(verify_witness(t, f, inv));
        EXPECT_TRUE(maps_onto(t, f, inv));
        EXPECT_EQ(gl_equivalent(t, f).kind, EquivKind::equivalent);
    }
    EXPECT_EQ(n, 4);
}

TEST(Equiv, SemilinearWitnessInversion) {
    const auto F = Field::make(3, 1);
    const QPoly f = fh(F, enumerate_h(*F, HVariant::odd)[7]);
    for (long long e = 0; e < 6; ++e) {
        const QPoly g = apply_automorphism(f, e);
        const EquivWitness w{e, F->one(), F->zero(), F->zero(), F->one()};
        EXPECT_TRUE(verify_witness(f, g, w));
        EXPECT_TRUE(maps_onto(f, g, w));
        EXPECT_TRUE(verify_witness(g, f, invert_witness(*F, w)));
    }
}

TEST(Equiv, WorkerCountDoesNotChangeWitness) {
    const auto F = Field::make(3, 1);
    Elem h{};
    for (Elem x : enumerate_h(*F, HVariant::odd))
        if (F->in_subfield(x, 2)) h = x;
    const QPoly f = fh(F, h), t = build(F, {FamilyTag::trinomial, h});
    const auto a = gl_equivalent(f, t, {1});
    const auto b = gl_equivalent(f, t, {3});
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.cursor, b.cursor);
}

TEST(Equiv, NotEquivalentToKnownFamiliesAtQ3) {
    const auto F = Field::make(3, 1);
    Elem h{};
    for (Elem x : enumerate_h(*F, HVariant::odd))
        if (!F->in_subfield(x, 2)) {
            h = x;
            break;
        }
    const QPoly f = fh(F, h);
    EXPECT_EQ(pgl_linear_sets_equivalent(f, build(F, {FamilyTag::pseudoregulus, std::nullopt}),
                                         FamilyTag::pseudoregulus)
                  .kind,
              EquivKind::not_equivalent);
    for (Elem d : mz_deltas(*F)) {
        const auto v = pgl_linear_sets_equivalent(f, build(F, {FamilyTag::csajbok_mz, d}), FamilyTag::csajbok_mz);
        EXPECT_EQ(v.kind, EquivKind::not_equivalent);
        EXPECT_EQ(v.branch, "adjoint");
        for (auto var : {L4Variant::trin, L4Variant::trin2}) EXPECT_FALSE(check_system_L4(F, h, d, var).found);
    }
    const Elem d3 = deltas_per_norm_class(*F, 3).front();
    const auto v3 = pgl_linear_sets_equivalent(f, build(F, {FamilyTag::csajbok_mp, d3}), FamilyTag::csajbok_mp);
    EXPECT_EQ(v3.kind, EquivKind::not_equivalent);
    EXPECT_EQ(v3.branch, "direct");
}

TEST(Equiv, AdjointBranch) {
    const auto F = Field::make(3, 1);
    const QPoly f = fh(F, enumerate_h(*F, HVariant::odd)[2]);
    const auto v = pgl_linear_sets_equivalent(f, adjoint(f), FamilyTag::new_fh);
    EXPECT_EQ(v.kind, EquivKind::equivalent);
}

TEST(Equiv, BudgetCheckpointResume) {
    const auto F = Field::make(3, 1);
    Elem h{};
    for (Elem x : enumerate_h(*F, HVariant::odd))
        if (!F->in_subfield(x, 2)) h = x;
    const QPoly f = fh(F, h), g = QPoly::monomial(F, 1);
    const auto full = gl_equivalent(f, g);
    EXPECT_EQ(full.kind, EquivKind::not_equivalent);
    EquivOptions o{1, u64{729} * 1000};
    EquivCursor cur{};
    int rounds = 0;
    EquivVerdict v;
    do {
        o.resume = cur;
        v = gl_equivalent(f, g, o);
        cur = v.cursor;
        ++rounds;
    } while (v.kind == EquivKind::budget_exceeded && rounds < 100);
    EXPECT_EQ(v.kind, EquivKind::not_equivalent);
    EXPECT_EQ(cur.searched, full.cursor.searched);
    EXPECT_EQ(rounds, 5);
    EXPECT_EQ(gl_equivalent(f, g, {1, 10}).kind, EquivKind::budget_exceeded);
}

TEST(Equiv, ResumedSearchFindsSameWitness) {
    const auto F = Field::make(3, 1);
    const QPoly f = fh(F, enumerate_h(*F, HVariant::odd)[0]);
    const QPoly g = apply_automorphism(f, 4);
    const auto direct = gl_equivalent(f, g);
    ASSERT_EQ(direct.kind, EquivKind::equivalent);
    EquivOptions o{1, u64{729} * 100};
    EquivVerdict v;
    do {
        v = gl_equivalent(f, g, o);
        o.resume = v.cursor;
    } while (v.kind == EquivKind::budget_exceeded);
    EXPECT_EQ(v.witness, direct.witness);
}

TEST(Equiv, DegenerateInput) {
    const auto F = Field::make(3, 1);
    try {
        gl_equivalent(QPoly::identity(F), QPoly::monomial(F, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateInput);
    }
}

TEST(Equiv, L4SystemAtQ5) {
    const auto F = Field::make(5, 1);
    const Elem h = F->from_int(2);
    bool any = false;
    for (Elem d : mz_deltas(*F))
        for (auto var : {L4Variant::trin, L4Variant::trin2}) {
            const auto r = check_system_L4(F, h, d, var);
            if (!r.found) continue;
            any = true;
            const Elem k = *r.k;
            EXPECT_EQ(F->add(F->sub(F->mul(F->from_int(9), F->mul(k, k)), F->mul(F->from_int(3), k)), F->from_int(5)),
                      F->zero());
            EXPECT_TRUE(verify_witness_pointwise(fh(F, h), l4_target(F, d, var), *r.witness, F->size()));
            EXPECT_EQ(gl_equivalent(fh(F, h), l4_target(F, d, var)).kind, EquivKind::equivalent);
        }
    EXPECT_TRUE(any);
    try {
        check_system_L4(F, h, F->one(), L4Variant::trin);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolated);
    }
}

TEST(Equiv, L4BZeroRejected) {
    const auto F = Field::make(3, 1);
    const Elem h = enumerate_h(*F, HVariant::odd)[1];
    const QPoly f = fh(F, h);
    for (Elem d : mz_deltas(*F)) {
        const EquivWitness w{0, F->zero(), F->zero(), F->zero(), F->zero()};
        EXPECT_FALSE(verify_witness(f, l4_target(F, d, L4Variant::trin), w));
    }
}

TEST(Equiv, L4AgreesWithSearch) {
    const auto F = Field::make(3, 1);
    for (Elem h : enumerate_h(*F, HVariant::odd)) {
        if (F->index_of(h) % 3 != 0) continue;
        for (Elem d : mz_deltas(*F))
            for (auto var : {L4Variant::trin, L4Variant::trin2}) {
                const bool sys = check_system_L4(F, h, d, var).found;
                const bool search = gl_equivalent(fh(F, h), l4_target(F, d, var)).kind == EquivKind::equivalent;
                EXPECT_EQ(sys, search) << F->format(h);
            }
    }
}
