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

ScanOptions one_worker() { return ScanOptions{1}; }

QPoly case1(const FieldPtr& F) { return build(F, {FamilyTag::case1, std::nullopt}); }

/// Spectrum from per-slope kernel dimensions (Dickson ranks), no bucketing.
std::map<unsigned, std::uint64_t> spectrum_by_ranks(const QPoly& f) {
    const Field& F = *f.field();
    std::map<unsigned, std::uint64_t> out;
    for (u64 i = 0; i < F.size(); ++i) {
        const unsigned w = kernel_dim(shift(f, F.at(i)));
        if (w > 0) ++out[w];
    }
    return out;
}

}  // namespace

TEST(Scatter, PseudoregulusSpectrum) {
    const auto F = Field::make(3, 1);
    const auto s = weight_spectrum(QPoly::monomial(F, 1), one_worker());
    EXPECT_EQ(s.counts, (std::map<unsigned, std::uint64_t>{{1, 364}}));
    EXPECT_TRUE(s.mass_conserved(*F));
    EXPECT_TRUE(is_scattered_oracle(QPoly::monomial(F, 1)).scattered);
    EXPECT_TRUE(is_scattered_dickson(QPoly::monomial(F, 1)).scattered);
}

TEST(Scatter, Case1Q5) {
    const auto F = Field::make(5, 1);
    const QPoly f = case1(F);
    const auto s = weight_spectrum(f);
    EXPECT_EQ(s.counts, (std::map<unsigned, std::uint64_t>{{1, 3906}}));
    EXPECT_EQ(s.counts, oracle::spectrum(f));
    EXPECT_TRUE(is_scattered_oracle(f).scattered);
    EXPECT_TRUE(is_scattered_dickson(f).scattered);
}

TEST(Scatter, Case1NegativeWitnesses) {
    for (u64 p : {3ull, 7ull}) {
        const auto F = Field::make(p, 1);
        const QPoly f = case1(F);
        const auto o = is_scattered_oracle(f);
        const auto d = is_scattered_dickson(f);
        ASSERT_FALSE(o.scattered);
        ASSERT_FALSE(d.scattered);
        for (Elem m : {*o.witness, *d.witness}) {
            EXPECT_EQ(F->mul(m, m), F->neg(F->from_int(4)));
            EXPECT_TRUE(F->in_subfield(m, 2));
            EXPECT_FALSE(F->in_subfield(m, 1));
        }
        EXPECT_GE(point_weight(f, *o.witness), 2u);
        const auto s = weight_spectrum(f);
        EXPECT_FALSE(s.scattered());
        EXPECT_TRUE(s.mass_conserved(*F));
    }
    const auto F3 = Field::make(3, 1);
    EXPECT_EQ(weight_spectrum(case1(F3)).counts, spectrum_by_ranks(case1(F3)));
}

TEST(Scatter, ExhaustiveModeListsAllViolations) {
    const auto F = Field::make(3, 1);
    ScanOptions o{1, true};
    const auto d = is_scattered_dickson(case1(F), o);
    const auto r = is_scattered_oracle(case1(F), o);
    ASSERT_FALSE(d.scattered);
    // both square roots of -4 in F_9
    EXPECT_EQ(d.all_witnesses.size(), 2u);
    EXPECT_EQ(r.all_witnesses.size(), 2u);
    for (Elem m : d.all_witnesses) EXPECT_EQ(F->mul(m, m), F->neg(F->from_int(4)));
    EXPECT_EQ(d.witness, d.all_witnesses.front());
}

TEST(Scatter, OracleAgreesWithDicksonOnRandomPolynomials) {
    const auto F = Field::make(3, 1);
    std::mt19937_64 rng(11);
    int non_scattered = 0;
    for (int t = 0; t < 200; ++t) {
        QPoly f = oracle::random_qpoly(F, rng, t % 3 == 0 ? 0.7 : 0.3);
        if (kernel_dim(f) == 6) f = QPoly::monomial(F, 1);
        const auto o = is_scattered_oracle(f, one_worker());
        const auto d = is_scattered_dickson(f, one_worker());
        ASSERT_EQ(o.scattered, d.scattered) << t;
        ASSERT_EQ(o.scattered, oracle::scattered(f)) << t;
        if (!o.scattered) {
            ++non_scattered;
            EXPECT_GE(kernel_dim(shift(f, *o.witness)), 2u);
            QPoly g = f;
            g.set(0, *d.witness);
            EXPECT_GE(kernel_dim(g), 2u);
        }
    }
    EXPECT_GT(non_scattered, 0);
}

TEST(Scatter, SpectrumMassConservationAndAdjointEquality) {
    const auto F = Field::make(3, 1);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) {
        const QPoly f = oracle::random_qpoly(F, rng, 0.5);
        if (kernel_dim(f) == 6) continue;
        const auto s = weight_spectrum(f, one_worker());
        EXPECT_TRUE(s.mass_conserved(*F));
        EXPECT_EQ(s, weight_spectrum(adjoint(f), one_worker()));
        if (t < 10) EXPECT_EQ(s.counts, oracle::spectrum(f));
    }
}

TEST(Scatter, WorkerCountDoesNotChangeResults) {
    const auto F = Field::make(3, 1);
    const QPoly f = case1(F);
    for (unsigned w : {1u, 2u, 4u}) {
        ScanOptions o{w};
        EXPECT_EQ(weight_spectrum(f, o).counts, weight_spectrum(f, one_worker()).counts);
        EXPECT_EQ(is_scattered_dickson(f, o).witness, is_scattered_dickson(f, one_worker()).witness);
        EXPECT_EQ(is_scattered_oracle(f, o).witness, is_scattered_oracle(f, one_worker()).witness);
    }
}

TEST(Scatter, ScanBudget) {
    const auto F = Field::make(3, 1);
    ScanOptions o{1, false, 100};
    EXPECT_THROW(weight_spectrum(QPoly::monomial(F, 1), o), Error);
}

TEST(Scatter, EvenCase1NotScattered) {
    const auto F = Field::make(2, 2);
    const QPoly f = case1(F);
    EXPECT_FALSE(is_scattered_oracle(f).scattered);
    EXPECT_FALSE(is_scattered_dickson(f).scattered);
    EXPECT_TRUE(dickson_common_root(f, F->zero()));
}
