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

#include <set>

#include "oracle.hpp"

using namespace scatlin;

namespace {

/// Modulus irreducible over F_p: no monic factor of degree <= n/2, by trial division.
bool modulus_irreducible_by_trial(const Field& F) {
    const u64 p = F.p();
    const unsigned n = F.degree();
    const auto& f = F.modulus();
    for (unsigned d = 1; d <= n / 2; ++d) {
        u64 count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (u64 code = 0; code < count; ++code) {
            std::vector<u64> g(d + 1, 0);
            u64 c = code;
            for (unsigned i = 0; i < d; ++i, c /= p) g[i] = c % p;
            g[d] = 1;
            std::vector<u64> r(f.begin(), f.end());
            for (unsigned k = n; k >= d; --k) {
                const u64 lead = r[k];
                if (lead)
                    for (unsigned i = 0; i <= d; ++i) r[k - d + i] = (r[k - d + i] + (p - lead) * g[i]) % p;
                if (k == d) break;
            }
            bool zero = true;
            for (unsigned i = 0; i < d; ++i) zero = zero && r[i] == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

TEST(Field, Sizes) {
    EXPECT_EQ(Field::make(3, 1)->size(), 729u);
    EXPECT_EQ(Field::make(5, 1)->size(), 15625u);
    const auto F4 = Field::make(2, 2);
    EXPECT_EQ(F4->size(), 4096u);
    EXPECT_EQ(F4->q(), 4u);
}

TEST(Field, ConstructionErrors) {
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    EXPECT_EQ(kind([] { Field::make(4, 1); }), ErrorKind::NotPrime);
    EXPECT_EQ(kind([] { Field::make(2, 11); }), ErrorKind::TooLarge);
    EXPECT_EQ(kind([] { Field::make(1009, 2); }), ErrorKind::TooLarge);
}

TEST(Field, ModulusIrreducibleAndGeneratorPrimitive) {
    for (auto [p, s] : {std::pair{2ull, 1u}, {3ull, 1u}, {2ull, 2u}, {5ull, 1u}}) {
        const auto F = Field::make(p, s);
        EXPECT_TRUE(modulus_irreducible_by_trial(*F)) << p << "^" << s;
        const oracle::NaiveField N(*F);
        const u64 g = F->generator_packed();
        // order exactly q^6 - 1: check each maximal divisor by naive powering
        EXPECT_EQ(N.pow(g, F->order()), 1u);
        for (auto [r, e] : nt::factor(F->order())) EXPECT_NE(N.pow(g, F->order() / r), 1u);
    }
}

TEST(Field, Deterministic) {
    const auto a = Field::make(5, 1), b = Field::make(5, 1);
    EXPECT_EQ(a->modulus(), b->modulus());
    EXPECT_EQ(a->generator_packed(), b->generator_packed());
}

TEST(Field, ArithmeticMatchesNaiveOracle) {
    for (auto [p, s] : {std::pair{3ull, 1u}, {2ull, 2u}, {5ull, 1u}}) {
        const auto F = Field::make(p, s);
        const oracle::NaiveField N(*F);
        std::mt19937_64 rng(p * 31 + s);
        for (int t = 0; t < 2000; ++t) {
            const Elem x = oracle::random_elem(*F, rng), y = oracle::random_elem(*F, rng);
            const u64 px = F->to_packed(x), py = F->to_packed(y);
            ASSERT_EQ(F->to_packed(F->add(x, y)), N.add(px, py));
            ASSERT_EQ(F->to_packed(F->sub(x, y)), N.sub(px, py));
            ASSERT_EQ(F->to_packed(F->mul(x, y)), N.mul(px, py));
            ASSERT_EQ(F->to_packed(F->frob(x, 1)), N.pow(px, F->q()));
            ASSERT_EQ(F->to_packed(F->frob_p(x, 1)), N.pow(px, p));
            if (!F->is_zero(y)) ASSERT_EQ(F->to_packed(F->div(x, y)), N.mul(px, N.inv(py)));
            const u64 e = rng() % F->size();
            ASSERT_EQ(F->to_packed(F->pow(x, e)), N.pow(px, e));
        }
    }
}

TEST(Field, ZechAndPolyModesAgreeOnEveryElement) {
    for (auto [p, s] : {std::pair{3ull, 1u}, {2ull, 2u}}) {
        const auto Z = Field::make(p, s, {.force = Rep::zech});
        const auto P = Field::make(p, s, {.force = Rep::poly});
        ASSERT_EQ(Z->rep(), Rep::zech);
        ASSERT_EQ(P->rep(), Rep::poly);
        const Elem gz = Z->gen(), gp = P->convert_from(*Z, Z->gen());
        EXPECT_EQ(gp, P->gen());
        for (u64 i = 0; i < Z->size(); ++i) {
            const Elem a = Z->at(i);
            const Elem b = P->convert_from(*Z, a);
            ASSERT_EQ(Z->convert_from(*P, b), a);
            ASSERT_EQ(P->convert_from(*Z, Z->mul(a, gz)), P->mul(b, gp));
            ASSERT_EQ(P->convert_from(*Z, Z->add(a, gz)), P->add(b, gp));
            ASSERT_EQ(P->convert_from(*Z, Z->frob(a, 1)), P->frob(b, 1));
            ASSERT_EQ(Z->log(a == Z->zero() ? Z->one() : a), P->log(b == P->zero() ? P->one() : b));
        }
    }
}

TEST(Field, LawsAndFrobenius) {
    const auto F = Field::make(3, 1);
    std::mt19937_64 rng(7);
    for (u64 i = 0; i < F->size(); ++i) ASSERT_EQ(F->frob(F->at(i), 6), F->at(i));
    for (int t = 0; t < 500; ++t) {
        const Elem x = oracle::random_elem(*F, rng), y = oracle::random_elem(*F, rng);
        if (!F->is_zero(x)) EXPECT_EQ(F->mul(x, F->inv(x)), F->one());
        for (int i = 0; i < 6; ++i) {
            EXPECT_EQ(F->frob(F->add(x, y), i), F->add(F->frob(x, i), F->frob(y, i)));
            EXPECT_EQ(F->frob(F->mul(x, y), i), F->mul(F->frob(x, i), F->frob(y, i)));
        }
        EXPECT_EQ(F->frob(F->frob(x, 3), 3), x);
        EXPECT_EQ(F->frob(x, 0), x);
        for (unsigned m : {1u, 2u, 3u, 6u}) {
            EXPECT_TRUE(F->in_subfield(F->norm(x, m), m));
            EXPECT_TRUE(F->in_subfield(F->trace(x, m), m));
            EXPECT_EQ(F->norm(F->mul(x, y), m), F->mul(F->norm(x, m), F->norm(y, m)));
            EXPECT_EQ(F->trace(F->add(x, y), m), F->add(F->trace(x, m), F->trace(y, m)));
        }
        EXPECT_EQ(F->norm(x, 3), F->pow(x, 28));
    }
    EXPECT_EQ(F->pow(F->gen(), F->order()), F->one());
    EXPECT_EQ(F->norm(F->one(), 1), F->one());
}

TEST(Field, DivisionByZeroAndBadSubfield) {
    const auto F = Field::make(3, 1);
    try {
        F->inv(F->zero());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
    try {
        F->norm(F->one(), 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadSubfield);
    }
}

TEST(Field, PrimeFieldScalars) {
    const auto F = Field::make(5, 1);
    const Elem two = F->from_int(2);
    EXPECT_EQ(F->mul(two, two), F->neg(F->one()));
    EXPECT_TRUE(F->in_subfield(two, 1));
}

TEST(Field, SubfieldEnumeration) {
    const auto F = Field::make(3, 1);
    EXPECT_EQ(F->enumerate_subfield(1).size(), 3u);
    for (unsigned m : {1u, 2u, 3u, 6u}) {
        const auto els = F->enumerate_subfield(m);
        std::set<u64> seen;
        for (Elem e : els) {
            EXPECT_TRUE(F->in_subfield(e, m));
            seen.insert(e.v);
        }
        EXPECT_EQ(seen.size(), els.size());
        EXPECT_EQ(els.size(), oracle::qpow(*F, m));
    }
    const auto F5 = Field::make(5, 1);
    std::set<u64> all;
    for (Elem e : F5->enumerate_subfield(6)) all.insert(e.v);
    EXPECT_EQ(all.size(), 15625u);
}

TEST(Field, EnumerationOrderAndSlots) {
    const auto F = Field::make(3, 1);
    EXPECT_EQ(F->at(0), F->zero());
    EXPECT_EQ(F->at(1), F->one());
    EXPECT_EQ(F->at(2), F->gen());
    for (u64 i = 0; i < F->size(); ++i) {
        ASSERT_EQ(F->index_of(F->at(i)), i);
        ASSERT_EQ(F->from_slot(F->slot(F->at(i))), F->at(i));
    }
}

TEST(Field, FormatParseRoundTrip) {
    const auto F = Field::make(3, 1);
    for (u64 i = 0; i < F->size(); ++i) ASSERT_EQ(F->parse(F->format(F->at(i))), F->at(i));
    EXPECT_EQ(F->format(F->zero()), "0");
    EXPECT_EQ(F->parse("g^-1"), F->inv(F->gen()));
    EXPECT_EQ(F->parse("-g^0"), F->neg(F->one()));
    EXPECT_EQ(F->parse("2"), F->from_int(2));
    EXPECT_THROW(F->parse("h^2"), Error);
    EXPECT_THROW(F->parse(""), Error);
}

TEST(FieldElem, OperatorsAndContextChecks) {
    const auto F = Field::make(3, 1), G = Field::make(5, 1);
    const FieldElem x(F, F->gen()), y(F, F->from_int(2));
    EXPECT_EQ((x * y / y), x);
    EXPECT_EQ((x + y - y), x);
    EXPECT_EQ(-(-x), x);
    EXPECT_EQ(x.pow(static_cast<long long>(F->order())).raw(), F->one());
    EXPECT_EQ(x.str(), "g^1");
    try {
        (void)(x + FieldElem(G, G->one()));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CtxMismatch);
    }
}
