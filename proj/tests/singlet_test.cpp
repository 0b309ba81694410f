// Copyright 2026 The pauliepr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <stdexcept>

#include "pauliepr/errors.hpp"
#include "pauliepr/matrix_oracle.hpp"
#include "pauliepr/singlet.hpp"
#include "test_support.hpp"

namespace pauliepr {
namespace {

using sym::E;

class SingletTest : public ::testing::Test {
  protected:
    SingletState s = build_singlet();
};

TEST_F(SingletTest, ExpandedForm) {
    Element expected = Scalar::fraction(1, 4) * (E(1, 1) + E(2, 2) + E(3, 3) - Element::identity(2));
    EXPECT_EQ(s.psi(), expected);
    EXPECT_EQ(s.projector(), -s.psi());
    EXPECT_EQ(s.factor(1), Scalar::fraction(1, 2) * (E(1, 1) - Element::identity(2)));
    EXPECT_THROW(s.factor(0), std::out_of_range);
    EXPECT_THROW(s.factor(4), std::out_of_range);
}

TEST_F(SingletTest, FactorsCommuteAndSquareToMinusPsi) {
    for (int a = 1; a <= 3; a++) {
        for (int b = 1; b <= 3; b++) {
            EXPECT_EQ(s.mul(s.factor(a), s.factor(b)), s.mul(s.factor(b), s.factor(a)));
        }
    }
    EXPECT_EQ(s.mul(s.psi(), s.psi()), -s.psi());
    EXPECT_NE(s.mul(s.psi(), s.psi()), s.psi());
    EXPECT_EQ(s.mul(s.projector(), s.projector()), s.projector());
}

TEST_F(SingletTest, MatchesOracle) {
    EXPECT_TRUE(approx_equal(element_matrix(s.psi()), oracle_singlet_psi()));
}

TEST_F(SingletTest, Expectations) {
    EXPECT_EQ(trace_normalized(s.psi()), Scalar::fraction(-1, 4));
    for (const auto &w : nontrivial_words(2)) {
        Scalar mean = expectation(Element::word(w), s);
        bool diagonal = w[0] == w[1];
        EXPECT_EQ(mean, diagonal ? Scalar(-1) : Scalar(0)) << w.name();
    }
    EXPECT_EQ(expectation(Element::identity(2), s), Scalar(1));
}

TEST_F(SingletTest, Probabilities) {
    OutcomeProbabilities p = outcome_probabilities(E(1, 1), s);
    EXPECT_EQ(p.plus, Scalar(0));
    EXPECT_EQ(p.minus, Scalar(1));
    OutcomeProbabilities q = outcome_probabilities(E(1, 2), s);
    EXPECT_EQ(q.plus, Scalar::fraction(1, 2));
    EXPECT_EQ(q.minus, Scalar::fraction(1, 2));
    OutcomeProbabilities lit = literal_probabilities(E(1, 1), s);
    EXPECT_EQ(lit.plus, Scalar::fraction(-1, 2));
    EXPECT_EQ(lit.minus, Scalar::fraction(3, 2));
}

TEST_F(SingletTest, ProbabilityPreconditions) {
    EXPECT_THROW(outcome_probabilities(E(1, 1) + E(2, 2), s), NotAnInvolution);
    EXPECT_THROW(outcome_probabilities(Scalar::i() * E(1, 1), s), NotAnInvolution);
    EXPECT_THROW(literal_probabilities(Scalar(2) * E(1, 1), s), NotAnInvolution);
    EXPECT_THROW(expectation(sym::e(1), s), ArityMismatch);
}

TEST_F(SingletTest, OppositeSingleSiteObservables) {
    for (int k = 1; k <= 3; k++) {
        EXPECT_TRUE(equal_mod_psi(E(0, k), -E(k, 0), s));
        EXPECT_NE(E(0, k), -E(k, 0));
    }
    EXPECT_FALSE(equal_mod_psi(E(1, 2), E(2, 1), s));
    EXPECT_TRUE(equal_mod_psi(E(1, 2), -E(2, 1), s));
    EXPECT_THROW(residual_mod_psi(sym::e(1), sym::e(1), s), ArityMismatch);
}

TEST_F(SingletTest, ModPsiIsAnEquivalenceAndACongruenceOnTheLeft) {
    testing::Gen gen(41);
    for (int n = 0; n < 150; n++) {
        Element a = gen.element(2), c = gen.element(2);
        // b agrees with a in the singlet sector by construction.
        Element b = a + s.mul(gen.element(2), E(1, 1) + Element::identity(2));
        EXPECT_TRUE(equal_mod_psi(a, a, s));
        EXPECT_TRUE(equal_mod_psi(a, b, s));
        EXPECT_TRUE(equal_mod_psi(b, a, s));
        Element d = b + s.mul(gen.element(2), E(2, 2) + Element::identity(2));
        EXPECT_TRUE(equal_mod_psi(a, d, s));
        EXPECT_TRUE(equal_mod_psi(s.mul(c, a), s.mul(c, b), s));
        EXPECT_TRUE(equal_mod_psi(a + c, b + c, s));
    }
}

TEST(SingletCorruptedTableTest, SymbolicProductsLeaveTheOracle) {
    auto table = CompositionTable::standard().with_entry(SiteLetter::kE1, SiteLetter::kE2, {Phase::minus_i(), SiteLetter::kE3});
    SingletState bad = build_singlet(table);
    Element prod = bad.mul(E(0, 1), E(0, 2));
    EXPECT_FALSE(approx_equal(element_matrix(prod), element_matrix(E(0, 1)) * element_matrix(E(0, 2))));
    EXPECT_FALSE(equal_mod_psi(E(0, 1), -E(1, 0), bad));
}

}  // namespace
}  // namespace pauliepr
