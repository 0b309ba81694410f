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

#include <algorithm>

#include "pauliepr/triples.hpp"

namespace pauliepr {
namespace {

PauliWord W(int i, int j) {
    return PauliWord::from_indices({i, j});
}

TEST(BasicTripleTest, TryMake) {
    auto t = BasicTriple::try_make(W(1, 3), W(0, 1), W(1, 2));
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(t->name(), "(E01, E12, E13)");
    EXPECT_TRUE(t->contains(W(1, 2)));
    EXPECT_FALSE(t->contains(W(2, 1)));
    EXPECT_FALSE(BasicTriple::try_make(W(0, 1), W(0, 1), W(0, 2)).has_value());
    EXPECT_FALSE(BasicTriple::try_make(W(0, 1), W(1, 0), W(1, 1)).has_value());
    EXPECT_FALSE(BasicTriple::try_make(PauliWord::identity(2), W(0, 1), W(0, 1)).has_value());
    // Pairwise anticommuting, but the product is not a multiple of the identity.
    EXPECT_FALSE(BasicTriple::try_make(W(0, 1), W(0, 2), W(1, 3)).has_value());
}

TEST(BasicTripleTest, CyclicOrientation) {
    for (const auto &t : enumerate_basic_triples()) {
        const auto &c = t.cyclic();
        for (int r = 0; r < 3; r++) {
            WordProduct p = mul_words(c[r], c[(r + 1) % 3]);
            EXPECT_EQ(p.phase, Phase::i()) << t.name();
            EXPECT_EQ(p.word, c[(r + 2) % 3]) << t.name();
        }
    }
}

TEST(EnumerationTest, CountAndIncidence) {
    auto found = enumerate_basic_triples();
    ASSERT_EQ(found.size(), 20u);
    EXPECT_TRUE(std::is_sorted(found.begin(), found.end()));
    IncidenceMap incidence = build_incidence(found);
    ASSERT_EQ(incidence.size(), 15u);
    for (const auto &[w, ts] : incidence) {
        EXPECT_EQ(ts.size(), 4u) << w.name();
    }
}

TEST(EnumerationTest, ListedSetsAreASubset) {
    const auto &listed = reference_basic_sets();
    ASSERT_EQ(listed.size(), 17u);
    TripleDiff diff = diff_triples(as_word_triples(enumerate_basic_triples()), listed);
    EXPECT_TRUE(diff.listed_not_found.empty());
    ASSERT_EQ(diff.found_not_listed.size(), 3u);
    EXPECT_EQ(triple_name(diff.found_not_listed[0]), "(E01, E02, E03)");
    EXPECT_EQ(triple_name(diff.found_not_listed[1]), "(E10, E20, E30)");
    EXPECT_EQ(triple_name(diff.found_not_listed[2]), "(E13, E20, E33)");
    EXPECT_FALSE(diff.empty());
}

TEST(EnumerationTest, ListedPositions) {
    EXPECT_EQ(listed_positions(W(1, 2), reference_basic_sets()), (std::vector<int>{1, 7, 13, 16}));
    EXPECT_TRUE(listed_positions(PauliWord::identity(2), reference_basic_sets()).empty());
}

TEST(EnumerationTest, DiffOfEqualListsIsEmpty) {
    std::vector<WordTriple> a{sorted_triple(W(1, 2), W(0, 1), W(1, 3))};
    std::vector<WordTriple> b{WordTriple{W(1, 3), W(1, 2), W(0, 1)}};
    EXPECT_TRUE(diff_triples(a, b).empty());
}

TEST(EnumerationTest, CorruptedTableChangesOrientationOnly) {
    auto table = CompositionTable::standard().with_entry(SiteLetter::kE1, SiteLetter::kE2, {Phase::minus_i(), SiteLetter::kE3});
    auto found = enumerate_basic_triples(table);
    EXPECT_EQ(found.size(), 20u);
}

}  // namespace
}  // namespace pauliepr
