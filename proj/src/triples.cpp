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

#include "pauliepr/triples.hpp"

#include <algorithm>

namespace pauliepr {

WordTriple sorted_triple(PauliWord a, PauliWord b, PauliWord c) {
    WordTriple t{std::move(a), std::move(b), std::move(c)};
    std::sort(t.begin(), t.end());
    return t;
}

std::string triple_name(const WordTriple &t) {
    return "(" + t[0].name() + ", " + t[1].name() + ", " + t[2].name() + ")";
}

std::optional<BasicTriple> BasicTriple::try_make(const PauliWord &a, const PauliWord &b, const PauliWord &c,
                                                 const CompositionTable &table) {
    if (a.size() != 2 || b.size() != 2 || c.size() != 2) {
        return std::nullopt;
    }
    if (a.is_identity() || b.is_identity() || c.is_identity() || a == b || b == c || a == c) {
        return std::nullopt;
    }
    if (commute_sign(a, b) != -1 || commute_sign(b, c) != -1 || commute_sign(a, c) != -1) {
        return std::nullopt;
    }
    WordTriple members = sorted_triple(a, b, c);
    WordProduct ab = mul_words(members[0], members[1], table);
    WordProduct abc = mul_words(ab.word, members[2], table);
    abc.phase = ab.phase * abc.phase;
    if (!abc.word.is_identity() || !abc.phase.is_imaginary()) {
        return std::nullopt;
    }
    // A B = x C gives A B C = x, so a +i product means the sorted order is already cyclic.
    WordTriple cyclic = abc.phase == Phase::i() ? members : WordTriple{members[0], members[2], members[1]};
    return BasicTriple(std::move(members), std::move(cyclic));
}

bool BasicTriple::contains(const PauliWord &w) const {
    return std::find(members_.begin(), members_.end(), w) != members_.end();
}

std::vector<BasicTriple> enumerate_basic_triples(const CompositionTable &table) {
    const auto words = nontrivial_words(2);
    std::vector<BasicTriple> out;
    for (std::size_t a = 0; a < words.size(); a++) {
        for (std::size_t b = a + 1; b < words.size(); b++) {
            for (std::size_t c = b + 1; c < words.size(); c++) {
                if (auto t = BasicTriple::try_make(words[a], words[b], words[c], table)) {
                    out.push_back(std::move(*t));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<WordTriple> &reference_basic_sets() {
    static const std::vector<WordTriple> sets = [] {
        auto w = [](int i, int j) { return PauliWord::from_indices({i, j}); };
        auto t = [&](int a, int b, int c) { return sorted_triple(w(a / 10, a % 10), w(b / 10, b % 10), w(c / 10, c % 10)); };
        return std::vector<WordTriple>{
            t(1, 12, 13),  t(1, 22, 23),  t(1, 32, 33),  t(2, 11, 13),  t(2, 21, 23),  t(2, 31, 33),
            t(3, 11, 12),  t(3, 21, 22),  t(3, 31, 32),  t(10, 23, 33), t(10, 22, 32), t(10, 21, 31),
            t(20, 12, 32), t(20, 11, 31), t(30, 13, 23), t(30, 12, 22), t(30, 11, 21),
        };
    }();
    return sets;
}

std::vector<WordTriple> as_word_triples(std::span<const BasicTriple> triples) {
    std::vector<WordTriple> out;
    out.reserve(triples.size());
    for (const auto &t : triples) {
        out.push_back(t.members());
    }
    return out;
}

TripleDiff diff_triples(std::span<const WordTriple> found, std::span<const WordTriple> listed) {
    std::vector<WordTriple> f(found.begin(), found.end());
    std::vector<WordTriple> l(listed.begin(), listed.end());
    for (auto &t : f) {
        std::sort(t.begin(), t.end());
    }
    for (auto &t : l) {
        std::sort(t.begin(), t.end());
    }
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());

    TripleDiff diff;
    std::set_difference(f.begin(), f.end(), l.begin(), l.end(), std::back_inserter(diff.found_not_listed));
    std::set_difference(l.begin(), l.end(), f.begin(), f.end(), std::back_inserter(diff.listed_not_found));
    return diff;
}

IncidenceMap build_incidence(std::span<const BasicTriple> found) {
    IncidenceMap out;
    for (const auto &t : found) {
        for (const auto &w : t.members()) {
            if (!w.is_identity()) {
                out[w].push_back(t);
            }
        }
    }
    return out;
}

std::vector<int> listed_positions(const PauliWord &w, std::span<const WordTriple> listed) {
    std::vector<int> out;
    for (std::size_t k = 0; k < listed.size(); k++) {
        if (std::find(listed[k].begin(), listed[k].end(), w) != listed[k].end()) {
            out.push_back(static_cast<int>(k) + 1);
        }
    }
    return out;
}

}  // namespace pauliepr
