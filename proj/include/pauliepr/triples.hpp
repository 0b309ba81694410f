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

#ifndef PAULIEPR_TRIPLES_HPP
#define PAULIEPR_TRIPLES_HPP

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pauliepr/pauli.hpp"

namespace pauliepr {

/// Three two-site words, sorted lexicographically. Used as the unordered-set key for triples.
using WordTriple = std::array<PauliWord, 3>;

WordTriple sorted_triple(PauliWord a, PauliWord b, PauliWord c);
/// "(E01, E12, E13)".
std::string triple_name(const WordTriple &t);

/// Three pairwise anticommuting nontrivial words whose product is +-i times the identity,
/// i.e. a copy of the e1, e2, e3 relations inside the two-site algebra.
class BasicTriple {
  public:
    /// Returns nullopt unless the three words form a basic triple under the given table.
    static std::optional<BasicTriple> try_make(const PauliWord &a, const PauliWord &b, const PauliWord &c,
                                               const CompositionTable &table = CompositionTable::standard());

    /// Sorted members.
    const WordTriple &members() const { return members_; }
    /// Cyclic ordering (A, B, C) with A B = +i C.
    const WordTriple &cyclic() const { return cyclic_; }
    bool contains(const PauliWord &w) const;
    std::string name() const { return triple_name(members_); }

    friend bool operator==(const BasicTriple &a, const BasicTriple &b) { return a.members_ == b.members_; }
    friend auto operator<=>(const BasicTriple &a, const BasicTriple &b) { return a.members_ <=> b.members_; }

  private:
    BasicTriple(WordTriple members, WordTriple cyclic) : members_(std::move(members)), cyclic_(std::move(cyclic)) {}
    WordTriple members_;
    WordTriple cyclic_;
};

/// Exhaustive scan of all 455 unordered triples of nontrivial two-site words, sorted.
std::vector<BasicTriple> enumerate_basic_triples(const CompositionTable &table = CompositionTable::standard());

/// The 17 basic sets of the reference listing, transcribed verbatim and in listed order.
const std::vector<WordTriple> &reference_basic_sets();

std::vector<WordTriple> as_word_triples(std::span<const BasicTriple> triples);

struct TripleDiff {
    std::vector<WordTriple> found_not_listed;
    std::vector<WordTriple> listed_not_found;
    bool empty() const { return found_not_listed.empty() && listed_not_found.empty(); }
};

/// Set difference in both directions; both output lists are sorted.
TripleDiff diff_triples(std::span<const WordTriple> found, std::span<const WordTriple> listed);

/// Word -> triples containing it. The identity never appears as a key.
using IncidenceMap = std::map<PauliWord, std::vector<BasicTriple>>;

IncidenceMap build_incidence(std::span<const BasicTriple> found);

/// 1-based positions in `listed` of the sets that contain w.
std::vector<int> listed_positions(const PauliWord &w, std::span<const WordTriple> listed);

}  // namespace pauliepr

#endif
