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

#ifndef PAULIEPR_PAULI_HPP
#define PAULIEPR_PAULI_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pauliepr {

/// One site of a Pauli word: the unit or one of the generators e1, e2, e3.
enum class SiteLetter : std::uint8_t { kOne = 0, kE1 = 1, kE2 = 2, kE3 = 3 };

/// Converts 0..3 to a SiteLetter. Throws std::out_of_range otherwise.
SiteLetter letter_from_index(int index);

constexpr int index_of(SiteLetter letter) {
    return static_cast<int>(letter);
}

/// A power of the imaginary unit, i^exponent with exponent in {0,1,2,3}.
class Phase {
  public:
    constexpr Phase() = default;

    static constexpr Phase from_exponent(int exponent) {
        return Phase(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4));
    }
    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase i() { return Phase(1); }
    static constexpr Phase minus_one() { return Phase(2); }
    static constexpr Phase minus_i() { return Phase(3); }

    constexpr int exponent() const { return exponent_; }
    constexpr bool is_real() const { return (exponent_ & 1) == 0; }
    constexpr bool is_imaginary() const { return (exponent_ & 1) == 1; }

    constexpr Phase operator*(Phase other) const {
        return Phase(static_cast<std::uint8_t>((exponent_ + other.exponent_) & 3));
    }
    constexpr Phase &operator*=(Phase other) { return *this = *this * other; }
    constexpr Phase operator-() const { return *this * minus_one(); }
    constexpr Phase conj() const { return Phase(static_cast<std::uint8_t>((4 - exponent_) & 3)); }

    friend constexpr bool operator==(Phase, Phase) = default;

    /// "+1", "+i", "-1" or "-i".
    std::string str() const;

  private:
    constexpr explicit Phase(std::uint8_t exponent) : exponent_(exponent) {}
    std::uint8_t exponent_ = 0;
};

/// A fixed-length tensor word of site letters. Value type; ordering is lexicographic on letters.
class PauliWord {
  public:
    /// Throws std::invalid_argument for an empty letter sequence.
    explicit PauliWord(std::vector<SiteLetter> letters);

    static PauliWord identity(std::size_t length);
    /// Letters given by index, e.g. {1, 2} is E12. Throws std::out_of_range for indices outside 0..3.
    static PauliWord from_indices(std::initializer_list<int> indices);
    static PauliWord from_indices(std::span<const int> indices);

    std::size_t size() const { return letters_.size(); }
    SiteLetter operator[](std::size_t site) const { return letters_[site]; }
    std::span<const SiteLetter> letters() const { return letters_; }
    bool is_identity() const;

    /// Display name: "I" for the identity, "e1".."e3" at one site, "E" followed by the digits otherwise.
    std::string name() const;

    friend auto operator<=>(const PauliWord &, const PauliWord &) = default;
    friend bool operator==(const PauliWord &, const PauliWord &) = default;

  private:
    std::vector<SiteLetter> letters_;
};

struct LetterProduct {
    Phase phase;
    SiteLetter letter = SiteLetter::kOne;
    friend bool operator==(const LetterProduct &, const LetterProduct &) = default;
};

struct WordProduct {
    Phase phase;
    PauliWord word;
    friend bool operator==(const WordProduct &, const WordProduct &) = default;
};

/// Multiplication table of the four site letters.
///
/// The standard table is generated from e_k^2 = 1 and the cyclic rule e1 e2 = i e3,
/// e2 e3 = i e1, e3 e1 = i e2; the anti-cyclic entries are obtained from anticommutation.
/// Other tables only arise through with_entry(), which exists for fault injection.
class CompositionTable {
  public:
    static CompositionTable cyclic();
    static const CompositionTable &standard();

    LetterProduct compose(SiteLetter a, SiteLetter b) const {
        return entries_[index_of(a) * 4 + index_of(b)];
    }

    /// Copy of this table with one product replaced.
    CompositionTable with_entry(SiteLetter a, SiteLetter b, LetterProduct product) const;

    friend bool operator==(const CompositionTable &, const CompositionTable &) = default;

  private:
    CompositionTable() = default;
    std::array<LetterProduct, 16> entries_{};
};

/// a*b = phase*letter under the standard table.
LetterProduct compose_letters(SiteLetter a, SiteLetter b);

/// Site-wise product with accumulated phase. Throws LengthMismatch.
WordProduct mul_words(const PauliWord &a, const PauliWord &b,
                      const CompositionTable &table = CompositionTable::standard());

/// +1 if the words commute, -1 if they anticommute. Counts sites where both letters are
/// non-unit and distinct; independent of any composition table. Throws LengthMismatch.
int commute_sign(const PauliWord &a, const PauliWord &b);

/// All 4^length words in lexicographic order.
std::vector<PauliWord> all_words(std::size_t length);
/// All words except the identity, lexicographic.
std::vector<PauliWord> nontrivial_words(std::size_t length);

}  // namespace pauliepr

#endif
