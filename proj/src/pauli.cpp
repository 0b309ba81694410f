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

#include "pauliepr/pauli.hpp"

#include <algorithm>
#include <stdexcept>

#include "pauliepr/errors.hpp"

namespace pauliepr {

SiteLetter letter_from_index(int index) {
    if (index < 0 || index > 3) {
        throw std::out_of_range("site letter index must be in 0..3, got " + std::to_string(index));
    }
    return static_cast<SiteLetter>(index);
}

std::string Phase::str() const {
    static constexpr const char *names[] = {"+1", "+i", "-1", "-i"};
    return names[exponent_];
}

PauliWord::PauliWord(std::vector<SiteLetter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("a Pauli word needs at least one site");
    }
}

PauliWord PauliWord::identity(std::size_t length) {
    return PauliWord(std::vector<SiteLetter>(length, SiteLetter::kOne));
}

PauliWord PauliWord::from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
}

PauliWord PauliWord::from_indices(std::span<const int> indices) {
    std::vector<SiteLetter> letters;
    letters.reserve(indices.size());
    for (int k : indices) {
        letters.push_back(letter_from_index(k));
    }
    return PauliWord(std::move(letters));
}

bool PauliWord::is_identity() const {
    return std::all_of(letters_.begin(), letters_.end(), [](SiteLetter l) { return l == SiteLetter::kOne; });
}

std::string PauliWord::name() const {
    if (is_identity()) {
        return "I";
    }
    std::string out(1, letters_.size() == 1 ? 'e' : 'E');
    for (SiteLetter l : letters_) {
        out.push_back(static_cast<char>('0' + index_of(l)));
    }
    return out;
}

CompositionTable CompositionTable::cyclic() {
    CompositionTable t;
    auto set = [&](SiteLetter a, SiteLetter b, LetterProduct p) { t.entries_[index_of(a) * 4 + index_of(b)] = p; };

    for (int k = 0; k < 4; k++) {
        SiteLetter l = letter_from_index(k);
        set(SiteLetter::kOne, l, {Phase::one(), l});
        set(l, SiteLetter::kOne, {Phase::one(), l});
        set(l, l, {Phase::one(), SiteLetter::kOne});
    }

    // e_a e_b = i e_c for (a, b, c) a cyclic shift of (1, 2, 3).
    for (int a = 1; a <= 3; a++) {
        int b = a % 3 + 1;
        int c = b % 3 + 1;
        set(letter_from_index(a), letter_from_index(b), {Phase::i(), letter_from_index(c)});
    }
    // e_b e_a = -e_a e_b.
    for (int a = 1; a <= 3; a++) {
        int b = a % 3 + 1;
        LetterProduct forward = t.compose(letter_from_index(a), letter_from_index(b));
        set(letter_from_index(b), letter_from_index(a), {-forward.phase, forward.letter});
    }
    return t;
}

const CompositionTable &CompositionTable::standard() {
    static const CompositionTable table = cyclic();
    return table;
}

CompositionTable CompositionTable::with_entry(SiteLetter a, SiteLetter b, LetterProduct product) const {
    CompositionTable copy = *this;
    copy.entries_[index_of(a) * 4 + index_of(b)] = product;
    return copy;
}

LetterProduct compose_letters(SiteLetter a, SiteLetter b) {
    return CompositionTable::standard().compose(a, b);
}

WordProduct mul_words(const PauliWord &a, const PauliWord &b, const CompositionTable &table) {
    if (a.size() != b.size()) {
        throw LengthMismatch("cannot multiply words of length " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
    }
    Phase phase;
    std::vector<SiteLetter> letters;
    letters.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); k++) {
        LetterProduct p = table.compose(a[k], b[k]);
        phase *= p.phase;
        letters.push_back(p.letter);
    }
    return {phase, PauliWord(std::move(letters))};
}

int commute_sign(const PauliWord &a, const PauliWord &b) {
    if (a.size() != b.size()) {
        throw LengthMismatch("cannot compare words of length " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
    }
    int clashes = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        if (a[k] != SiteLetter::kOne && b[k] != SiteLetter::kOne && a[k] != b[k]) {
            clashes++;
        }
    }
    return clashes % 2 == 0 ? +1 : -1;
}

std::vector<PauliWord> all_words(std::size_t length) {
    std::vector<PauliWord> out;
    std::vector<SiteLetter> letters(length, SiteLetter::kOne);
    std::size_t total = std::size_t{1} << (2 * length);
    out.reserve(total);
    for (std::size_t code = 0; code < total; code++) {
        // Most significant base-4 digit is the first site, which yields lexicographic order.
        for (std::size_t k = 0; k < length; k++) {
            letters[length - 1 - k] = static_cast<SiteLetter>((code >> (2 * k)) & 3);
        }
        out.emplace_back(letters);
    }
    return out;
}

std::vector<PauliWord> nontrivial_words(std::size_t length) {
    auto words = all_words(length);
    words.erase(words.begin());
    return words;
}

}  // namespace pauliepr
