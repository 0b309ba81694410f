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

#ifndef PAULIEPR_TESTS_TEST_SUPPORT_HPP
#define PAULIEPR_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "pauliepr/element.hpp"
#include "pauliepr/pauli.hpp"
#include "pauliepr/scalar.hpp"

namespace pauliepr::testing {

// Fixed seeds keep every property run reproducible.
class Gen {
  public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    SiteLetter letter() { return letter_from_index(uniform(0, 3)); }

    PauliWord word(std::size_t arity) {
        std::vector<SiteLetter> letters(arity);
        for (auto &l : letters) {
            l = letter();
        }
        return PauliWord(std::move(letters));
    }

    Phase phase() { return Phase::from_exponent(uniform(0, 3)); }

    /// Small Gaussian rational, zero with some probability.
    Scalar scalar() {
        if (uniform(0, 5) == 0) {
            return Scalar(0);
        }
        Rational re(uniform(-4, 4), uniform(1, 4));
        Rational im(uniform(-4, 4), uniform(1, 4));
        return Scalar(re, im);
    }

    Element element(std::size_t arity, int max_terms = 4) {
        Element out(arity);
        int n = uniform(0, max_terms);
        for (int t = 0; t < n; t++) {
            out += Element::word(word(arity), scalar());
        }
        return out;
    }

  private:
    std::mt19937 rng_;
};

}  // namespace pauliepr::testing

#endif
