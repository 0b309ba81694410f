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

#include "pauliepr/singlet.hpp"

#include <stdexcept>

#include "pauliepr/errors.hpp"

namespace pauliepr {

namespace {

void require_two_sites(const Element &a, const char *op) {
    if (a.arity() != 2) {
        throw ArityMismatch(std::string(op) + ": singlet sector needs arity 2, got " + std::to_string(a.arity()));
    }
}

void require_observable(const Element &a, const SingletState &s) {
    if (s.mul(a, a) != Element::identity(a.arity())) {
        throw NotAnInvolution(a.str() + " does not square to the identity");
    }
    if (adjoint(a) != a) {
        throw NotAnInvolution(a.str() + " squares to the identity but is not self-adjoint");
    }
}

}  // namespace

SingletState::SingletState(CompositionTable table, std::array<Element, 3> factors, Element psi)
    : table_(table), factors_(std::move(factors)), psi_(std::move(psi)), projector_(negate(psi_)) {}

const Element &SingletState::factor(int k) const {
    if (k < 1 || k > 3) {
        throw std::out_of_range("singlet factor index must be 1, 2 or 3");
    }
    return factors_[k - 1];
}

SingletState build_singlet(const CompositionTable &table) {
    const Scalar half = Scalar::fraction(1, 2);
    std::array<Element, 3> factors{Element(2), Element(2), Element(2)};
    for (int k = 1; k <= 3; k++) {
        factors[k - 1] = scale(half, sym::E(k, k) - sym::one());
    }
    Element psi = mul(mul(factors[0], factors[1], table), factors[2], table);
    return SingletState(table, std::move(factors), std::move(psi));
}

Element residual_mod_psi(const Element &a, const Element &b, const SingletState &s) {
    require_two_sites(a, "equal_mod_psi");
    require_two_sites(b, "equal_mod_psi");
    return s.mul(a - b, s.psi());
}

bool equal_mod_psi(const Element &a, const Element &b, const SingletState &s) {
    return residual_mod_psi(a, b, s).is_zero();
}

Scalar expectation(const Element &a, const SingletState &s) {
    require_two_sites(a, "expectation");
    return trace_normalized(s.mul(s.projector(), a)) / trace_normalized(s.projector());
}

OutcomeProbabilities outcome_probabilities(const Element &a, const SingletState &s) {
    require_two_sites(a, "outcome_probabilities");
    require_observable(a, s);
    Scalar mean = expectation(a, s);
    Scalar half = Scalar::fraction(1, 2);
    return {half * (Scalar(1) + mean), half * (Scalar(1) - mean)};
}

OutcomeProbabilities literal_probabilities(const Element &a, const SingletState &s) {
    require_two_sites(a, "literal_probabilities");
    require_observable(a, s);
    Scalar mean = expectation(a, s);
    Scalar half = Scalar::fraction(1, 2);
    return {half + mean, half - mean};
}

}  // namespace pauliepr
