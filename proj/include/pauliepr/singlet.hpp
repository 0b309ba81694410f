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

#ifndef PAULIEPR_SINGLET_HPP
#define PAULIEPR_SINGLET_HPP

#include <array>

#include "pauliepr/element.hpp"
#include "pauliepr/pauli.hpp"

namespace pauliepr {

/// The two-site singlet sector.
///
/// psi = psi1 psi2 psi3 with psi_k = (E_kk - 1)/2. With these signs psi * psi = -psi, so psi is
/// kept as constructed and the genuine projector P = -psi is stored next to it. The composition
/// table used to build psi travels with the state so every later product uses the same rules.
class SingletState {
  public:
    const Element &psi() const { return psi_; }
    const Element &projector() const { return projector_; }
    /// psi_k for k = 1, 2, 3. Throws std::out_of_range otherwise.
    const Element &factor(int k) const;
    const CompositionTable &table() const { return table_; }

    Element mul(const Element &a, const Element &b) const { return pauliepr::mul(a, b, table_); }

  private:
    friend SingletState build_singlet(const CompositionTable &table);
    SingletState(CompositionTable table, std::array<Element, 3> factors, Element psi);

    CompositionTable table_;
    std::array<Element, 3> factors_;
    Element psi_;
    Element projector_;
};

SingletState build_singlet(const CompositionTable &table = CompositionTable::standard());

/// (a - b) psi. Throws ArityMismatch unless both have arity 2.
Element residual_mod_psi(const Element &a, const Element &b, const SingletState &s);

/// a psi == b psi, exactly.
bool equal_mod_psi(const Element &a, const Element &b, const SingletState &s);

/// <a> = tr(P a) / tr(P). Throws ArityMismatch.
Scalar expectation(const Element &a, const SingletState &s);

struct OutcomeProbabilities {
    Scalar plus;
    Scalar minus;
};

/// Born rule p(+-1) = (1 +- <a>)/2. Throws NotAnInvolution unless a*a = 1 and a is self-adjoint.
OutcomeProbabilities outcome_probabilities(const Element &a, const SingletState &s);

/// The unnormalized form p(+-1) = 1/2 +- <a>, reported for comparison only; it can leave [0, 1].
/// Same precondition as outcome_probabilities.
OutcomeProbabilities literal_probabilities(const Element &a, const SingletState &s);

}  // namespace pauliepr

#endif
