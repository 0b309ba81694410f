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

#ifndef PAULIEPR_EPR_SUITE_HPP
#define PAULIEPR_EPR_SUITE_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pauliepr/element.hpp"
#include "pauliepr/expr.hpp"
#include "pauliepr/report.hpp"
#include "pauliepr/singlet.hpp"
#include "pauliepr/triples.hpp"

namespace pauliepr {

/// One checked claim, with its exact residual and the matrix oracle's agreement.
struct IdentityCheck {
    std::string name;
    std::string claim;
    CheckKind kind = CheckKind::kStrict;
    CheckStatus expected = CheckStatus::kVerified;
    CheckStatus status = CheckStatus::kVerified;
    /// lhs - rhs for strict checks, (lhs - rhs) psi for mod-psi checks. Zero for other kinds.
    Element residual{2};
    /// residual.term_count() for identities, number of counterexamples for the other kinds.
    std::size_t residual_terms = 0;
    bool oracle_ok = true;

    bool passed() const { return status == expected && oracle_ok; }
    CheckRecord record() const;
};

/// Evaluates lhs and rhs (expression syntax) under the state's table and psi, decides the claim
/// exactly, then repeats the decision with the matrix oracle at kOracleTolerance.
/// kind must be kStrict or kModPsi.
IdentityCheck check_identity(std::string name, std::string_view lhs, std::string_view rhs, CheckKind kind,
                             CheckStatus expected, const SingletState &s);

std::vector<IdentityCheck> verify_singlet_invariants(const SingletState &s);

/// (E0k + Ek0) psi = 0 for k = 1, 2, 3, plus the same sums refuted as strict identities.
std::vector<IdentityCheck> verify_singlet_constraints(const SingletState &s);

/// (E01 E20 + E10 E02) psi = 0.
IdentityCheck verify_product_constraint(const SingletState &s);
/// E01 E20 + E10 E02 = 0 as a strict identity; expected refuted.
IdentityCheck refute_product_constraint_strict(const SingletState &s);

/// Definite +-1 values for the four single-particle observables.
struct ClassicalAssignment {
    int e01 = 1;
    int e10 = 1;
    int e02 = 1;
    int e20 = 1;
    bool operator==(const ClassicalAssignment &) const = default;
};

/// Which constraint families a classical search enforces.
struct ClassicalConstraints {
    bool opposite_x = true;  ///< m(E01) = -m(E10)
    bool opposite_y = true;  ///< m(E02) = -m(E20)
    bool product = true;     ///< m(E01) m(E20) = -m(E10) m(E02)
};

bool satisfies(const ClassicalAssignment &m, const ClassicalConstraints &c);
/// All 16 assignments, in a fixed order (e01, e10, e02, e20 each from +1 to -1).
std::vector<ClassicalAssignment> all_classical_assignments();
/// Exhaustive search over the 16 assignments.
std::vector<ClassicalAssignment> classical_assignment_search(const ClassicalConstraints &c = {});
std::vector<IdentityCheck> classical_search_checks();

/// The singlet-sector identities among single and combined elements, each checked mod psi.
std::vector<IdentityCheck> verify_derived_identities(const SingletState &s);

/// X (E_kk + 1) psi = 0 for every nontrivial word X and k = 1, 2, 3.
std::vector<IdentityCheck> generator_checks(const SingletState &s);

/// A generator X (E_kk + 1) psi = 0 that yields lhs psi = rhs psi after scaling by `factor`:
/// X (E_kk + 1) = factor * (lhs - rhs).
struct Derivation {
    PauliWord multiplier;
    int k = 0;
    Scalar factor;
};

/// Finds a single generator from which lhs = rhs (mod psi) follows, if there is one.
std::optional<Derivation> derive_from_generators(const Element &lhs, const Element &rhs, const SingletState &s);
/// One derivation check per derived identity.
std::vector<IdentityCheck> derivation_checks(const SingletState &s);

enum class StepRole { kPremise, kSectorRelation, kSectorSubstitution, kStrictSubstitution, kDerived, kConclusion, kClash };

struct FallacyStep {
    std::string description;
    StepRole role = StepRole::kPremise;
    /// False for steps that treat a mod-psi equality as strict.
    bool legitimate = true;
    IdentityCheck check;
};

struct FallacyReport {
    std::vector<FallacyStep> steps;
    /// Index of the first illegitimate step, if any.
    std::optional<std::size_t> first_invalid_step() const;
};

/// Replays the argument that derives E12 = E21 by substituting E01 -> -E10 and E02 -> -E20
/// outside the singlet sector, marking the substitutions as illegitimate.
FallacyReport fallacy_trace(const SingletState &s);

/// Strict permutation identities for E12 and E21 plus their singlet-sector consequences.
std::vector<IdentityCheck> verify_resolution(const SingletState &s);

/// Enumeration, listing diff, incidence and relation checks for basic triples.
std::vector<IdentityCheck> triple_checks(const CompositionTable &table);
TripleSummary summarize_triples(const CompositionTable &table);

/// Every check above, sorted by name; overall is pass iff every check passed.
VerificationReport run_full_report(const SingletState &s);

/// Table with the orientation of e1 e2 flipped (e1 e2 = -i e3, e2 e1 unchanged).
CompositionTable corrupted_table();

}  // namespace pauliepr

#endif
